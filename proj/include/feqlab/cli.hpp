#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "feqlab/algebra.hpp"
#include "feqlab/measure.hpp"

namespace feqlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;

inline constexpr int kSchemaVersion = 1;

struct Demo {
  std::string name;
  std::string description;
  std::string catalog;   // build_standard_from_spec argument
  std::string morphism;  // catalog morphism name
  std::vector<Atom> atoms;
};

/// Named (semigroup, involution, measure) configurations used by `demo` and `--demo`.
const std::vector<Demo>& demo_catalog();
const Demo& find_demo(const std::string& name);

struct Setup {
  std::string source;
  FiniteSemigroup semigroup;
  InvolutiveMorphism sigma;
  std::optional<CentralMeasure> measure;
};

Setup realize(const Demo& demo);

/// Runs one command line (without the program name). The report goes to out,
/// diagnostics to err; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace feqlab::cli
