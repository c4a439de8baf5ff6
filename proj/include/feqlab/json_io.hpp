#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "feqlab/algebra.hpp"
#include "feqlab/characters.hpp"
#include "feqlab/equations.hpp"
#include "feqlab/measure.hpp"
#include "feqlab/solutions.hpp"
#include "feqlab/stability.hpp"

namespace feqlab::io {

using Json = nlohmann::ordered_json;

/// Parses text; malformed input throws ParseError with the byte offset.
Json parse(const std::string& text, const std::string& source = "<input>");
Json load_file(const std::filesystem::path& path);

FiniteSemigroup semigroup_from_json(const Json& j);
InvolutiveMorphism morphism_from_json(const Json& j, const FiniteSemigroup& s);
CentralMeasure measure_from_json(const Json& j, const FiniteSemigroup& s,
                                 double nonzero_tol = Tolerances{}.nonzero);
CFunc cfunc_from_json(const Json& j);

Json to_json(Complex z);
Json to_json(const CFunc& f);
Json to_json(const FiniteSemigroup& s);
Json to_json(const InvolutiveMorphism& m);
Json to_json(const CentralMeasure& mu);
Json to_json(const std::vector<Character>& chars);
Json to_json(const DefectReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const SolutionSet& set);
Json to_json(const BijectionReport& r);
Json to_json(const ScanReport& r);
Json to_json(const FalsifyResult& r);
Json to_json(const DiagnosticsReport& r);
Json to_json(const Error& e);

}  // namespace feqlab::io
