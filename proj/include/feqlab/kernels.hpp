#pragma once

// Inner loops shared by every defect functional. Each kernel has a scalar
// reference implementation and, where the CPU allows, a SIMD variant that
// performs the same floating-point operations in the same order, so the two
// agree bit for bit. The active table is chosen once at startup.

#include <cstddef>
#include <optional>
#include <string_view>

#include "feqlab/common.hpp"

namespace feqlab::kernels {

/// One row of a pairwise residual
///
///   out[y] = | a * h[plain[y]] + b * h[twisted[y]] - (p * q[y] + r * s[y]) |
///
/// which covers d'Alembert, Kannappan, Van Vleck, Wilson, sine addition and
/// multiplicativity defects for a fixed x.
struct PairRow {
  const Complex* h = nullptr;
  const Element* plain = nullptr;
  const Element* twisted = nullptr;
  double a = 1.0;
  double b = 0.0;
  Complex p;
  const Complex* q = nullptr;
  Complex r;
  const Complex* s = nullptr;
  std::size_t n = 0;
};

using PairRowFn = void (*)(const PairRow& row, double* out);

/// out[w] += c * f[idx[w]] for w < n.
using GatherAxpyFn = void (*)(Complex c, const Complex* f, const Element* idx, std::size_t n,
                              Complex* out);

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  PairRowFn pair_row;
  GatherAxpyFn gather_axpy;
};

std::string_view to_string(Isa isa);
std::optional<Isa> isa_from_string(std::string_view name);

/// Whether this build contains the variant and the running CPU supports it.
bool available(Isa isa);

/// Kernel table for a specific ISA; falls back to scalar when unavailable.
const KernelTable& table_for(Isa isa);

/// The kernels in use. Defaults to the widest available ISA; the environment
/// variable FEQLAB_KERNEL=scalar|avx2 overrides the default.
const KernelTable& active();

/// Forces a variant for the rest of the process (tests, benchmarks).
void select(Isa isa);

namespace scalar {
void pair_row(const PairRow& row, double* out);
void gather_axpy(Complex c, const Complex* f, const Element* idx, std::size_t n, Complex* out);
}  // namespace scalar

namespace avx2 {
void pair_row(const PairRow& row, double* out);
void gather_axpy(Complex c, const Complex* f, const Element* idx, std::size_t n, Complex* out);
}  // namespace avx2

}  // namespace feqlab::kernels
