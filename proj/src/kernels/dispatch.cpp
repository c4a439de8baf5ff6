#include <atomic>
#include <cstdlib>
#include <string>

#include "feqlab/kernels.hpp"

namespace feqlab::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::pair_row, &scalar::gather_axpy};
#ifdef FEQLAB_HAVE_AVX2
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::pair_row, &avx2::gather_axpy};
#endif

bool cpu_has_avx2() {
#if defined(FEQLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("FEQLAB_KERNEL")) {
    if (auto isa = isa_from_string(env)) return &table_for(*isa);
  }
  return available(Isa::Avx2) ? &table_for(Isa::Avx2) : &kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Isa> isa_from_string(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  return std::nullopt;
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
#ifdef FEQLAB_HAVE_AVX2
  if (isa == Isa::Avx2 && available(Isa::Avx2)) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Isa isa) { current().store(&table_for(isa), std::memory_order_release); }

}  // namespace feqlab::kernels
