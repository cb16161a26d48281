#include <cstdlib>
#include <cstring>

#include "charp/error.hpp"
#include "charp/simd/kernels.hpp"

namespace charp::simd {
namespace {

const KernelTable* pick() {
  const char* env = std::getenv("CHARP_AUTOS_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return &scalar_table();
  if (isa_available(Isa::avx2)) return &avx2_table();
  return &scalar_table();
}

const KernelTable*& current() {
  static const KernelTable* t = pick();
  return t;
}

}  // namespace

bool isa_available(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& active() { return *current(); }

void set_active(Isa isa) {
  if (!isa_available(isa)) fail(Errc::PreconditionViolated, "ISA not available on this CPU");
  current() = isa == Isa::avx2 ? &avx2_table() : &scalar_table();
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace charp::simd
