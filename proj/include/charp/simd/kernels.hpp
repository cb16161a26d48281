#pragma once
// Low-level kernels with a scalar reference and an AVX2 variant.
// The active table is chosen once at startup from CPUID; setting
// CHARP_AUTOS_SIMD=scalar in the environment forces the reference path.
#include <cstddef>
#include <cstdint>

namespace charp::simd {

using Exp = std::int16_t;
inline constexpr int kLanes = 16;  // exponent lanes per monomial (one 256-bit vector)

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  // out[0..na+nb-1) = a * b over F_p (dense, little-endian coefficients).
  void (*fp_convolve)(const std::uint8_t* a, std::size_t na, const std::uint8_t* b,
                      std::size_t nb, std::uint8_t* out, unsigned p);
  // y[i] = (y[i] + c * x[i]) mod p, entries already reduced, c < p.
  void (*fp_axpy)(std::uint8_t* y, const std::uint8_t* x, std::size_t n, unsigned c,
                  unsigned p);
  // out = a + b lane-wise; false if any lane leaves the int16 range.
  bool (*mono_add)(const Exp* a, const Exp* b, Exp* out);
  bool (*mono_sub)(const Exp* a, const Exp* b, Exp* out);
  std::int32_t (*mono_degree)(const Exp* a);
  // index of the first lane where a and b differ, -1 when equal
  int (*mono_first_diff)(const Exp* a, const Exp* b);
  // true iff a[i] >= b[i] for every lane i whose bit is set in lane_mask
  bool (*mono_ge_masked)(const Exp* a, const Exp* b, std::uint16_t lane_mask);
};

const KernelTable& scalar_table();
const KernelTable& avx2_table();  // only valid when isa_available(Isa::avx2)
bool isa_available(Isa isa);

const KernelTable& active();
void set_active(Isa isa);  // test hook; throws if unavailable
const char* isa_name(Isa isa);

}  // namespace charp::simd
