// AVX2 code path; only reached after a CPUID check in dispatch.cpp.
#pragma GCC target("avx2")
#include <immintrin.h>

#include <vector>

#include "charp/simd/kernels.hpp"

namespace charp::simd {
namespace {

// x mod p for 16-bit lanes; q from a rounded-up reciprocal is exact or one too big.
inline __m256i mod_p16(__m256i x, __m256i vp, __m256i recip) {
  __m256i q = _mm256_mulhi_epu16(x, recip);
  __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, vp));
  __m256i neg = _mm256_cmpgt_epi16(_mm256_setzero_si256(), r);
  return _mm256_add_epi16(r, _mm256_and_si256(neg, vp));
}

inline std::uint16_t reciprocal(unsigned p) {
  return static_cast<std::uint16_t>((65536u + p - 1) / p);
}

constexpr int kFlushEvery = 1024;  // 1024 * 36 + 7 stays below 2^16

void conv(const std::uint8_t* a, std::size_t na, const std::uint8_t* b, std::size_t nb,
          std::uint8_t* out, unsigned p) {
  if (na == 0 || nb == 0) return;
  if (nb < 16 && na >= 16) {
    conv(b, nb, a, na, out, p);
    return;
  }
  if (nb < 16) {
    scalar_table().fp_convolve(a, na, b, nb, out, p);
    return;
  }
  const std::size_t nout = na + nb - 1;
  std::vector<std::uint16_t> acc(nout + 16, 0);
  std::vector<std::uint16_t> bw(nb);
  for (std::size_t j = 0; j < nb; ++j) bw[j] = b[j];
  const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
  const __m256i recip = _mm256_set1_epi16(static_cast<short>(reciprocal(p)));
  auto flush = [&] {
    std::size_t k = 0;
    for (; k + 16 <= nout; k += 16) {
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&acc[k]));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(&acc[k]), mod_p16(v, vp, recip));
    }
    for (; k < nout; ++k) acc[k] = static_cast<std::uint16_t>(acc[k] % p);
  };
  int pending = 0;
  for (std::size_t i = 0; i < na; ++i) {
    const unsigned c = a[i];
    if (c == 0) continue;
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    std::size_t j = 0;
    for (; j + 16 <= nb; j += 16) {
      __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&bw[j]));
      __m256i* dst = reinterpret_cast<__m256i*>(&acc[i + j]);
      __m256i cur = _mm256_loadu_si256(dst);
      _mm256_storeu_si256(dst, _mm256_add_epi16(cur, _mm256_mullo_epi16(vb, vc)));
    }
    for (; j < nb; ++j) acc[i + j] = static_cast<std::uint16_t>(acc[i + j] + c * bw[j]);
    if (++pending == kFlushEvery) {
      flush();
      pending = 0;
    }
  }
  flush();
  for (std::size_t k = 0; k < nout; ++k) out[k] = static_cast<std::uint8_t>(acc[k]);
}

void axpy(std::uint8_t* y, const std::uint8_t* x, std::size_t n, unsigned c, unsigned p) {
  const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
  const __m256i recip = _mm256_set1_epi16(static_cast<short>(reciprocal(p)));
  const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m128i xs = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
    __m128i ys = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
    __m256i xw = _mm256_cvtepu8_epi16(xs);
    __m256i yw = _mm256_cvtepu8_epi16(ys);
    __m256i r = mod_p16(_mm256_add_epi16(yw, _mm256_mullo_epi16(xw, vc)), vp, recip);
    __m256i packed = _mm256_packus_epi16(r, r);
    packed = _mm256_permute4x64_epi64(packed, 0xD8);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), _mm256_castsi256_si128(packed));
  }
  for (; i < n; ++i) y[i] = static_cast<std::uint8_t>((y[i] + c * x[i]) % p);
}

inline __m256i load(const Exp* a) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a)); }

bool add(const Exp* a, const Exp* b, Exp* out) {
  __m256i va = load(a), vb = load(b);
  __m256i wrap = _mm256_add_epi16(va, vb);
  __m256i sat = _mm256_adds_epi16(va, vb);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), wrap);
  return _mm256_movemask_epi8(_mm256_cmpeq_epi16(wrap, sat)) == -1;
}

bool sub(const Exp* a, const Exp* b, Exp* out) {
  __m256i va = load(a), vb = load(b);
  __m256i wrap = _mm256_sub_epi16(va, vb);
  __m256i sat = _mm256_subs_epi16(va, vb);
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), wrap);
  return _mm256_movemask_epi8(_mm256_cmpeq_epi16(wrap, sat)) == -1;
}

std::int32_t degree(const Exp* a) {
  __m256i s = _mm256_madd_epi16(load(a), _mm256_set1_epi16(1));
  __m128i lo = _mm256_castsi256_si128(s);
  __m128i hi = _mm256_extracti128_si256(s, 1);
  __m128i t = _mm_add_epi32(lo, hi);
  t = _mm_add_epi32(t, _mm_shuffle_epi32(t, 0x4E));
  t = _mm_add_epi32(t, _mm_shuffle_epi32(t, 0xB1));
  return _mm_cvtsi128_si32(t);
}

int first_diff(const Exp* a, const Exp* b) {
  unsigned eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(load(a), load(b))));
  if (eq == 0xFFFFFFFFu) return -1;
  return __builtin_ctz(~eq) / 2;
}

bool ge_masked(const Exp* a, const Exp* b, std::uint16_t mask) {
  unsigned lt = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpgt_epi16(load(b), load(a))));
  unsigned bytes = 0;
  for (int i = 0; i < kLanes; ++i)
    if ((mask >> i) & 1u) bytes |= 3u << (2 * i);
  return (lt & bytes) == 0;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{Isa::avx2, conv, axpy, add, sub, degree, first_diff, ge_masked};
  return t;
}

}  // namespace charp::simd
