#include <cstring>
#include <limits>
#include <vector>

#include "charp/simd/kernels.hpp"

namespace charp::simd {
namespace {

void conv(const std::uint8_t* a, std::size_t na, const std::uint8_t* b, std::size_t nb,
          std::uint8_t* out, unsigned p) {
  if (na == 0 || nb == 0) return;
  std::vector<std::uint32_t> acc(na + nb - 1, 0);
  for (std::size_t i = 0; i < na; ++i) {
    const std::uint32_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) acc[i + j] += c * b[j];
  }
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<std::uint8_t>(acc[k] % p);
}

void axpy(std::uint8_t* y, const std::uint8_t* x, std::size_t n, unsigned c, unsigned p) {
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint8_t>((y[i] + c * x[i]) % p);
}

bool add(const Exp* a, const Exp* b, Exp* out) {
  bool ok = true;
  for (int i = 0; i < kLanes; ++i) {
    int s = int(a[i]) + int(b[i]);
    if (s > std::numeric_limits<Exp>::max() || s < std::numeric_limits<Exp>::min()) ok = false;
    out[i] = static_cast<Exp>(s);
  }
  return ok;
}

bool sub(const Exp* a, const Exp* b, Exp* out) {
  bool ok = true;
  for (int i = 0; i < kLanes; ++i) {
    int s = int(a[i]) - int(b[i]);
    if (s > std::numeric_limits<Exp>::max() || s < std::numeric_limits<Exp>::min()) ok = false;
    out[i] = static_cast<Exp>(s);
  }
  return ok;
}

std::int32_t degree(const Exp* a) {
  std::int32_t d = 0;
  for (int i = 0; i < kLanes; ++i) d += a[i];
  return d;
}

int first_diff(const Exp* a, const Exp* b) {
  for (int i = 0; i < kLanes; ++i)
    if (a[i] != b[i]) return i;
  return -1;
}

bool ge_masked(const Exp* a, const Exp* b, std::uint16_t mask) {
  for (int i = 0; i < kLanes; ++i)
    if (((mask >> i) & 1u) && a[i] < b[i]) return false;
  return true;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{Isa::scalar, conv, axpy, add, sub, degree, first_diff, ge_masked};
  return t;
}

}  // namespace charp::simd
