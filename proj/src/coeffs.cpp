#include "charp/coeffs.hpp"

#include <climits>
#include <cstdint>

#include "charp/error.hpp"
#include "charp/simd/kernels.hpp"

namespace charp {

bool is_supported_prime(unsigned p) { return p == 2 || p == 3 || p == 5 || p == 7; }

void require_prime(unsigned p) {
  if (!is_supported_prime(p)) fail(Errc::UnsupportedPrime, "p=" + std::to_string(p));
}

unsigned fp_inv(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 in F_p");
  unsigned r = 1;
  for (unsigned e = p - 2, b = a; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// ---------------------------------------------------------------- UPoly

int UPoly::ord() const {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) return static_cast<int>(i);
  return INT_MAX / 4;
}

bool UPoly::is_monomial() const {
  if (c.empty()) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i]) return false;
  return true;
}

std::size_t UPoly::term_count() const {
  std::size_t n = 0;
  for (auto v : c) n += v != 0;
  return n;
}

void UPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

UPoly UPoly::constant(unsigned v) {
  UPoly r;
  if (v) r.c.push_back(static_cast<std::uint8_t>(v));
  return r;
}

UPoly UPoly::monomial(unsigned v, int k) {
  UPoly r;
  if (v) {
    r.c.assign(static_cast<std::size_t>(k) + 1, 0);
    r.c[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(v);
  }
  return r;
}

namespace upoly {

UPoly add(const UPoly& a, const UPoly& b, unsigned p) {
  const UPoly& big = a.c.size() >= b.c.size() ? a : b;
  const UPoly& small = a.c.size() >= b.c.size() ? b : a;
  UPoly r = big;
  simd::active().fp_axpy(r.c.data(), small.c.data(), small.c.size(), 1, p);
  r.trim();
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b, unsigned p) {
  UPoly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0);
  simd::active().fp_axpy(r.c.data(), b.c.data(), b.c.size(), p - 1, p);
  r.trim();
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b, unsigned p) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.c.size() == 1) return scale(b, a.c[0], p);
  if (b.c.size() == 1) return scale(a, b.c[0], p);
  r.c.resize(a.c.size() + b.c.size() - 1);
  simd::active().fp_convolve(a.c.data(), a.c.size(), b.c.data(), b.c.size(), r.c.data(), p);
  r.trim();
  return r;
}

UPoly scale(const UPoly& a, unsigned s, unsigned p) {
  s %= p;
  UPoly r;
  if (s == 0 || a.is_zero()) return r;
  r.c.resize(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = static_cast<std::uint8_t>(a.c[i] * s % p);
  return r;
}

UPoly shift(const UPoly& a, int k) {
  if (a.is_zero() || k == 0) return a;
  UPoly r;
  if (k > 0) {
    r.c.assign(static_cast<std::size_t>(k), 0);
    r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  } else {
    r.c.assign(a.c.begin() + (-k), a.c.end());
  }
  return r;
}

void divmod(const UPoly& a, const UPoly& b, unsigned p, UPoly* q, UPoly* r) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by 0");
  UPoly rem = a;
  UPoly quo;
  const int db = b.degree();
  if (rem.degree() >= db) quo.c.assign(static_cast<std::size_t>(rem.degree() - db + 1), 0);
  const unsigned il = fp_inv(b.lead(), p);
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shiftk = rem.degree() - db;
    const unsigned f = rem.lead() * il % p;
    quo.c[static_cast<std::size_t>(shiftk)] = static_cast<std::uint8_t>(f);
    simd::active().fp_axpy(rem.c.data() + shiftk, b.c.data(), b.c.size(), (p - f) % p, p);
    rem.trim();
  }
  quo.trim();
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

UPoly make_monic(const UPoly& a, unsigned p) {
  if (a.is_zero() || a.lead() == 1) return a;
  return scale(a, fp_inv(a.lead(), p), p);
}

UPoly monic_gcd(UPoly a, UPoly b, unsigned p) {
  while (!b.is_zero()) {
    UPoly r;
    divmod(a, b, p, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

std::string to_string(const UPoly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (int i = a.degree(); i >= 0; --i) {
    unsigned v = a.c[static_cast<std::size_t>(i)];
    if (!v) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(v);
      continue;
    }
    if (v != 1) s += std::to_string(v) + "*";
    s += "u";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace upoly

// ---------------------------------------------------------------- Coefficient

Coefficient::Coefficient(long v, unsigned p) : p_(static_cast<std::uint8_t>(p)) {
  require_prime(p);
  long m = v % static_cast<long>(p);
  if (m < 0) m += p;
  num_ = UPoly::constant(static_cast<unsigned>(m));
}

Coefficient Coefficient::u_pow(int k, unsigned p) {
  require_prime(p);
  Coefficient r;
  r.p_ = static_cast<std::uint8_t>(p);
  if (k >= 0) {
    r.num_ = UPoly::monomial(1, k);
  } else {
    r.num_ = UPoly::constant(1);
    r.den_ = UPoly::monomial(1, -k);
  }
  return r;
}

Coefficient Coefficient::from_parts(UPoly num, UPoly den, unsigned p) {
  require_prime(p);
  if (den.is_zero()) fail(Errc::DivisionByZero, "zero denominator");
  Coefficient r;
  r.p_ = static_cast<std::uint8_t>(p);
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.num_.trim();
  r.den_.trim();
  for (auto& v : r.num_.c) v %= p;
  for (auto& v : r.den_.c) v %= p;
  r.num_.trim();
  r.den_.trim();
  if (r.den_.is_zero()) fail(Errc::DivisionByZero, "zero denominator");
  r.normalize();
  return r;
}

void Coefficient::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly::constant(1);
    return;
  }
  if (den_.is_one()) return;
  const unsigned p = p_;
  if (den_.is_monomial()) {
    if (den_.lead() != 1) {
      num_ = upoly::scale(num_, fp_inv(den_.lead(), p), p);
      den_.c.back() = 1;
    }
    const int k = std::min(den_.degree(), num_.ord());
    if (k > 0) {
      num_ = upoly::shift(num_, -k);
      den_ = upoly::shift(den_, -k);
    }
    return;
  }
  UPoly g = upoly::monic_gcd(num_, den_, p);
  if (!g.is_one()) {
    upoly::divmod(num_, g, p, &num_, nullptr);
    upoly::divmod(den_, g, p, &den_, nullptr);
  }
  if (den_.lead() != 1) {
    const unsigned il = fp_inv(den_.lead(), p);
    num_ = upoly::scale(num_, il, p);
    den_ = upoly::scale(den_, il, p);
  }
}

static unsigned pick_prime(const Coefficient& a, const Coefficient& b) {
  return a.prime() ? a.prime() : b.prime();
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  if (b.is_zero()) {
    Coefficient r = a;
    if (!r.p_) r.p_ = b.p_;
    return r;
  }
  if (a.is_zero()) {
    Coefficient r = b;
    if (!r.p_) r.p_ = a.p_;
    return r;
  }
  const unsigned p = pick_prime(a, b);
  Coefficient r;
  r.p_ = static_cast<std::uint8_t>(p);
  if (a.den_.is_one() && b.den_.is_one()) {
    if (a.num_.c.size() == 1 && b.num_.c.size() == 1) {
      r.num_ = UPoly::constant((a.num_.c[0] + b.num_.c[0]) % p);
      return r;
    }
    r.num_ = upoly::add(a.num_, b.num_, p);
    return r;
  }
  if (a.den_ == b.den_) {
    r.num_ = upoly::add(a.num_, b.num_, p);
    r.den_ = a.den_;
    r.normalize();
    return r;
  }
  if (a.den_.is_monomial() && b.den_.is_monomial()) {
    const int ka = a.den_.degree(), kb = b.den_.degree();
    const int k = std::max(ka, kb);
    r.num_ = upoly::add(upoly::shift(a.num_, k - ka), upoly::shift(b.num_, k - kb), p);
    r.den_ = UPoly::monomial(1, k);
    r.normalize();
    return r;
  }
  r.num_ = upoly::add(upoly::mul(a.num_, b.den_, p), upoly::mul(b.num_, a.den_, p), p);
  r.den_ = upoly::mul(a.den_, b.den_, p);
  r.normalize();
  return r;
}

Coefficient Coefficient::operator-() const {
  Coefficient r = *this;
  if (p_) r.num_ = upoly::scale(num_, p_ - 1u, p_);
  return r;
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient& Coefficient::operator+=(const Coefficient& b) { return *this = *this + b; }
Coefficient& Coefficient::operator-=(const Coefficient& b) { return *this = *this + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  const unsigned p = pick_prime(a, b);
  Coefficient r;
  r.p_ = static_cast<std::uint8_t>(p);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.den_.is_one() && b.den_.is_one()) {
    if (a.num_.c.size() == 1 && b.num_.c.size() == 1) {
      r.num_ = UPoly::constant(a.num_.c[0] * b.num_.c[0] % p);
      return r;
    }
    r.num_ = upoly::mul(a.num_, b.num_, p);
    return r;
  }
  if (a.is_fp()) {
    r = b;
    r.p_ = static_cast<std::uint8_t>(p);
    r.num_ = upoly::scale(b.num_, a.num_.c[0], p);
    return r;
  }
  if (b.is_fp()) {
    r = a;
    r.p_ = static_cast<std::uint8_t>(p);
    r.num_ = upoly::scale(a.num_, b.num_.c[0], p);
    return r;
  }
  r.num_ = upoly::mul(a.num_, b.num_, p);
  r.den_ = upoly::mul(a.den_, b.den_, p);
  r.normalize();
  return r;
}

Coefficient Coefficient::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0");
  Coefficient r;
  r.p_ = p_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by 0");
  return a * b.inv();
}

Coefficient Coefficient::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Coefficient r = Coefficient::one(p_ ? p_ : 2);
  if (!p_) return e == 0 ? r : *this;
  Coefficient b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Coefficient Coefficient::frobenius() const {
  if (is_fp()) return *this;
  auto spread = [&](const UPoly& a) {
    UPoly r;
    if (a.is_zero()) return r;
    r.c.assign(static_cast<std::size_t>(a.degree()) * p_ + 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i * p_] = a.c[i];
    return r;
  };
  Coefficient r;
  r.p_ = p_;
  r.num_ = spread(num_);
  r.den_ = spread(den_);
  return r;
}

bool Coefficient::is_in_localization(const Coefficient& s) const {
  if (s.is_zero() || !s.is_integral()) fail(Errc::InvalidLocalizer, s.to_string());
  UPoly d = den_;
  const unsigned p = p_ ? p_ : s.p_;
  while (!d.is_constant()) {
    UPoly g = upoly::monic_gcd(d, s.num_, p);
    if (g.is_constant()) return false;
    upoly::divmod(d, g, p, &d, nullptr);
  }
  return true;
}

int Coefficient::u_valuation() const {
  if (is_zero()) return INT32_MAX;
  return num_.ord() - den_.ord();
}

Coefficient Coefficient::truncate_u(int e) const {
  if (!is_laurent()) fail(Errc::NotLaurentCoefficient, to_string());
  if (is_zero()) return *this;
  const int k = den_.degree();
  const long keep = static_cast<long>(e) + k;  // num indices < keep survive
  if (keep >= static_cast<long>(num_.c.size())) return *this;
  Coefficient r;
  r.p_ = p_;
  if (keep <= 0) return r;
  r.num_.c.assign(num_.c.begin(), num_.c.begin() + keep);
  r.num_.trim();
  r.den_ = den_;
  r.normalize();
  return r;
}

std::string Coefficient::to_string() const {
  if (den_.is_one()) return upoly::to_string(num_);
  std::string n = upoly::to_string(num_);
  std::string d = upoly::to_string(den_);
  if (num_.term_count() > 1) n = "(" + n + ")";
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::size_t Coefficient::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : num_.c) h = (h ^ v) * 1099511628211ull;
  h = (h ^ 0xff) * 1099511628211ull;
  for (auto v : den_.c) h = (h ^ v) * 1099511628211ull;
  return static_cast<std::size_t>(h);
}

Coefficient coeff_arith(CoeffArith kind, const Coefficient& a, const Coefficient& b) {
  switch (kind) {
    case CoeffArith::add: return a + b;
    case CoeffArith::sub: return a - b;
    case CoeffArith::mul: return a * b;
    case CoeffArith::div: return a / b;
    case CoeffArith::neg: return -a;
    case CoeffArith::inv: return a.inv();
  }
  return a;
}

}  // namespace charp
