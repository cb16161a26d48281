#pragma once
// Slow reference arithmetic for tests: dense F_p[u] vectors, fractions and
// std::map polynomials. Shares nothing with the library beyond reading terms.
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "charp/poly.hpp"

namespace oracle {

using NU = std::vector<long>;  // coefficients of u^0, u^1, ...

inline void trim(NU& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline long md(long v, long p) { return ((v % p) + p) % p; }
inline long inv_mod(long a, long p) {
  for (long x = 1; x < p; ++x)
    if (md(a * x, p) == 1) return x;
  throw std::domain_error("no inverse");
}
inline NU add(const NU& a, const NU& b, long p) {
  NU r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  for (auto& v : r) v = md(v, p);
  trim(r);
  return r;
}
inline NU neg(const NU& a, long p) {
  NU r = a;
  for (auto& v : r) v = md(-v, p);
  return r;
}
inline NU mul(const NU& a, const NU& b, long p) {
  if (a.empty() || b.empty()) return {};
  NU r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = md(r[i + j] + a[i] * b[j], p);
  trim(r);
  return r;
}
inline void divmod(NU a, const NU& b, long p, NU& q, NU& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const long li = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t s = a.size() - b.size();
    const long c = md(a.back() * li, p);
    q[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = md(a[s + j] - c * b[j], p);
    trim(a);
  }
  trim(q);
  r = a;
}
inline NU monic(const NU& a, long p) {
  if (a.empty()) return a;
  const long li = inv_mod(a.back(), p);
  NU r = a;
  for (auto& v : r) v = md(v * li, p);
  return r;
}
inline NU gcd(NU a, NU b, long p) {
  while (!b.empty()) {
    NU q, r;
    divmod(a, b, p, q, r);
    a = b;
    b = r;
  }
  return monic(a, p);
}

struct Frac {
  NU num, den{1};
};
inline Frac norm(Frac f, long p) {
  if (f.num.empty()) return {{}, {1}};
  NU g = gcd(f.num, f.den, p), q, r;
  divmod(f.num, g, p, q, r);
  f.num = q;
  divmod(f.den, g, p, q, r);
  f.den = q;
  const long li = inv_mod(f.den.back(), p);
  for (auto& v : f.num) v = md(v * li, p);
  for (auto& v : f.den) v = md(v * li, p);
  return f;
}
inline Frac fadd(const Frac& a, const Frac& b, long p) {
  return norm({add(mul(a.num, b.den, p), mul(b.num, a.den, p), p), mul(a.den, b.den, p)}, p);
}
inline Frac fmul(const Frac& a, const Frac& b, long p) { return norm({mul(a.num, b.num, p), mul(a.den, b.den, p)}, p); }
inline Frac finv(const Frac& a, long p) {
  if (a.num.empty()) throw std::domain_error("inverse of zero");
  return norm({a.den, a.num}, p);
}
inline bool feq(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }

inline Frac from_coeff(const charp::Coefficient& c) {
  Frac f;
  f.num.assign(c.num().c.begin(), c.num().c.end());
  f.den.assign(c.den().c.begin(), c.den().c.end());
  return f;
}

using Exps = std::vector<int>;
struct Poly {
  long p = 2;
  std::map<Exps, Frac> t;
};

inline Poly from(const charp::MultiPoly& f) {
  Poly r{static_cast<long>(f.prime()), {}};
  const int n = f.vars()->size();
  for (const auto& term : f.terms()) {
    Exps e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = term.m[i];
    r.t[e] = from_coeff(term.c);
  }
  return r;
}
inline Poly padd(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b.t) {
    auto it = r.t.find(e);
    if (it == r.t.end()) {
      r.t[e] = c;
    } else {
      it->second = fadd(it->second, c, a.p);
      if (it->second.num.empty()) r.t.erase(it);
    }
  }
  return r;
}
inline Poly pneg(const Poly& a) {
  Poly r = a;
  for (auto& [e, c] : r.t) c.num = neg(c.num, a.p);
  return r;
}
inline Poly pmul(const Poly& a, const Poly& b) {
  Poly r{a.p, {}};
  for (const auto& [ea, ca] : a.t)
    for (const auto& [eb, cb] : b.t) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Poly one{a.p, {{e, fmul(ca, cb, a.p)}}};
      r = padd(r, one);
    }
  return r;
}
inline Poly pone(long p, std::size_t n) { return {p, {{Exps(n, 0), Frac{{1}, {1}}}}}; }
inline Poly ppow(const Poly& a, int k, std::size_t n) {
  Poly r = pone(a.p, n);
  for (int i = 0; i < k; ++i) r = pmul(r, a);
  return r;
}
// images[i] replaces variable i (all variables must be given, nonnegative exponents)
inline Poly psubst(const Poly& f, const std::vector<Poly>& images, std::size_t n) {
  Poly r{f.p, {}};
  for (const auto& [e, c] : f.t) {
    Poly term{f.p, {{Exps(n, 0), c}}};
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = pmul(term, ppow(images[i], e[i], n));
    r = padd(r, term);
  }
  return r;
}
inline bool peq(const Poly& a, const Poly& b) {
  if (a.t.size() != b.t.size()) return false;
  for (auto ia = a.t.begin(), ib = b.t.begin(); ia != a.t.end(); ++ia, ++ib)
    if (ia->first != ib->first || !feq(ia->second, ib->second)) return false;
  return true;
}

}  // namespace oracle
