// Arithmetic in k[x] modulo u^e R[x], for polynomials whose coefficients are
// Laurent in u. Valuations of products add exactly because the lowest u-layer
// of each factor is a nonzero element of the domain F_p[x].
#include <climits>

#include "charp/error.hpp"
#include "charp/poly.hpp"

namespace charp {

int u_valuation(const MultiPoly& f) {
  int v = INT32_MAX;
  for (const auto& t : f.terms()) v = std::min(v, t.c.u_valuation());
  return v;
}

MultiPoly truncate_u(const MultiPoly& f, int e) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (!t.c.is_laurent()) fail(Errc::NotLaurentCoefficient, t.c.to_string());
    if (t.c.u_valuation() >= e) continue;
    Coefficient c = t.c.truncate_u(e);
    if (!c.is_zero()) out.push_back({t.m, std::move(c)});
  }
  return MultiPoly::from_sorted(f.vars(), std::move(out));
}

MultiPoly polar_part(const MultiPoly& f) { return truncate_u(f, 0); }

namespace {

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// a*b mod u^e given the exact valuations va, vb of the untruncated factors
MultiPoly mul_trunc_v(const MultiPoly& a, int va, const MultiPoly& b, int vb, int e) {
  const auto& vt = a.vars();
  if (a.is_zero() || b.is_zero()) return MultiPoly(vt);
  if (static_cast<long>(va) + vb >= e) return MultiPoly(vt);
  MultiPoly a2 = truncate_u(a, e - vb);
  MultiPoly b2 = truncate_u(b, e - va);
  return truncate_u(a2 * b2, e);
}

MultiPoly pow_trunc_v(const MultiPoly& f, int v, long n, int e) {
  const auto& vt = f.vars();
  const long p = f.prime();
  if (n == 0) return e > 0 ? MultiPoly::constant(vt, 1) : MultiPoly(vt);
  if (f.is_zero() || static_cast<long>(v) * n >= e) return MultiPoly(vt);
  if (n == 1) return truncate_u(f, e);
  if (n % p == 0) {
    const long e2 = ceil_div(e, p);
    return truncate_u(frobenius(pow_trunc_v(f, v, n / p, static_cast<int>(e2))), e);
  }
  MultiPoly rest = pow_trunc_v(f, v, n - 1, e - v);
  return mul_trunc_v(rest, static_cast<int>(v * (n - 1)), f, v, e);
}

}  // namespace

MultiPoly mul_trunc(const MultiPoly& a, const MultiPoly& b, int e) {
  return mul_trunc_v(a, u_valuation(a), b, u_valuation(b), e);
}

MultiPoly pow_trunc(const MultiPoly& f, long n, int e) {
  if (n < 0) fail(Errc::NegativeExponent, "pow_trunc");
  return pow_trunc_v(f, u_valuation(f), n, e);
}

MultiPoly substitute_trunc(const MultiPoly& f, const Assignment& assignment, int e) {
  const auto& vt = f.vars();
  const int nv = vt->size();
  std::vector<int> val(static_cast<std::size_t>(nv), 0);
  for (int i = 0; i < nv; ++i) {
    const auto& img = assignment.size() > static_cast<std::size_t>(i) ? assignment[static_cast<std::size_t>(i)]
                                                                       : std::optional<MultiPoly>{};
    if (img) {
      if (img->is_zero()) fail(Errc::PreconditionViolated, "substitute_trunc with a zero image");
      val[static_cast<std::size_t>(i)] = u_valuation(*img);
    }
  }
  std::map<std::tuple<int, int, int>, MultiPoly> cache;  // (var, exponent, precision)
  auto image_pow = [&](int i, int k, int prec) -> MultiPoly {
    auto key = std::make_tuple(i, k, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    if (k < 0) fail(Errc::NegativeExponent, "substitute_trunc needs nonnegative exponents");
    const auto& img = assignment.size() > static_cast<std::size_t>(i) ? assignment[static_cast<std::size_t>(i)]
                                                                       : std::optional<MultiPoly>{};
    MultiPoly r = img ? pow_trunc_v(*img, val[static_cast<std::size_t>(i)], k, prec)
                      : (prec > 0 ? MultiPoly::var(vt, i, k) : MultiPoly(vt));
    cache.emplace(key, r);
    return r;
  };
  MultiPoly acc(vt);
  for (const auto& t : f.terms()) {
    const int vc = t.c.u_valuation();
    long total = 0;
    for (int i = 0; i < nv; ++i) total += static_cast<long>(t.m[i]) * val[static_cast<std::size_t>(i)];
    if (vc + total >= e) continue;
    const int need = e - vc;  // precision required of the monomial image
    MultiPoly prod = MultiPoly::constant(vt, 1);
    long prod_val = 0;
    for (int i = 0; i < nv; ++i) {
      const int k = t.m[i];
      if (k == 0) continue;
      const long fv = static_cast<long>(k) * val[static_cast<std::size_t>(i)];
      const long others = total - fv;
      MultiPoly factor = image_pow(i, k, static_cast<int>(need - others));
      const long remaining = total - prod_val - fv;  // valuation still to be multiplied in
      prod = mul_trunc_v(prod, static_cast<int>(prod_val), factor, static_cast<int>(fv),
                         static_cast<int>(need - remaining));
      prod_val += fv;
    }
    acc += truncate_u(prod.scaled(t.c), e);
  }
  return acc;
}

}  // namespace charp
