#include "charp/error.hpp"
#include "charp/gallery.hpp"

namespace charp {

namespace {

std::vector<std::string> x_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace

PolyMap epsilon_map(const VarTablePtr& vt, const Coefficient& t) {
  std::vector<MultiPoly> im;
  for (int i = 0; i < vt->n_ring(); ++i) im.push_back(MultiPoly::var(vt, i));
  im[0] += MultiPoly::constant(vt, t);
  return PolyMap(vt, std::move(im));
}

// ---------------------------------------------------------------- F, F_h

VarTablePtr fh_table(int n, unsigned p) {
  std::vector<std::string> names{"f"};
  for (int i = 3; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarTable::make(p, names);
}

FResult build_F_and_Fh(int n, unsigned p, const MultiPoly& h) {
  if (n < 3 || n > 8) fail(Errc::BadParameters, "need 3 <= n <= 8");
  if (!h.vars() || h.prime() != p || h.vars()->n_ring() != n - 1 || h.uses_var(h.vars()->T()))
    fail(Errc::BadH, "h must be a polynomial in f, x3, ..., xn");
  for (int i = 0; i < h.vars()->n_ring(); ++i)
    if (h.vars()->name(i) != fh_table(n, p)->name(i)) fail(Errc::BadH, "h must be a polynomial in f, x3, ..., xn");
  FResult res;
  res.vt = VarTable::make(p, x_names(n));
  const auto& vt = res.vt;
  const MultiPoly x1 = MultiPoly::var(vt, 0), x2 = MultiPoly::var(vt, 1), x3 = MultiPoly::var(vt, 2);
  const MultiPoly T = MultiPoly::var(vt, vt->T());
  res.f = x2 * x3 + x1 - pow(x1, p);
  auto& rep = res.report;

  // F(f) = f and F(x1) = x1 + x3 T give F(x2) = x2 + x3^-1 (x1 - x1^p - F(x1 - x1^p))
  const MultiPoly Fx1 = x1 + x3 * T;
  const MultiPoly num = x1 - pow(x1, p) - (Fx1 - pow(Fx1, p));
  const auto q = try_exact_div(num, x3);
  rep.add("F divisible", q.has_value(), num, "x3 divides x1 - x1^p - F(x1 - x1^p)");
  if (!q) fail(Errc::InternalIntegralityFailure, "F does not restrict");
  const MultiPoly Fx2 = x2 + *q;
  const MultiPoly claim = x2 - T + pow(x3, p - 1) * pow(T, p);
  rep.add("F(x2)", Fx2 == claim, Fx2 - claim, "F(x2) = x2 - T + x3^(p-1) T^p");
  std::vector<MultiPoly> im;
  for (int i = 0; i < n; ++i) im.push_back(MultiPoly::var(vt, i));
  im[0] = Fx1;
  im[1] = Fx2;
  res.F = GaAction::make(vt, im, CoeffRing::field());
  rep.add("F fixes f", res.F.is_invariant(res.f), res.F.apply(res.f) - res.f);

  // h(f, x3, ..., xn) rewritten in x
  Assignment a(static_cast<std::size_t>(h.vars()->size()));
  std::vector<MultiPoly> hx_vals{res.f};
  for (int i = 3; i <= n; ++i) hx_vals.push_back(MultiPoly::var(vt, i - 1));
  MultiPoly hx(vt);
  for (const auto& t : h.terms()) {
    MultiPoly m = MultiPoly::constant(vt, t.c);
    for (int i = 0; i < n - 1; ++i)
      if (t.m[i] != 0) m = m * pow(hx_vals[static_cast<std::size_t>(i)], t.m[i]);
    hx += m;
  }
  const PolyMap Fh = res.F.evaluate(hx);
  std::vector<MultiPoly> disp;
  for (int i = 0; i < n; ++i) disp.push_back(MultiPoly::var(vt, i));
  disp[0] = x1 + x3 * hx;
  disp[1] = x2 - hx + pow(x3, p - 1) * pow(hx, p);
  const PolyMap want(vt, disp);
  rep.add("F_h formula", Fh == want, MultiPoly(vt), Fh.to_string());
  const PolyMap eps = epsilon_map(vt, Coefficient::one(p));
  rep.add("F_h commutes with eps", compose(Fh, eps) == compose(eps, Fh), MultiPoly(vt));
  res.Fh = Fh;

  if (n == 4) {
    const MultiPoly x4 = MultiPoly::var(vt, 3);
    const PolyMap Fx4 = res.F.evaluate(x4), Fx4inv = res.F.evaluate(-x4);
    const PolyMap tau(vt, {x1, x2, x3, x4 + res.f}), tauinv(vt, {x1, x2, x3, x4 - res.f});
    const PolyMap Ff = res.F.evaluate(res.f);
    const PolyMap comm = compose(compose(compose(tau, Fx4), tauinv), Fx4inv);
    rep.add("F_f commutator", comm == Ff, MultiPoly(vt), comm.to_string());
    rep.add("tau in C0", compose(tau, eps) == compose(eps, tau) && compose(tau, tauinv).is_identity(), MultiPoly(vt));
  }
  return res;
}

// ---------------------------------------------------------------- rank r

RankRResult build_rank_r_action(int n, int r, unsigned p) {
  if (r < 2 || r >= n || n > 5 || (p != 2 && p != 3)) fail(Errc::BadParameters, "need 2 <= r < n <= 5, p in {2, 3}");
  RankRResult res;
  res.vt = VarTable::make(p, x_names(n), {"x" + std::to_string(n)});
  const auto& vt = res.vt;
  auto X = [&](int i) { return MultiPoly::var(vt, i - 1); };
  const MultiPoly xn = X(n), xninv = MultiPoly::var(vt, n - 1, -1), T = MultiPoly::var(vt, vt->T());

  // f_1..f_{n-1}, and the inverse written in y-names (y_i -> x_i slots)
  std::vector<MultiPoly> f(static_cast<std::size_t>(n - 1), MultiPoly(vt));
  f[0] = X(1) + xninv * pow(X(r), p);
  const MultiPoly art = pow(xn, p - 1) * (pow(f[0], p) - f[0]);
  MultiPoly sum(vt);
  for (int i = 2; i <= r; ++i) {
    f[static_cast<std::size_t>(i - 1)] = X(i) + xninv * sum + art;
    sum += pow(X(i), p);
  }
  for (int i = r + 1; i <= n - 1; ++i) f[static_cast<std::size_t>(i - 1)] = X(i);
  res.f = f;

  std::vector<MultiPoly> inv(static_cast<std::size_t>(n), MultiPoly(vt));
  const MultiPoly yart = pow(xn, p - 1) * (pow(X(1), p) - X(1));
  MultiPoly ysum(vt);
  for (int i = 2; i <= r; ++i) {
    inv[static_cast<std::size_t>(i - 1)] = X(i) - xninv * ysum - yart;
    ysum += pow(inv[static_cast<std::size_t>(i - 1)], p);
  }
  for (int i = r + 1; i <= n; ++i) inv[static_cast<std::size_t>(i - 1)] = X(i);
  inv[0] = X(1) - xninv * pow(inv[static_cast<std::size_t>(r - 1)], p);

  std::vector<MultiPoly> coords = f;
  coords.push_back(xn);
  SliceData s{PolyMap(vt, coords), T, {PolyMap(vt, inv)}};
  res.action = slice_action(s, CoeffRing::field());
  auto& rep = res.report;
  const AxiomReport ax = check_axioms(vt, res.action.images());
  rep.add("axioms", ax.ok(), MultiPoly(vt), ax.witness);

  // (c): E(x_i) - x_i (2 <= i <= r) and E(x_1) - x_1 - T lie in x_n (T^p - T) k[x][T]
  const MultiPoly I = xn * (pow(T, p) - T);
  for (int i = 1; i <= r; ++i) {
    MultiPoly dlt = res.action[i - 1] - X(i);
    if (i == 1) dlt -= T;
    const auto q = try_exact_div(dlt, I);
    const bool ok = q && !q->has_negative_exponent();
    rep.add("c x" + std::to_string(i), ok, dlt);
  }
  bool fixed = true;
  for (int i = r + 1; i <= n; ++i) fixed = fixed && res.action[i - 1] == X(i);
  rep.add("fixes x_(r+1)..x_n", fixed, MultiPoly(vt));
  bool poly = true;
  for (const auto& g : res.action.images()) poly = poly && !g.has_negative_exponent();
  rep.add("restricts to k[x]", poly, MultiPoly(vt));
  const PolyMap e1 = res.action.evaluate(1);
  rep.add("E1 = eps", e1 == epsilon_map(vt, Coefficient::one(p)), MultiPoly(vt), e1.to_string());

  // invariants x_n f_i (2 <= i <= r) and x_{r+1}..x_n
  bool inv_ok = true;
  for (int i = 2; i <= r; ++i) {
    const MultiPoly g = xn * f[static_cast<std::size_t>(i - 1)];
    inv_ok = inv_ok && !g.has_negative_exponent();
    res.invariants.push_back(g);
  }
  for (int i = r + 1; i <= n; ++i) res.invariants.push_back(X(i));
  for (const auto& g : res.invariants) inv_ok = inv_ok && res.action.is_invariant(g);
  rep.add("invariants", inv_ok, MultiPoly(vt));

  // (x_n f_i)|_{x_n = 0} = sum_{j<i} x_j^p + x_r^(p^2)
  const MultiPoly zero(vt);
  bool red_ok = true;
  std::vector<MultiPoly> reduced;
  for (std::size_t k = 0; k + 1 < res.invariants.size(); ++k) {
    const MultiPoly red = substitute_var(res.invariants[k], n - 1, zero);
    reduced.push_back(red);
    if (k < static_cast<std::size_t>(r - 1)) {
      const int i = static_cast<int>(k) + 2;
      MultiPoly want = pow(X(r), p * p);
      for (int j = 2; j < i; ++j) want += pow(X(j), p);
      red_ok = red_ok && red == want;
    }
  }
  rep.add("reduction at x_n = 0", red_ok, MultiPoly(vt));
  // each reduced generator brings in a variable absent from the earlier ones
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  bool tri = true;
  for (const auto& red : reduced) {
    int fresh = -1;
    for (int v = 0; v < n - 1 && fresh < 0; ++v)
      if (red.uses_var(v) && !seen[static_cast<std::size_t>(v)]) fresh = v;
    tri = tri && fresh >= 0;
    for (int v = 0; v < n - 1; ++v)
      if (red.uses_var(v)) seen[static_cast<std::size_t>(v)] = true;
  }
  rep.add("independence spot check", tri, MultiPoly(vt));

  std::vector<MultiPoly> witness;
  for (int i = r + 1; i <= n; ++i) witness.push_back(X(i));
  res.rank = rank_certificate(res.action, res.invariants, witness);
  rep.add("rank", res.rank.exact() && res.rank.lower == r, MultiPoly(vt), res.rank.to_string());
  return res;
}

// ---------------------------------------------------------------- eps invariants

PolyMap C0Template::make(int i, const Coefficient& a, const MultiPoly& g) const {
  const int n = vt->n_ring();
  const unsigned p = vt->prime();
  if (i < 1 || i > n || a.is_zero()) fail(Errc::BadParameters, "C0 generator needs 1 <= i <= n and a != 0");
  if (g.uses_var(i - 1) || g.uses_var(vt->T())) fail(Errc::BadParameters, "g may not involve x_i");
  MultiPoly gg = g;
  if (i == 1) {
    if (!a.is_one()) fail(Errc::BadParameters, "a must be 1 for i = 1");
  } else {
    const MultiPoly x1 = MultiPoly::var(vt, 0);
    gg = substitute_var(g, 0, pow(x1, p) - x1);
  }
  std::vector<MultiPoly> im;
  for (int j = 0; j < n; ++j) im.push_back(MultiPoly::var(vt, j));
  im[static_cast<std::size_t>(i - 1)] = im[static_cast<std::size_t>(i - 1)].scaled(a) + gg;
  return PolyMap(vt, std::move(im));
}

std::string C0Template::schema() const {
  return "(x_1, ..., a x_i + g, ..., x_n): i = 1 needs a = 1 and g in k[x_2..x_n]; "
         "i > 1 needs a != 0 and g in k[x_1^p - x_1, x_j (j != 1, i)], with x1 in g standing for x_1^p - x_1";
}

EpsInvariants epsilon_invariants(int n, unsigned p) {
  if (n < 1 || n > 8) fail(Errc::BadParameters, "need 1 <= n <= 8");
  EpsInvariants res;
  res.vt = VarTable::make(p, x_names(n));
  const MultiPoly x1 = MultiPoly::var(res.vt, 0);
  res.gens.push_back(pow(x1, p) - x1);
  for (int i = 1; i < n; ++i) res.gens.push_back(MultiPoly::var(res.vt, i));
  const PolyMap eps = epsilon_map(res.vt, Coefficient::one(p));
  for (const auto& g : res.gens)
    if (eps.apply(g) != g) fail(Errc::InternalIntegralityFailure, "not invariant: " + g.to_string());
  res.c0.vt = res.vt;
  return res;
}

}  // namespace charp
