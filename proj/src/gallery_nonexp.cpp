#include "charp/error.hpp"
#include "charp/gallery.hpp"

namespace charp {

namespace {

std::vector<std::string> family_names(int l) {
  std::vector<std::string> names{"x", "y"};
  for (int i = 1; i <= l; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

// g(w, z) on the g-table -> family table, with w -> wimg and z_i -> z_i
MultiPoly lift_g(const MultiPoly& g, const VarTablePtr& vt, const MultiPoly& wimg) {
  const int l = g.vars()->n_ring() - 1;
  Assignment a = identity_assignment(vt);
  MultiPoly out(vt);
  for (const auto& t : g.terms()) {
    MultiPoly m = MultiPoly::constant(vt, t.c) * pow(wimg, t.m[0]);
    for (int i = 1; i <= l; ++i) m = m * MultiPoly::var(vt, i + 1, t.m[i]);
    out += m;
  }
  return out;
}

MultiPoly at_T(const MultiPoly& f, long v) {
  const auto& vt = f.vars();
  return substitute_var(f, vt->T(), MultiPoly::constant(vt, v));
}

}  // namespace

VarTablePtr nonexp_g_table(unsigned p, int l) {
  std::vector<std::string> names{"w"};
  for (int i = 1; i <= l; ++i) names.push_back("z" + std::to_string(i));
  return VarTable::make(p, names);
}

MultiPoly nonexp_default_g(unsigned p, int l) {
  const auto gt = nonexp_g_table(p, l);
  MultiPoly g = MultiPoly::var(gt, 0);
  for (int i = 1; i <= l; ++i) g = g * MultiPoly::var(gt, i);
  return g;
}

NonExpResult build_nonexp_family(unsigned p, int d, int l, const MultiPoly& g, bool materialize) {
  if (d < 2 || d % static_cast<int>(p) == 0 || l < 0 || l > 8)
    fail(Errc::BadParameters, "need d >= 2, p not dividing d, 0 <= l <= 8");
  if (g.prime() != p || g.vars()->n_ring() != l + 1) fail(Errc::BadParameters, "g must live on the (w, z) table");
  for (const auto& t : g.terms())
    if (!t.c.is_integral()) fail(Errc::BadParameters, "g must have coefficients in R");
  NonExpResult res;
  NonExpFamily& F = res.fam;
  F.p = p;
  F.d = d;
  F.l = l;
  const long P = p;
  F.a = P - 2 + (P - 1) * (P - 1) * (d - 1);
  F.b = (P + 1) * (d - 1) + 1;
  F.c = P * F.a + P * (P - 1) * (d - 1);
  F.vt = VarTable::make(p, family_names(l));
  const auto& vt = F.vt;
  auto U = [&](long k) { return Coefficient::u_pow(static_cast<int>(k), p); };
  const MultiPoly x = MultiPoly::var(vt, 0), y = MultiPoly::var(vt, 1), T = MultiPoly::var(vt, vt->T());
  const Coefficient dd(static_cast<long>(d), p);
  const long py = P * (P - 1);  // p(p-1)

  F.lambda = pow(y, py).scaled(U(-(P + 1))) + pow(y, P * F.a + 1).scaled(U(-2));
  F.xt = x + F.lambda;
  F.yt = y + pow(F.xt, d);
  F.w = F.yt.scaled(U((P + 1) * d));
  F.g = lift_g(g, vt, F.w);
  const MultiPoly f_slice = (MultiPoly::constant(vt, 1) + lift_g(g, vt, y.scaled(U((P + 1) * d))).scaled(U(1))).scaled(U(F.b));
  const MultiPoly Fx = (MultiPoly::constant(vt, 1) + F.g.scaled(U(1))).scaled(U(F.b));

  std::vector<MultiPoly> coords{F.xt, F.yt}, b1{x, y - pow(x, d)}, b2{x - F.lambda, y};
  for (int i = 0; i < l; ++i) {
    const MultiPoly z = MultiPoly::var(vt, i + 2);
    coords.push_back(z);
    b1.push_back(z);
    b2.push_back(z);
  }
  F.data = {PolyMap(vt, coords), f_slice, {PolyMap(vt, b1), PolyMap(vt, b2)}, true, true};

  auto& rep = res.report;
  // (1*)
  const MultiPoly r1 = F.xt.scaled(U(P + 1)) - pow(y, py);
  rep.add("1*a", u_valuation(r1) >= 1, r1, "u^(p+1) xt - y^(p(p-1)) in (u)");
  const MultiPoly r2 = pow(F.xt, d - 1).scaled(U(F.b)) - pow(y, py * (d - 1)).scaled(U(1));
  rep.add("1*b", u_valuation(r2) >= 2, r2, "u^b xt^(d-1) - u y^(p(p-1)(d-1)) in (u^2)");
  // (2*)
  const MultiPoly w2 = y.scaled(U((P + 1) * d)) + pow(F.xt.scaled(U(P + 1)), d);
  rep.add("2*", w2 == F.w && u_valuation(F.w) >= 0, F.w - w2, "u^((p+1)d) yt = u^((p+1)d) y + (u^(p+1) xt)^d in R[x,y]");
  // (3*): E(y) = yt - (xt + F T)^d
  const MultiPoly Ext = F.xt + Fx * T;
  const MultiPoly xi = pow(F.xt, d) - pow(Ext, d);
  F.Ey = y + xi;
  rep.add("3*a", u_valuation(F.Ey) >= 0, MultiPoly(vt), "E(y) in R[x,y,z][T]");
  const MultiPoly r3 = xi + (pow(y, py * (d - 1)) * T).scaled(dd * U(1));
  rep.add("3*b", u_valuation(r3) >= 2, r3, "xi + d u y^(p(p-1)(d-1)) T in (u^2)");
  // (4*): E(x) = xt + F T - lambda(E(y)), polar part only
  F.Ex_polar = polar_part(Ext) - pow_trunc(F.Ey, py, static_cast<int>(P + 1)).scaled(U(-(P + 1))) -
               pow_trunc(F.Ey, P * F.a + 1, 2).scaled(U(-2));
  F.Ex_polar = polar_part(F.Ex_polar);
  const MultiPoly claim = (pow(y, F.c) * (T - pow(T, p))).scaled(dd * U(-1));
  rep.add("4*", F.Ex_polar == claim, F.Ex_polar - claim, "E(x) in d u^-1 y^c (T - T^p) + R[x,y,z][T]");
  const auto engine = slice_images_trunc(slice_of(F.data), 0);
  rep.add("polar engine", engine[0] == F.Ex_polar && polar_part(engine[1]).is_zero(), engine[0] - F.Ex_polar,
          "truncated slice images agree");
  rep.add("sigma restricts", at_T(F.Ex_polar, 1).is_zero() && u_valuation(F.Ey) >= 0, at_T(F.Ex_polar, 1));
  MultiPoly wit(vt);
  if (!F.Ex_polar.is_zero()) {
    const auto& t = F.Ex_polar.terms().front();
    wit = MultiPoly::monomial(vt, t.m, t.c);
  }
  rep.add("E does not restrict", !F.Ex_polar.is_zero(), wit);

  if (materialize) {
    F.action = canonical_action(F.data);
    F.sigma = F.action->evaluate(1);
    rep.add("materialized", (*F.action)[1] == F.Ey && polar_part((*F.action)[0]) == F.Ex_polar,
            MultiPoly(vt), std::to_string((*F.action)[0].size()) + " terms in E(x)");
  }
  return res;
}

}  // namespace charp
