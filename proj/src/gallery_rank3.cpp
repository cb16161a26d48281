#include "charp/error.hpp"
#include "charp/gallery.hpp"

namespace charp {

std::string_view to_string(Rank3Class c) {
  switch (c) {
    case Rank3Class::ActionRestricts: return "ActionRestricts";
    case Rank3Class::OnlyE1Restricts: return "OnlyE1Restricts";
    case Rank3Class::Neither: break;
  }
  return "Neither";
}

namespace {

bool nonnegative_FG(const MultiPoly& h) {
  for (const auto& t : h.terms())
    if (t.m[3] < 0 || t.m[4] < 0) return false;
  return true;
}

MultiPoly at_T(const MultiPoly& f, const MultiPoly& v) { return substitute_var(f, f.vars()->T(), v); }

// F -> fv, G -> gv, x_i -> xs[i]; h must have nonnegative F, G exponents
MultiPoly specialize(const MultiPoly& h, const std::vector<MultiPoly>& xs, const MultiPoly& fv, const MultiPoly& gv) {
  if (!nonnegative_FG(h)) fail(Errc::PreconditionViolated, "negative power of F or G");
  const auto& vt = h.vars();
  Assignment a = identity_assignment(vt);
  for (int i = 0; i < 3; ++i) a[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(i)];
  a[3] = fv;
  a[4] = gv;
  return substitute(h, a);
}

}  // namespace

MultiPoly rank3_evaluate(const Rank3Result& r, const MultiPoly& h, const VarTablePtr& target) {
  if (!target->same_as(*r.vt)) fail(Errc::VarTableMismatch, "rank3_evaluate works on the family table");
  std::vector<MultiPoly> xs;
  for (int i = 0; i < 3; ++i) xs.push_back(MultiPoly::var(r.vt, i));
  return specialize(h, xs, r.f, r.g);
}

Rank3Result build_rank3_family(unsigned p, int l, int m) {
  if ((p != 2 && p != 3) || l < 0 || m < 0 || l > 4 || m > 4) fail(Errc::BadParameters, "need p in {2, 3}, 0 <= l, m <= 4");
  Rank3Result res;
  res.vt = VarTable::make(p, {"x1", "x2", "x3", "F", "G"}, {"F", "G"});
  const auto& vt = res.vt;
  const MultiPoly x1 = MultiPoly::var(vt, 0), x2 = MultiPoly::var(vt, 1), x3 = MultiPoly::var(vt, 2);
  const MultiPoly F = MultiPoly::var(vt, 3), G = MultiPoly::var(vt, 4), T = MultiPoly::var(vt, vt->T());
  const long pp = static_cast<long>(p) * p;
  auto& rep = res.report;

  // f, g, r in k[x]
  res.f = pow(x1, pp) - pow(x1, p) + x2 * x3;
  res.g = pow(res.f, pp) * x3 - pow(x2, pp - 1) + pow(res.f, pp - p) * pow(x2, p - 1);
  res.r = res.f * x1 + x2;
  const MultiPoly xi = pow(res.f, pp + 1) - pow(res.r, pp) + pow(res.f, pp - p) * pow(res.r, p);
  rep.add("xi = g x2", xi == res.g * x2, xi - res.g * x2);
  // x1 = f^-1 (r - x2) and x3 = f^-(p^2) (g + x2^(p^2-1) - f^(p^2-p) x2^(p-1))
  const bool x1_rel = res.f * x1 == res.r - x2;
  const bool x3_rel = pow(res.f, pp) * x3 == res.g + pow(x2, pp - 1) - pow(res.f, pp - p) * pow(x2, p - 1);
  rep.add("k[x] in A[r]", x1_rel && x3_rel, MultiPoly(vt));

  // E(r) = r + c T with c = F^l G^m, F and G fixed; r = F x1 + x2 on the symbolic ring
  auto images = [&](const MultiPoly& c) {
    const MultiPoly rs = F * x1 + x2;
    auto Xi = [&](const MultiPoly& R) { return pow(F, pp + 1) - pow(R, pp) + pow(F, pp - p) * pow(R, p); };
    const MultiPoly d2 = MultiPoly::var(vt, 4, -1) * (Xi(rs + c * T) - Xi(rs));
    const MultiPoly e2 = x2 + d2;
    const MultiPoly e1 = x1 + MultiPoly::var(vt, 3, -1) * (c * T - d2);
    auto h3 = [&](const MultiPoly& y) { return pow(y, pp - 1) - pow(F, pp - p) * pow(y, p - 1); };
    const MultiPoly e3 = x3 + MultiPoly::var(vt, 3, static_cast<int>(-pp)) * (h3(e2) - h3(x2));
    return std::vector<MultiPoly>{e1, e2, e3, F, G};
  };
  const MultiPoly c = pow(F, l) * pow(G, m);
  const auto im = images(c);
  res.action = GaAction::make(vt, im, CoeffRing::field());

  // closed forms for E^{1,1}
  const auto im11 = images(F * G);
  const MultiPoly gT = G * T;
  const MultiPoly bracket = MultiPoly::var(vt, 4, -1) * (pow(gT, pp) - pow(gT, p));
  const bool closed = im11[1] == x2 - pow(F, pp) * bracket && im11[0] == x1 + gT + pow(F, pp - 1) * bracket;
  rep.add("closed forms", closed, MultiPoly(vt));
  if (l >= 1 && m >= 1) {
    const MultiPoly s = pow(F, l - 1) * pow(G, m - 1) * T;
    bool resc = true;
    for (int i = 0; i < 3; ++i) resc = resc && at_T(im11[static_cast<std::size_t>(i)], s) == im[static_cast<std::size_t>(i)];
    rep.add("rescale of E^{1,1}", resc, MultiPoly(vt));
  }

  if (l >= 1 && m >= 1) {
    // E(f) = f, E(g) = g, E(r) = r + cT after F -> f, G -> g; exact at p = 2, at three points of k^3 otherwise
    std::vector<std::vector<MultiPoly>> pts;
    if (p == 2) {
      pts.push_back({x1, x2, x3});
    } else {
      for (const char* pt : {"u,u+1,u^2+2", "2*u+1,u^2,u+2", "u^2+u,2,u"}) {
        std::vector<MultiPoly> v;
        for (const auto& s : split_tuple(std::string("(") + pt + ")")) v.push_back(parse_poly(s, vt));
        pts.push_back(v);
      }
    }
    const PolyMap act(vt, im);
    bool inv = true;
    for (const auto& pt : pts) {
      Assignment a = identity_assignment(vt);
      for (int i = 0; i < 3; ++i) a[static_cast<std::size_t>(i)] = pt[static_cast<std::size_t>(i)];
      const MultiPoly fv = substitute(res.f, a), gv = substitute(res.g, a), rv = substitute(res.r, a);
      auto ev = [&](const MultiPoly& h) { return specialize(act.apply(h), pt, fv, gv); };
      inv = inv && ev(res.f) == fv && ev(res.g) == gv && ev(res.r) == rv + specialize(c, pt, fv, gv) * T;
    }
    rep.add("invariance of f, g", inv, MultiPoly(vt), p == 2 ? "exact" : "at 3 points");
  }

  res.action_member = true;
  res.e1_member = true;
  const MultiPoly one = MultiPoly::constant(vt, 1);
  for (int i = 0; i < 3; ++i) {
    res.action_member = res.action_member && nonnegative_FG(im[static_cast<std::size_t>(i)]);
    res.e1_member = res.e1_member && nonnegative_FG(at_T(im[static_cast<std::size_t>(i)], one));
  }
  const bool e1_eps = at_T(im[0], one) == x1 + one && at_T(im[1], one) == x2 && at_T(im[2], one) == x3;
  if (l == 1 && m == 0) rep.add("E1 extends eps", e1_eps, MultiPoly(vt));

  // pi_1: x2, x3 -> 0 (pi_1(g) = 0); pi_2: x1, x3 -> 0 (pi_2(f) = 0)
  const MultiPoly zero(vt);
  auto pi1 = [&](const MultiPoly& h) {
    const MultiPoly fv = pow(x1, pp) - pow(x1, p);
    return specialize(h, {x1, zero, zero}, fv, zero);
  };
  auto pi2 = [&](const MultiPoly& h) {
    const MultiPoly gv = -pow(x2, pp - 1);
    return specialize(h, {zero, x2, zero}, zero, gv);
  };
  bool action_out = false, e1_out = false;
  if (m == 0 && l >= 1) {
    // g E(x2) in k[x][T] with pi_1 nonzero
    const MultiPoly gx2 = G * im[1];
    const MultiPoly w_full = pi1(gx2), w_one = pi1(at_T(gx2, one));
    action_out = !w_full.is_zero();
    e1_out = l >= 2 && !w_one.is_zero();
    res.pi_witness = e1_out ? w_one : w_full;
  }
  if (l == 0) {
    const MultiPoly fgx1 = F * G * at_T(im[0], one);
    const MultiPoly w = pi2(fgx1);
    e1_out = !w.is_zero();
    action_out = e1_out;
    res.pi_witness = w;
  }
  if (res.action_member && action_out) fail(Errc::InternalIntegralityFailure, "membership and pi test disagree");
  if (res.e1_member && e1_out) fail(Errc::InternalIntegralityFailure, "membership and pi test disagree");
  const bool decided = (res.action_member || action_out) && (res.e1_member || e1_out);
  rep.add("decided", decided, res.pi_witness ? *res.pi_witness : MultiPoly(vt));
  if (res.action_member)
    res.cls = Rank3Class::ActionRestricts;
  else if (res.e1_member)
    res.cls = Rank3Class::OnlyE1Restricts;
  else
    res.cls = Rank3Class::Neither;
  const bool expected = (l >= 1 && m >= 1) ? res.cls == Rank3Class::ActionRestricts
                     : (l == 1 && m == 0) ? res.cls == Rank3Class::OnlyE1Restricts
                                          : res.cls == Rank3Class::Neither;
  rep.add("classification", expected, MultiPoly(vt), std::string(to_string(res.cls)));
  return res;
}

}  // namespace charp
