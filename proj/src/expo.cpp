#include "charp/expo.hpp"

#include <json.hpp>

#include "charp/error.hpp"

namespace charp {

std::string ExponentializationResult::to_json() const {
  nlohmann::ordered_json j;
  j["action"] = action.to_string();
  j["conjugator"] = conjugator ? conjugator->to_string() : std::string("id");
  j["reduced_f"] = reduced_f.to_string();
  j["a"] = a.to_string();
  return j.dump();
}

namespace {

void require_order_p(const PolyMap& sigma) {
  const int p = static_cast<int>(sigma.vars()->prime());
  auto ord = order_up_to(sigma, p);
  if (!ord || *ord != p) fail(Errc::NotOrderP, sigma.to_string());
}

Coefficient translation_of(const PolyMap& sigma) {
  const auto& vt = sigma.vars();
  const MultiPoly d = sigma[0] - MultiPoly::var(vt, 0);
  if (!d.is_zero() && !d.is_constant()) fail(Errc::NotTriangular, sigma.to_string());
  return d.is_zero() ? Coefficient::zero(vt->prime()) : d.constant_term();
}

}  // namespace

PolyMap maubach_conjugator(const PolyMap& sigma, const CoeffRing& base) {
  const auto& vt = sigma.vars();
  const unsigned p = vt->prime();
  const MapClass cls = classify(sigma, CoeffRing::field());
  if (!cls.strict_triangular) fail(Errc::NotTriangular, sigma.to_string());
  const Coefficient a = translation_of(sigma);
  if (!is_unit_in(a, base)) fail(Errc::NonUnitTranslation, a.to_string());
  require_order_p(sigma);

  const MultiPoly w = MultiPoly::var(vt, 0).scaled(a.inv());
  // weights (w + j)^(p-1), j = 0..p-1
  std::vector<MultiPoly> weight;
  for (unsigned j = 0; j < p; ++j) weight.push_back(pow(w + Coefficient(static_cast<long>(j), p), p - 1));
  std::vector<MultiPoly> im{MultiPoly::var(vt, 0)};
  for (int i = 1; i < sigma.n(); ++i) {
    MultiPoly orbit = MultiPoly::var(vt, i), f(vt);
    for (unsigned j = 0; j < p; ++j) {
      f -= weight[j] * orbit;
      orbit = sigma.apply(orbit);
    }
    im.push_back(std::move(f));
  }
  PolyMap phi(vt, std::move(im));
  const PolyMap eps = [&] {
    std::vector<MultiPoly> e;
    for (int i = 0; i < sigma.n(); ++i) e.push_back(MultiPoly::var(vt, i));
    e[0] += MultiPoly::constant(vt, a);
    return PolyMap(vt, std::move(e));
  }();
  if (!classify(phi).strict_triangular || compose(phi, eps) != compose(sigma, phi))
    fail(Errc::InternalIntegralityFailure, "conjugator check failed for " + sigma.to_string());
  return phi;
}

ExponentializationResult exponentialize_triangular_n2(const PolyMap& sigma) {
  const auto& vt = sigma.vars();
  if (vt->n_ring() != 2) fail(Errc::PreconditionViolated, "expected two variables");
  if (!classify(sigma, CoeffRing::R()).triangular) fail(Errc::NotTriangular, sigma.to_string());
  require_order_p(sigma);
  const MultiPoly T = MultiPoly::var(vt, vt->T());
  const Coefficient a = translation_of(sigma);
  ExponentializationResult out;
  out.a = a;
  if (a.is_zero()) {
    // sigma = (x_1, x_2 + b(x_1)) since an order-p triangular map has unit part 1
    const MultiPoly b = sigma[1] - MultiPoly::var(vt, 1);
    if (b.uses_var(1)) fail(Errc::NotTriangular, sigma.to_string());
    out.action = GaAction::make(vt, {MultiPoly::var(vt, 0), MultiPoly::var(vt, 1) + b * T}, CoeffRing::R());
    out.reduced_f = MultiPoly(vt);
  } else {
    const PolyMap phi = maubach_conjugator(sigma, CoeffRing::field());
    const MultiPoly f = phi[1] - MultiPoly::var(vt, 1);
    const InvariantSplit split = express_in_invariant(f, 0, a, InvariantMode::split);
    for (const auto& t : split.rem.terms())
      if (!(t.c * a).is_integral())
        fail(Errc::InternalIntegralityFailure, "c_i a not integral for " + t.c.to_string());
    out.reduced_f = split.rem;
    out.conjugator = phi;
    SliceData s{PolyMap(vt, {MultiPoly::var(vt, 0), MultiPoly::var(vt, 1) + split.rem}), T.scaled(a), {}};
    out.action = slice_action(s, CoeffRing::R());
  }
  if (!out.action.restricts_to(CoeffRing::R()).ok)
    fail(Errc::InternalIntegralityFailure, "action does not restrict: " + out.action.to_string());
  if (out.action.evaluate(1) != sigma)
    fail(Errc::InternalIntegralityFailure, "E_1 differs from sigma: " + out.action.to_string());
  return out;
}

ThetaData theta_of(const PolyMap& sigma) {
  const Coefficient a = translation_of(sigma);
  if (a.is_zero()) fail(Errc::PreconditionViolated, "theta needs sigma(x1) != x1");
  ExponentializationResult r = exponentialize_triangular_n2(sigma);
  return {a, r.reduced_f.scaled(a)};
}

PolyMap sigma_from_theta(const VarTablePtr& vt, const Coefficient& a, const MultiPoly& theta) {
  const int p = static_cast<int>(vt->prime());
  if (a.is_zero()) fail(Errc::PreconditionViolated, "a must be nonzero");
  for (const auto& t : theta.terms()) {
    bool bad = t.m[0] % p == 0;
    for (int i = 1; i < vt->size(); ++i) bad = bad || t.m[i] != 0;
    if (bad) fail(Errc::BadThetaSupport, MultiPoly::monomial(vt, t.m, t.c).to_string());
  }
  const MultiPoly x1 = MultiPoly::var(vt, 0);
  const MultiPoly shifted = substitute_var(theta, 0, x1 + a);
  return PolyMap(vt, {x1 + a, MultiPoly::var(vt, 1) + (theta - shifted).scaled(a.inv())});
}

// ---------------------------------------------------------------- n = 3 over F_p

namespace {

// x_1 becomes the parameter u; table (x2, x3)
MultiPoly to_u(const MultiPoly& f, const VarTablePtr& small) {
  const unsigned p = f.prime();
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    Monomial m;
    m.set(0, t.m[1]);
    m.set(1, t.m[2]);
    ts.push_back({m, t.c * Coefficient::u_pow(t.m[0], p)});
  }
  return MultiPoly::from_terms(small, std::move(ts));
}

MultiPoly from_u(const MultiPoly& f, const VarTablePtr& big) {
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    if (!t.c.is_integral()) fail(Errc::InternalIntegralityFailure, "non-polynomial coefficient " + t.c.to_string());
    const auto& num = t.c.num();
    for (int k = 0; k <= num.degree(); ++k) {
      if (num.c[static_cast<std::size_t>(k)] == 0) continue;
      Monomial m;
      m.set(0, k);
      m.set(1, t.m[0]);
      m.set(2, t.m[1]);
      m.set(big->T(), t.m[2]);
      ts.push_back({m, Coefficient(num.c[static_cast<std::size_t>(k)], f.prime())});
    }
  }
  return MultiPoly::from_terms(big, std::move(ts));
}

}  // namespace

ExponentializationResult exponentialize_field_n3(const PolyMap& sigma) {
  const auto& vt = sigma.vars();
  if (vt->n_ring() != 3) fail(Errc::PreconditionViolated, "expected three variables");
  for (const auto& g : sigma.images())
    if (!g.all_fp()) fail(Errc::UnsupportedField, "coefficients must lie in F_p");
  if (!classify(sigma).triangular) fail(Errc::NotTriangular, sigma.to_string());
  require_order_p(sigma);
  const Coefficient a = translation_of(sigma);
  ExponentializationResult out;
  out.a = a;
  if (!a.is_zero()) {
    const PolyMap phi = maubach_conjugator(sigma, CoeffRing::field());
    out.conjugator = phi;
    out.reduced_f = MultiPoly(vt);
    out.action = slice_action({phi, MultiPoly::var(vt, vt->T()).scaled(a), {}}, CoeffRing::field());
  } else {
    if (sigma[0] != MultiPoly::var(vt, 0)) fail(Errc::NotTriangular, sigma.to_string());
    const auto small = VarTable::make(vt->prime(), {vt->name(1), vt->name(2)});
    const PolyMap s2(small, {to_u(sigma[1], small), to_u(sigma[2], small)});
    ExponentializationResult r = exponentialize_triangular_n2(s2);
    out.a = r.a;
    out.reduced_f = from_u(r.reduced_f, vt);
    std::vector<MultiPoly> im{MultiPoly::var(vt, 0)};
    for (const auto& g : r.action.images()) im.push_back(from_u(g, vt));
    out.action = GaAction::make(vt, std::move(im), CoeffRing::field());
  }
  if (out.action.evaluate(1) != sigma)
    fail(Errc::InternalIntegralityFailure, "E_1 differs from sigma: " + out.action.to_string());
  return out;
}

}  // namespace charp
