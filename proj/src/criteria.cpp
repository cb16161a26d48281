#include "charp/criteria.hpp"

#include <algorithm>

#include <json.hpp>

#include "charp/error.hpp"

namespace charp {

std::string StabilityVerdict::to_string() const {
  switch (kind) {
    case Kind::stable: return "Stable(" + pattern + ")";
    case Kind::not_stable: return "NotStable(" + pattern + ": " + (counter ? counter->to_string() : "") + ")";
    case Kind::unknown: break;
  }
  return "Unknown";
}

namespace {

bool only_uses(const MultiPoly& f, const std::vector<int>& vars) {
  const auto& vt = f.vars();
  for (int i = 0; i < vt->size(); ++i)
    if (f.uses_var(i) && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
  return true;
}

// alpha + beta m with m divisible by every variable of A
bool binomial_pattern(const MultiPoly& f, const std::vector<int>& vars) {
  if (f.size() > 2 || vars.empty()) return false;
  int monomials = 0;
  for (const auto& t : f.terms()) {
    if (t.m.is_one()) continue;
    ++monomials;
    for (int v : vars)
      if (t.m[v] < 1) return false;
  }
  return monomials == 1;
}

}  // namespace

StabilityVerdict f_stability(const ASpec& a, const MultiPoly& f) {
  StabilityVerdict v;
  if (f.is_zero() || !only_uses(f, a.vars)) return v;
  const MultiPoly g = f.scaled(f.leading().c.inv());
  if (a.kind == ASpec::Kind::full_poly_ring && binomial_pattern(g, a.vars)) {
    v.kind = StabilityVerdict::Kind::stable;
    v.pattern = "i";
  } else if (a.kind == ASpec::Kind::univariate && a.vars.size() == 1 && !g.is_constant()) {
    v.kind = StabilityVerdict::Kind::stable;
    v.pattern = "ii";
  } else if (g.is_constant() && !a.vars.empty()) {
    const Coefficient c = f.constant_term();
    const unsigned p = f.prime();
    const auto vt = VarTable::make(p, {"x", f.vars()->name(a.vars.front())});
    const MultiPoly x = MultiPoly::var(vt, 0), y = MultiPoly::var(vt, 1), T = MultiPoly::var(vt, vt->T());
    v.kind = StabilityVerdict::Kind::not_stable;
    v.pattern = "a-rigid";
    v.counter = GaAction::make(vt, {x + T.scaled(c), y + (T - pow(T, p)).scaled(c.pow(p))});
    v.counter_invariant = y + pow(x, p) - x.scaled(c.pow(p - 1));
  }
  return v;
}

// ---------------------------------------------------------------- generic elementary data

SliceData slice_of(const GenericElementaryData& d) {
  const auto& vt = d.coords.vars();
  return {d.coords, d.f * MultiPoly::var(vt, vt->T()), d.inverse_chain};
}

namespace {

MultiPoly at_one(const MultiPoly& f) {
  const auto& vt = f.vars();
  return substitute_var(f, vt->T(), MultiPoly::constant(vt, 1));
}

void check_f(const GenericElementaryData& d) {
  const auto& vt = d.coords.vars();
  if (d.f.is_zero()) fail(Errc::PreconditionViolated, "f must be nonzero");
  if (d.f.uses_var(0) || d.f.uses_var(vt->T()))
    fail(Errc::PreconditionViolated, "f must lie in k[y_2, ..., y_n]");
}

}  // namespace

void validate(const GenericElementaryData& d) {
  check_f(d);
  const SliceData s = slice_of(d);
  if (d.truncated) {
    const auto polar = slice_images_trunc(s, 0);
    for (std::size_t i = 0; i < polar.size(); ++i)
      if (!at_one(polar[i]).is_zero())
        fail(Errc::PreconditionViolated, "sigma moves x" + std::to_string(i + 1) + " out of R[x]");
  } else {
    const auto im = slice_images(s);
    for (std::size_t i = 0; i < im.size(); ++i)
      if (!is_polynomial_over(at_one(im[i]), CoeffRing::R(), false).ok)
        fail(Errc::PreconditionViolated, "sigma moves x" + std::to_string(i + 1) + " out of R[x]");
  }
}

GaAction canonical_action(const GenericElementaryData& d) {
  check_f(d);
  return slice_action(slice_of(d), CoeffRing::field());
}

std::string Certificate::to_string() const {
  if (kind == Kind::not_exponential)
    return "NotExponentialOverR(pattern " + pattern + ", generator " + std::to_string(generator + 1) + ": " +
           (witness ? witness->to_string() : std::string("?")) + ")";
  return "Inconclusive(" + reason + ")";
}

std::string Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = kind == Kind::not_exponential ? "NotExponentialOverR" : "Inconclusive";
  if (!pattern.empty()) j["pattern"] = pattern;
  if (!reason.empty()) j["reason"] = reason;
  if (witness) {
    j["generator"] = generator + 1;
    j["witness"] = witness->to_string();
  }
  return j.dump();
}

Certificate non_exponentiality_certificate(const GenericElementaryData& d) {
  Certificate c;
  try {
    validate(d);
  } catch (const Error& e) {
    c.reason = std::string("invalid data: ") + e.what();
    return c;
  }
  if (!d.base_is_ufd) {
    c.reason = "base not flagged UFD";
    return c;
  }
  const auto& vt = d.coords.vars();
  ASpec a;
  for (int i = 1; i < vt->n_ring(); ++i) a.vars.push_back(i);
  a.kind = a.vars.size() == 1 ? ASpec::Kind::univariate : ASpec::Kind::full_poly_ring;
  const StabilityVerdict st = f_stability(a, d.f);
  c.pattern = st.pattern;
  if (st.kind == StabilityVerdict::Kind::unknown) {
    c.reason = "stability unknown";
    return c;
  }
  if (st.kind == StabilityVerdict::Kind::not_stable) {
    c.reason = "not f-stable";
    return c;
  }
  Restriction r;
  if (d.truncated) {
    const auto polar = slice_images_trunc(slice_of(d), 0);
    for (std::size_t i = 0; i < polar.size() && r.ok; ++i)
      if (!polar[i].is_zero()) {
        const auto& t = polar[i].terms().back();
        r = {false, static_cast<int>(i), MultiPoly::monomial(vt, t.m, t.c)};
      }
  } else {
    r = canonical_action(d).restricts_to(CoeffRing::R());
  }
  if (r.ok) {
    c.reason = "restricts";
    return c;
  }
  if (!r.term || r.term->leading().c.is_integral())
    fail(Errc::InternalIntegralityFailure, "restriction witness is integral");
  c.kind = Certificate::Kind::not_exponential;
  c.generator = r.generator;
  c.witness = r.term;
  return c;
}

// ---------------------------------------------------------------- modification

namespace {

MultiPoly at_T(const MultiPoly& f, const MultiPoly& v) { return substitute_var(f, f.vars()->T(), v); }

Coefficient common_denominator(const MultiPoly& f) {
  const unsigned p = f.prime();
  Coefficient den = Coefficient::one(p);
  for (const auto& t : f.terms()) {
    const Coefficient c = t.c * den;
    if (!c.is_integral()) den = den * Coefficient::from_parts(c.den(), UPoly::constant(1), p);
  }
  return den;
}

}  // namespace

ModifiedAction modify_action(const GaAction& e, const SliceData& slice, const MultiPoly& alpha, bool primitive) {
  const auto& vt = e.vars();
  const MultiPoly T = MultiPoly::var(vt, vt->T());
  const MultiPoly& r = slice.coords[0];
  const MultiPoly lambda = e.apply(r) - r;
  if (lambda.is_zero() || !additivity_check(lambda)) fail(Errc::InconsistentSlice, "E(r) - r is not additive");
  for (const auto& [k, c] : split_by_var(lambda, vt->T()))
    if (!e.is_invariant(c)) fail(Errc::InconsistentSlice, "coefficient of T^" + std::to_string(k) + " not invariant");
  for (int i = 1; i < vt->n_ring(); ++i)
    if (!e.is_invariant(slice.coords[i])) fail(Errc::InconsistentSlice, "coordinate " + std::to_string(i + 1) + " moves");
  if (alpha.uses_var(vt->T()) || !e.is_invariant(alpha)) fail(Errc::NotInvariantParameter, alpha.to_string());

  ModifiedAction out;
  const unsigned p = vt->prime();
  if (!primitive) {
    out.content = Coefficient::one(p);
    out.lambda0 = lambda;
    out.factor = at_T(lambda, alpha);
    SliceData s{slice.coords, out.factor * T, slice.inverse_chain, true};
    out.action = slice_action(s, e.base());
  } else {
    const Coefficient den = common_denominator(lambda);
    const ContentSplit cs = content_primitive(lambda.scaled(den));
    out.content = cs.content * den.inv();
    out.lambda0 = cs.primitive;
    out.factor = at_T(out.lambda0, alpha);
    SliceData s{slice.coords, T.scaled(out.content), slice.inverse_chain, false};
    out.action = slice_action(s, e.base()).rescale(out.factor);
  }
  out.restriction = out.action.restricts_to(CoeffRing::R());
  return out;
}

// ---------------------------------------------------------------- Gauss lemma

namespace {

bool is_primitive(const MultiPoly& f) {
  for (const auto& t : f.terms())
    if (!t.c.is_integral()) return false;
  return content_primitive(f).content.is_one();
}

}  // namespace

bool gauss_check(const MultiPoly& f, const MultiPoly& g) {
  const auto& vt = f.vars();
  for (const MultiPoly* h : {&f, &g}) {
    if (h->is_zero()) fail(Errc::PreconditionViolated, "zero polynomial");
    for (int i = 0; i < vt->size(); ++i)
      if (i != vt->T() && h->uses_var(i)) fail(Errc::PreconditionViolated, "expected a polynomial in T");
    if (!is_primitive(*h)) fail(Errc::PreconditionViolated, h->to_string() + " is not primitive");
  }
  if (!g.constant_term().is_zero()) fail(Errc::PreconditionViolated, "g(0) != 0");
  return is_primitive(at_T(f, g));
}

}  // namespace charp
