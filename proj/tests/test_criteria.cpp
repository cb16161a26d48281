#include <doctest.h>

#include "charp/criteria.hpp"
#include "charp/error.hpp"
#include "oracle/gen.hpp"

using namespace charp;

namespace {
MultiPoly P(const char* s, const VarTablePtr& vt) { return parse_poly(s, vt); }
PolyMap M(const char* s, const VarTablePtr& vt) { return parse_map(s, vt); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

bool integral_over_R(const MultiPoly& f) {
  for (const auto& t : f.terms())
    if (!t.c.is_integral()) return false;
  return true;
}
}  // namespace

TEST_CASE("stability patterns") {
  const auto vt = VarTable::make(3, {"x", "y", "z1"});
  auto v = f_stability({ASpec::Kind::full_poly_ring, {1, 2}}, P("u^2 + u^9*y*z1", vt));
  CHECK(v.kind == StabilityVerdict::Kind::stable);
  CHECK(v.to_string() == "Stable(i)");
  v = f_stability({ASpec::Kind::univariate, {1}}, P("y^3 + 1", vt));
  CHECK(v.to_string() == "Stable(ii)");
  v = f_stability({ASpec::Kind::full_poly_ring, {1, 2}}, P("y^2 + z1", vt));
  CHECK(v.kind == StabilityVerdict::Kind::unknown);
  v = f_stability({ASpec::Kind::univariate, {1}}, P("x + y", vt));
  CHECK(v.kind == StabilityVerdict::Kind::unknown);
}

TEST_CASE("the constant pattern yields a counter-action") {
  for (unsigned p : {2u, 3u, 5u}) {
    const auto vt = VarTable::make(p, {"x1", "y"});
    const auto v = f_stability({ASpec::Kind::univariate, {1}}, P("u", vt));
    REQUIRE(v.kind == StabilityVerdict::Kind::not_stable);
    REQUIRE(v.counter);
    REQUIRE(v.counter_invariant);
    const auto& e = *v.counter;
    const auto& cvt = e.vars();
    CHECK(check_axioms(cvt, e.images()).ok());
    CHECK(e.evaluate(1) == M("(x + u, y)", cvt));
    CHECK(e.is_invariant(*v.counter_invariant));
    CHECK(*v.counter_invariant != P("y", cvt));
    CHECK(v.counter_invariant->uses_var(0));
  }
}

TEST_CASE("canonical action and certificates") {
  const auto vt = VarTable::make(2, {"x1", "x2"});
  GenericElementaryData d{PolyMap::identity(vt), P("u*x2", vt), {}};
  CHECK(canonical_action(d).images() == parse_action("(x1 + u*x2*T, x2)", vt).images());
  auto c = non_exponentiality_certificate(d);
  CHECK(c.kind == Certificate::Kind::inconclusive);
  CHECK(c.reason == "restricts");
  CHECK(c.to_string() == "Inconclusive(restricts)");
  const auto v3 = VarTable::make(2, {"x1", "x2", "x3"});
  GenericElementaryData d3{PolyMap::identity(v3), P("x2^2 + x3", v3), {}};
  CHECK(non_exponentiality_certificate(d3).reason == "stability unknown");
  d3.f = P("x2*x3 + 1", v3);
  d3.base_is_ufd = false;
  CHECK(non_exponentiality_certificate(d3).reason == "base not flagged UFD");
  GenericElementaryData bad{PolyMap::identity(vt), MultiPoly(vt), {}};
  CHECK(code_of([&] { validate(bad); }) == Errc::PreconditionViolated);
  CHECK(non_exponentiality_certificate(bad).reason.rfind("invalid data", 0) == 0);
}

TEST_CASE("elementary map in nonlinear coordinates") {
  const auto vt = VarTable::make(2, {"x1", "x2"});
  GenericElementaryData d;
  d.coords = M("(u*x1 + x2^2, x2)", vt);
  d.f = P("u*x2", vt);
  d.inverse_chain = {M("((1/u)*x1 - (1/u)*x2^2, x2)", vt)};
  validate(d);
  const GaAction e = canonical_action(d);
  CHECK(e[0] == P("x1 + x2*T", vt));
  CHECK(non_exponentiality_certificate(d).reason == "restricts");
  d.f = P("x2", vt);
  CHECK(code_of([&] { validate(d); }) == Errc::PreconditionViolated);
  CHECK(non_exponentiality_certificate(d).reason.rfind("invalid data", 0) == 0);
}

TEST_CASE("modify_action") {
  const auto vt = VarTable::make(3, {"x1", "x2"});
  const SliceData s{PolyMap::identity(vt), P("u*T", vt), {}};
  const GaAction e = slice_action(s);
  auto m = modify_action(e, s, P("1", vt), false);
  CHECK(m.action.evaluate(1) == e.evaluate(1));
  m = modify_action(e, s, P("1", vt), true);
  CHECK(m.content == Coefficient::u_pow(1, 3));
  CHECK(m.lambda0 == P("T", vt));
  CHECK(m.factor == P("1", vt));
  CHECK(m.restriction.ok);
  CHECK(code_of([&] { modify_action(e, s, P("x1", vt), true); }) == Errc::NotInvariantParameter);
}

TEST_CASE("modified actions restrict in primitive mode") {
  Lcg g(91);
  for (unsigned p : {2u, 3u}) {
    const auto vt = VarTable::make(p, {"x1", "x2"});
    for (int it = 0; it < 15; ++it) {
      const Coefficient c = gen::nonzero(g, p, 2, false);
      const MultiPoly lam = (P("T", vt) + pow(P("T", vt), p).scaled(gen::coeff(g, p, 1, false))).scaled(c);
      const SliceData s{PolyMap::identity(vt), lam, {}};
      const GaAction e = slice_action(s);
      const MultiPoly alpha = P("x2", vt) * MultiPoly::constant(vt, gen::nonzero(g, p, 1, false));
      const auto m = modify_action(e, s, alpha, true);
      CHECK(check_axioms(vt, m.action.images()).ok());
      CHECK(m.action.restricts_to(CoeffRing::R()).ok);
      CHECK(m.action.evaluate(1) == e.evaluate(alpha));
    }
  }
}

TEST_CASE("gauss examples") {
  const auto tv = VarTable::make(2, {});
  CHECK(gauss_check(P("T^2 + u", tv), P("T^2 + u*T", tv)));
  CHECK(substitute_var(P("T^2 + u", tv), tv->T(), P("T^2 + u*T", tv)) == P("T^4 + u^2*T^2 + u", tv));
  CHECK(gauss_check(P("T", tv), P("u*T^2 + T", tv)));
  CHECK(code_of([&] { gauss_check(P("T", tv), P("T + 1", tv)); }) == Errc::PreconditionViolated);
  CHECK(code_of([&] { gauss_check(P("u*T", tv), P("T", tv)); }) == Errc::PreconditionViolated);
}

TEST_CASE("gauss over random primitive pairs") {
  Lcg g(92);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto tv = VarTable::make(p, {});
    const int T = tv->T();
    int n = 0;
    while (n < 70) {
      MultiPoly f(tv), h(tv);
      for (int k = 0; k <= 3; ++k) f += MultiPoly::var(tv, T, k).scaled(gen::coeff(g, p, 2, false));
      for (int k = 1; k <= 3; ++k) h += MultiPoly::var(tv, T, k).scaled(gen::coeff(g, p, 2, false));
      if (f.is_zero() || h.is_zero()) continue;
      f = content_primitive(f).primitive;
      h = content_primitive(h).primitive;
      ++n;
      CHECK(gauss_check(f, h));
      const MultiPoly fh = substitute_var(f, T, h);
      CHECK(integral_over_R(fh));
    }
  }
}
