#include <doctest.h>

#include "charp/error.hpp"
#include "charp/gaction.hpp"
#include "oracle/gen.hpp"

using namespace charp;

namespace {
MultiPoly P(const char* s, const VarTablePtr& vt) { return parse_poly(s, vt); }
PolyMap M(const char* s, const VarTablePtr& vt) { return parse_map(s, vt); }
GaAction A(const char* s, const VarTablePtr& vt) { return parse_action(s, vt); }

// a few actions on k[x1, x2, x3] built from triangular slices
std::vector<GaAction> sample_actions(unsigned p, Lcg& g) {
  const auto vt = VarTable::make(p, {"x1", "x2", "x3"});
  std::vector<GaAction> out;
  out.push_back(A("(x1 + T, x2, x3)", vt));
  out.push_back(A("(x1 + x2*T, x2, x3)", vt));
  for (int it = 0; it < 4; ++it) {
    SliceData s;
    const MultiPoly q2 = gen::poly(g, vt, 1, 2, 2), q3 = gen::poly(g, vt, 1, 2, 2);
    s.coords = PolyMap(vt, {P("x1", vt), P("x2", vt) + q2, P("x3", vt) + q3});
    s.lambda = (P("x2", vt) + P("u", vt)) * P("T", vt) + P("x3", vt) * pow(P("T", vt), p);
    out.push_back(slice_action(s));
  }
  return out;
}
}  // namespace

TEST_CASE("axiom examples") {
  const auto vt = VarTable::make(3, {"x1", "x2"});
  auto r = check_axioms(vt, {P("x1 + T", vt), P("x2", vt)});
  CHECK(r.ok());
  r = check_axioms(vt, {P("x1 + x2*T", vt), P("x2", vt)});
  CHECK(r.ok());
  r = check_axioms(vt, {P("x1 + x1*T", vt), P("x2", vt)});
  CHECK(r.A1);
  CHECK_FALSE(r.A2);
  CHECK_FALSE(r.witness.empty());
  r = check_axioms(vt, {P("x1 + T + 1", vt), P("x2", vt)});
  CHECK_FALSE(r.A1);
  try {
    A("(x1 + x1*T, x2)", vt);
    FAIL("accepted a broken action");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AxiomViolation);
  }
}

TEST_CASE("evaluation and rescaling") {
  const auto vt = VarTable::make(3, {"x"});
  const GaAction e = A("(x + u*T)", vt);
  CHECK(e.evaluate(P("0", vt)).is_identity());
  CHECK(e.evaluate(P("u^2 + 1", vt)) == M("(x + u^3 + u)", vt));
  const auto v2 = VarTable::make(3, {"x1", "x2"});
  const GaAction e2 = A("(x1 + T, x2)", v2);
  CHECK(e2.rescale(P("u", v2)).images() == A("(x1 + u*T, x2)", v2).images());
  CHECK(e2.rescale(P("1", v2)).images() == e2.images());
  try {
    e2.rescale(P("x1", v2));
    FAIL("rescaled by a non-invariant");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotInvariantParameter);
  }
}

TEST_CASE("invariants") {
  const auto vt = VarTable::make(3, {"x1", "x2"});
  const GaAction e = A("(x1 + T, x2)", vt);
  CHECK(e.is_invariant(P("x2", vt)));
  CHECK_FALSE(e.is_invariant(P("x1", vt)));
  CHECK_FALSE(e.is_invariant(P("x1^3 - x1", vt)));
  CHECK(e.apply(P("x1^3 - x1", vt)) == P("x1^3 - x1 + T^3 - T", vt));
  CHECK(e.evaluate(1).apply(P("x1^3 - x1", vt)) == P("x1^3 - x1", vt));
  CHECK(e.is_invariant(P("x2^2 + u*x2", vt)));
  const auto v2 = VarTable::make(2, {"x", "y"});
  CHECK(A("(x + y*T, y)", v2).is_invariant(P("y^3 + y", v2)));
}

TEST_CASE("restriction") {
  const auto vt = VarTable::make(2, {"x1", "x2"});
  CHECK(A("(x1 + u*T, x2)", vt).restricts_to(CoeffRing::R()).ok);
  const auto r = A("(x1 + (1/u)*T, x2)", vt).restricts_to(CoeffRing::R());
  CHECK_FALSE(r.ok);
  CHECK(r.generator == 0);
  REQUIRE(r.term);
  CHECK(*r.term == P("(1/u)*T", vt));
  CHECK(A("(x1 + (1/u)*T, x2)", vt).restricts_to(CoeffRing::Ra(Coefficient::u_pow(1, 2))).ok);
}

TEST_CASE("slice actions") {
  const auto vt = VarTable::make(3, {"x1", "x2"});
  SliceData s{PolyMap::identity(vt), P("u*T", vt), {}};
  CHECK(slice_action(s).images() == A("(x1 + u*T, x2)", vt).images());
  // coordinates (x1, x2 + f(x1)): E(x2) = x2 + f(x1) - f(x1 + aT)
  s.coords = M("(x1, x2 + x1^2 + x1^4)", vt);
  const GaAction e = slice_action(s);
  const MultiPoly f = P("x1^2 + x1^4", vt);
  CHECK(e[1] == P("x2", vt) + f - substitute_var(f, 0, P("x1 + u*T", vt)));
  CHECK(check_axioms(vt, e.images()).ok());
  SliceData bad{PolyMap::identity(vt), P("T^2", vt), {}};
  try {
    slice_action(bad);
    FAIL("accepted a non-additive lambda");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::AdditivityViolation);
  }
  SliceData wrong{M("(x1, x2 + x1^2)", vt), P("T", vt), {M("(x1, x2 + x1^2)", vt)}};
  try {
    slice_action(wrong);
    FAIL("accepted a wrong inverse chain");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::InconsistentSlice);
  }
}

TEST_CASE("additivity") {
  const auto vt = VarTable::make(3, {"x"});
  CHECK(additivity_check(P("u*T", vt)));
  CHECK(additivity_check(P("T + u*T^3", vt)));
  CHECK_FALSE(additivity_check(P("T^2", vt)));
  CHECK_FALSE(additivity_check(P("T + 1", vt)));
}

TEST_CASE("rank certificates") {
  const auto vt = VarTable::make(2, {"x1", "x2", "x3"});
  const GaAction e = A("(x1 + T, x2, x3)", vt);
  const auto c = rank_certificate(e, {P("x2", vt), P("x3", vt)}, {P("x2", vt), P("x3", vt)});
  CHECK(c.exact());
  CHECK(c.lower == 1);
  CHECK(c.to_string() == "rank 1");
  CHECK_THROWS_AS(rank_certificate(e, {P("x1", vt)}, {}), Error);
}

TEST_CASE("group law, order p, invariant closure on sample actions") {
  Lcg g(31);
  for (unsigned p : {2u, 3u}) {
    for (const auto& e : sample_actions(p, g)) {
      const auto& vt = e.vars();
      CHECK(check_axioms(vt, e.images()).ok());
      const MultiPoly a = P("u", vt), b = P("u^2 + 1", vt);
      CHECK(e.evaluate(a + b) == compose(e.evaluate(a), e.evaluate(b)));
      PolyMap acc = PolyMap::identity(vt);
      const PolyMap ea = e.evaluate(a);
      for (unsigned k = 0; k < p; ++k) acc = compose(acc, ea);
      CHECK(acc.is_identity());
      // invariants: closure under products, and E_1 fixes them
      std::vector<MultiPoly> inv;
      for (const char* cand : {"x2", "x3", "u", "x2*x3"})
        if (e.is_invariant(P(cand, vt))) inv.push_back(P(cand, vt));
      for (const auto& h : inv) {
        for (const auto& h2 : inv) CHECK(e.is_invariant(h * h2));
        CHECK(e.evaluate(1).apply(h) == h);
      }
    }
  }
}

TEST_CASE("lambda recovered from a slice action is additive") {
  Lcg g(32);
  for (unsigned p : {2u, 3u}) {
    const auto vt = VarTable::make(p, {"x1", "x2"});
    for (int it = 0; it < 10; ++it) {
      SliceData s;
      s.coords = PolyMap(vt, {P("x1", vt) + MultiPoly::constant(vt, gen::coeff(g, p, 2, false)) + pow(P("x2", vt), 2), P("x2", vt)});
      s.inverse_chain = {PolyMap(vt, {P("x1", vt) - (s.coords[0] - P("x1", vt)), P("x2", vt)})};
      s.lambda = P("x2", vt) * P("T", vt) + P("u", vt) * pow(P("T", vt), p);
      const GaAction e = slice_action(s);
      const MultiPoly r = s.coords[0];
      CHECK(additivity_check(e.apply(r) - r));
    }
  }
}
