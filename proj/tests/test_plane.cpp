#include <doctest.h>

#include "charp/error.hpp"
#include "charp/plane.hpp"
#include "oracle/gen.hpp"

using namespace charp;

namespace {
MultiPoly P(const char* s, const VarTablePtr& vt) { return parse_poly(s, vt); }
PolyMap M(const char* s, const VarTablePtr& vt) { return parse_map(s, vt); }
bool commute(const PolyMap& a, const PolyMap& b) { return compose(a, b) == compose(b, a); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}

PolyMap eps(const VarTablePtr& vt, const Coefficient& t) { return PolyMap(vt, {P("x1", vt) + t, P("x2", vt)}); }

MultiPoly rand_gen_poly(Lcg& g, const VarTablePtr& vt, int var, int maxdeg) {
  MultiPoly f(vt);
  while (f.is_zero())
    for (int k = 1; k <= maxdeg; ++k) f += MultiPoly::var(vt, var, k).scaled(gen::coeff(g, vt->prime(), 1, false));
  return f;
}
}  // namespace

TEST_CASE("tame factorization examples") {
  const auto vt = VarTable::make(3, {"x1", "x2"});
  auto w = jvdk_factor(M("(2*x1 + x2 + u, x1 + 1)", vt));
  REQUIRE(w.factors.size() == 1);
  CHECK(w.factors[0].kind == TameFactor::Kind::affine);
  w = jvdk_factor(M("(x1, x2 + x1^2)", vt));
  REQUIRE(w.factors.size() == 1);
  CHECK(w.factors[0].kind == TameFactor::Kind::triangular);
  // triangular factors move x2; the x1-moving elementary map needs the swap twice
  const PolyMap el = M("(x1 + x2^2, x2)", vt);
  w = jvdk_factor(el);
  CHECK(w.factors.size() == 3);
  CHECK(recompose(w) == el);
  CHECK(code_of([&] { jvdk_factor(M("(x1^2, x2)", vt)); }) == Errc::NotAutomorphism);
}

TEST_CASE("random tame words recompose") {
  Lcg g(81);
  for (unsigned p : {2u, 3u}) {
    const auto vt = VarTable::make(p, {"x1", "x2"});
    for (int it = 0; it < 30; ++it) {
      PolyMap phi = PolyMap::identity(vt);
      const int nf = 1 + static_cast<int>(g.below(5));
      for (int j = 0; j < nf; ++j) {
        if (j % 2 == 0) {
          phi = compose(phi, M("(x2, x1 + u)", vt));
        } else {
          const MultiPoly q = rand_gen_poly(g, vt, 0, 2 + static_cast<int>(g.below(2)));
          phi = compose(phi, PolyMap(vt, {P("x1", vt), P("x2", vt) + q}));
        }
      }
      const TameWord w = jvdk_factor(phi);
      CHECK(recompose(w) == phi);
    }
  }
}

TEST_CASE("centralizer words") {
  const auto vt = VarTable::make(2, {"x1", "x2"});
  const Coefficient one = Coefficient::one(2);
  CHECK(recompose(parse_centralizer_word("", vt, one)).is_identity());
  CHECK(recompose(parse_centralizer_word("[E1: x2^2]", vt, one)) == M("(x1 + x2^2, x2)", vt));
  CHECK(code_of([&] { parse_centralizer_word("[E1: x2 + 1]", vt, one); }) == Errc::ParseError);
  CHECK(code_of([&] { parse_centralizer_word("[E3: x2]", vt, one); }) == Errc::ParseError);
  const auto w = parse_centralizer_word("[E1: x2][E2: u*x1^2][H0: a=u,u1=1,u2=0]", vt, one);
  CHECK(parse_centralizer_word(w.to_string(), vt, one).to_string() == w.to_string());
}

TEST_CASE("centralizer membership examples") {
  for (unsigned p : {2u, 3u}) {
    const auto vt = VarTable::make(p, {"x1", "x2"});
    const Coefficient t = Coefficient::one(p);
    CHECK(centralizer_membership(M("(x1 + u*x2 + 1, u*x2 + u^2)", vt), t));
    const std::string e2 = "(x1, x2 + (x1^" + std::to_string(p) + " - x1)^2 + u*(x1^" + std::to_string(p) + " - x1))";
    CHECK(centralizer_membership(M(e2.c_str(), vt), t));
    CHECK_FALSE(centralizer_membership(M("(x2, x1)", vt), t));
    CHECK(code_of([&] { centralizer_decompose(M("(x2, x1)", vt), t); }) == Errc::NotInCentralizer);
    const auto d = centralizer_decompose(M("(x1 + x2^3, x2)", vt), t);
    REQUIRE(d.gens.size() == 1);
    CHECK(d.gens[0].kind == CentralizerGen::Kind::E1);
    CHECK(d.gens[0].g == P("x2^3", vt));
    CHECK(d.h0.a.is_one());
    CHECK(d.h0.u1.is_zero());
    CHECK(d.h0.u2.is_zero());
  }
}

TEST_CASE("decomposition of random words, generators commute with eps") {
  Lcg g(82);
  int delta_total = 0;
  for (unsigned p : {2u, 3u}) {
    const auto vt = VarTable::make(p, {"x1", "x2"});
    for (int it = 0; it < 25; ++it) {
      const Coefficient t = Coefficient(static_cast<long>(1 + g.below(p - 1)), p);
      CentralizerWord w{vt, t, {}, {gen::nonzero(g, p, 1, false), gen::coeff(g, p, 1, false), gen::coeff(g, p, 1, false)}};
      const int ng = 1 + static_cast<int>(g.below(3));
      for (int j = 0; j < ng; ++j) {
        const bool e1 = (j + it) % 2 == 0;
        w.gens.push_back({e1 ? CentralizerGen::Kind::E1 : CentralizerGen::Kind::E2, rand_gen_poly(g, vt, e1 ? 1 : 0, 2)});
      }
      const PolyMap phi = recompose(w);
      CHECK(commute(phi, eps(vt, t)));
      REQUIRE(centralizer_membership(phi, t));
      const auto d = centralizer_decompose(phi, t);
      CHECK(recompose(d) == phi);
      for (const auto& gen : d.gens) CHECK(commute(generator_map(gen, vt, t), eps(vt, t)));
      CHECK(commute(h0_map(d.h0, vt), eps(vt, t)));
      delta_total += d.delta_checks;
    }
  }
  CHECK(delta_total > 0);
}

TEST_CASE("W_{s,t} split") {
  const auto vt = VarTable::make(5, {"x1", "x2"});
  const Coefficient t = Coefficient(2, 5), s = Coefficient::u_pow(1, 5);
  CHECK(w_st_split(P("x1", vt).scaled(s / t), s, t).is_zero());
  const MultiPoly w = P("x1^5", vt) - P("x1", vt).scaled(t.pow(4));
  CHECK(w_st_split(pow(w, 2) + MultiPoly::constant(vt, 5), Coefficient::zero(5), t) == pow(P("x1", vt), 2));
  const auto v3 = VarTable::make(3, {"x1", "x2"});
  const Coefficient t3 = Coefficient::one(3);
  const MultiPoly w3 = P("x1^3 - x1", v3);
  CHECK(w_st_split(pow(w3, 2) + MultiPoly::constant(v3, 2), Coefficient::zero(3), t3) == P("x1^2 + 2", v3));
  CHECK(code_of([&] { w_st_split(P("x1^2", v3), Coefficient::zero(3), t3); }) == Errc::NotInWst);
}

TEST_CASE("fixed-point elements") {
  const auto vt = VarTable::make(3, {"x1", "x2"});
  const MultiPoly f = P("x2^2", vt);
  const auto r = fixed_point_elem_centralizer(PolyMap::identity(vt), f);
  REQUIRE(r);
  CHECK(r->a.is_one());
  CHECK(r->b.is_one());
  CHECK(r->c.is_zero());
  CHECK(r->g.is_zero());
  const auto r2 = fixed_point_elem_centralizer(M("(x1, -x2)", vt), f);
  REQUIRE(r2);
  CHECK(r2->b == Coefficient(-1, 3));
  CHECK(commute(M("(x1, -x2)", vt), M("(x1 + x2^2, x2)", vt)));
  CHECK_FALSE(fixed_point_elem_centralizer(M("(x1 + x2^2, x2^2)", vt), f));
  CHECK_FALSE(fixed_point_elem_centralizer(M("(x1, x2 + 1)", vt), f));
}

TEST_CASE("fpf witness") {
  for (unsigned p : {2u, 3u}) {
    const auto vt = VarTable::make(p, {"x1", "x2"});
    const Coefficient u = Coefficient::u_pow(1, p);
    auto r = fpf_witness_check(PolyMap::identity(vt), u, parse_centralizer_word("", vt, u));
    CHECK(r.restricts);
    CHECK(r.action[0] == P("x1 + u*T", vt));
    CHECK(r.action[1] == P("x2", vt));
    const Coefficient ui = u.inv();
    r = fpf_witness_check(PolyMap::identity(vt), ui, parse_centralizer_word("", vt, ui));
    CHECK_FALSE(r.restricts);
    r = fpf_witness_check(PolyMap::identity(vt), u, parse_centralizer_word("[E1: x2^2]", vt, u));
    CHECK(r.restricts);
    CHECK(r.action[0] == P("x1 + u*T", vt));
    CHECK(r.action[1] == P("x2", vt));
    const std::string bad = "[E2: (1/u^" + std::to_string(p + 1) + ")*x1]";
    r = fpf_witness_check(PolyMap::identity(vt), u, parse_centralizer_word(bad, vt, u));
    CHECK_FALSE(r.restricts);
    REQUIRE(r.witness.term);
    CHECK_FALSE(r.witness.term->leading().c.is_integral());
    CHECK(code_of([&] { fpf_witness_check(PolyMap::identity(vt), u, parse_centralizer_word("", vt, Coefficient::one(p))); }) ==
          Errc::PreconditionViolated);
  }
}
