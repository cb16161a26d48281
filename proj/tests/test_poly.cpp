#include <doctest.h>

#include "charp/error.hpp"
#include "charp/poly.hpp"
#include "oracle/gen.hpp"
#include "oracle/naive.hpp"

using namespace charp;

namespace {
MultiPoly P(const char* s, const VarTablePtr& vt) { return parse_poly(s, vt); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::ParseError;
}
}  // namespace

TEST_CASE("arithmetic examples") {
  const auto v2 = VarTable::make(2, {"x", "y"});
  CHECK(pow(P("x + y", v2), 2) == P("x^2 + y^2", v2));
  CHECK(pow(P("x + y", v2), 0).is_one());
  const auto v3 = VarTable::make(3, {"x", "y"});
  CHECK(P("x - y", v3) * P("x^2 + x*y + y^2", v3) == P("x^3 - y^3", v3));
  CHECK(poly_arith(PolyArith::pow, P("x + 1", v3), nullptr, 3) == P("x^3 + 1", v3));
  CHECK(frobenius(P("u*x + y", v3)) == P("u^3*x^3 + y^3", v3));
}

TEST_CASE("substitution examples") {
  const auto vt = VarTable::make(3, {"x"});
  const MultiPoly f = P("x^2", vt);
  CHECK(substitute_var(f, 0, P("x + u*T", vt)) == P("x^2 + 2*u*x*T + u^2*T^2", vt));
  CHECK(substitute(f, identity_assignment(vt)) == f);
  const auto v2 = VarTable::make(2, {"x"});
  CHECK(substitute_var(P("x^3", v2), 0, P("x + 1", v2)) == P("x^3 + x^2 + x + 1", v2));
}

TEST_CASE("exact division and content") {
  const auto v3 = VarTable::make(3, {"x", "y"});
  CHECK(exact_div(P("x^2 - y^2", v3), P("x - y", v3)) == P("x + y", v3));
  CHECK(code_of([&] { exact_div(P("x", v3), P("y", v3)); }) == Errc::NotDivisible);
  const auto cs = content_primitive(P("u*x + u^2", v3));
  CHECK(cs.content == Coefficient::u_pow(1, 3));
  CHECK(cs.primitive == P("x + u", v3));
  CHECK(content_primitive(P("x + 1", v3)).content.is_one());
  CHECK(code_of([&] { content_primitive(MultiPoly(v3)); }) == Errc::ZeroPolynomial);
}

TEST_CASE("xi is divisible by g in the rank three data") {
  const auto vt = VarTable::make(2, {"x1", "x2", "x3"});
  const MultiPoly x1 = P("x1", vt), x2 = P("x2", vt), x3 = P("x3", vt);
  const MultiPoly f = pow(x1, 4) - pow(x1, 2) + x2 * x3;
  const MultiPoly g = pow(f, 4) * x3 - pow(x2, 3) + pow(f, 2) * x2;
  const MultiPoly r = f * x1 + x2;
  const MultiPoly xi = pow(f, 5) - pow(r, 4) + pow(f, 2) * pow(r, 2);
  CHECK(exact_div(xi, g) == x2);
}

TEST_CASE("membership over R, R_a and the field") {
  for (unsigned p : {2u, 3u}) {
    const auto vt = VarTable::make(p, {"x1", "x2"});
    const std::string sp = std::to_string(p);
    const MultiPoly e2 = P(("x2 - x1^" + sp + "*T - u^" + std::to_string(p - 1) + "*x1*T^" + sp + " - u^" + sp + "*T^" +
                            std::to_string(p + 1)).c_str(),
                           vt);
    CHECK(is_polynomial_over(e2, CoeffRing::R(), false).ok);
    const MultiPoly bad = P(("(1/u)*x1^" + std::to_string(1 + p + p * p) + "*T").c_str(), vt);
    const auto m = is_polynomial_over(bad, CoeffRing::R(), false);
    CHECK_FALSE(m.ok);
    REQUIRE(m.witness);
    CHECK(*m.witness == bad);
    CHECK(is_polynomial_over(bad, CoeffRing::field(), false).ok);
    CHECK(is_polynomial_over(bad, CoeffRing::Ra(Coefficient::u_pow(1, p)), false).ok);
  }
}

TEST_CASE("invariant splitting") {
  const auto vt = VarTable::make(2, {"x"});
  const Coefficient one = Coefficient::one(2);
  auto s = express_in_invariant(P("x^2", vt), 0, one, InvariantMode::split);
  CHECK(s.q1 == P("x", vt));
  CHECK(s.rem == P("x", vt));
  s = express_in_invariant(P("x^4", vt), 0, one, InvariantMode::split);
  CHECK(s.q1 == P("x^2 + x", vt));
  CHECK(s.rem == P("x", vt));
  s = express_in_invariant(P("u + 1", vt), 0, one, InvariantMode::split);
  CHECK(s.q1 == P("u + 1", vt));
  CHECK(s.rem.is_zero());
  // reconstruction on random inputs
  Lcg g(41);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto v = VarTable::make(p, {"x"});
    for (int it = 0; it < 40; ++it) {
      const MultiPoly q = gen::poly(g, v, 1, 6, 12);
      const Coefficient a = gen::nonzero(g, p, 1, false);
      const auto sp = express_in_invariant(q, 0, a, InvariantMode::split);
      const MultiPoly w = pow(P("x", v), p) - P("x", v).scaled(a.pow(static_cast<long>(p) - 1));
      CHECK(substitute_var(sp.q1, 0, w) + sp.rem == q);
      for (const auto& t : sp.rem.terms()) CHECK(t.m[0] % static_cast<int>(p) != 0);
    }
  }
}

TEST_CASE("linear span dimension") {
  const auto vt = VarTable::make(2, {"x1", "x2", "x3", "x4"});
  CHECK(linear_span_dim({P("x3", vt), P("x4", vt)}).dim == 2);
  const auto v3 = VarTable::make(2, {"x1", "x2", "x3"});
  const MultiPoly f = P("x1^4 - x1^2 + x2*x3", v3);
  const MultiPoly g = pow(f, 4) * P("x3", v3) - P("x2^3", v3) + pow(f, 2) * P("x2", v3);
  CHECK(linear_span_dim({f, g}).dim == 0);
}

TEST_CASE("ring operations agree with the naive oracle") {
  Lcg g(1234);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto vt = VarTable::make(p, {"x", "y", "z"});
    const std::size_t n = static_cast<std::size_t>(vt->size());
    for (int it = 0; it < 30; ++it) {
      const MultiPoly a = gen::poly(g, vt, 3, 6, 3, true), b = gen::poly(g, vt, 3, 6, 3, true);
      const auto oa = oracle::from(a), ob = oracle::from(b);
      CHECK(oracle::peq(oracle::from(a + b), oracle::padd(oa, ob)));
      CHECK(oracle::peq(oracle::from(a - b), oracle::padd(oa, oracle::pneg(ob))));
      CHECK(oracle::peq(oracle::from(a * b), oracle::pmul(oa, ob)));
      CHECK(oracle::peq(oracle::from(pow(a, 3)), oracle::ppow(oa, 3, n)));
      // substitution x -> b, y -> y + 1, z -> z
      Assignment as = identity_assignment(vt);
      as[0] = b;
      as[1] = P("y + 1", vt);
      std::vector<oracle::Poly> imgs;
      for (int i = 0; i < vt->size(); ++i) imgs.push_back(oracle::from(MultiPoly::var(vt, i)));
      imgs[0] = ob;
      imgs[1] = oracle::from(P("y + 1", vt));
      CHECK(oracle::peq(oracle::from(substitute(a, as)), oracle::psubst(oa, imgs, n)));
    }
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  Lcg g(77);
  const auto vt = VarTable::make(3, {"x", "y"});
  for (int it = 0; it < 40; ++it) {
    const MultiPoly f = gen::poly(g, vt, 2, 5, 3), h = gen::poly(g, vt, 2, 5, 3);
    Assignment as = identity_assignment(vt);
    as[0] = gen::poly(g, vt, 2, 3, 2);
    as[1] = gen::poly(g, vt, 2, 3, 2);
    CHECK(substitute(f + h, as) == substitute(f, as) + substitute(h, as));
    CHECK(substitute(f * h, as) == substitute(f, as) * substitute(h, as));
  }
}

TEST_CASE("exact division round trip and content multiplicativity") {
  Lcg g(55);
  const auto vt = VarTable::make(3, {"x", "y"});
  for (int it = 0; it < 60; ++it) {
    const MultiPoly a = gen::poly(g, vt, 2, 4, 3), b = gen::poly(g, vt, 2, 4, 3);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
    if (auto q = try_exact_div(a, b)) CHECK(*q * b == a);
  }
  for (int it = 0; it < 200; ++it) {
    const MultiPoly a = gen::poly(g, vt, 2, 4, 3), b = gen::poly(g, vt, 2, 4, 3);
    if (a.is_zero() || b.is_zero()) continue;
    const auto ca = content_primitive(a), cb = content_primitive(b);
    CHECK(content_primitive(a * b).content == ca.content * cb.content);
    CHECK(content_primitive(ca.primitive).content.is_one());
  }
}

TEST_CASE("u-adic truncation is exact modulo u^e") {
  Lcg g(66);
  for (unsigned p : {2u, 3u}) {
    const auto vt = VarTable::make(p, {"x", "y"});
    for (int it = 0; it < 30; ++it) {
      MultiPoly a = gen::poly(g, vt, 2, 5, 2), b = gen::poly(g, vt, 2, 5, 2);
      a = a.scaled(Coefficient::u_pow(-static_cast<int>(g.below(4)), p));
      b = b.scaled(Coefficient::u_pow(-static_cast<int>(g.below(4)), p));
      const int e = static_cast<int>(g.below(4)) - 2;
      CHECK(mul_trunc(a, b, e) == truncate_u(a * b, e));
      CHECK(pow_trunc(a, 3, e) == truncate_u(pow(a, 3), e));
      Assignment as = identity_assignment(vt);
      as[0] = b + P("x", vt);
      CHECK(substitute_trunc(a, as, e) == truncate_u(substitute(a, as), e));
      CHECK(polar_part(a) == truncate_u(a, 0));
    }
  }
}

TEST_CASE("parse errors and printing") {
  const auto vt = VarTable::make(3, {"x1", "x2"});
  CHECK(code_of([&] { parse_poly("x1^^2", vt); }) == Errc::ParseError);
  CHECK(code_of([&] { parse_poly("x9", vt); }) == Errc::ParseError);
  CHECK(P("x1 + x1", vt).to_string() == "2*x1");
  Lcg g(9);
  for (int it = 0; it < 50; ++it) {
    const MultiPoly f = gen::poly(g, vt, 2, 5, 3, true);
    CHECK(P(f.to_string().c_str(), vt) == f);
  }
  CHECK(code_of([] { VarTable::make(2, {"u"}); }) == Errc::BadParameters);
  CHECK(code_of([&] { MultiPoly::var(vt, 0, -1); }) == Errc::NegativeExponent);
  const auto other = VarTable::make(3, {"x1", "x3"});
  CHECK(code_of([&] { (void)(P("x1", vt) + parse_poly("x1", other)); }) == Errc::VarTableMismatch);
}
