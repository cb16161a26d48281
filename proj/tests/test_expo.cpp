#include <doctest.h>

#include "charp/error.hpp"
#include "charp/expo.hpp"
#include "oracle/gen.hpp"
#include "oracle/naive.hpp"

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

MultiPoly rand_theta(Lcg& g, const VarTablePtr& vt) {
  const unsigned p = vt->prime();
  MultiPoly th(vt);
  for (int e = 1; e <= 8; ++e)
    if (e % static_cast<int>(p) != 0 && g.below(2) == 1) th += MultiPoly::var(vt, 0, e).scaled(gen::nonzero(g, p, 2, false));
  return th.is_zero() ? MultiPoly::var(vt, 0) : th;
}
}  // namespace

TEST_CASE("maubach conjugator examples") {
  const auto vt = VarTable::make(2, {"x1", "x2"});
  CHECK(maubach_conjugator(M("(x1 + 1, x2)", vt)).is_identity());
  const PolyMap s = M("(x1 + 1, x2 + x1^2 + x1 + 1)", vt);
  const PolyMap phi = maubach_conjugator(s);
  CHECK(phi == M("(x1, x2 + x1^3 + 1)", vt));
  CHECK(s.apply(phi[1]) == phi[1]);
  CHECK(conjugate(M("(x1 + 1, x2)", vt), phi) == s);
  CHECK(code_of([&] { maubach_conjugator(M("(x2, x1)", vt)); }) == Errc::NotTriangular);
  CHECK(code_of([&] { maubach_conjugator(M("(x1 + u, x2)", vt), CoeffRing::R()); }) == Errc::NonUnitTranslation);
}

TEST_CASE("averaging identity on random conjugates") {
  Lcg g(71);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto vt = VarTable::make(p, {"x1", "x2", "x3"});
    for (int it = 0; it < 10; ++it) {
      const PolyMap phi0(vt, {P("x1", vt), P("x2", vt) + gen::poly(g, vt, 1, 3, 3),
                              P("x3", vt) + gen::poly(g, vt, 2, 3, 2)});
      const Coefficient a = gen::nonzero(g, p, 1, false);
      const PolyMap eps(vt, {P("x1", vt) + a, P("x2", vt), P("x3", vt)});
      const PolyMap s = conjugate(eps, phi0);
      const PolyMap phi = maubach_conjugator(s);
      CHECK(conjugate(eps, phi) == s);
      for (int i = 1; i < 3; ++i) {
        CHECK(s.apply(phi[i]) == phi[i]);
        CHECK_FALSE((phi[i] - MultiPoly::var(vt, i)).uses_var(i));
      }
    }
  }
}

TEST_CASE("exponentialization over F_2[u], theta = x1^3") {
  const auto vt = VarTable::make(2, {"x1", "x2"});
  const Coefficient u = Coefficient::u_pow(1, 2);
  const MultiPoly th = P("x1^3", vt);
  const PolyMap s = sigma_from_theta(vt, u, th);
  CHECK(s == M("(x1 + u, x2 + x1^2 + u*x1 + u^2)", vt));
  CHECK(order_up_to(s) == 2);
  const auto r = exponentialize_triangular_n2(s);
  // oracle: u^-1 (theta(x1) - theta(x1 + uT)) expanded naively
  const std::size_t n = static_cast<std::size_t>(vt->size());
  std::vector<oracle::Poly> imgs;
  for (int i = 0; i < vt->size(); ++i) imgs.push_back(oracle::from(MultiPoly::var(vt, i)));
  imgs[0] = oracle::from(P("x1 + u*T", vt));
  const auto shifted = oracle::psubst(oracle::from(th), imgs, n);
  const auto diff = oracle::padd(oracle::from(th), oracle::pneg(shifted));
  const auto e2 = oracle::padd(oracle::from(P("x2", vt)), oracle::pmul(oracle::from(P("1/u", vt)), diff));
  CHECK(oracle::peq(oracle::from(r.action[1]), e2));
  CHECK(r.action[1] == P("x2 + x1^2*T + u*x1*T^2 + u^2*T^3", vt));
  CHECK(r.action[0] == P("x1 + u*T", vt));
  const auto td = theta_of(s);
  CHECK(td.a == u);
  CHECK(td.theta == th);
}

TEST_CASE("exponentialization edge cases") {
  const auto vt = VarTable::make(3, {"x1", "x2"});
  const auto r = exponentialize_triangular_n2(M("(x1, x2 + u*x1^2 + 1)", vt));
  CHECK(r.action[0] == P("x1", vt));
  CHECK(r.action[1] == P("x2 + (u*x1^2 + 1)*T", vt));
  CHECK(code_of([&] { exponentialize_triangular_n2(PolyMap::identity(vt)); }) == Errc::NotOrderP);
  const Coefficient a = Coefficient::u_pow(2, 3);
  CHECK(sigma_from_theta(vt, a, P("x1", vt))[1] == P("x2 - 1", vt));
  CHECK(sigma_from_theta(vt, a, MultiPoly(vt)) == M("(x1 + u^2, x2)", vt));
  CHECK(code_of([&] { sigma_from_theta(vt, a, P("x1^3", vt)); }) == Errc::BadThetaSupport);
}

TEST_CASE("exponentialization properties on seeded instances") {
  Lcg g(72);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto vt = VarTable::make(p, {"x1", "x2"});
    for (int it = 0; it < 15; ++it) {
      const Coefficient a = it % 3 == 0 ? Coefficient::u_pow(1, p) : it % 3 == 1 ? Coefficient::u_pow(2, p)
                                                                                 : Coefficient::u_pow(1, p) + Coefficient::one(p);
      const MultiPoly th = rand_theta(g, vt);
      const PolyMap s = sigma_from_theta(vt, a, th);
      const auto r = exponentialize_triangular_n2(s);
      CHECK(r.action.evaluate(1) == s);
      CHECK(check_axioms(vt, r.action.images()).ok());
      CHECK(r.action.restricts_to(CoeffRing::R()).ok);
      CHECK(r.action.is_invariant(P("x2", vt) + r.reduced_f));
      for (const auto& t : r.reduced_f.terms()) CHECK((t.c * a).is_integral());
      const auto td = theta_of(s);
      CHECK(td.theta == th);
    }
  }
}

TEST_CASE("n = 3 over F_p") {
  for (unsigned p : {2u, 3u}) {
    const auto vt = VarTable::make(p, {"x1", "x2", "x3"});
    const PolyMap s1 = M("(x1 + 1, x2, x3 + x2^2)", vt);
    const auto r1 = exponentialize_field_n3(s1);
    CHECK(r1.action.evaluate(1) == s1);
    CHECK(check_axioms(vt, r1.action.images()).ok());
    const std::string t2 = "(x1, x2 + 1, x3 + (x2^" + std::to_string(p) + " - x2)*(x1^2 + x1) + x1^2*x2^" + std::to_string(p - 2) + ")";
    const PolyMap s2 = M(t2.c_str(), vt);
    const auto r2 = exponentialize_field_n3(s2);
    CHECK(r2.action.evaluate(1) == s2);
    CHECK(r2.action[0] == P("x1", vt));
    CHECK(check_axioms(vt, r2.action.images()).ok());
    CHECK(code_of([&] { exponentialize_field_n3(M("(x2, x1, x3)", vt)); }) == Errc::NotTriangular);
    CHECK(code_of([&] { exponentialize_field_n3(M("(x1 + u, x2, x3)", vt)); }) == Errc::UnsupportedField);
  }
}
