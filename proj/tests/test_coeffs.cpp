#include <doctest.h>

#include "charp/error.hpp"
#include "charp/poly.hpp"
#include "oracle/gen.hpp"
#include "oracle/naive.hpp"

using namespace charp;

namespace {
Coefficient C(const char* s, unsigned p) { return parse_coefficient(s, p); }

bool reduced(const Coefficient& c) {
  const unsigned p = c.prime();
  if (c.den().lead() != 1) return false;
  return upoly::monic_gcd(c.num(), c.den(), p).is_one() || c.is_zero();
}
}  // namespace

TEST_CASE("coefficient examples") {
  CHECK(coeff_arith(CoeffArith::add, Coefficient(1, 2), Coefficient(1, 2)).is_zero());
  CHECK(coeff_arith(CoeffArith::mul, C("u/(u+1)", 3), C("u+1", 3)) == C("u", 3));
  CHECK_THROWS_AS(coeff_arith(CoeffArith::inv, Coefficient::zero(3)), Error);
  try {
    Coefficient::zero(5).inv();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
  CHECK(C("u^2", 2).is_integral());
  CHECK_FALSE(C("1/u", 2).is_integral());
  CHECK(C("(u^2+u)/u", 2).is_integral());
  CHECK(C("(u^2+u)/u", 2) == C("u+1", 2));
  const Coefficient u = Coefficient::u_pow(1, 3);
  CHECK(Coefficient::u_pow(-3, 3).is_in_localization(u));
  CHECK_FALSE(C("1/(u+1)", 3).is_in_localization(u));
  CHECK(C("1/(u^2*(u+1))", 3).is_in_localization(C("u*(u+1)", 3)));
}

TEST_CASE("unsupported primes") {
  CHECK(is_supported_prime(7));
  CHECK_FALSE(is_supported_prime(11));
  try {
    require_prime(4);
    FAIL("accepted p = 4");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedPrime);
  }
}

TEST_CASE("arithmetic agrees with the naive fraction oracle") {
  Lcg g(2024);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (int it = 0; it < 250; ++it) {
      const Coefficient a = gen::coeff(g, p, 3, true), b = gen::nonzero(g, p, 3, true);
      const auto oa = oracle::from_coeff(a), ob = oracle::from_coeff(b);
      const long lp = p;
      CHECK(oracle::feq(oracle::from_coeff(a + b), oracle::fadd(oa, ob, lp)));
      CHECK(oracle::feq(oracle::from_coeff(a * b), oracle::fmul(oa, ob, lp)));
      CHECK(oracle::feq(oracle::from_coeff(a / b), oracle::fmul(oa, oracle::finv(ob, lp), lp)));
      CHECK(reduced(a + b));
      CHECK(reduced(a * b));
      CHECK(reduced(a / b));
      CHECK((a * b) / b == a);
      CHECK(a - a == Coefficient::zero(p));
    }
  }
}

TEST_CASE("integrality is closed under ring operations") {
  Lcg g(99);
  for (int it = 0; it < 300; ++it) {
    const unsigned p = it % 2 ? 3u : 2u;
    const Coefficient a = gen::coeff(g, p, 3, true), b = gen::coeff(g, p, 3, true);
    if (a.is_integral() && b.is_integral()) {
      CHECK((a + b).is_integral());
      CHECK((a * b).is_integral());
    }
  }
}

TEST_CASE("localization membership is monotone in s") {
  Lcg g(3);
  for (int it = 0; it < 300; ++it) {
    const unsigned p = 3;
    const Coefficient a = gen::coeff(g, p, 2, true);
    const Coefficient s = gen::nonzero(g, p, 2, false), t = gen::nonzero(g, p, 2, false);
    if (a.is_in_localization(s)) CHECK(a.is_in_localization(s * t));
  }
  CHECK_THROWS_AS(Coefficient::one(2).is_in_localization(Coefficient::zero(2)), Error);
}

TEST_CASE("u-adic helpers") {
  const Coefficient c = C("(u^3 + 2*u + 1)/u^2", 3);
  CHECK(c.is_laurent());
  CHECK(c.u_valuation() == -2);
  CHECK(c.truncate_u(0) == C("(2*u + 1)/u^2", 3));
  CHECK_THROWS_AS(C("1/(u+1)", 3).truncate_u(0), Error);
  Lcg g(17);
  for (int it = 0; it < 100; ++it) {
    const Coefficient a = gen::coeff(g, 5, 3, true);
    CHECK(a.frobenius() == a.pow(5));
  }
}

TEST_CASE("text round trip") {
  Lcg g(8);
  for (int it = 0; it < 200; ++it) {
    const unsigned p = it % 2 ? 5u : 2u;
    const Coefficient a = gen::coeff(g, p, 3, true);
    CHECK(parse_coefficient(a.to_string(), p) == a);
  }
}
