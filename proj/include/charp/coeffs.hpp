#pragma once
// Coefficients: F_p and F_p(u), p in {2,3,5,7}.
#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <string>

namespace charp {

bool is_supported_prime(unsigned p);
void require_prime(unsigned p);
unsigned fp_inv(unsigned a, unsigned p);

// Dense polynomial in u over F_p, c[i] = coefficient of u^i, no trailing zeros.
struct UPoly {
  boost::container::small_vector<std::uint8_t, 8> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  bool is_constant() const { return c.size() <= 1; }
  unsigned lead() const { return c.empty() ? 0 : c.back(); }
  int ord() const;  // u-adic order, large for zero
  bool is_monomial() const;
  std::size_t term_count() const;
  void trim();
  bool operator==(const UPoly& o) const { return c == o.c; }

  static UPoly constant(unsigned v);
  static UPoly monomial(unsigned v, int k);
};

namespace upoly {
UPoly add(const UPoly& a, const UPoly& b, unsigned p);
UPoly sub(const UPoly& a, const UPoly& b, unsigned p);
UPoly mul(const UPoly& a, const UPoly& b, unsigned p);
UPoly scale(const UPoly& a, unsigned s, unsigned p);
UPoly shift(const UPoly& a, int k);  // multiply by u^k, k >= -ord(a)
void divmod(const UPoly& a, const UPoly& b, unsigned p, UPoly* q, UPoly* r);
UPoly monic_gcd(UPoly a, UPoly b, unsigned p);
UPoly make_monic(const UPoly& a, unsigned p);
std::string to_string(const UPoly& a);
}  // namespace upoly

// Reduced fraction num/den with den monic; zero is 0/1. Constant fractions with
// den = 1 are the F_p elements. A default-constructed value is the zero of an
// unspecified prime and adopts the prime of the first operand it meets.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long v, unsigned p);
  static Coefficient zero(unsigned p) { return Coefficient(0, p); }
  static Coefficient one(unsigned p) { return Coefficient(1, p); }
  static Coefficient u_pow(int k, unsigned p);  // u^k, k may be negative
  static Coefficient from_parts(UPoly num, UPoly den, unsigned p);

  unsigned prime() const { return p_; }
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_fp() const { return den_.is_one() && num_.is_constant(); }
  unsigned fp_value() const { return num_.is_zero() ? 0u : num_.c[0]; }

  bool is_integral() const { return den_.is_one(); }
  bool is_in_localization(const Coefficient& s) const;
  bool is_laurent() const { return den_.is_monomial(); }  // den is a power of u
  int u_valuation() const;                                // for zero: INT32_MAX
  Coefficient truncate_u(int e) const;  // Laurent only: drop u-exponents >= e
  Coefficient frobenius() const;        // c^p = c(u^p)

  Coefficient operator-() const;
  Coefficient inv() const;
  Coefficient pow(long e) const;
  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
  Coefficient& operator+=(const Coefficient& b);
  Coefficient& operator-=(const Coefficient& b);
  Coefficient& operator*=(const Coefficient& b) { return *this = *this * b; }
  bool operator==(const Coefficient& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void normalize();
  std::uint8_t p_ = 0;
  UPoly num_;
  UPoly den_ = UPoly::constant(1);
};

enum class CoeffArith { add, sub, mul, div, neg, inv };
Coefficient coeff_arith(CoeffArith kind, const Coefficient& a, const Coefficient& b = {});

}  // namespace charp
