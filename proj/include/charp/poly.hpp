#pragma once
// Sparse multivariate polynomials over F_p / F_p(u), optionally Laurent in
// designated variables. Terms are kept sorted in descending graded-lex order.
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charp/coeffs.hpp"
#include "charp/simd/kernels.hpp"

namespace charp {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

class VarTable {
 public:
  // Ring variables first, then the reserved T, T1, T2.
  static VarTablePtr make(unsigned p, const std::vector<std::string>& names,
                          const std::vector<std::string>& invertible = {});

  unsigned prime() const { return p_; }
  int n_ring() const { return n_ring_; }
  int size() const { return static_cast<int>(names_.size()); }
  int T() const { return n_ring_; }
  int T1() const { return n_ring_ + 1; }
  int T2() const { return n_ring_ + 2; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;  // -1 when absent
  bool invertible(int i) const { return (inv_mask_ >> i) & 1u; }
  std::uint16_t invertible_mask() const { return inv_mask_; }
  bool same_as(const VarTable& o) const;

 private:
  unsigned p_ = 2;
  int n_ring_ = 0;
  std::vector<std::string> names_;
  std::uint16_t inv_mask_ = 0;
};

struct alignas(32) Monomial {
  std::array<simd::Exp, simd::kLanes> e{};

  int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  void set(int i, int v);
  int degree() const { return simd::active().mono_degree(e.data()); }
  bool is_one() const;
  bool operator==(const Monomial& o) const { return simd::active().mono_first_diff(e.data(), o.e.data()) < 0; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  std::size_t hash() const;

  static Monomial var(int i, int k = 1);
};

Monomial operator*(const Monomial& a, const Monomial& b);  // exponent add, overflow-checked
Monomial operator/(const Monomial& a, const Monomial& b);  // exponent sub
Monomial mono_pow(const Monomial& a, int k);
// true when a sorts before b in the canonical (descending graded-lex) order
bool mono_before(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial m;
  Coefficient c;
};

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(VarTablePtr vt) : vt_(std::move(vt)) {}
  static MultiPoly constant(const VarTablePtr& vt, const Coefficient& c);
  static MultiPoly constant(const VarTablePtr& vt, long v);
  static MultiPoly var(const VarTablePtr& vt, int i, int k = 1);
  static MultiPoly var(const VarTablePtr& vt, std::string_view name, int k = 1);
  static MultiPoly monomial(const VarTablePtr& vt, const Monomial& m, const Coefficient& c);
  static MultiPoly from_terms(const VarTablePtr& vt, std::vector<Term> terms);
  static MultiPoly from_sorted(const VarTablePtr& vt, std::vector<Term> terms);

  const VarTablePtr& vars() const { return vt_; }
  unsigned prime() const { return vt_->prime(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  Coefficient constant_term() const;
  Coefficient coeff(const Monomial& m) const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  int degree_in(int var) const;      // max exponent, INT_MIN/4 for zero
  int min_degree_in(int var) const;  // min exponent
  bool uses_var(int var) const;
  bool all_fp() const;  // every coefficient is an F_p constant
  bool has_negative_exponent() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scaled(const Coefficient& c) const;
  MultiPoly shifted(const Monomial& m, const Coefficient& c) const;  // c*m*self

  std::string to_string() const;

 private:
  VarTablePtr vt_;
  std::vector<Term> terms_;
};

MultiPoly operator*(const Coefficient& c, const MultiPoly& f);
MultiPoly operator+(const MultiPoly& f, const Coefficient& c);
MultiPoly operator-(const MultiPoly& f, const Coefficient& c);

enum class PolyArith { add, sub, mul, pow, neg };
MultiPoly poly_arith(PolyArith kind, const MultiPoly& f, const MultiPoly* g, long exponent = 0);

MultiPoly pow(const MultiPoly& f, long n);
MultiPoly frobenius(const MultiPoly& f);  // f^p

// assignment[i] = image of variable i; missing entries map to themselves
using Assignment = std::vector<std::optional<MultiPoly>>;
Assignment identity_assignment(const VarTablePtr& vt);
MultiPoly substitute(const MultiPoly& f, const Assignment& assignment);
MultiPoly substitute_var(const MultiPoly& f, int var, const MultiPoly& image);
// move f into another table, renaming variable i of f's table to var_map[i]
MultiPoly transport(const MultiPoly& f, const VarTablePtr& target, const std::vector<int>& var_map);

MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g);
std::optional<MultiPoly> try_exact_div(const MultiPoly& f, const MultiPoly& g);

struct ContentSplit {
  Coefficient content;
  MultiPoly primitive;
};
ContentSplit content_primitive(const MultiPoly& f);

enum class RingKind { R, Ra, field };
struct CoeffRing {
  RingKind kind = RingKind::R;
  Coefficient s;  // localizer for Ra
  static CoeffRing R() { return {RingKind::R, {}}; }
  static CoeffRing Ra(const Coefficient& s) { return {RingKind::Ra, s}; }
  static CoeffRing field() { return {RingKind::field, {}}; }
};
bool coefficient_in(const Coefficient& c, const CoeffRing& ring);

struct Membership {
  bool ok = true;
  std::optional<MultiPoly> witness;  // one offending term
};
Membership is_polynomial_over(const MultiPoly& f, const CoeffRing& ring, bool laurent);

enum class InvariantMode { split, member };
struct InvariantSplit {
  MultiPoly q1;   // polynomial in the chosen variable, which stands for w = x^p - a^(p-1) x
  MultiPoly rem;  // only x^i with p not dividing i
};
InvariantSplit express_in_invariant(const MultiPoly& q, int var, const Coefficient& a,
                                    InvariantMode mode);

struct LinearSpan {
  int dim = 0;
  std::vector<MultiPoly> basis;  // reduced linear forms
};
LinearSpan linear_span_dim(const std::vector<MultiPoly>& gens);

// Coefficient of var^k when f is read as a polynomial in var.
MultiPoly coefficient_of(const MultiPoly& f, int var, int k);
std::map<int, MultiPoly> split_by_var(const MultiPoly& f, int var);

// ---- u-adic truncated arithmetic: exact modulo u^e R[x] for Laurent coefficients
int u_valuation(const MultiPoly& f);  // INT32_MAX for zero
MultiPoly truncate_u(const MultiPoly& f, int e);
MultiPoly polar_part(const MultiPoly& f);  // terms of negative u-valuation
MultiPoly mul_trunc(const MultiPoly& a, const MultiPoly& b, int e);
MultiPoly pow_trunc(const MultiPoly& f, long n, int e);
MultiPoly substitute_trunc(const MultiPoly& f, const Assignment& assignment, int e);

// ---- text
MultiPoly parse_poly(std::string_view text, const VarTablePtr& vt);
Coefficient parse_coefficient(std::string_view text, unsigned p);
std::string coefficient_text(const Coefficient& c);

}  // namespace charp
