#pragma once
// Automorphisms of k[x1, x2]: tame factorization and the centralizer of
// eps = (x1 + t, x2).
#include <optional>
#include <string>
#include <vector>

#include "charp/gaction.hpp"

namespace charp {

// A factor is affine, or triangular (a x1 + c, b x2 + q(x1)).
struct TameFactor {
  enum class Kind { affine, triangular };
  Kind kind;
  PolyMap map;
};

struct TameWord {
  VarTablePtr vt;
  std::vector<TameFactor> factors;  // recompose folds left to right
  std::string to_string() const;
};

bool is_affine_map(const PolyMap& m);
bool is_triangular_map(const PolyMap& m);  // x1 -> a x1 + c

TameWord jvdk_factor(const PolyMap& phi);
PolyMap recompose(const TameWord& w);

// E1(g) = (x1 + g(x2), x2); E2(g) = (x1, x2 + g(x1^p - t^(p-1) x1)).
// g is stored as a polynomial in x2 for E1 and in x1 (standing for the
// invariant x1^p - t^(p-1) x1) for E2; g(0) = 0 in both cases.
struct CentralizerGen {
  enum class Kind { E1, E2 };
  Kind kind;
  MultiPoly g;
};

struct H0Elem {
  Coefficient a, u1, u2;  // (x1 + u1, a x2 + u2)
};

struct CentralizerWord {
  VarTablePtr vt;
  Coefficient t;
  std::vector<CentralizerGen> gens;
  H0Elem h0;
  int delta_checks = 0;  // degree-lemma assertions made while peeling
  int v_checks = 0;      // leading-factor-in-V assertions made while peeling
  std::string to_string() const;
};

PolyMap generator_map(const CentralizerGen& g, const VarTablePtr& vt, const Coefficient& t);
PolyMap h0_map(const H0Elem& h, const VarTablePtr& vt);
PolyMap recompose(const CentralizerWord& w);
CentralizerWord parse_centralizer_word(std::string_view text, const VarTablePtr& vt, const Coefficient& t);

bool centralizer_membership(const PolyMap& phi, const Coefficient& t);
CentralizerWord centralizer_decompose(const PolyMap& phi, const Coefficient& t);

// q = q1(x^p - t^(p-1) x) + s x / t for univariate q in x1
MultiPoly w_st_split(const MultiPoly& q, const Coefficient& s, const Coefficient& t);

struct FixedPointData {
  Coefficient a, b, c;
  MultiPoly g;  // in x2
};
// phi = (a x1 + g(x2), b x2 + c) with a f(x2) = f(b x2 + c), f in k[x2] \ k
std::optional<FixedPointData> fixed_point_elem_centralizer(const PolyMap& phi, const MultiPoly& f);

struct FpfReport {
  bool restricts = false;
  Restriction witness;
  GaAction action;
  std::string to_json() const;
};
// tau = coords (x1 + f, x2) coords^{-1}; psi a word over H(f)
FpfReport fpf_witness_check(const PolyMap& coords, const Coefficient& f, const CentralizerWord& psi);

}  // namespace charp
