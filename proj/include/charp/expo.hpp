#pragma once
// Exponentialization of triangular automorphisms of order p.
#include <optional>

#include "charp/gaction.hpp"

namespace charp {

struct ExponentializationResult {
  GaAction action;
  std::optional<PolyMap> conjugator;
  MultiPoly reduced_f;  // sum of c_i x_1^i with p not dividing i
  Coefficient a;
  std::string to_json() const;
};

// phi = (x_1, f_2, ..., f_n) with phi eps = sigma phi, eps = (x_1 + a, x_2, ..., x_n).
// f_i = -sum_j (w + j)^(p-1) sigma^j(x_i) with w = x_1 / a.
PolyMap maubach_conjugator(const PolyMap& sigma, const CoeffRing& base = CoeffRing::field());

// n = 2 over F_p[u]
ExponentializationResult exponentialize_triangular_n2(const PolyMap& sigma);

struct ThetaData {
  Coefficient a;
  MultiPoly theta;
};
ThetaData theta_of(const PolyMap& sigma);
// (x_1 + a, x_2 + (theta(x_1) - theta(x_1 + a)) / a)
PolyMap sigma_from_theta(const VarTablePtr& vt, const Coefficient& a, const MultiPoly& theta);

// n = 3 over F_p
ExponentializationResult exponentialize_field_n3(const PolyMap& sigma);

}  // namespace charp
