#pragma once
// G_a-actions B -> B[T] given by generator images containing the table's T.
#include <optional>
#include <string>
#include <vector>

#include "charp/endo.hpp"

namespace charp {

struct AxiomReport {
  bool A1 = false;
  bool A2 = false;
  std::string witness;  // first failing generator, empty when both hold
  bool ok() const { return A1 && A2; }
  std::string to_json() const;
};

// A2 is compared on generators: both sides are ring homomorphisms.
AxiomReport check_axioms(const VarTablePtr& vt, const std::vector<MultiPoly>& images);

// T-exponents are powers of p and there is no T-free term.
bool additivity_check(const MultiPoly& lambda);

struct Restriction {
  bool ok = true;
  int generator = -1;
  std::optional<MultiPoly> term;
  std::string to_string() const;
};

class GaAction {
 public:
  GaAction() = default;
  // Verifies A1 and A2; throws AxiomViolation otherwise.
  static GaAction make(VarTablePtr vt, std::vector<MultiPoly> images, CoeffRing base = CoeffRing::field());
  // For actions whose A2 was certified on another coordinate system (see slice_action).
  static GaAction trusted(VarTablePtr vt, std::vector<MultiPoly> images, CoeffRing base);

  const VarTablePtr& vars() const { return vt_; }
  int n() const { return static_cast<int>(images_.size()); }
  const MultiPoly& operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<MultiPoly>& images() const { return images_; }
  const CoeffRing& base() const { return base_; }

  MultiPoly apply(const MultiPoly& h) const;  // E(h) in B[T]
  PolyMap evaluate(const MultiPoly& alpha) const;
  PolyMap evaluate(long c) const;
  GaAction rescale(const MultiPoly& alpha) const;
  bool is_invariant(const MultiPoly& h) const;
  Restriction restricts_to(const CoeffRing& ring, bool laurent = false) const;
  std::string to_string() const;

 private:
  VarTablePtr vt_;
  std::vector<MultiPoly> images_;
  CoeffRing base_ = CoeffRing::field();
};

GaAction parse_action(std::string_view text, const VarTablePtr& vt);

// E(p_1) = p_1 + lambda, E(p_i) = p_i for i >= 2, where p = coords.
// lambda is written in the names of x_2..x_n standing for p_2..p_n, plus T.
// inverse_chain, when given, factors coords^{-1} = b_1 b_2 ... b_m.
struct SliceData {
  PolyMap coords;
  MultiPoly lambda;
  std::vector<PolyMap> inverse_chain;
  // lambda written in x-names (an element of B[T]) instead of the slice names
  bool lambda_in_x = false;
};

std::vector<MultiPoly> slice_images(const SliceData& s);
// slice images modulo u^e R[x][T]; only meaningful for Laurent-in-u coefficients
std::vector<MultiPoly> slice_images_trunc(const SliceData& s, int e);
// A2 is checked on the conjugate (x_1 + lambda, x_2, ..., x_n), or on the images
// themselves when lambda_in_x is set.
GaAction slice_action(const SliceData& s, CoeffRing base = CoeffRing::field());

struct RankCertificate {
  int lower = 0;
  int upper = 0;
  bool exact() const { return lower == upper; }
  std::string to_string() const;
};
RankCertificate rank_certificate(const GaAction& e, const std::vector<MultiPoly>& invariant_gens,
                                 const std::vector<MultiPoly>& coordinate_witness);

}  // namespace charp
