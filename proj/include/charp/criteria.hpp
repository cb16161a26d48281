#pragma once
// Non-exponentiality criteria for generic elementary automorphisms.
#include <optional>
#include <string>
#include <vector>

#include "charp/gaction.hpp"

namespace charp {

// A = k[vars] inside f's table; univariate means A = k[y] for a single y.
struct ASpec {
  enum class Kind { full_poly_ring, univariate };
  Kind kind = Kind::full_poly_ring;
  std::vector<int> vars;
};

struct StabilityVerdict {
  enum class Kind { stable, not_stable, unknown };
  Kind kind = Kind::unknown;
  std::string pattern;                // "i", "ii" or "a-rigid"
  std::optional<GaAction> counter;    // on k[x, y] for the negative pattern
  std::optional<MultiPoly> counter_invariant;
  std::string to_string() const;
};

StabilityVerdict f_stability(const ASpec& a, const MultiPoly& f);

// sigma: y_1 -> y_1 + f(y_2..y_n) in the coordinates y = coords.
// f is written in x2..xn standing for y_2..y_n.
struct GenericElementaryData {
  PolyMap coords;
  MultiPoly f;
  std::vector<PolyMap> inverse_chain;
  bool base_is_ufd = true;
  // decide restriction from polar parts only; needs Laurent-in-u coefficients
  bool truncated = false;
};

SliceData slice_of(const GenericElementaryData& d);
// throws PreconditionViolated unless f != 0 and sigma maps R[x] into R[x]
void validate(const GenericElementaryData& d);
GaAction canonical_action(const GenericElementaryData& d);

struct Certificate {
  enum class Kind { not_exponential, inconclusive };
  Kind kind = Kind::inconclusive;
  std::string pattern;
  std::string reason;
  int generator = -1;
  std::optional<MultiPoly> witness;
  std::string to_string() const;
  std::string to_json() const;
};

Certificate non_exponentiality_certificate(const GenericElementaryData& d);

struct ModifiedAction {
  GaAction action;
  Coefficient content;  // c in lambda = c lambda_0 (primitive mode)
  MultiPoly lambda0;
  MultiPoly factor;     // lambda_0(alpha); E' = E'' rescaled by it
  Restriction restriction;
};

// E'(r) = r + lambda(alpha) T with r = slice.coords[0] and lambda = E(r) - r.
ModifiedAction modify_action(const GaAction& e, const SliceData& slice, const MultiPoly& alpha, bool primitive);

bool gauss_check(const MultiPoly& f, const MultiPoly& g);

}  // namespace charp
