#pragma once
// Ring endomorphisms given by generator images; (phi psi)(x_i) = phi(psi(x_i)).
#include <optional>
#include <string>
#include <vector>

#include "charp/poly.hpp"

namespace charp {

class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(VarTablePtr vt, std::vector<MultiPoly> images);
  static PolyMap identity(const VarTablePtr& vt);

  const VarTablePtr& vars() const { return vt_; }
  int n() const { return static_cast<int>(images_.size()); }
  const MultiPoly& operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<MultiPoly>& images() const { return images_; }

  Assignment assignment() const;
  MultiPoly apply(const MultiPoly& h) const;  // phi(h)
  bool is_identity() const;
  bool operator==(const PolyMap& o) const { return images_ == o.images_; }
  bool operator!=(const PolyMap& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  VarTablePtr vt_;
  std::vector<MultiPoly> images_;
};

PolyMap compose(const PolyMap& phi, const PolyMap& psi);
PolyMap parse_map(std::string_view text, const VarTablePtr& vt);
// split "(a, b, c)" at top-level commas
std::vector<std::string> split_tuple(std::string_view text);

// least m <= bound with sigma^m = id; nullopt means ExceedsBound
std::optional<int> order_up_to(const PolyMap& sigma, int bound);
std::optional<int> order_up_to(const PolyMap& sigma);  // bound p^2

struct MapClass {
  bool affine = false;
  bool triangular = false;
  bool strict_triangular = false;
  bool elementary = false;
  std::string to_string() const;
};
bool is_unit_in(const Coefficient& c, const CoeffRing& ring);
MapClass classify(const PolyMap& sigma, const CoeffRing& base = CoeffRing::field());

PolyMap invert_structured(const PolyMap& sigma);
PolyMap conjugate(const PolyMap& sigma, const PolyMap& psi, const std::optional<PolyMap>& psi_inv = {});
std::vector<MultiPoly> ideal_gens(const PolyMap& sigma);
Coefficient unit_multiple_of(const MultiPoly& h, const MultiPoly& f);

}  // namespace charp
