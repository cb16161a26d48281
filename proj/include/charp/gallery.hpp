#pragma once
// Builders for the explicit constructions, each with a checked report.
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charp/criteria.hpp"

namespace charp {

struct StarEntry {
  std::string name;
  bool ok = false;
  MultiPoly residual;  // the polynomial tested against the claimed coset
  std::string note;
};

struct StarReport {
  std::vector<StarEntry> entries;
  void add(std::string name, bool ok, MultiPoly residual, std::string note = {});
  bool all_ok() const;
  const StarEntry& at(std::string_view name) const;
  std::string to_json(std::size_t max_residual = 240) const;
};

// ---- triangular example over F_p[u], a = u
struct TriangularExample {
  VarTablePtr vt;
  MultiPoly lambda, mu;  // mu is the corrected mu' when p = 2
  GaAction action;
  PolyMap sigma;
  Restriction witness;
  StarReport report;
};
TriangularExample build_example_triangular(unsigned p);

// ---- non-exponential family on R[x, y, z1..zl]
struct NonExpFamily {
  unsigned p = 2;
  int d = 2, l = 0;
  long a = 0, b = 0, c = 0;  // integer exponents
  VarTablePtr vt;
  MultiPoly lambda, xt, yt, w;  // w = u^((p+1)d) yt
  MultiPoly g;                  // g(w, z) in x-names
  GenericElementaryData data;
  MultiPoly Ey;        // E(y), exact
  MultiPoly Ex_polar;  // polar part of E(x)
  std::optional<GaAction> action;
  std::optional<PolyMap> sigma;
};
struct NonExpResult {
  NonExpFamily fam;
  StarReport report;
};
// g is written on nonexp_g_table: w stands for u^((p+1)d) yt.
VarTablePtr nonexp_g_table(unsigned p, int l);
MultiPoly nonexp_default_g(unsigned p, int l);  // w z1 ... zl
NonExpResult build_nonexp_family(unsigned p, int d, int l, const MultiPoly& g, bool materialize = false);

// ---- F and F_h on k[x1..xn], f = x2 x3 + x1 - x1^p
// h is written on fh_table, where the variable f stands for f.
VarTablePtr fh_table(int n, unsigned p);
struct FResult {
  VarTablePtr vt;
  MultiPoly f;
  GaAction F;
  std::optional<PolyMap> Fh;
  StarReport report;
};
FResult build_F_and_Fh(int n, unsigned p, const MultiPoly& h);

// ---- rank r action with E_1 = (x1 + 1, x2, ..., xn); xn invertible
struct RankRResult {
  VarTablePtr vt;
  std::vector<MultiPoly> f;  // f_1..f_{n-1}
  GaAction action;
  std::vector<MultiPoly> invariants;
  RankCertificate rank;
  StarReport report;
};
RankRResult build_rank_r_action(int n, int r, unsigned p);

// ---- rank three family on k[x1, x2, x3]
// Computed in k[x1, x2, x3][F^+-1, G^+-1][T] where F, G stand for f, g; an
// element with no negative F, G exponent maps into k[x][T].
enum class Rank3Class { ActionRestricts, OnlyE1Restricts, Neither };
std::string_view to_string(Rank3Class c);
struct Rank3Result {
  VarTablePtr vt;    // x1, x2, x3, F, G
  MultiPoly f, g, r;  // in x1, x2, x3
  GaAction action;   // E^{l,m} on the symbolic ring
  bool action_member = false, e1_member = false;
  std::optional<MultiPoly> pi_witness;  // nonzero image proving non-membership
  Rank3Class cls = Rank3Class::Neither;
  StarReport report;
};
Rank3Result build_rank3_family(unsigned p, int l, int m);
// evaluation F -> f, G -> g; needs nonnegative F, G exponents
MultiPoly rank3_evaluate(const Rank3Result& r, const MultiPoly& h, const VarTablePtr& target);

// ---- invariants of eps = (x1 + 1, x2, ..., xn) and generators of C_0(eps)
struct C0Template {
  VarTablePtr vt;
  // (.., a x_i + g, ..); for i != 1, x1 in g stands for x1^p - x1
  PolyMap make(int i, const Coefficient& a, const MultiPoly& g) const;
  std::string schema() const;
};
struct EpsInvariants {
  VarTablePtr vt;
  std::vector<MultiPoly> gens;
  C0Template c0;
};
EpsInvariants epsilon_invariants(int n, unsigned p);
PolyMap epsilon_map(const VarTablePtr& vt, const Coefficient& t);

}  // namespace charp
