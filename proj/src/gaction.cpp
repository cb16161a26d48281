#include "charp/gaction.hpp"

#include <json.hpp>

#include "charp/error.hpp"

namespace charp {

std::string AxiomReport::to_json() const {
  nlohmann::ordered_json j;
  j["A1"] = A1;
  j["A2"] = A2;
  if (!witness.empty()) j["witness"] = witness;
  return j.dump();
}

namespace {

MultiPoly at_T(const MultiPoly& f, const MultiPoly& image) { return substitute_var(f, f.vars()->T(), image); }

bool is_power_of(int e, int p) {
  if (e < 1) return false;
  while (e % p == 0) e /= p;
  return e == 1;
}

}  // namespace

AxiomReport check_axioms(const VarTablePtr& vt, const std::vector<MultiPoly>& images) {
  AxiomReport r;
  r.A1 = true;
  const int n = vt->n_ring();
  if (static_cast<int>(images.size()) != n) fail(Errc::VarTableMismatch, "action needs one image per ring variable");
  const MultiPoly zero(vt);
  for (int i = 0; i < n; ++i) {
    if (at_T(images[static_cast<std::size_t>(i)], zero) != MultiPoly::var(vt, i)) {
      r.A1 = false;
      r.witness = "A1 fails at " + vt->name(i);
      break;
    }
  }
  // e_i(T1+T2) against e_i(T2) with x_j -> e_j(T1)
  const MultiPoly t1 = MultiPoly::var(vt, vt->T1()), t2 = MultiPoly::var(vt, vt->T2());
  Assignment lhs_a = identity_assignment(vt);
  lhs_a[static_cast<std::size_t>(vt->T())] = t1 + t2;
  Assignment rhs_a = identity_assignment(vt);
  rhs_a[static_cast<std::size_t>(vt->T())] = t2;
  for (int j = 0; j < n; ++j) rhs_a[static_cast<std::size_t>(j)] = at_T(images[static_cast<std::size_t>(j)], t1);
  r.A2 = true;
  for (int i = 0; i < n; ++i) {
    const auto& e = images[static_cast<std::size_t>(i)];
    if (e.uses_var(vt->T1()) || e.uses_var(vt->T2()) || substitute(e, lhs_a) != substitute(e, rhs_a)) {
      r.A2 = false;
      if (r.witness.empty()) r.witness = "A2 fails at " + vt->name(i);
      break;
    }
  }
  return r;
}

bool additivity_check(const MultiPoly& lambda) {
  const auto& vt = lambda.vars();
  const int p = static_cast<int>(vt->prime());
  for (const auto& t : lambda.terms()) {
    if (t.m[vt->T1()] != 0 || t.m[vt->T2()] != 0) return false;
    if (!is_power_of(t.m[vt->T()], p)) return false;
  }
  return true;
}

std::string Restriction::to_string() const {
  if (ok) return "restricts";
  return "generator " + std::to_string(generator) + ": " + (term ? term->to_string() : std::string("?"));
}

GaAction GaAction::make(VarTablePtr vt, std::vector<MultiPoly> images, CoeffRing base) {
  AxiomReport r = check_axioms(vt, images);
  if (!r.ok()) fail(Errc::AxiomViolation, r.witness);
  return trusted(std::move(vt), std::move(images), std::move(base));
}

GaAction GaAction::trusted(VarTablePtr vt, std::vector<MultiPoly> images, CoeffRing base) {
  GaAction e;
  e.vt_ = std::move(vt);
  e.images_ = std::move(images);
  e.base_ = std::move(base);
  return e;
}

MultiPoly GaAction::apply(const MultiPoly& h) const {
  Assignment a = identity_assignment(vt_);
  for (int i = 0; i < n(); ++i) a[static_cast<std::size_t>(i)] = images_[static_cast<std::size_t>(i)];
  return substitute(h, a);
}

bool GaAction::is_invariant(const MultiPoly& h) const { return apply(h) == h; }

PolyMap GaAction::evaluate(const MultiPoly& alpha) const {
  if (alpha.uses_var(vt_->T()) || !is_invariant(alpha)) fail(Errc::NotInvariantParameter, alpha.to_string());
  std::vector<MultiPoly> im;
  for (const auto& e : images_) im.push_back(at_T(e, alpha));
  return PolyMap(vt_, std::move(im));
}

PolyMap GaAction::evaluate(long c) const { return evaluate(MultiPoly::constant(vt_, c)); }

GaAction GaAction::rescale(const MultiPoly& alpha) const {
  if (alpha.is_zero() || alpha.uses_var(vt_->T()) || !is_invariant(alpha))
    fail(Errc::NotInvariantParameter, alpha.to_string());
  const MultiPoly aT = alpha * MultiPoly::var(vt_, vt_->T());
  std::vector<MultiPoly> im;
  for (const auto& e : images_) im.push_back(at_T(e, aT));
  return trusted(vt_, std::move(im), base_);
}

Restriction GaAction::restricts_to(const CoeffRing& ring, bool laurent) const {
  for (int i = 0; i < n(); ++i) {
    Membership m = is_polynomial_over(images_[static_cast<std::size_t>(i)], ring, laurent);
    if (!m.ok) return {false, i, m.witness};
  }
  return {};
}

std::string GaAction::to_string() const { return PolyMap(vt_, images_).to_string(); }

GaAction parse_action(std::string_view text, const VarTablePtr& vt) {
  std::vector<MultiPoly> im;
  for (const auto& part : split_tuple(text)) im.push_back(parse_poly(part, vt));
  if (static_cast<int>(im.size()) != vt->n_ring())
    fail(Errc::ParseError, "at position 0: expected " + std::to_string(vt->n_ring()) + " components");
  return GaAction::make(vt, std::move(im));
}

// ---------------------------------------------------------------- slices

namespace {

void check_slice(const SliceData& s) {
  const auto& vt = s.coords.vars();
  if (!additivity_check(s.lambda)) fail(Errc::AdditivityViolation, s.lambda.to_string());
  if (!s.lambda_in_x && s.lambda.uses_var(0)) fail(Errc::PreconditionViolated, "lambda may not involve the slice coordinate");
  for (int i = 0; i < vt->n_ring(); ++i)
    if (s.coords[i].uses_var(vt->T())) fail(Errc::PreconditionViolated, "coordinates may not involve T");
  if (!s.inverse_chain.empty()) {
    PolyMap acc = s.coords;
    for (const auto& b : s.inverse_chain) acc = compose(acc, b);
    if (!acc.is_identity()) fail(Errc::InconsistentSlice, "inverse chain does not invert the coordinates");
  }
}

// x_1 -> p_1 + lambda(p_2..p_n, T), x_i -> p_i
PolyMap shifted_coords(const SliceData& s) {
  const auto& vt = s.coords.vars();
  std::vector<MultiPoly> im = s.coords.images();
  im[0] += s.lambda_in_x ? s.lambda : s.coords.apply(s.lambda);
  return PolyMap(vt, std::move(im));
}

std::vector<PolyMap> chain_of(const SliceData& s) {
  if (!s.inverse_chain.empty()) return s.inverse_chain;
  return {invert_structured(s.coords)};
}

}  // namespace

std::vector<MultiPoly> slice_images(const SliceData& s) {
  check_slice(s);
  PolyMap acc = shifted_coords(s);
  for (const auto& b : chain_of(s)) acc = compose(acc, b);
  return acc.images();
}

std::vector<MultiPoly> slice_images_trunc(const SliceData& s, int e) {
  check_slice(s);
  auto chain = chain_of(s);
  PolyMap acc = shifted_coords(s);
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) acc = compose(acc, chain[k]);
  const Assignment a = acc.assignment();
  std::vector<MultiPoly> out;
  for (const auto& g : chain.back().images()) out.push_back(substitute_trunc(g, a, e));
  return out;
}

GaAction slice_action(const SliceData& s, CoeffRing base) {
  const auto& vt = s.coords.vars();
  std::vector<MultiPoly> im = slice_images(s);
  const MultiPoly zero(vt);
  for (int i = 0; i < vt->n_ring(); ++i)
    if (at_T(im[static_cast<std::size_t>(i)], zero) != MultiPoly::var(vt, i))
      fail(Errc::AxiomViolation, "A1 fails at " + vt->name(i));
  if (s.lambda_in_x) {
    PolyMap e(vt, im);
    for (const auto& [k, c] : split_by_var(s.lambda, vt->T()))
      if (e.apply(c) != c) fail(Errc::InconsistentSlice, "non-invariant coefficient of T^" + std::to_string(k));
    AxiomReport r = check_axioms(vt, im);
    if (!r.ok()) fail(Errc::AxiomViolation, r.witness);
  } else {
    // The chain check makes E conjugate to (x_1 + lambda, x_2, ..., x_n); check A2 there.
    std::vector<MultiPoly> nf;
    for (int i = 0; i < vt->n_ring(); ++i) nf.push_back(MultiPoly::var(vt, i));
    nf[0] += s.lambda;
    AxiomReport r = check_axioms(vt, nf);
    if (!r.ok()) fail(Errc::AxiomViolation, r.witness);
  }
  return GaAction::trusted(vt, std::move(im), std::move(base));
}

// ---------------------------------------------------------------- rank

std::string RankCertificate::to_string() const {
  if (exact()) return "rank " + std::to_string(lower);
  return "rank in [" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
}

RankCertificate rank_certificate(const GaAction& e, const std::vector<MultiPoly>& invariant_gens,
                                 const std::vector<MultiPoly>& coordinate_witness) {
  const int n = e.n();
  std::vector<MultiPoly> linear;
  for (const auto& g : invariant_gens) {
    if (!e.is_invariant(g)) fail(Errc::NotInvariantGenerator, g.to_string());
    if (!g.is_zero() && g.total_degree() <= 1 && !g.has_negative_exponent()) linear.push_back(g);
  }
  for (const auto& w : coordinate_witness) {
    if (!e.is_invariant(w)) fail(Errc::NotInvariantGenerator, w.to_string());
    if (w.is_zero() || w.total_degree() != 1 || w.has_negative_exponent())
      fail(Errc::PreconditionViolated, "coordinate witness must be linear: " + w.to_string());
  }
  if (linear_span_dim(coordinate_witness).dim != static_cast<int>(coordinate_witness.size()))
    fail(Errc::PreconditionViolated, "coordinate witness is linearly dependent");
  RankCertificate c;
  c.lower = n - linear_span_dim(linear).dim;
  c.upper = n - static_cast<int>(coordinate_witness.size());
  return c;
}

}  // namespace charp
