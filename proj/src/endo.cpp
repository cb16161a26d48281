#include "charp/endo.hpp"

#include "charp/error.hpp"

namespace charp {

PolyMap::PolyMap(VarTablePtr vt, std::vector<MultiPoly> images)
    : vt_(std::move(vt)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != vt_->n_ring())
    fail(Errc::BadParameters, "map needs " + std::to_string(vt_->n_ring()) + " images, got " +
                                  std::to_string(images_.size()));
}

PolyMap PolyMap::identity(const VarTablePtr& vt) {
  std::vector<MultiPoly> im;
  for (int i = 0; i < vt->n_ring(); ++i) im.push_back(MultiPoly::var(vt, i));
  return PolyMap(vt, std::move(im));
}

Assignment PolyMap::assignment() const {
  Assignment a = identity_assignment(vt_);
  for (int i = 0; i < n(); ++i) a[static_cast<std::size_t>(i)] = images_[static_cast<std::size_t>(i)];
  return a;
}

MultiPoly PolyMap::apply(const MultiPoly& h) const { return substitute(h, assignment()); }

bool PolyMap::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (images_[static_cast<std::size_t>(i)] != MultiPoly::var(vt_, i)) return false;
  return true;
}

std::string PolyMap::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ", ";
    s += images_[i].to_string();
  }
  return s + ")";
}

PolyMap compose(const PolyMap& phi, const PolyMap& psi) {
  const Assignment a = phi.assignment();
  std::vector<MultiPoly> im;
  im.reserve(psi.images().size());
  for (const auto& g : psi.images()) im.push_back(substitute(g, a));
  return PolyMap(phi.vars(), std::move(im));
}

std::vector<std::string> split_tuple(std::string_view text) {
  std::size_t a = text.find_first_not_of(" \t\n");
  std::size_t b = text.find_last_not_of(" \t\n");
  if (a == std::string_view::npos || text[a] != '(' || text[b] != ')')
    fail(Errc::ParseError, "at position 0: expected a parenthesized tuple");
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = a + 1;
  for (std::size_t i = a + 1; i < b; ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') {
      if (--depth < 0) fail(Errc::ParseError, "at position " + std::to_string(i) + ": unbalanced ')'");
    }
    if (text[i] == ',' && depth == 0) {
      parts.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) fail(Errc::ParseError, "at position " + std::to_string(b) + ": unbalanced '('");
  parts.emplace_back(text.substr(start, b - start));
  return parts;
}

PolyMap parse_map(std::string_view text, const VarTablePtr& vt) {
  std::vector<MultiPoly> im;
  for (const auto& part : split_tuple(text)) im.push_back(parse_poly(part, vt));
  if (static_cast<int>(im.size()) != vt->n_ring())
    fail(Errc::ParseError, "at position 0: expected " + std::to_string(vt->n_ring()) + " components");
  return PolyMap(vt, std::move(im));
}

std::optional<int> order_up_to(const PolyMap& sigma, int bound) {
  PolyMap pw = sigma;
  for (int m = 1; m <= bound; ++m) {
    if (pw.is_identity()) return m;
    if (m < bound) pw = compose(sigma, pw);
  }
  return std::nullopt;
}

std::optional<int> order_up_to(const PolyMap& sigma) {
  const int p = static_cast<int>(sigma.vars()->prime());
  return order_up_to(sigma, p * p);
}

std::string MapClass::to_string() const {
  std::string s = "{";
  auto add = [&](bool f, const char* name) {
    if (!f) return;
    if (s.size() > 1) s += ", ";
    s += name;
  };
  add(affine, "affine");
  add(triangular, "triangular");
  add(strict_triangular, "strict_triangular");
  add(elementary, "elementary");
  return s + "}";
}

bool is_unit_in(const Coefficient& c, const CoeffRing& ring) {
  if (c.is_zero()) return false;
  switch (ring.kind) {
    case RingKind::field: return true;
    case RingKind::R: return c.is_fp();
    case RingKind::Ra: return c.is_in_localization(ring.s) && c.inv().is_in_localization(ring.s);
  }
  return false;
}

namespace {

bool only_vars_below(const MultiPoly& h, int bound) {
  const auto& vt = h.vars();
  for (const auto& t : h.terms())
    for (int j = 0; j < vt->size(); ++j) {
      if (t.m[j] < 0) return false;
      if (j >= bound && t.m[j] != 0) return false;
    }
  return true;
}

bool only_vars_in_range(const MultiPoly& h, int lo, int hi) {
  const auto& vt = h.vars();
  for (const auto& t : h.terms())
    for (int j = 0; j < vt->size(); ++j) {
      if (t.m[j] < 0) return false;
      if ((j < lo || j >= hi) && t.m[j] != 0) return false;
    }
  return true;
}

bool coefficients_in(const MultiPoly& h, const CoeffRing& ring) {
  for (const auto& t : h.terms())
    if (!coefficient_in(t.c, ring)) return false;
  return true;
}

// sigma(x_i) = c x_i + h with h free of x_i; returns c (possibly zero)
Coefficient linear_self_coeff(const MultiPoly& g, int i) { return g.coeff(Monomial::var(i)); }

bool affine_shape(const PolyMap& s) {
  for (const auto& g : s.images()) {
    if (g.has_negative_exponent()) return false;
    if (!g.is_zero() && g.total_degree() > 1) return false;
    for (int j = s.vars()->n_ring(); j < s.vars()->size(); ++j)
      if (g.uses_var(j)) return false;
  }
  return true;
}

// Gauss-Jordan over the coefficient field; returns nullopt when singular.
std::optional<std::vector<std::vector<Coefficient>>> invert_matrix(std::vector<std::vector<Coefficient>> m, unsigned p) {
  const std::size_t n = m.size();
  if (n == 0) return m;
  std::vector<std::vector<Coefficient>> inv(n, std::vector<Coefficient>(n, Coefficient::zero(p)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Coefficient::one(p);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Coefficient f = m[col][col].inv();
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] * f;
      inv[col][j] = inv[col][j] * f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Coefficient g = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= g * m[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<std::vector<Coefficient>> linear_matrix(const PolyMap& s) {
  const int n = s.n();
  std::vector<std::vector<Coefficient>> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)].push_back(s[i].coeff(Monomial::var(j)));
  return m;
}

}  // namespace

MapClass classify(const PolyMap& sigma, const CoeffRing& base) {
  MapClass out;
  const int n = sigma.n();
  if (affine_shape(sigma)) {
    bool coeffs_ok = true;
    for (const auto& g : sigma.images()) coeffs_ok = coeffs_ok && coefficients_in(g, base);
    out.affine = coeffs_ok && invert_matrix(linear_matrix(sigma), sigma.vars()->prime()).has_value();
  }
  bool tri = true, strict = true;
  for (int i = 0; i < n && tri; ++i) {
    const MultiPoly& g = sigma[i];
    const Coefficient c = linear_self_coeff(g, i);
    if (!is_unit_in(c, base)) {
      tri = false;
      break;
    }
    if (!c.is_one()) strict = false;
    const MultiPoly h = g - MultiPoly::var(sigma.vars(), i).scaled(c);
    if (!only_vars_below(h, i) || !coefficients_in(h, base)) tri = false;
  }
  out.triangular = tri;
  out.strict_triangular = tri && strict;
  if (n >= 1) {
    bool el = true;
    const MultiPoly& g = sigma[0];
    const Coefficient c = linear_self_coeff(g, 0);
    if (!is_unit_in(c, base)) el = false;
    if (el) {
      const MultiPoly h = g - MultiPoly::var(sigma.vars(), 0).scaled(c);
      el = only_vars_in_range(h, 1, n) && coefficients_in(h, base);
    }
    for (int i = 1; i < n && el; ++i) el = sigma[i] == MultiPoly::var(sigma.vars(), i);
    out.elementary = el;
  }
  return out;
}

PolyMap invert_structured(const PolyMap& sigma) {
  const auto& vt = sigma.vars();
  const int n = sigma.n();
  const MapClass cls = classify(sigma, CoeffRing::field());
  PolyMap inv;
  if (cls.triangular) {
    // psi(x_i) = c_i^{-1} (x_i - h_i(psi(x_1), ..., psi(x_{i-1})))
    std::vector<MultiPoly> im;
    Assignment a = identity_assignment(vt);
    for (int i = 0; i < n; ++i) {
      const Coefficient c = sigma[i].coeff(Monomial::var(i));
      const MultiPoly h = sigma[i] - MultiPoly::var(vt, i).scaled(c);
      MultiPoly img = (MultiPoly::var(vt, i) - substitute(h, a)).scaled(c.inv());
      a[static_cast<std::size_t>(i)] = img;
      im.push_back(std::move(img));
    }
    inv = PolyMap(vt, std::move(im));
  } else if (affine_shape(sigma)) {
    auto minv = invert_matrix(linear_matrix(sigma), sigma.vars()->prime());
    if (!minv) fail(Errc::SingularAffine, sigma.to_string());
    std::vector<MultiPoly> shifted;
    for (int j = 0; j < n; ++j) shifted.push_back(MultiPoly::var(vt, j) - MultiPoly::constant(vt, sigma[j].constant_term()));
    std::vector<MultiPoly> im;
    for (int i = 0; i < n; ++i) {
      MultiPoly img(vt);
      for (int j = 0; j < n; ++j) img += shifted[static_cast<std::size_t>(j)].scaled((*minv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      im.push_back(std::move(img));
    }
    inv = PolyMap(vt, std::move(im));
  } else {
    fail(Errc::NotStructured, sigma.to_string());
  }
  if (!compose(sigma, inv).is_identity() || !compose(inv, sigma).is_identity())
    fail(Errc::NotStructured, "inverse verification failed for " + sigma.to_string());
  return inv;
}

PolyMap conjugate(const PolyMap& sigma, const PolyMap& psi, const std::optional<PolyMap>& psi_inv) {
  const PolyMap inv = psi_inv ? *psi_inv : invert_structured(psi);
  return compose(psi, compose(sigma, inv));
}

std::vector<MultiPoly> ideal_gens(const PolyMap& sigma) {
  std::vector<MultiPoly> out;
  for (int i = 0; i < sigma.n(); ++i) out.push_back(sigma[i] - MultiPoly::var(sigma.vars(), i));
  return out;
}

Coefficient unit_multiple_of(const MultiPoly& h, const MultiPoly& f) {
  if (f.is_zero()) fail(Errc::PreconditionViolated, "unit_multiple_of needs f != 0");
  auto q = try_exact_div(h, f);
  if (!q || q->is_zero() || !q->is_constant()) fail(Errc::NotUnitMultiple, h.size() < 20 ? h.to_string() : "");
  return q->constant_term();
}

}  // namespace charp
