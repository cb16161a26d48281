#include "charp/plane.hpp"

#include <climits>
#include <json.hpp>
#include <regex>

#include "charp/error.hpp"

namespace charp {

namespace {

constexpr int X = 0, Y = 1;

void require_plane(const VarTablePtr& vt) {
  if (vt->n_ring() != 2) fail(Errc::PreconditionViolated, "plane maps need exactly two variables");
}

MultiPoly leading_form(const MultiPoly& f) {
  const int d = f.total_degree();
  std::vector<Term> ts;
  for (const auto& t : f.terms())
    if (t.m.degree() == d) ts.push_back(t);
  return MultiPoly::from_sorted(f.vars(), std::move(ts));
}

bool ring_poly(const MultiPoly& f) {
  const auto& vt = f.vars();
  if (f.has_negative_exponent()) return false;
  for (int j = vt->n_ring(); j < vt->size(); ++j)
    if (f.uses_var(j)) return false;
  return true;
}

PolyMap swap_map(const VarTablePtr& vt) { return PolyMap(vt, {MultiPoly::var(vt, Y), MultiPoly::var(vt, X)}); }

bool in_G(const PolyMap& m) { return is_affine_map(m); }
bool in_J(const PolyMap& m) { return is_triangular_map(m); }

std::string tag(const TameFactor& f) {
  if (f.kind == TameFactor::Kind::triangular) return "J";
  return in_J(f.map) ? "GJ" : "G";
}

}  // namespace

bool is_affine_map(const PolyMap& m) { return classify(m).affine; }

bool is_triangular_map(const PolyMap& m) {
  require_plane(m.vars());
  return classify(m).triangular;
}

std::string TameWord::to_string() const {
  if (factors.empty()) return "[]";
  std::string s;
  for (const auto& f : factors) s += "[" + tag(f) + ": " + f.map.to_string() + "]";
  return s;
}

PolyMap recompose(const TameWord& w) {
  PolyMap acc = PolyMap::identity(w.vt);
  for (const auto& f : w.factors) acc = compose(acc, f.map);
  return acc;
}

// ---------------------------------------------------------------- JvdK

namespace {

using Factors = std::vector<TameFactor>;

TameFactor::Kind kind_of(const PolyMap& m) {
  if (in_G(m)) return TameFactor::Kind::affine;
  return TameFactor::Kind::triangular;
}

// (a x + c, b y + q) = (x, y + r(x)/b) (a x + c, b y + q1 x + q0), r = q - q1 x - q0
std::pair<PolyMap, PolyMap> split_triangular(const PolyMap& m) {
  const auto& vt = m.vars();
  const MultiPoly y = MultiPoly::var(vt, Y);
  const Coefficient b = m[Y].coeff(Monomial::var(Y));
  const MultiPoly q = m[Y] - y.scaled(b);
  const Coefficient q0 = q.constant_term(), q1 = q.coeff(Monomial::var(X));
  const MultiPoly low = MultiPoly::var(vt, X).scaled(q1) + MultiPoly::constant(vt, q0);
  const MultiPoly r = q - low;
  PolyMap n(vt, {MultiPoly::var(vt, X), y + r.scaled(b.inv())});
  PolyMap l(vt, {m[X], y.scaled(b) + low});
  return {n, l};
}

bool merge_pass(Factors& fs) {
  bool changed = false;
  // drop identities, merge equal kinds
  Factors out;
  for (auto& f : fs) {
    f.kind = kind_of(f.map);
    if (f.map.is_identity()) {
      changed = true;
      continue;
    }
    if (!out.empty() && out.back().kind == f.kind) {
      out.back().map = compose(out.back().map, f.map);
      out.back().kind = kind_of(out.back().map);
      changed = true;
      continue;
    }
    out.push_back(std::move(f));
  }
  fs = std::move(out);
  // absorb affine triangular factors into a neighbouring triangular factor
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].kind != TameFactor::Kind::affine || !in_J(fs[i].map)) continue;
    if (i > 0 && fs[i - 1].kind == TameFactor::Kind::triangular) {
      fs[i - 1].map = compose(fs[i - 1].map, fs[i].map);
      fs.erase(fs.begin() + static_cast<long>(i));
      return true;
    }
    if (i + 1 < fs.size() && fs[i + 1].kind == TameFactor::Kind::triangular) {
      fs[i + 1].map = compose(fs[i].map, fs[i + 1].map);
      fs.erase(fs.begin() + static_cast<long>(i));
      return true;
    }
  }
  return changed;
}

}  // namespace

TameWord jvdk_factor(const PolyMap& phi) {
  const auto& vt = phi.vars();
  require_plane(vt);
  for (const auto& g : phi.images())
    if (g.is_zero() || !ring_poly(g)) fail(Errc::NotAutomorphism, phi.to_string());
  std::vector<PolyMap> peeled;  // phi = cur * peeled.back() * ... * peeled[0]
  MultiPoly f1 = phi[X], f2 = phi[Y];
  for (;;) {
    const int d1 = f1.total_degree(), d2 = f2.total_degree();
    if (f1.is_zero() || f2.is_zero() || d1 < 1 || d2 < 1) fail(Errc::NotAutomorphism, phi.to_string());
    if (d1 <= 1 && d2 <= 1) break;
    const bool first = d1 >= d2;
    const MultiPoly& hi = first ? f1 : f2;
    const MultiPoly& lo = first ? f2 : f1;
    const int dh = first ? d1 : d2, dl = first ? d2 : d1;
    if (dh % dl != 0) fail(Errc::NotAutomorphism, phi.to_string());
    const int k = dh / dl;
    const MultiPoly lfk = pow(leading_form(lo), k);
    const Coefficient c = hi.leading().c / lfk.leading().c;
    if (leading_form(hi) != lfk.scaled(c)) fail(Errc::NotAutomorphism, phi.to_string());
    const MultiPoly sub = pow(lo, k).scaled(c);
    if (first) {
      peeled.emplace_back(vt, std::vector<MultiPoly>{MultiPoly::var(vt, X) + MultiPoly::var(vt, Y, k).scaled(c),
                                                     MultiPoly::var(vt, Y)});
      f1 = f1 - sub;
    } else {
      peeled.emplace_back(vt, std::vector<MultiPoly>{MultiPoly::var(vt, X),
                                                     MultiPoly::var(vt, Y) + MultiPoly::var(vt, X, k).scaled(c)});
      f2 = f2 - sub;
    }
  }
  PolyMap base(vt, {f1, f2});
  if (!is_affine_map(base)) fail(Errc::NotAutomorphism, phi.to_string());

  Factors fs{{TameFactor::Kind::affine, base}};
  const PolyMap s = swap_map(vt);
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const PolyMap& b = *it;
    if (b[Y] == MultiPoly::var(vt, Y) && b[X] != MultiPoly::var(vt, X) && !in_G(b)) {
      // (x + c y^k, y) = s (x, y + c x^k) s
      PolyMap e(vt, {MultiPoly::var(vt, X), MultiPoly::var(vt, Y) + substitute(b[X] - MultiPoly::var(vt, X),
                                                                                  swap_map(vt).assignment())});
      fs.push_back({TameFactor::Kind::affine, s});
      fs.push_back({TameFactor::Kind::triangular, e});
      fs.push_back({TameFactor::Kind::affine, s});
    } else {
      fs.push_back({kind_of(b), b});
    }
  }
  while (merge_pass(fs)) {
  }
  // normalize triangular factors; the affine remainder moves right
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].kind != TameFactor::Kind::triangular) continue;
    auto [n, l] = split_triangular(fs[i].map);
    fs[i].map = n;
    if (l.is_identity()) continue;
    if (i + 1 < fs.size()) {
      fs[i + 1].map = compose(l, fs[i + 1].map);
    } else {
      fs.push_back({TameFactor::Kind::affine, l});
    }
  }
  TameWord w{vt, std::move(fs)};
  if (recompose(w) != phi) fail(Errc::NotAutomorphism, "factorization does not recompose: " + phi.to_string());
  return w;
}

// ---------------------------------------------------------------- centralizer

PolyMap generator_map(const CentralizerGen& g, const VarTablePtr& vt, const Coefficient& t) {
  const MultiPoly x = MultiPoly::var(vt, X), y = MultiPoly::var(vt, Y);
  if (g.kind == CentralizerGen::Kind::E1) return PolyMap(vt, {x + g.g, y});
  const unsigned p = vt->prime();
  const MultiPoly w = pow(x, p) - x.scaled(t.pow(static_cast<long>(p) - 1));
  return PolyMap(vt, {x, y + substitute_var(g.g, X, w)});
}

PolyMap h0_map(const H0Elem& h, const VarTablePtr& vt) {
  return PolyMap(vt, {MultiPoly::var(vt, X) + MultiPoly::constant(vt, h.u1),
                      MultiPoly::var(vt, Y).scaled(h.a) + MultiPoly::constant(vt, h.u2)});
}

PolyMap recompose(const CentralizerWord& w) {
  PolyMap acc = PolyMap::identity(w.vt);
  for (const auto& g : w.gens) acc = compose(acc, generator_map(g, w.vt, w.t));
  return compose(acc, h0_map(w.h0, w.vt));
}

std::string CentralizerWord::to_string() const {
  std::string s;
  for (const auto& g : gens)
    s += std::string("[") + (g.kind == CentralizerGen::Kind::E1 ? "E1" : "E2") + ": " + g.g.to_string() + "]";
  s += "[H0: a=" + h0.a.to_string() + ",u1=" + h0.u1.to_string() + ",u2=" + h0.u2.to_string() + "]";
  return s;
}

CentralizerWord parse_centralizer_word(std::string_view text, const VarTablePtr& vt, const Coefficient& t) {
  require_plane(vt);
  const unsigned p = vt->prime();
  CentralizerWord w{vt, t, {}, {Coefficient::one(p), Coefficient::zero(p), Coefficient::zero(p)}};
  static const std::regex item(R"(\s*\[\s*(E1|E2|H0)\s*:\s*([^\]]*)\])");
  static const std::regex h0re(R"(\s*a\s*=\s*([^,]+),\s*u1\s*=\s*([^,]+),\s*u2\s*=\s*(.+))");
  std::string s(text);
  auto it = s.cbegin();
  std::smatch m;
  bool seen_h0 = false;
  while (it != s.cend()) {
    if (std::all_of(it, s.cend(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) break;
    if (!std::regex_search(it, s.cend(), m, item, std::regex_constants::match_continuous))
      fail(Errc::ParseError, "at position " + std::to_string(it - s.cbegin()) + ": expected [E1: ...], [E2: ...] or [H0: ...]");
    if (seen_h0) fail(Errc::ParseError, "at position " + std::to_string(it - s.cbegin()) + ": H0 must come last");
    const std::string tagname = m[1], body = m[2];
    if (tagname == "H0") {
      std::smatch hm;
      if (!std::regex_match(body, hm, h0re))
        fail(Errc::ParseError, "at position " + std::to_string(it - s.cbegin()) + ": bad H0 body");
      w.h0 = {parse_coefficient(hm[1].str(), p), parse_coefficient(hm[2].str(), p), parse_coefficient(hm[3].str(), p)};
      if (w.h0.a.is_zero()) fail(Errc::ParseError, "at position " + std::to_string(it - s.cbegin()) + ": H0 needs a != 0");
      seen_h0 = true;
    } else {
      CentralizerGen g{tagname == "E1" ? CentralizerGen::Kind::E1 : CentralizerGen::Kind::E2, parse_poly(body, vt)};
      const int allowed = g.kind == CentralizerGen::Kind::E1 ? Y : X;
      for (int j = 0; j < vt->size(); ++j)
        if (j != allowed && g.g.uses_var(j))
          fail(Errc::ParseError, "at position " + std::to_string(it - s.cbegin()) + ": generator uses " + vt->name(j));
      if (!g.g.constant_term().is_zero())
        fail(Errc::ParseError, "at position " + std::to_string(it - s.cbegin()) + ": generator needs g(0) = 0");
      w.gens.push_back(std::move(g));
    }
    it += m.length(0);
  }
  return w;
}

bool centralizer_membership(const PolyMap& phi, const Coefficient& t) {
  const auto& vt = phi.vars();
  require_plane(vt);
  const MultiPoly x = MultiPoly::var(vt, X);
  const MultiPoly f1 = phi[X], f2 = phi[Y];
  return substitute_var(f1, X, x + t) == f1 + t && substitute_var(f2, X, x + t) == f2;
}

MultiPoly w_st_split(const MultiPoly& q, const Coefficient& s, const Coefficient& t) {
  const auto& vt = q.vars();
  if (t.is_zero()) fail(Errc::PreconditionViolated, "t must be nonzero");
  for (int j = 0; j < vt->size(); ++j)
    if (j != X && q.uses_var(j)) fail(Errc::NotInWst, "q must be univariate in " + vt->name(X));
  const MultiPoly x = MultiPoly::var(vt, X);
  if (substitute_var(q, X, x + t) - q != MultiPoly::constant(vt, s)) fail(Errc::NotInWst, "q(x+t) - q(x) != s");
  const MultiPoly rest = q - x.scaled(s / t);
  InvariantSplit sp = express_in_invariant(rest, X, t, InvariantMode::split);
  if (!sp.rem.is_zero()) fail(Errc::NotInWst, "residual " + sp.rem.to_string());
  return sp.q1;
}

namespace {

int delta_deg(const MultiPoly& f, const Coefficient& t) {
  const MultiPoly d = substitute_var(f, X, MultiPoly::var(f.vars(), X) + t) - f;
  return d.is_zero() ? INT_MIN / 4 : d.total_degree();
}

// degree lemma and V-membership assertions along the prefixes of a word
void trace_checks(const TameWord& w, const Coefficient& t, CentralizerWord& out) {
  const auto& vt = w.vt;
  if (!w.factors.empty() && w.factors.front().kind == TameFactor::Kind::triangular) {
    const PolyMap& f = w.factors.front().map;
    if (delta_deg(f[X], t) > 0 || delta_deg(f[Y], t) > 0)
      fail(Errc::NotInCentralizer, "leading triangular factor is not in V");
    ++out.v_checks;
  }
  PolyMap pre = PolyMap::identity(vt);
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    const PolyMap& f = w.factors[i].map;
    if (i > 0) {
      const int d1 = delta_deg(pre[X], t), d2 = delta_deg(pre[Y], t);
      const PolyMap next = compose(pre, f);
      const int e1 = delta_deg(next[X], t), e2 = delta_deg(next[Y], t);
      const bool g_only = in_G(f) && !in_J(f);
      const bool j_only = in_J(f) && !in_G(f);
      if (g_only && d1 < d2) {
        if (!(e1 == d2 && d2 >= e2)) fail(Errc::NotInCentralizer, "degree trace (affine step) failed");
        ++out.delta_checks;
      }
      if (j_only && d1 >= 1 && d1 >= d2) {
        if (!(e1 == d1 && d1 < e2)) fail(Errc::NotInCentralizer, "degree trace (triangular step) failed");
        ++out.delta_checks;
      }
    }
    pre = compose(pre, f);
  }
}

CentralizerGen inverse_gen(const CentralizerGen& g) { return {g.kind, -g.g}; }

}  // namespace

CentralizerWord centralizer_decompose(const PolyMap& phi, const Coefficient& t) {
  const auto& vt = phi.vars();
  require_plane(vt);
  if (t.is_zero()) fail(Errc::PreconditionViolated, "t must be nonzero");
  if (!centralizer_membership(phi, t)) fail(Errc::NotInCentralizer, phi.to_string());
  const unsigned p = vt->prime();
  const MultiPoly x = MultiPoly::var(vt, X), y = MultiPoly::var(vt, Y);
  CentralizerWord out{vt, t, {}, {Coefficient::one(p), Coefficient::zero(p), Coefficient::zero(p)}};
  PolyMap cur = phi;
  for (int guard = 0;; ++guard) {
    if (guard > 256) fail(Errc::NotInCentralizer, "peeling did not terminate");
    if (is_affine_map(cur)) {
      // (x + s y + u1, a y + u2)
      const Coefficient s = cur[X].coeff(Monomial::var(Y));
      const Coefficient u1 = cur[X].constant_term(), a = cur[Y].coeff(Monomial::var(Y));
      const Coefficient u2 = cur[Y].constant_term();
      if (cur[X] != x + y.scaled(s) + u1 || cur[Y] != y.scaled(a) + u2)
        fail(Errc::NotInCentralizer, cur.to_string());
      if (!s.is_zero()) out.gens.push_back({CentralizerGen::Kind::E1, y.scaled(s)});
      out.h0 = {a, u1, u2};
      break;
    }
    const TameWord w = jvdk_factor(cur);
    trace_checks(w, t, out);
    const auto& fs = w.factors;
    CentralizerGen h;
    PolyMap pre = fs[0].map;
    if (fs[0].kind == TameFactor::Kind::triangular) {
      // case (c): peel (x, y + q1(x^p - t^(p-1) x))
      const Coefficient d = pre[Y].coeff(Monomial::var(Y));
      const MultiPoly q = (pre[Y] - y.scaled(d)).scaled(d.inv());
      if (q.uses_var(Y)) fail(Errc::NotInCentralizer, "unexpected leading factor " + pre.to_string());
      const MultiPoly q0 = q - q.constant_term();
      const MultiPoly sd = substitute_var(q0, X, x + t) - q0;
      if (!sd.is_zero() && !sd.is_constant()) fail(Errc::NotInCentralizer, "leading factor is not in V");
      h = {CentralizerGen::Kind::E2, w_st_split(q0, sd.constant_term(), t)};
    } else {
      if (pre[X].coeff(Monomial::var(X)).is_zero()) {
        // case (b): the prefix of length three is E1(...) up to G cap J
        if (fs.size() < 3) fail(Errc::NotInCentralizer, "word too short for case (b)");
        pre = compose(compose(pre, fs[1].map), fs[2].map);
      }
      const Coefficient al = pre[X].coeff(Monomial::var(X));
      if (al.is_zero()) fail(Errc::NotInCentralizer, "unexpected prefix " + pre.to_string());
      const MultiPoly r = (pre[X] - x.scaled(al) - pre[X].constant_term()).scaled(al.inv());
      if (r.uses_var(X)) fail(Errc::NotInCentralizer, "prefix is not elementary " + pre.to_string());
      h = {CentralizerGen::Kind::E1, r};
    }
    const PolyMap hinv = generator_map(inverse_gen(h), vt, t);
    const PolyMap gamma = compose(hinv, pre);
    if (!in_G(gamma) || !in_J(gamma)) fail(Errc::NotInCentralizer, "peeled prefix leaves " + gamma.to_string());
    if (!h.g.is_zero()) out.gens.push_back(h);
    cur = compose(hinv, cur);
  }
  if (recompose(out) != phi) fail(Errc::NotInCentralizer, "decomposition does not recompose");
  return out;
}

// ---------------------------------------------------------------- fixed points

std::optional<FixedPointData> fixed_point_elem_centralizer(const PolyMap& phi, const MultiPoly& f) {
  const auto& vt = phi.vars();
  require_plane(vt);
  for (int j = 0; j < vt->size(); ++j)
    if (j != Y && f.uses_var(j)) return std::nullopt;
  if (f.is_constant()) return std::nullopt;
  const MultiPoly x = MultiPoly::var(vt, X), y = MultiPoly::var(vt, Y);
  const Coefficient a = phi[X].coeff(Monomial::var(X));
  const Coefficient b = phi[Y].coeff(Monomial::var(Y));
  const Coefficient c = phi[Y].constant_term();
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (phi[Y] != y.scaled(b) + c) return std::nullopt;
  const MultiPoly g = phi[X] - x.scaled(a);
  if (!ring_poly(g) || g.uses_var(X)) return std::nullopt;
  if (f.scaled(a) != substitute_var(f, Y, y.scaled(b) + c)) return std::nullopt;
  return FixedPointData{a, b, c, g};
}

std::string FpfReport::to_json() const {
  nlohmann::ordered_json j;
  j["restricts"] = restricts;
  j["witness"] = witness.to_string();
  j["action"] = action.to_string();
  return j.dump();
}

FpfReport fpf_witness_check(const PolyMap& coords, const Coefficient& f, const CentralizerWord& psi) {
  const auto& vt = coords.vars();
  require_plane(vt);
  if (f.is_zero()) fail(Errc::PreconditionViolated, "f must be a nonzero constant");
  if (psi.t != f) fail(Errc::PreconditionViolated, "the word must be over H(f)");
  const MultiPoly x = MultiPoly::var(vt, X), y = MultiPoly::var(vt, Y);
  const PolyMap eps(vt, {x + f, y});
  const PolyMap psim = recompose(psi);
  if (compose(psim, eps) != compose(eps, psim)) fail(Errc::WitnessNotCentralizing, psi.to_string());
  const PolyMap cinv = invert_structured(coords);
  std::vector<PolyMap> chain;
  const Coefficient ainv = psi.h0.a.inv();
  chain.emplace_back(vt, std::vector<MultiPoly>{x - psi.h0.u1, (y - psi.h0.u2).scaled(ainv)});
  for (auto it = psi.gens.rbegin(); it != psi.gens.rend(); ++it)
    chain.push_back(generator_map(inverse_gen(*it), vt, psi.t));
  chain.push_back(cinv);
  SliceData s{compose(coords, psim), MultiPoly::var(vt, vt->T()).scaled(f), chain};
  FpfReport r;
  r.action = slice_action(s, CoeffRing::field());
  const PolyMap tau = conjugate(eps, coords, cinv);
  if (r.action.evaluate(1) != tau) fail(Errc::WitnessNotCentralizing, "E_1 differs from tau");
  r.witness = r.action.restricts_to(CoeffRing::R());
  r.restricts = r.witness.ok;
  return r;
}

}  // namespace charp
