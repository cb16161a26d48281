#include "charp/poly.hpp"

#include <algorithm>
#include <climits>
#include <cstring>
#include <unordered_map>

#include "charp/error.hpp"

namespace charp {

// ---------------------------------------------------------------- VarTable

VarTablePtr VarTable::make(unsigned p, const std::vector<std::string>& names,
                           const std::vector<std::string>& invertible) {
  require_prime(p);
  auto vt = std::make_shared<VarTable>();
  vt->p_ = p;
  vt->n_ring_ = static_cast<int>(names.size());
  vt->names_ = names;
  for (const char* r : {"T", "T1", "T2"}) vt->names_.emplace_back(r);
  if (vt->names_.size() > static_cast<std::size_t>(simd::kLanes))
    fail(Errc::TooManyVariables, std::to_string(names.size()) + " ring variables");
  for (std::size_t i = 0; i < vt->names_.size(); ++i) {
    if (vt->names_[i] == "u") fail(Errc::BadParameters, "the name u is reserved for the parameter");
    for (std::size_t j = 0; j < i; ++j)
      if (vt->names_[i] == vt->names_[j]) fail(Errc::BadParameters, "duplicate variable " + names[i]);
  }
  for (const auto& n : invertible) {
    int i = vt->index_of(n);
    if (i < 0 || i >= vt->n_ring_) fail(Errc::BadParameters, "cannot make " + n + " invertible");
    vt->inv_mask_ |= static_cast<std::uint16_t>(1u << i);
  }
  return vt;
}

int VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool VarTable::same_as(const VarTable& o) const {
  return this == &o || (p_ == o.p_ && names_ == o.names_ && inv_mask_ == o.inv_mask_);
}

static void require_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars().get() != b.vars().get() && !a.vars()->same_as(*b.vars()))
    fail(Errc::VarTableMismatch, "operands live in different variable tables");
}

// ---------------------------------------------------------------- Monomial

void Monomial::set(int i, int v) {
  if (v > INT16_MAX || v < INT16_MIN) fail(Errc::ExponentOverflow, std::to_string(v));
  e[static_cast<std::size_t>(i)] = static_cast<simd::Exp>(v);
}

bool Monomial::is_one() const {
  static const Monomial one{};
  return *this == one;
}

std::size_t Monomial::hash() const {
  std::uint64_t w[4];
  static_assert(sizeof(w) == sizeof(e));
  std::memcpy(w, e.data(), sizeof(w));
  std::uint64_t h = w[0] * 0x9E3779B97F4A7C15ull;
  h = (h ^ (h >> 29)) + w[1] * 0xBF58476D1CE4E5B9ull;
  h = (h ^ (h >> 31)) + w[2] * 0x94D049BB133111EBull;
  h = (h ^ (h >> 27)) + w[3] * 0x9E3779B97F4A7C15ull;
  return static_cast<std::size_t>(h ^ (h >> 32));
}

Monomial Monomial::var(int i, int k) {
  Monomial m;
  m.set(i, k);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  if (!simd::active().mono_add(a.e.data(), b.e.data(), r.e.data()))
    fail(Errc::ExponentOverflow, "monomial product");
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  if (!simd::active().mono_sub(a.e.data(), b.e.data(), r.e.data()))
    fail(Errc::ExponentOverflow, "monomial quotient");
  return r;
}

Monomial mono_pow(const Monomial& a, int k) {
  Monomial r;
  for (int i = 0; i < simd::kLanes; ++i) r.set(i, a[i] * k);
  return r;
}

bool mono_before(const Monomial& a, const Monomial& b) {
  const auto& k = simd::active();
  int da = k.mono_degree(a.e.data()), db = k.mono_degree(b.e.data());
  if (da != db) return da > db;
  int i = k.mono_first_diff(a.e.data(), b.e.data());
  return i >= 0 && a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)];
}

static bool term_before(const Term& a, const Term& b) { return mono_before(a.m, b.m); }

// ---------------------------------------------------------------- MultiPoly basics

MultiPoly MultiPoly::constant(const VarTablePtr& vt, const Coefficient& c) {
  MultiPoly r(vt);
  if (!c.is_zero()) r.terms_.push_back({Monomial{}, c});
  return r;
}

MultiPoly MultiPoly::constant(const VarTablePtr& vt, long v) {
  return constant(vt, Coefficient(v, vt->prime()));
}

MultiPoly MultiPoly::var(const VarTablePtr& vt, int i, int k) {
  if (i < 0 || i >= vt->size()) fail(Errc::BadParameters, "variable index out of range");
  if (k < 0 && !vt->invertible(i)) fail(Errc::NegativeExponent, vt->name(i));
  return monomial(vt, Monomial::var(i, k), Coefficient::one(vt->prime()));
}

MultiPoly MultiPoly::var(const VarTablePtr& vt, std::string_view name, int k) {
  int i = vt->index_of(name);
  if (i < 0) fail(Errc::BadParameters, "unknown variable " + std::string(name));
  return var(vt, i, k);
}

MultiPoly MultiPoly::monomial(const VarTablePtr& vt, const Monomial& m, const Coefficient& c) {
  MultiPoly r(vt);
  if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

MultiPoly MultiPoly::from_sorted(const VarTablePtr& vt, std::vector<Term> terms) {
  MultiPoly r(vt);
  r.terms_ = std::move(terms);
  return r;
}

MultiPoly MultiPoly::from_terms(const VarTablePtr& vt, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  for (auto& t : out)
    if (!t.c.prime()) t.c = t.c + Coefficient::zero(vt->prime());
  return from_sorted(vt, std::move(out));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

bool MultiPoly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].c.is_one(); }

Coefficient MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return Coefficient::zero(prime());
}

Coefficient MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return mono_before(t.m, k); });
  if (it != terms_.end() && it->m == m) return it->c;
  return Coefficient::zero(prime());
}

int MultiPoly::total_degree() const { return terms_.empty() ? INT_MIN / 4 : terms_[0].m.degree(); }

int MultiPoly::degree_in(int var) const {
  int d = INT_MIN / 4;
  for (const auto& t : terms_) d = std::max(d, t.m[var]);
  return d;
}

int MultiPoly::min_degree_in(int var) const {
  int d = INT_MAX / 4;
  for (const auto& t : terms_) d = std::min(d, t.m[var]);
  return d;
}

bool MultiPoly::uses_var(int var) const {
  for (const auto& t : terms_)
    if (t.m[var] != 0) return true;
  return false;
}

bool MultiPoly::all_fp() const {
  for (const auto& t : terms_)
    if (!t.c.is_fp()) return false;
  return true;
}

bool MultiPoly::has_negative_exponent() const {
  for (const auto& t : terms_)
    for (int i = 0; i < simd::kLanes; ++i)
      if (t.m[i] < 0) return true;
  return false;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
  require_same(a, b);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && mono_before(ta[i].m, tb[j].m))) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || mono_before(tb[j].m, ta[i].m)) {
      out.push_back(tb[j]);
      if (subtract) out.back().c = -out.back().c;
      ++j;
    } else {
      Coefficient c = subtract ? ta[i].c - tb[j].c : ta[i].c + tb[j].c;
      if (!c.is_zero()) out.push_back({ta[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return MultiPoly::from_sorted(a.vars(), std::move(out));
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

MultiPoly MultiPoly::scaled(const Coefficient& c) const {
  if (c.is_zero()) return MultiPoly(vt_);
  MultiPoly r = *this;
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.c = t.c * c;
  return r;
}

MultiPoly MultiPoly::shifted(const Monomial& m, const Coefficient& c) const {
  if (c.is_zero()) return MultiPoly(vt_);
  MultiPoly r = *this;
  const bool unit = c.is_one();
  for (auto& t : r.terms_) {
    t.m = t.m * m;
    if (!unit) t.c = t.c * c;
  }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same(a, b);
  const auto& vt = a.vars();
  if (a.is_zero() || b.is_zero()) return MultiPoly(vt);
  if (a.size() == 1) return b.shifted(a.leading().m, a.leading().c);
  if (b.size() == 1) return a.shifted(b.leading().m, b.leading().c);
  const MultiPoly& big = a.size() >= b.size() ? a : b;
  const MultiPoly& small = a.size() >= b.size() ? b : a;
  std::vector<Term> out;
  if (a.all_fp() && b.all_fp()) {
    const unsigned p = vt->prime();
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
    for (const auto& ts : small.terms()) {
      const std::uint32_t cs = ts.c.fp_value();
      for (const auto& tb : big.terms()) {
        auto& slot = acc[ts.m * tb.m];
        slot += cs * tb.c.fp_value();
        if (slot >= (1u << 30)) slot %= p;
      }
    }
    out.reserve(acc.size());
    for (auto& [m, v] : acc)
      if (v % p) out.push_back({m, Coefficient(static_cast<long>(v % p), p)});
  } else {
    std::unordered_map<Monomial, Coefficient, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
    for (const auto& ts : small.terms())
      for (const auto& tb : big.terms()) acc[ts.m * tb.m] += ts.c * tb.c;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.push_back({m, std::move(c)});
  }
  std::sort(out.begin(), out.end(), term_before);
  return MultiPoly::from_sorted(vt, std::move(out));
}

MultiPoly operator*(const Coefficient& c, const MultiPoly& f) { return f.scaled(c); }
MultiPoly operator+(const MultiPoly& f, const Coefficient& c) {
  return f + MultiPoly::constant(f.vars(), c);
}
MultiPoly operator-(const MultiPoly& f, const Coefficient& c) {
  return f - MultiPoly::constant(f.vars(), c);
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

MultiPoly frobenius(const MultiPoly& f) {
  const int p = static_cast<int>(f.prime());
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({mono_pow(t.m, p), t.c.frobenius()});
  // scaling every exponent by p preserves the graded-lex order
  return MultiPoly::from_sorted(f.vars(), std::move(out));
}

MultiPoly pow(const MultiPoly& f, long n) {
  if (n < 0) fail(Errc::NegativeExponent, "pow with negative exponent");
  const auto& vt = f.vars();
  if (n == 0) return MultiPoly::constant(vt, 1);
  if (f.size() == 1) {
    const auto& t = f.leading();
    if (n > INT16_MAX) fail(Errc::ExponentOverflow, "pow");
    return MultiPoly::monomial(vt, mono_pow(t.m, static_cast<int>(n)), t.c.pow(n));
  }
  const long p = f.prime();
  MultiPoly result = MultiPoly::constant(vt, 1);
  MultiPoly cur = f;
  while (n) {
    long d = n % p;
    if (d) {
      MultiPoly piece = cur;
      for (long i = 1; i < d; ++i) piece = piece * cur;
      result = result * piece;
    }
    n /= p;
    if (n) cur = frobenius(cur);
  }
  return result;
}

MultiPoly poly_arith(PolyArith kind, const MultiPoly& f, const MultiPoly* g, long exponent) {
  auto need = [&]() -> const MultiPoly& {
    if (!g) fail(Errc::PreconditionViolated, "missing second operand");
    return *g;
  };
  switch (kind) {
    case PolyArith::add: return f + need();
    case PolyArith::sub: return f - need();
    case PolyArith::mul: return f * need();
    case PolyArith::pow: return pow(f, exponent);
    case PolyArith::neg: return -f;
  }
  return f;
}

// ---------------------------------------------------------------- substitution

Assignment identity_assignment(const VarTablePtr& vt) {
  return Assignment(static_cast<std::size_t>(vt->size()));
}

namespace {

struct PowerCache {
  const MultiPoly* base;
  std::map<int, MultiPoly> cache;
  bool inverse_ready = false;
  MultiPoly inverse;

  const MultiPoly& get(int e) {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    MultiPoly v;
    if (e < 0) {
      if (!inverse_ready) {
        if (base->size() != 1) fail(Errc::NegativeExponent, "image of an invertible variable is not a unit monomial");
        const auto& t = base->leading();
        Monomial inv_m = Monomial{} / t.m;
        for (int i = 0; i < simd::kLanes; ++i)
          if (inv_m[i] < 0 && !base->vars()->invertible(i))
            fail(Errc::NegativeExponent, "image of an invertible variable is not a unit monomial");
        inverse = MultiPoly::monomial(base->vars(), inv_m, t.c.inv());
        inverse_ready = true;
      }
      v = pow(inverse, -e);
    } else if (e == 0) {
      v = MultiPoly::constant(base->vars(), 1);
    } else if (cache.count(e - 1)) {
      v = cache.at(e - 1) * *base;
    } else if (e % static_cast<int>(base->prime()) == 0 && cache.count(e / static_cast<int>(base->prime()))) {
      v = frobenius(cache.at(e / static_cast<int>(base->prime())));
    } else {
      v = pow(*base, e);
    }
    return cache.emplace(e, std::move(v)).first->second;
  }
};

MultiPoly subst_rec(const VarTablePtr& vt, std::vector<Term> terms, const std::vector<int>& active,
                    std::size_t k, std::vector<PowerCache>& caches) {
  if (k == active.size()) return MultiPoly::from_terms(vt, std::move(terms));
  const int v = active[k];
  std::map<int, std::vector<Term>> groups;
  for (auto& t : terms) {
    int e = t.m[v];
    t.m.set(v, 0);
    groups[e].push_back(std::move(t));
  }
  MultiPoly acc(vt);
  for (auto& [e, group] : groups) {
    MultiPoly part = subst_rec(vt, std::move(group), active, k + 1, caches);
    if (e == 0)
      acc += part;
    else
      acc += part * caches[k].get(e);
  }
  return acc;
}

}  // namespace

MultiPoly substitute(const MultiPoly& f, const Assignment& assignment) {
  const auto& vt = f.vars();
  std::vector<int> active;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (!assignment[i]) continue;
    require_same(f, *assignment[i]);
    const int v = static_cast<int>(i);
    if (!f.uses_var(v)) continue;
    if (*assignment[i] == MultiPoly::var(vt, v)) continue;
    active.push_back(v);
  }
  if (active.empty()) return f;
  std::vector<PowerCache> caches;
  caches.reserve(active.size());
  for (int v : active) caches.push_back(PowerCache{&*assignment[static_cast<std::size_t>(v)], {}, false, {}});
  return subst_rec(vt, f.terms(), active, 0, caches);
}

MultiPoly substitute_var(const MultiPoly& f, int var, const MultiPoly& image) {
  Assignment a = identity_assignment(f.vars());
  a[static_cast<std::size_t>(var)] = image;
  return substitute(f, a);
}

MultiPoly transport(const MultiPoly& f, const VarTablePtr& target, const std::vector<int>& var_map) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.vars()->size(); ++i) {
      if (t.m[i] == 0) continue;
      int j = i < static_cast<int>(var_map.size()) ? var_map[static_cast<std::size_t>(i)] : -1;
      if (j < 0) fail(Errc::BadParameters, "variable " + f.vars()->name(i) + " has no target");
      if (t.m[i] < 0 && !target->invertible(j)) fail(Errc::NegativeExponent, target->name(j));
      m.set(j, m[j] + t.m[i]);
    }
    out.push_back({m, t.c});
  }
  return MultiPoly::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------- exact division

namespace {

struct MonoDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_before(a, b); }
};

// Divide when neither operand has negative exponents.
std::optional<MultiPoly> divide_plain(const MultiPoly& f, const MultiPoly& g) {
  const auto& vt = f.vars();
  const Term& lg = g.leading();
  const Coefficient inv_lc = lg.c.inv();
  const std::uint16_t all = 0xFFFF;
  std::vector<Term> q;
  if (g.size() == 1) {
    for (const auto& t : f.terms()) {
      if (!simd::active().mono_ge_masked(t.m.e.data(), lg.m.e.data(), all)) return std::nullopt;
      q.push_back({t.m / lg.m, t.c * inv_lc});
    }
    return MultiPoly::from_sorted(vt, std::move(q));
  }
  std::map<Monomial, Coefficient, MonoDesc> rem;
  for (const auto& t : f.terms()) rem.emplace_hint(rem.end(), t.m, t.c);
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!simd::active().mono_ge_masked(it->first.e.data(), lg.m.e.data(), all)) return std::nullopt;
    const Monomial qm = it->first / lg.m;
    const Coefficient qc = it->second * inv_lc;
    rem.erase(it);
    for (std::size_t j = 1; j < g.size(); ++j) {
      const Term& gt = g.terms()[j];
      Monomial m = qm * gt.m;
      auto [pos, inserted] = rem.try_emplace(m, -(qc * gt.c));
      if (!inserted) {
        pos->second -= qc * gt.c;
        if (pos->second.is_zero()) rem.erase(pos);
      }
    }
    q.push_back({qm, qc});
  }
  return MultiPoly::from_sorted(vt, std::move(q));
}

}  // namespace

std::optional<MultiPoly> try_exact_div(const MultiPoly& f, const MultiPoly& g) {
  require_same(f, g);
  if (g.is_zero()) fail(Errc::DivisionByZero, "exact_div by zero");
  const auto& vt = f.vars();
  if (f.is_zero()) return MultiPoly(vt);
  // clear monomial units: shift invertible variables to start at exponent 0
  Monomial sf, sg;
  for (int i = 0; i < vt->size(); ++i) {
    if (!vt->invertible(i)) continue;
    sf.set(i, -f.min_degree_in(i));
    sg.set(i, -g.min_degree_in(i));
  }
  const Coefficient one = Coefficient::one(vt->prime());
  MultiPoly f2 = sf.is_one() ? f : f.shifted(sf, one);
  MultiPoly g2 = sg.is_one() ? g : g.shifted(sg, one);
  if (f2.has_negative_exponent() || g2.has_negative_exponent())
    fail(Errc::NegativeExponent, "negative exponent on a non-invertible variable");
  // both now have minimal exponent 0 in each invertible variable, so any Laurent
  // quotient is an ordinary polynomial quotient
  auto q = divide_plain(f2, g2);
  if (!q) return std::nullopt;
  Monomial back = sg / sf;
  if (!back.is_one()) *q = q->shifted(back, one);
  return q;
}

MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
  auto q = try_exact_div(f, g);
  if (!q) fail(Errc::NotDivisible, f.size() < 20 ? f.to_string() + " by " + g.to_string() : "exact quotient does not exist");
  return *q;
}

// ---------------------------------------------------------------- content

ContentSplit content_primitive(const MultiPoly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "content of 0");
  const unsigned p = f.prime();
  UPoly g;
  for (const auto& t : f.terms()) {
    if (!t.c.is_integral()) fail(Errc::NonIntegralCoefficient, t.c.to_string());
    g = g.is_zero() ? upoly::make_monic(t.c.num(), p) : upoly::monic_gcd(g, t.c.num(), p);
    if (g.is_one()) break;
  }
  Coefficient content = Coefficient::from_parts(g, UPoly::constant(1), p);
  if (g.is_one()) return {content, f};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    UPoly q;
    upoly::divmod(t.c.num(), g, p, &q, nullptr);
    out.push_back({t.m, Coefficient::from_parts(q, UPoly::constant(1), p)});
  }
  return {content, MultiPoly::from_sorted(f.vars(), std::move(out))};
}

// ---------------------------------------------------------------- membership

bool coefficient_in(const Coefficient& c, const CoeffRing& ring) {
  switch (ring.kind) {
    case RingKind::R: return c.is_integral();
    case RingKind::Ra: return c.is_in_localization(ring.s);
    case RingKind::field: return true;
  }
  return false;
}

Membership is_polynomial_over(const MultiPoly& f, const CoeffRing& ring, bool laurent) {
  for (const auto& t : f.terms()) {
    bool bad = !coefficient_in(t.c, ring);
    if (!bad && !laurent)
      for (int i = 0; i < simd::kLanes; ++i)
        if (t.m[i] < 0) bad = true;
    if (bad) return {false, MultiPoly::monomial(f.vars(), t.m, t.c)};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------- univariate views

std::map<int, MultiPoly> split_by_var(const MultiPoly& f, int var) {
  std::map<int, std::vector<Term>> groups;
  for (const auto& t : f.terms()) {
    Term c = t;
    c.m.set(var, 0);
    groups[t.m[var]].push_back(std::move(c));
  }
  std::map<int, MultiPoly> out;
  for (auto& [e, ts] : groups) out.emplace(e, MultiPoly::from_terms(f.vars(), std::move(ts)));
  return out;
}

MultiPoly coefficient_of(const MultiPoly& f, int var, int k) {
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    if (t.m[var] != k) continue;
    Term c = t;
    c.m.set(var, 0);
    ts.push_back(std::move(c));
  }
  return MultiPoly::from_terms(f.vars(), std::move(ts));
}

InvariantSplit express_in_invariant(const MultiPoly& q, int var, const Coefficient& a,
                                    InvariantMode mode) {
  const auto& vt = q.vars();
  const unsigned p = vt->prime();
  const MultiPoly x = MultiPoly::var(vt, var);
  const MultiPoly w = pow(x, p) - x.scaled(a.pow(static_cast<long>(p) - 1));
  PowerCache wpow{&w, {}, false, {}};
  MultiPoly r = q, q1(vt), rem(vt);
  while (!r.is_zero()) {
    const int m = r.degree_in(var);
    if (m < 0) fail(Errc::NegativeExponent, "express_in_invariant needs a polynomial in the variable");
    MultiPoly c = coefficient_of(r, var, m);
    if (m % static_cast<int>(p) == 0) {
      const int k = m / static_cast<int>(p);
      q1 += c * MultiPoly::var(vt, var, k);
      r -= c * wpow.get(k);
    } else {
      MultiPoly piece = c * MultiPoly::var(vt, var, m);
      rem += piece;
      r -= piece;
    }
  }
  if (mode == InvariantMode::member && !rem.is_zero())
    fail(Errc::NotInInvariantRing, "residual " + rem.to_string());
  return {q1, rem};
}

// ---------------------------------------------------------------- linear span

LinearSpan linear_span_dim(const std::vector<MultiPoly>& gens) {
  LinearSpan out;
  if (gens.empty()) return out;
  const auto& vt = gens[0].vars();
  const int n = vt->n_ring();
  std::vector<std::vector<Coefficient>> rows;
  for (const auto& g : gens) {
    if (g.has_negative_exponent()) fail(Errc::PreconditionViolated, "linear_span_dim needs polynomials");
    std::vector<Coefficient> row(static_cast<std::size_t>(n), Coefficient::zero(vt->prime()));
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = g.coeff(Monomial::var(i));
    rows.push_back(std::move(row));
  }
  // row echelon form
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Coefficient inv = rows[rank][static_cast<std::size_t>(col)].inv();
    for (auto& v : rows[rank]) v = v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][static_cast<std::size_t>(col)].is_zero()) continue;
      const Coefficient f = rows[r][static_cast<std::size_t>(col)];
      for (int j = 0; j < n; ++j)
        rows[r][static_cast<std::size_t>(j)] -= f * rows[rank][static_cast<std::size_t>(j)];
    }
    ++rank;
  }
  out.dim = static_cast<int>(rank);
  for (std::size_t r = 0; r < rank; ++r) {
    MultiPoly form(vt);
    for (int j = 0; j < n; ++j)
      form += MultiPoly::monomial(vt, Monomial::var(j), rows[r][static_cast<std::size_t>(j)]);
    out.basis.push_back(std::move(form));
  }
  return out;
}

}  // namespace charp
