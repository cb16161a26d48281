#include "charp/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <regex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "charp/error.hpp"
#include "charp/expo.hpp"
#include "charp/gallery.hpp"
#include "charp/plane.hpp"

namespace charp {

bool SuiteResult::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::size_t SuiteResult::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

std::string SuiteResult::to_text(bool timing) const {
  std::ostringstream os;
  os << "suite " << name << " p=" << params.p << " seed=" << params.seed << "\n";
  for (const auto& c : cases) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.witness.empty()) os << "  " << c.witness;
    if (timing) os << "  (" << c.elapsed << " s)";
    os << "\n";
  }
  os << passed() << "/" << cases.size() << " passed\n";
  return os.str();
}

std::string SuiteResult::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["suite"] = name;
  j["p"] = params.p;
  j["seed"] = params.seed;
  j["passed"] = passed();
  j["total"] = cases.size();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json x;
    x["id"] = c.id;
    x["verdict"] = c.pass ? "pass" : "fail";
    x["witness"] = c.witness;
    if (timing) x["elapsed"] = c.elapsed;
    arr.push_back(std::move(x));
  }
  j["cases"] = std::move(arr);
  return j.dump(2);
}

namespace {

struct Outcome {
  bool pass = false;
  std::string witness;
};

struct Case {
  std::string id;
  std::function<Outcome()> run;
};

std::string clip(std::string s, std::size_t n = 200) {
  if (s.size() > n) s = s.substr(0, n) + " ...";
  return s;
}

unsigned thread_cap(std::size_t ncases) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CHARP_AUTOS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(ncases, 1)));
}

std::vector<CaseResult> run_cases(std::vector<Case> cases) {
  std::vector<CaseResult> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      Outcome o;
      try {
        o = cases[i].run();
      } catch (const Error& e) {
        o = {false, std::string("error: ") + e.what()};
      } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
      }
      out[i] = {cases[i].id, o.pass, clip(o.witness),
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
    }
  };
  const unsigned nt = thread_cap(cases.size());
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < nt; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  return out;
}

std::string pad(int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d", k);
  return buf;
}

// ---- seeded instance generators

Coefficient rand_coeff(Lcg& g, unsigned p, int maxdeg, bool nonzero) {
  for (;;) {
    Coefficient c = Coefficient::zero(p);
    for (int j = 0; j <= maxdeg; ++j) c += Coefficient(static_cast<long>(g.below(p)), p) * Coefficient::u_pow(j, p);
    if (!nonzero || !c.is_zero()) return c;
  }
}

Coefficient rand_unit(Lcg& g, unsigned p) { return Coefficient(static_cast<long>(1 + g.below(p - 1)), p); }

// sum_{k=lo}^{hi} c_k x^k with c_hi != 0
MultiPoly rand_uni(Lcg& g, const VarTablePtr& vt, int var, int lo, int hi, int cdeg) {
  const unsigned p = vt->prime();
  MultiPoly f(vt);
  for (int k = lo; k <= hi; ++k) {
    const Coefficient c = rand_coeff(g, p, cdeg, k == hi);
    if (!c.is_zero()) f += MultiPoly::var(vt, var, k).scaled(c);
  }
  return f;
}

MultiPoly T_of(const VarTablePtr& vt) { return MultiPoly::var(vt, vt->T()); }

bool commute(const PolyMap& a, const PolyMap& b) { return compose(a, b) == compose(b, a); }

void need_p(const SuiteParams& sp, std::initializer_list<unsigned> allowed, const char* suite) {
  for (unsigned q : allowed)
    if (q == sp.p) return;
  std::string s;
  for (unsigned q : allowed) s += (s.empty() ? "" : ", ") + std::to_string(q);
  fail(Errc::BadParameters, std::string(suite) + " runs at p in {" + s + "}");
}

int count_or(const SuiteParams& sp, int dflt) {
  if (sp.count < 0) fail(Errc::BadParameters, "count must be >= 0");
  return sp.count > 0 ? sp.count : dflt;
}

// ---- 1: axioms

Outcome axiom_case(const GaAction& e) {
  const auto& vt = e.vars();
  const auto rep = check_axioms(vt, e.images());
  auto bad = e.images();
  bad[0] += pow(T_of(vt), vt->prime() + 1);
  const auto crep = check_axioms(vt, bad);
  const bool ok = rep.ok() && crep.A1 && !crep.A2;
  return {ok, rep.ok() ? "A1, A2 hold; corrupted copy fails A2 at " + crep.witness : "axioms fail at " + rep.witness};
}

// slice actions too large to expand directly: A2 on the normal form, corruption of lambda
Outcome slice_axiom_case(const SliceData& s) {
  const GaAction e = slice_action(s);
  SliceData bad = s;
  bad.lambda += pow(T_of(s.lambda.vars()), s.lambda.prime() + 1);
  bool rejected = false;
  try {
    slice_action(bad);
  } catch (const Error& err) {
    rejected = err.code() == Errc::AdditivityViolation || err.code() == Errc::AxiomViolation;
  }
  Assignment zero = identity_assignment(e.vars());
  zero[static_cast<std::size_t>(e.vars()->T())] = MultiPoly(e.vars());
  bool a1 = true;
  for (int i = 0; i < e.n(); ++i) a1 = a1 && substitute(e[i], zero) == MultiPoly::var(e.vars(), i);
  return {rejected && a1, "A1 on the images, A2 on the conjugate normal form; corrupted slice rejected"};
}

std::vector<Case> suite_axioms(const SuiteParams& sp) {
  need_p(sp, {2, 3}, "axioms");
  const unsigned p = sp.p;
  std::vector<Case> cs;
  cs.push_back({"triangular example", [p] { return axiom_case(build_example_triangular(p).action); }});

  Lcg g(sp.seed);
  const auto vt2 = VarTable::make(p, {"x1", "x2"});
  for (int k = 0; k < 3; ++k) {
    const Coefficient a = k == 0 ? Coefficient::u_pow(1, p) : k == 1 ? Coefficient::u_pow(2, p) : Coefficient::u_pow(1, p) + Coefficient::one(p);
    MultiPoly th(vt2);
    for (int e = 1; e <= 5; ++e)
      if (e % static_cast<int>(p) != 0) th += MultiPoly::var(vt2, 0, e).scaled(rand_coeff(g, p, 1, e == 1));
    cs.push_back({"expo n=2 #" + std::to_string(k), [vt2, a, th] {
                    return axiom_case(exponentialize_triangular_n2(sigma_from_theta(vt2, a, th)).action);
                  }});
  }
  cs.push_back({"expo n=3 over F_p", [p] {
                  const auto vt = VarTable::make(p, {"x1", "x2", "x3"});
                  const PolyMap phi = parse_map("(x1, x2 + x1^2, x3 + x1*x2)", vt);
                  const PolyMap eps = parse_map("(x1 + 1, x2, x3)", vt);
                  return axiom_case(exponentialize_field_n3(conjugate(eps, phi)).action);
                }});
  cs.push_back({"fpf psi = id", [vt2, p] {
                  const Coefficient f = Coefficient::u_pow(1, p);
                  const auto w = parse_centralizer_word("", vt2, f);
                  return axiom_case(fpf_witness_check(PolyMap::identity(vt2), f, w).action);
                }});
  cs.push_back({"fpf psi = [E2: x1^2]", [vt2, p] {
                  const Coefficient f = Coefficient::u_pow(1, p);
                  const auto w = parse_centralizer_word("[E2: x1^2][E1: u*x2]", vt2, f);
                  return axiom_case(fpf_witness_check(PolyMap::identity(vt2), f, w).action);
                }});
  cs.push_back({"stability counter-action", [vt2] {
                  const auto v = f_stability({ASpec::Kind::univariate, {1}}, MultiPoly::constant(vt2, 1));
                  if (!v.counter) return Outcome{false, "no counter-action"};
                  return axiom_case(*v.counter);
                }});
  auto elem = [vt2] {
    GenericElementaryData d;
    d.coords = parse_map("(x1 + x2^2, x2)", vt2);
    d.f = parse_poly("u*x2^2 + u^2*x2", vt2);
    d.inverse_chain = {parse_map("(x1 - x2^2, x2)", vt2)};
    return d;
  };
  cs.push_back({"canonical action", [elem] { return axiom_case(canonical_action(elem())); }});
  for (bool prim : {false, true})
    cs.push_back({std::string("modified action ") + (prim ? "(primitive)" : "(translation)"), [elem, vt2, prim] {
                    const auto d = elem();
                    const GaAction e = canonical_action(d);
                    return axiom_case(modify_action(e, slice_of(d), MultiPoly::var(vt2, 1), prim).action);
                  }});
  cs.push_back({"F, n=4", [p] {
                  const auto ft = fh_table(4, p);
                  return axiom_case(build_F_and_Fh(4, p, MultiPoly(ft)).F);
                }});
  cs.push_back({"rank-r (4,3)", [p] { return axiom_case(build_rank_r_action(4, 3, p).action); }});
  cs.push_back({"rank3 (1,1) symbolic", [p] { return axiom_case(build_rank3_family(p, 1, 1).action); }});
  cs.push_back({p == 2 ? "nonexp (2,3,1) materialized" : "nonexp (3,2,1) materialized", [p] {
                  const int d = p == 2 ? 3 : 2;
                  const auto r = build_nonexp_family(p, d, 1, nonexp_default_g(p, 1), true);
                  if (!r.fam.action) return Outcome{false, "not materialized"};
                  return slice_axiom_case(slice_of(r.fam.data));
                }});
  return cs;
}

// ---- 2: exponentialization of triangular n = 2

std::vector<Case> suite_thm15(const SuiteParams& sp) {
  need_p(sp, {2, 3, 5, 7}, "thm15-n2");
  const unsigned p = sp.p;
  const auto vt = VarTable::make(p, {"x1", "x2"});
  Lcg g(sp.seed);
  std::vector<Case> cs;
  const int n = count_or(sp, 50);
  for (int k = 0; k < n; ++k) {
    const long ai = static_cast<long>(g.below(3));
    const Coefficient a = ai == 0 ? Coefficient::u_pow(1, p) : ai == 1 ? Coefficient::u_pow(2, p) : Coefficient::u_pow(1, p) + Coefficient::one(p);
    MultiPoly th(vt);
    const int nt = 1 + static_cast<int>(g.below(4));
    for (int j = 0; j < nt; ++j) {
      int e = 1 + static_cast<int>(g.below(8));
      while (e % static_cast<int>(p) == 0) e = 1 + static_cast<int>(g.below(8));
      th += MultiPoly::var(vt, 0, e).scaled(rand_coeff(g, p, 2, true));
    }
    if (th.is_zero()) th = MultiPoly::var(vt, 0);
    cs.push_back({"instance " + pad(k), [vt, a, th] {
                    const PolyMap sigma = sigma_from_theta(vt, a, th);
                    const auto res = exponentialize_triangular_n2(sigma);
                    const bool ev = res.action.evaluate(1) == sigma;
                    const auto rs = res.action.restricts_to(CoeffRing::R());
                    const ThetaData td = theta_of(sigma);
                    const bool rt = td.a == a && td.theta == th;
                    std::string w = "a=" + a.to_string() + " theta=" + th.to_string();
                    if (!ev) w += "; E_1 != sigma";
                    if (!rs.ok) w += "; does not restrict: " + rs.to_string();
                    if (!rt) w += "; theta_of gave " + td.theta.to_string();
                    return Outcome{ev && rs.ok && rt, w};
                  }});
  }
  return cs;
}

// ---- 3: Maubach conjugator

std::vector<Case> suite_maubach(const SuiteParams& sp) {
  need_p(sp, {2, 3, 5, 7}, "maubach");
  const unsigned p = sp.p;
  Lcg g(sp.seed);
  std::vector<Case> cs;
  const int n = count_or(sp, 30);
  for (int k = 0; k < n; ++k) {
    const int nv = 2 + static_cast<int>(g.below(2));
    std::vector<std::string> names;
    for (int i = 1; i <= nv; ++i) names.push_back("x" + std::to_string(i));
    const auto vt = VarTable::make(p, names);
    const Coefficient a = rand_unit(g, p) * Coefficient::u_pow(static_cast<int>(g.below(2)), p);
    std::vector<MultiPoly> im{MultiPoly::var(vt, 0)};
    im.push_back(MultiPoly::var(vt, 1) + rand_uni(g, vt, 0, 0, 1 + static_cast<int>(g.below(3)), 1));
    if (nv == 3) {
      MultiPoly q(vt);
      for (int e1 = 0; e1 <= 2; ++e1)
        for (int e2 = 0; e1 + e2 <= 2; ++e2) {
          const Coefficient c = rand_coeff(g, p, 1, false);
          if (!c.is_zero()) q += (MultiPoly::var(vt, 0, e1) * MultiPoly::var(vt, 1, e2)).scaled(c);
        }
      im.push_back(MultiPoly::var(vt, 2) + q);
    }
    const PolyMap phi0(vt, im);
    std::vector<MultiPoly> ei;
    for (int i = 0; i < nv; ++i) ei.push_back(MultiPoly::var(vt, i));
    ei[0] = ei[0] + a;
    const PolyMap eps(vt, ei);
    cs.push_back({"instance " + pad(k), [eps, phi0] {
                    const PolyMap sigma = conjugate(eps, phi0);
                    const PolyMap phi = maubach_conjugator(sigma);
                    const bool ok = conjugate(eps, phi) == sigma && classify(phi).strict_triangular;
                    return Outcome{ok, "sigma=" + sigma.to_string()};
                  }});
  }
  return cs;
}

// ---- 4: triangular example

std::vector<Case> report_cases(const std::string& prefix, const StarReport& rep) {
  std::vector<Case> cs;
  for (const auto& e : rep.entries) {
    std::string w = e.note;
    if (e.residual.vars() && !e.residual.is_zero()) w += (w.empty() ? "" : "; ") + e.residual.to_string();
    const Outcome o{e.ok, w};
    cs.push_back({prefix + e.name, [o] { return o; }});
  }
  return cs;
}

std::vector<Case> suite_triangular(const SuiteParams& sp) {
  need_p(sp, {2, 3, 5}, "triangular");
  const auto ex = build_example_triangular(sp.p);
  auto cs = report_cases("", ex.report);
  const Restriction w = ex.witness;
  cs.push_back({"witness carries 1/u", [w] {
                  const bool ok = !w.ok && w.term && w.term->leading().c.u_valuation() < 0;
                  return Outcome{ok, w.to_string()};
                }});
  return cs;
}

// ---- 5: non-exponential family

std::vector<Case> suite_nonexp(const SuiteParams& sp) {
  need_p(sp, {2, 3, 5, 7}, "nonexp");
  std::vector<std::pair<int, int>> inst;
  if (sp.d > 0) {
    inst.push_back({sp.d, sp.l >= 0 ? sp.l : 1});
  } else if (sp.p == 2) {
    inst.push_back({3, 1});
  } else if (sp.p == 3) {
    inst.push_back({2, 1});
    inst.push_back({4, 2});
  } else {
    fail(Errc::BadParameters, "no default instance at this p; pass --d and --l");
  }
  std::vector<Case> cs;
  for (auto [d, l] : inst) {
    const std::string tag = "(" + std::to_string(sp.p) + "," + std::to_string(d) + "," + std::to_string(l) + ") ";
    const auto r = build_nonexp_family(sp.p, d, l, nonexp_default_g(sp.p, l));
    auto rc = report_cases(tag, r.report);
    cs.insert(cs.end(), rc.begin(), rc.end());
    const auto data = r.fam.data;
    cs.push_back({tag + "certificate", [data] {
                    const Certificate c = non_exponentiality_certificate(data);
                    return Outcome{c.kind == Certificate::Kind::not_exponential, c.to_string()};
                  }});
  }
  return cs;
}

// ---- 6: rank three family

std::vector<Case> suite_rank3(const SuiteParams& sp) {
  need_p(sp, {2, 3}, "rank3");
  std::vector<std::pair<int, int>> lm;
  if (sp.l >= 0 && sp.m >= 0)
    lm.push_back({sp.l, sp.m});
  else
    for (int l = 0; l <= 2; ++l)
      for (int m = 0; m <= 2; ++m) lm.push_back({l, m});
  std::vector<Case> cs;
  const unsigned p = sp.p;
  for (auto [l, m] : lm)
    cs.push_back({"l=" + std::to_string(l) + " m=" + std::to_string(m), [p, l, m] {
                    const auto r = build_rank3_family(p, l, m);
                    std::string w(to_string(r.cls));
                    for (const auto& e : r.report.entries)
                      if (!e.ok) w += "; failed: " + e.name;
                    if (r.pi_witness && !r.pi_witness->is_zero()) w += "; pi witness " + clip(r.pi_witness->to_string(), 80);
                    return Outcome{r.report.all_ok(), w};
                  }});
  return cs;
}

// ---- 7: rank r actions

std::vector<Case> suite_rank_r(const SuiteParams& sp) {
  need_p(sp, {2, 3}, "rank-r");
  std::vector<std::pair<int, int>> nr;
  if (sp.n > 0 && sp.r > 0)
    nr.push_back({sp.n, sp.r});
  else
    nr = {{3, 2}, {4, 2}, {4, 3}};
  std::vector<Case> cs;
  const unsigned p = sp.p;
  for (auto [n, r] : nr)
    cs.push_back({"n=" + std::to_string(n) + " r=" + std::to_string(r), [p, n, r] {
                    const auto res = build_rank_r_action(n, r, p);
                    std::string w = res.rank.to_string();
                    for (const auto& e : res.report.entries)
                      if (!e.ok) w += "; failed: " + e.name;
                    const bool ok = res.report.all_ok() && res.rank.exact() && res.rank.lower == r;
                    return Outcome{ok, w};
                  }});
  return cs;
}

// ---- 8: tame factorization

PolyMap rand_affine(Lcg& g, const VarTablePtr& vt) {
  const unsigned p = vt->prime();
  for (;;) {
    long m[4];
    for (auto& v : m) v = static_cast<long>(g.below(p));
    if ((m[0] * m[3] - m[1] * m[2]) % static_cast<long>(p) == 0) continue;
    const MultiPoly x1 = MultiPoly::var(vt, 0), x2 = MultiPoly::var(vt, 1);
    return PolyMap(vt, {x1.scaled(Coefficient(m[0], p)) + x2.scaled(Coefficient(m[1], p)) + rand_coeff(g, p, 1, false),
                        x1.scaled(Coefficient(m[2], p)) + x2.scaled(Coefficient(m[3], p)) + rand_coeff(g, p, 1, false)});
  }
}

PolyMap rand_triangular(Lcg& g, const VarTablePtr& vt, int deg) {
  const unsigned p = vt->prime();
  const MultiPoly x1 = MultiPoly::var(vt, 0), x2 = MultiPoly::var(vt, 1);
  const Coefficient a = rand_unit(g, p), b = rand_unit(g, p);
  const Coefficient c = rand_coeff(g, p, 1, false);
  return PolyMap(vt, {x1.scaled(a) + c, x2.scaled(b) + rand_uni(g, vt, 0, 0, deg, 1)});
}

std::vector<Case> suite_jvdk(const SuiteParams& sp) {
  need_p(sp, {2, 3, 5, 7}, "jvdk");
  const unsigned p = sp.p;
  const auto vt = VarTable::make(p, {"x1", "x2"});
  Lcg g(sp.seed);
  std::vector<Case> cs;
  const int n = count_or(sp, 100);
  for (int k = 0; k < n; ++k) {
    const int nf = 1 + static_cast<int>(g.below(6));
    bool tri = g.below(2) == 1;
    int prod = 1;
    PolyMap phi = PolyMap::identity(vt);
    for (int j = 0; j < nf; ++j, tri = !tri) {
      if (tri) {
        int deg = 2 + static_cast<int>(g.below(3));
        deg = std::max(2, std::min(deg, 16 / prod));
        prod *= deg;
        phi = compose(phi, rand_triangular(g, vt, deg));
      } else {
        phi = compose(phi, rand_affine(g, vt));
      }
    }
    cs.push_back({"word " + pad(k), [phi] {
                    const TameWord w = jvdk_factor(phi);
                    bool alt = true;
                    for (std::size_t i = 1; i < w.factors.size(); ++i) alt = alt && w.factors[i].kind != w.factors[i - 1].kind;
                    const bool ok = recompose(w) == phi && alt;
                    return Outcome{ok, std::to_string(w.factors.size()) + " factors; phi=" + phi.to_string()};
                  }});
  }
  const char* bad[] = {"(x1^2, x2)", "(x1 + x2^2, x2^2)", "(x1*x2, x2)", "(x1 + x2, x1 + x2)", "(x1, x2^2 + x1)",
                       "(x1 + x2^3, x2 + x1^2)"};
  int j = 0;
  for (const char* s : bad) {
    const std::string text = s;
    cs.push_back({"reject " + pad(j++), [vt, text] {
                    try {
                      jvdk_factor(parse_map(text, vt));
                    } catch (const Error& e) {
                      const bool ok = e.code() == Errc::NotAutomorphism || e.code() == Errc::SingularAffine;
                      return Outcome{ok, text + " -> " + std::string(errc_name(e.code()))};
                    }
                    return Outcome{false, text + " accepted"};
                  }});
  }
  return cs;
}

// ---- 9: centralizer of eps

struct RandWord {
  CentralizerWord w;
  PolyMap map;
};

RandWord rand_centralizer_word(Lcg& g, const VarTablePtr& vt, const Coefficient& t, int cdeg) {
  const unsigned p = vt->prime();
  CentralizerWord w{vt, t, {}, {Coefficient::one(p), Coefficient::zero(p), Coefficient::zero(p)}};
  const int ng = static_cast<int>(g.below(5));
  bool e1 = g.below(2) == 1;
  int prod = 1;
  for (int j = 0; j < ng; ++j, e1 = !e1) {
    int d = 1 + static_cast<int>(g.below(e1 ? 3 : 2));
    const int eff = e1 ? d : d * static_cast<int>(p);
    if (prod * eff > 81) d = 1;
    prod *= e1 ? d : d * static_cast<int>(p);
    w.gens.push_back({e1 ? CentralizerGen::Kind::E1 : CentralizerGen::Kind::E2, rand_uni(g, vt, e1 ? 1 : 0, 1, d, cdeg)});
  }
  w.h0 = {rand_coeff(g, p, 1, true), rand_coeff(g, p, 1, false), rand_coeff(g, p, 1, false)};
  return {w, recompose(w)};
}

std::vector<Case> suite_centralizer(const SuiteParams& sp) {
  need_p(sp, {2, 3, 5, 7}, "centralizer");
  const unsigned p = sp.p;
  const auto vt = VarTable::make(p, {"x1", "x2"});
  Lcg g(sp.seed);
  std::vector<Case> cs;
  const int n = count_or(sp, 50);
  for (int k = 0; k < n; ++k) {
    const Coefficient t = rand_unit(g, p);
    const auto rw = rand_centralizer_word(g, vt, t, 1);
    cs.push_back({"member " + pad(k), [rw, vt, t] {
                    const PolyMap eps = epsilon_map(vt, t);
                    if (!centralizer_membership(rw.map, t)) return Outcome{false, "membership false for " + rw.w.to_string()};
                    const CentralizerWord d = centralizer_decompose(rw.map, t);
                    bool gens_ok = commute(h0_map(d.h0, vt), eps) && commute(h0_map(rw.w.h0, vt), eps);
                    for (const auto& gen : d.gens) gens_ok = gens_ok && commute(generator_map(gen, vt, t), eps);
                    for (const auto& gen : rw.w.gens) gens_ok = gens_ok && commute(generator_map(gen, vt, t), eps);
                    const bool ok = recompose(d) == rw.map && gens_ok;
                    return Outcome{ok, "t=" + t.to_string() + " " + d.to_string()};
                  }});
  }
  for (int k = 0; k < 20; ++k) {
    const Coefficient t = rand_unit(g, p);
    PolyMap phi;
    const PolyMap eps = epsilon_map(vt, t);
    for (;;) {
      const auto rw = rand_centralizer_word(g, vt, t, 1);
      const PolyMap delta(vt, {MultiPoly::var(vt, 0), MultiPoly::var(vt, 1) + rand_uni(g, vt, 0, 2, 2 + static_cast<int>(g.below(2)), 1)});
      phi = compose(rw.map, delta);
      if (!commute(phi, eps)) break;
    }
    cs.push_back({"non-member " + pad(k), [phi, t] {
                    if (centralizer_membership(phi, t)) return Outcome{false, "membership true for " + phi.to_string()};
                    try {
                      centralizer_decompose(phi, t);
                    } catch (const Error& e) {
                      return Outcome{e.code() == Errc::NotInCentralizer, std::string(errc_name(e.code()))};
                    }
                    return Outcome{false, "decomposed a non-member"};
                  }});
  }
  return cs;
}

// ---- 10: F and F_h

std::vector<Case> suite_ffamily(const SuiteParams& sp) {
  need_p(sp, {2, 3}, "f-family");
  const unsigned p = sp.p;
  std::vector<Case> cs;
  auto outcome = [](const FResult& r) {
    std::string w;
    for (const auto& e : r.report.entries)
      if (!e.ok) w += "failed: " + e.name + "; ";
    bool poly = true;
    for (const auto& im : r.F.images()) poly = poly && !im.has_negative_exponent() && is_polynomial_over(im, CoeffRing::R(), false).ok;
    if (!poly) w += "F does not restrict; ";
    return Outcome{r.report.all_ok() && poly, w + "F(x2)=" + r.F[1].to_string()};
  };
  cs.push_back({"n=4 h=f", [p, outcome] {
                  const auto ft = fh_table(4, p);
                  const auto r = build_F_and_Fh(4, p, MultiPoly::var(ft, 0));
                  bool comm = false;
                  for (const auto& e : r.report.entries) comm = comm || (e.name == "F_f commutator" && e.ok);
                  Outcome o = outcome(r);
                  o.pass = o.pass && comm;
                  return o;
                }});
  Lcg g(sp.seed);
  const int n = count_or(sp, 10);
  for (int k = 0; k < n; ++k) {
    const int nv = 3 + static_cast<int>(g.below(2));
    const auto ft = fh_table(nv, p);
    MultiPoly h(ft);
    const int nt = 1 + static_cast<int>(g.below(3));
    for (int j = 0; j < nt; ++j) {
      MultiPoly m = MultiPoly::constant(ft, 1);
      for (int v = 0; v < ft->n_ring(); ++v) m *= MultiPoly::var(ft, v, static_cast<int>(g.below(v == 0 ? 3 : 2)));
      h += m.scaled(rand_coeff(g, p, 1, true));
    }
    cs.push_back({"h " + pad(k) + " n=" + std::to_string(nv), [p, nv, h, outcome] {
                    Outcome o = outcome(build_F_and_Fh(nv, p, h));
                    o.witness = "h=" + h.to_string() + "; " + o.witness;
                    return o;
                  }});
  }
  return cs;
}

// ---- 11: Gauss lemma

std::vector<Case> suite_gauss(const SuiteParams& sp) {
  need_p(sp, {2, 3, 5, 7}, "gauss");
  const unsigned p = sp.p;
  const auto vt = VarTable::make(p, {});
  const int Tv = vt->T();
  Lcg g(sp.seed);
  std::vector<Case> cs;
  const int n = count_or(sp, 200);
  for (int k = 0; k < n; ++k) {
    const MultiPoly f = content_primitive(rand_uni(g, vt, Tv, 0, 1 + static_cast<int>(g.below(4)), 2)).primitive;
    const MultiPoly gg = content_primitive(rand_uni(g, vt, Tv, 1, 1 + static_cast<int>(g.below(3)), 2)).primitive;
    cs.push_back({"composition " + pad(k), [f, gg, Tv] {
                    const bool ok = gauss_check(f, gg);
                    // independent: content of f(g) computed directly
                    const auto cp = content_primitive(substitute_var(f, Tv, gg));
                    return Outcome{ok && cp.content.is_one(), "f=" + f.to_string() + " g=" + gg.to_string()};
                  }});
  }
  for (int k = 0; k < n; ++k) {
    const MultiPoly f = rand_uni(g, vt, Tv, 0, 1 + static_cast<int>(g.below(4)), 2).scaled(rand_coeff(g, p, 2, true));
    const MultiPoly h = rand_uni(g, vt, Tv, 0, 1 + static_cast<int>(g.below(4)), 2).scaled(rand_coeff(g, p, 2, true));
    cs.push_back({"content " + pad(k), [f, h] {
                    const auto cf = content_primitive(f), ch = content_primitive(h), cfh = content_primitive(f * h);
                    return Outcome{cfh.content == cf.content * ch.content, "content(fg)=" + cfh.content.to_string()};
                  }});
  }
  return cs;
}

// ---- 12: fixed points and the fpf witness

std::vector<Case> suite_fixed_point(const SuiteParams& sp) {
  need_p(sp, {2, 3, 5, 7}, "fixed-point");
  const unsigned p = sp.p;
  const auto vt = VarTable::make(p, {"x1", "x2"});
  const MultiPoly x1 = MultiPoly::var(vt, 0), x2 = MultiPoly::var(vt, 1);
  Lcg g(sp.seed);
  std::vector<Case> cs;
  const int n = count_or(sp, 20);
  struct Tuple {
    Coefficient a, b, c;
    MultiPoly f, gg;
  };
  auto satisfying = [&] {
    Tuple t;
    t.b = p == 2 ? Coefficient::one(p) : rand_unit(g, p);
    const int k = 1 + static_cast<int>(g.below(2));
    if (!t.b.is_one()) {
      t.c = rand_coeff(g, p, 1, false);
      const Coefficient s = t.c / (Coefficient::one(p) - t.b);
      t.f = pow(x2 - s, k);
      t.a = t.b.pow(k);
    } else {
      t.c = rand_coeff(g, p, 1, true);
      t.f = pow(pow(x2, p) - x2.scaled(t.c.pow(static_cast<long>(p) - 1)), k);
      t.a = Coefficient::one(p);
    }
    t.gg = rand_uni(g, vt, 1, 0, static_cast<int>(g.below(3)), 1);
    return t;
  };
  auto map_of = [vt, x1, x2](const Tuple& t) { return PolyMap(vt, {x1.scaled(t.a) + t.gg, x2.scaled(t.b) + t.c}); };
  auto eps_of = [vt, x1, x2](const MultiPoly& f) { return PolyMap(vt, {x1 + f, x2}); };
  for (int k = 0; k < n; ++k) {
    const Tuple t = satisfying();
    cs.push_back({"satisfying " + pad(k), [t, map_of, eps_of] {
                    const PolyMap phi = map_of(t);
                    const auto r = fixed_point_elem_centralizer(phi, t.f);
                    const bool same = r && r->a == t.a && r->b == t.b && r->c == t.c && r->g == t.gg;
                    return Outcome{same && commute(phi, eps_of(t.f)), "phi=" + phi.to_string() + " f=" + t.f.to_string()};
                  }});
  }
  for (int k = 0; k < n; ++k) {
    Tuple t = satisfying();
    if (g.below(2) == 0)
      t.a = t.a * Coefficient::u_pow(1, p);
    else
      t.c = t.c + Coefficient::u_pow(2, p);
    cs.push_back({"violating " + pad(k), [t, map_of, eps_of] {
                    const PolyMap phi = map_of(t);
                    if (commute(phi, eps_of(t.f))) return Outcome{false, "oracle: perturbed tuple still commutes"};
                    const bool rejected = !fixed_point_elem_centralizer(phi, t.f);
                    return Outcome{rejected, "phi=" + phi.to_string() + " f=" + t.f.to_string()};
                  }});
  }

  // fpf witness on psi = id and two seeded words over H(u)
  const Coefficient f = Coefficient::u_pow(1, p);
  std::vector<std::pair<std::string, CentralizerWord>> words;
  words.push_back({"psi = id", parse_centralizer_word("", vt, f)});
  words.push_back({"psi = word 1", rand_centralizer_word(g, vt, f, 1).w});
  {
    auto w2 = rand_centralizer_word(g, vt, f, 1).w;
    w2.gens.push_back({CentralizerGen::Kind::E2, x1.scaled(Coefficient::u_pow(-static_cast<int>(p) - 1, p) * rand_unit(g, p))});
    words.push_back({"psi = word 2", w2});
  }
  for (const auto& [id, w] : words) {
    const bool expect_bad = id == "psi = word 2";
    cs.push_back({"fpf " + id, [vt, f, w, expect_bad] {
                    const PolyMap coords = PolyMap::identity(vt);
                    const FpfReport r = fpf_witness_check(coords, f, w);
                    // oracle: E(P_1) = P_1 + f T, E(P_2) = P_2 on P = coords psi, then integrality term by term
                    const PolyMap P = compose(coords, recompose(w));
                    const MultiPoly T = T_of(vt);
                    bool defining = r.action.apply(P[0]) == P[0] + T.scaled(f) && r.action.apply(P[1]) == P[1];
                    bool integral = true;
                    for (const auto& im : r.action.images())
                      for (const auto& term : im.terms()) integral = integral && term.c.is_integral();
                    bool ok = defining && r.restricts == integral;
                    if (!r.restricts) ok = ok && r.witness.term && !r.witness.term->leading().c.is_integral();
                    if (expect_bad) ok = ok && !integral;
                    return Outcome{ok, w.to_string() + " -> " + (r.restricts ? "restricts" : r.witness.to_string())};
                  }});
  }
  return cs;
}

struct SuiteDef {
  const char* name;
  const char* description;
  std::vector<Case> (*build)(const SuiteParams&);
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"axioms", "A1/A2 for every constructed action; corrupted copies fail A2", suite_axioms},
      {"thm15-n2", "order-p triangular maps of k[x1,x2] over F_p[u] are exponential", suite_thm15},
      {"maubach", "conjugator of strict triangular order-p maps", suite_maubach},
      {"triangular", "triangular example: E1 restricts, E does not", suite_triangular},
      {"nonexp", "non-exponential family and its certificate", suite_nonexp},
      {"rank3", "rank three family classification over (l, m)", suite_rank3},
      {"rank-r", "rank r actions with E1 = eps", suite_rank_r},
      {"jvdk", "tame factorization of plane automorphisms", suite_jvdk},
      {"centralizer", "membership and decomposition in the centralizer of eps", suite_centralizer},
      {"f-family", "F, F_h and the commutator identity", suite_ffamily},
      {"gauss", "primitivity under composition, content multiplicativity", suite_gauss},
      {"fixed-point", "fixed-point elements of the centralizer and the fpf witness", suite_fixed_point},
  };
  return defs;
}

const SuiteDef& find_suite(std::string_view name) {
  for (const auto& d : registry())
    if (name == d.name) return d;
  fail(Errc::UnknownSuite, std::string(name));
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> v;
  for (const auto& d : registry()) v.emplace_back(d.name);
  return v;
}

std::string suite_description(std::string_view name) { return find_suite(name).description; }

SuiteResult run_suite(std::string_view name, const SuiteParams& params) {
  const SuiteDef& def = find_suite(name);
  if (!is_supported_prime(params.p)) fail(Errc::BadParameters, "p must be one of 2, 3, 5, 7");
  SuiteResult res;
  res.name = def.name;
  res.params = params;
  res.cases = run_cases(def.build(params));
  return res;
}

std::string parse_print(std::string_view entity, std::string_view text, unsigned p) {
  require_prime(p);
  auto table = [p](int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return VarTable::make(p, names);
  };
  if (entity == "poly") {
    int n = 3;
    static const std::regex xv(R"(x(\d+))");
    const std::string s(text);
    for (auto it = std::sregex_iterator(s.begin(), s.end(), xv); it != std::sregex_iterator(); ++it)
      n = std::max(n, std::stoi((*it)[1].str()));
    if (n > 12) fail(Errc::TooManyVariables, std::to_string(n));
    return parse_poly(text, table(n)).to_string();
  }
  if (entity == "map" || entity == "action") {
    const int n = static_cast<int>(split_tuple(text).size());
    if (n < 1 || n > 12) fail(Errc::ParseError, "at position 0: expected a tuple (f1, ..., fn)");
    const auto vt = table(n);
    return entity == "map" ? parse_map(text, vt).to_string() : parse_action(text, vt).to_string();
  }
  if (entity == "word") return parse_centralizer_word(text, table(2), Coefficient::one(p)).to_string();
  fail(Errc::BadParameters, "entity must be poly, map, action or word");
}

}  // namespace charp
