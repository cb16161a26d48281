// Runs every acceptance criterion through its suite and prints one line each.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "charp/error.hpp"
#include "charp/suites.hpp"

using namespace charp;

namespace {

struct Run {
  std::string suite;
  SuiteParams params;
};

struct Criterion {
  int id;
  std::string what;
  std::vector<Run> runs;
  double budget;  // seconds, 0 = none
};

std::vector<Run> at_primes(const std::string& suite, std::initializer_list<unsigned> ps, int count = 0) {
  std::vector<Run> v;
  for (unsigned p : ps) v.push_back({suite, {.p = p, .seed = 7, .count = count}});
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "axioms, corrupted actions fail A2", at_primes("axioms", {2, 3}), 60},
      {2, "triangular n=2 exponentialization", at_primes("thm15-n2", {2, 3, 5}, 50), 120},
      {3, "Maubach conjugator", at_primes("maubach", {2, 3}, 30), 0},
      {4, "triangular example", at_primes("triangular", {2, 3}), 0},
      {5, "non-exponential family", at_primes("nonexp", {2, 3}), 120},
      {6, "rank three classification", at_primes("rank3", {2, 3}), 180},
      {7, "rank r actions", at_primes("rank-r", {2, 3}), 0},
      {8, "plane factorization", at_primes("jvdk", {2, 3}, 100), 0},
      {9, "centralizer of eps", at_primes("centralizer", {2, 3}, 50), 0},
      {10, "F and F_h", at_primes("f-family", {2, 3}), 0},
      {11, "Gauss harness", at_primes("gauss", {2, 3}), 0},
      {12, "fixed-point machinery", at_primes("fixed-point", {2, 3}), 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& r : c.runs) {
      try {
        const SuiteResult res = run_suite(r.suite, r.params);
        detail += " p=" + std::to_string(r.params.p) + ":" + std::to_string(res.passed()) + "/" +
                  std::to_string(res.cases.size());
        if (!res.all_pass() || res.cases.empty()) {
          ok = false;
          for (const auto& cs : res.cases)
            if (!cs.pass) std::fprintf(stderr, "  C%d %s p=%u %s: %s\n", c.id, r.suite.c_str(), r.params.p, cs.id.c_str(),
                                       cs.witness.c_str());
        }
      } catch (const std::exception& e) {
        ok = false;
        detail += " p=" + std::to_string(r.params.p) + ":error";
        std::fprintf(stderr, "  C%d %s p=%u: %s\n", c.id, r.suite.c_str(), r.params.p, e.what());
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget > 0 && secs > c.budget) {
      ok = false;
      detail += " over budget";
    }
    if (!ok) ++failed;
    std::printf("%s C%-2d %-36s%s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.what.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
