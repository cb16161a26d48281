#pragma once
// Verification suites (one per acceptance criterion) and text round trips.
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace charp {

// Seeded generator shared by every randomized suite: a 64-bit LCG
// x' = 6364136223846793005 x + 1442695040888963407 (mod 2^64), draws take
// the high bits, below(n) = (x' >> 33) % n.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : e_(seed) {}
  std::uint64_t next() { return e_(); }
  std::uint64_t below(std::uint64_t n) { return (e_() >> 33) % n; }

 private:
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0> e_;
};

struct SuiteParams {
  unsigned p = 2;
  int d = 0, l = -1, m = -1, n = 0, r = 0;  // 0 / -1: suite default
  std::uint64_t seed = 7;
  int count = 0;  // 0: suite default
};

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string witness;
  double elapsed = 0;  // seconds
};

struct SuiteResult {
  std::string name;
  SuiteParams params;
  std::vector<CaseResult> cases;
  bool all_pass() const;
  std::size_t passed() const;
  // timing is left out unless asked for, so equal seeds give equal reports
  std::string to_text(bool timing = false) const;
  std::string to_json(bool timing = false) const;
};

std::vector<std::string> suite_names();
std::string suite_description(std::string_view name);
SuiteResult run_suite(std::string_view name, const SuiteParams& params);

// entity: poly, map, action or word (centralizer word over t = 1); vars are
// x1..xn with n taken from the text (3 for poly)
std::string parse_print(std::string_view entity, std::string_view text, unsigned p);

}  // namespace charp
