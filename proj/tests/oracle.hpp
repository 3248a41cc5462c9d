#pragma once

// Independent reference implementations used to freeze expected values.
// These deliberately avoid the library's iterative DP code paths.

#include <map>
#include <random>
#include <vector>

#include "cstr/alphabet.hpp"
#include "cstr/cost_scheme.hpp"
#include "cstr/instance.hpp"
#include "cstr/rng.hpp"

namespace oracle {

inline std::int64_t hamming_count(const cstr::Seq& a, const cstr::Seq& b) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += (a[i] != b[i]);
  return c;
}

// Memoized top-down recursion, structurally unlike the two-row table.
inline std::int64_t lev_memo(const cstr::Seq& s, const cstr::Seq& t,
                             std::size_t i, std::size_t j,
                             std::map<std::pair<std::size_t, std::size_t>, std::int64_t>& memo) {
  if (i == 0) return static_cast<std::int64_t>(j);
  if (j == 0) return static_cast<std::int64_t>(i);
  const auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const std::int64_t del = lev_memo(s, t, i - 1, j, memo) + 1;
  const std::int64_t ins = lev_memo(s, t, i, j - 1, memo) + 1;
  const std::int64_t sub =
      lev_memo(s, t, i - 1, j - 1, memo) + (s[i - 1] != t[j - 1] ? 1 : 0);
  const std::int64_t best = std::min({del, ins, sub});
  memo[key] = best;
  return best;
}

inline std::int64_t lev_reference(const cstr::Seq& s, const cstr::Seq& t) {
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> memo;
  return lev_memo(s, t, s.size(), t.size(), memo);
}

// Plain recursion over all alignments; exponential, for tiny strings only.
inline cstr::Rational weighted_brute(const cstr::Seq& s, const cstr::Seq& t,
                                     const cstr::CostScheme& scheme,
                                     std::size_t i, std::size_t j) {
  const std::size_t g = scheme.gap();
  if (i == s.size() && j == t.size()) return cstr::Rational(0);
  cstr::Rational best(INT64_MAX);
  if (i < s.size()) {
    const auto v = scheme.cost(s[i], g) + weighted_brute(s, t, scheme, i + 1, j);
    if (v < best) best = v;
  }
  if (j < t.size()) {
    const auto v = scheme.cost(g, t[j]) + weighted_brute(s, t, scheme, i, j + 1);
    if (v < best) best = v;
  }
  if (i < s.size() && j < t.size()) {
    const auto v = scheme.cost(s[i], t[j]) + weighted_brute(s, t, scheme, i + 1, j + 1);
    if (v < best) best = v;
  }
  return best;
}

inline cstr::Rational weighted_reference(const cstr::Seq& s, const cstr::Seq& t,
                                         const cstr::CostScheme& scheme) {
  return weighted_brute(s, t, scheme, 0, 0);
}

inline cstr::Seq random_seq(const cstr::AlphabetPtr& alphabet, std::size_t len,
                            std::mt19937_64& rng) {
  std::vector<std::uint8_t> codes(len);
  for (auto& c : codes) {
    c = static_cast<std::uint8_t>(cstr::uniform_below(rng, alphabet->size()));
  }
  return cstr::Seq(alphabet, std::move(codes));
}

inline cstr::CspInstance random_hamming_instance(const cstr::AlphabetPtr& alphabet,
                                                 std::size_t n, std::size_t k,
                                                 std::int64_t d, std::mt19937_64& rng) {
  cstr::CspInstance inst;
  inst.d = d;
  inst.metric = cstr::Metric::hamming();
  for (std::size_t i = 0; i < k; ++i) inst.strings.push_back(random_seq(alphabet, n, rng));
  return inst;
}

}  // namespace oracle
