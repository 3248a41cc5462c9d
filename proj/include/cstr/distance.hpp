#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cstr/alphabet.hpp"
#include "cstr/cost_scheme.hpp"
#include "cstr/rational.hpp"

namespace cstr {

inline std::int64_t hamming(const Seq& s, const Seq& t) {
  if (!same_alphabet(s, t)) {
    throw std::invalid_argument("hamming: sequences over different alphabets");
  }
  if (s.size() != t.size()) {
    throw std::invalid_argument("hamming: length mismatch (" +
                                std::to_string(s.size()) + " vs " +
                                std::to_string(t.size()) + ")");
  }
  std::int64_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    count += (s[i] != t[i]);
  }
  return count;
}

// Standard two-row Levenshtein DP in machine integers.
inline std::int64_t levenshtein(const Seq& s, const Seq& t) {
  if (!same_alphabet(s, t)) {
    throw std::invalid_argument("levenshtein: sequences over different alphabets");
  }
  const std::size_t n = s.size(), m = t.size();
  std::vector<std::int64_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<std::int64_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<std::int64_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::int64_t sub = prev[j - 1] + (s[i - 1] != t[j - 1]);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

// Minimum-cost alignment under a weighted scheme; exact rational DP.
// Requires a metric scheme (checked once up front).
inline Rational weighted_edit(const Seq& s, const Seq& t, const CostScheme& scheme) {
  if (!same_alphabet(s, t)) {
    throw std::invalid_argument("weighted_edit: sequences over different alphabets");
  }
  if (!scheme.is_metric()) {
    throw std::invalid_argument("weighted_edit: cost scheme is not a metric");
  }
  const std::size_t g = scheme.gap();
  const std::size_t n = s.size(), m = t.size();
  std::vector<Rational> prev(m + 1), cur(m + 1);
  prev[0] = Rational(0);
  for (std::size_t j = 1; j <= m; ++j) prev[j] = prev[j - 1] + scheme.cost(g, t[j - 1]);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = prev[0] + scheme.cost(s[i - 1], g);
    for (std::size_t j = 1; j <= m; ++j) {
      Rational best = prev[j - 1] + scheme.cost(s[i - 1], t[j - 1]);
      Rational del = prev[j] + scheme.cost(s[i - 1], g);
      Rational ins = cur[j - 1] + scheme.cost(g, t[j - 1]);
      if (del < best) best = del;
      if (ins < best) best = ins;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace cstr
