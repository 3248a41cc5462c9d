#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cstr/instance.hpp"

namespace cstr {

constexpr std::uint64_t kDefaultExhaustiveBudget = 4'500'000;

namespace detail {

// sigma^len capped; returns cap+1 on overflow so callers can refuse.
inline std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

inline bool within_threshold(const Seq& cand, const CspInstance& inst) {
  if (inst.metric.kind == MetricKind::Hamming) {
    for (const auto& s : inst.strings) {
      std::int64_t dist = 0;
      for (std::size_t j = 0; j < cand.size(); ++j) {
        dist += (cand[j] != s[j]);
        if (dist > inst.d) return false;
      }
    }
    return true;
  }
  for (std::size_t i = 0; i < inst.strings.size(); ++i) {
    if (distance_to_input(cand, inst, i) > Rational(inst.d)) return false;
  }
  return true;
}

}  // namespace detail

// Brute-force search over the full candidate space, usable as an oracle
// under any metric. For Hamming the space is Sigma^n; for edit distances
// every length in [max(0, min|s_i|-d), max|s_i|+d] is enumerated (any
// center within distance d of all inputs has its length in that range).
// Exceeding the candidate budget is an explicit refusal, never silence.
inline SolveResult solve_exhaustive(const CspInstance& inst,
                                    std::uint64_t max_candidates = kDefaultExhaustiveBudget) {
  inst.validate();
  const std::uint64_t sigma = inst.alphabet()->size();

  std::size_t len_lo, len_hi;
  if (inst.metric.kind == MetricKind::Hamming) {
    len_lo = len_hi = inst.n();
  } else {
    std::size_t min_len = inst.strings[0].size(), max_len = inst.strings[0].size();
    for (const auto& s : inst.strings) {
      min_len = std::min(min_len, s.size());
      max_len = std::max(max_len, s.size());
    }
    const std::uint64_t d = static_cast<std::uint64_t>(inst.d);
    len_lo = min_len > d ? min_len - static_cast<std::size_t>(d) : 0;
    len_hi = max_len + static_cast<std::size_t>(d);
  }

  std::uint64_t total = 0;
  for (std::size_t len = len_lo; len <= len_hi; ++len) {
    total += detail::pow_capped(sigma, len, max_candidates);
    if (total > max_candidates) {
      return SolveResult::refused(
          "exhaustive: candidate space exceeds budget of " +
          std::to_string(max_candidates) + " candidates");
    }
  }

  for (std::size_t len = len_lo; len <= len_hi; ++len) {
    std::vector<std::uint8_t> word(len, 0);
    do {
      Seq cand(inst.alphabet(), word);
      if (detail::within_threshold(cand, inst)) {
        Rational r = radius(cand, inst);
        return SolveResult::found(std::move(cand), std::move(r));
      }
    } while (detail::next_word(word, static_cast<std::size_t>(sigma)));
  }
  return SolveResult::none();
}

}  // namespace cstr
