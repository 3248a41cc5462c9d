#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cstr/instance.hpp"

namespace cstr {

constexpr std::uint64_t kDefaultDpStateBudget = 8'000'000;

namespace detail {

// Feasibility table B[(i_1..i_k),(e_1..e_k)]: true iff some center t has
// d_L(t, s_j[0, i_j-1]) <= e_j for all j. Computed as a fixpoint over
// three move families, each strictly decreasing sum(i)+sum(e):
//   base     -- t = epsilon, feasible iff i_j <= e_j for all j;
//   consume  -- drop the last character of one s_j prefix (deletion),
//               i_j -= 1, e_j -= 1;
//   append   -- extend the center by a character c; inputs in S align c
//               against their last prefix character (i_j -= 1, e_j pays
//               the mismatch), the rest treat c as an insertion (e_j -= 1).
// The append family realizes the sigma * 2^k disjunction of the
// Nicolas-Rivals recurrence; the tests cross-check the whole construction
// against the exhaustive oracle.
class LevenshteinDp {
 public:
  LevenshteinDp(const CspInstance& inst, std::int64_t budget_cap)
      : inst_(inst), k_(inst.k()), ecap_(budget_cap) {
    dims_.reserve(2 * k_);
    for (std::size_t j = 0; j < k_; ++j) {
      dims_.push_back(inst_.strings[j].size() + 1);
    }
    dims_.insert(dims_.end(), k_, static_cast<std::size_t>(ecap_) + 1);
    total_states_ = 1;
    for (std::size_t dim : dims_) total_states_ *= dim;
    memo_.assign(total_states_, Cell{});
  }

  std::uint64_t state_count() const { return total_states_; }

  bool feasible() {
    std::vector<std::int64_t> state(2 * k_);
    for (std::size_t j = 0; j < k_; ++j) {
      state[j] = static_cast<std::int64_t>(inst_.strings[j].size());
      state[k_ + j] = ecap_;
    }
    return solve_(state);
  }

  // Backtracks the recorded moves into a witness center.
  Seq witness() {
    std::vector<std::int64_t> state(2 * k_);
    for (std::size_t j = 0; j < k_; ++j) {
      state[j] = static_cast<std::int64_t>(inst_.strings[j].size());
      state[k_ + j] = ecap_;
    }
    std::vector<std::uint8_t> reversed;
    while (true) {
      const Cell& cell = memo_[index_(state)];
      if (cell.move == Move::Base) break;
      if (cell.move == Move::Consume) {
        state[cell.j] -= 1;
        state[k_ + cell.j] -= 1;
        continue;
      }
      reversed.push_back(cell.c);
      for (std::size_t j = 0; j < k_; ++j) {
        if (cell.subset >> j & 1) {
          const std::uint8_t ch = inst_.strings[j][static_cast<std::size_t>(state[j] - 1)];
          state[k_ + j] -= (cell.c != ch) ? 1 : 0;
          state[j] -= 1;
        } else {
          state[k_ + j] -= 1;
        }
      }
    }
    std::reverse(reversed.begin(), reversed.end());
    return Seq(inst_.alphabet(), std::move(reversed));
  }

 private:
  enum class Move : std::uint8_t { Unknown, Base, Consume, Append, Dead };

  struct Cell {
    Move move = Move::Unknown;
    std::uint8_t c = 0;
    std::uint32_t subset = 0;
    std::uint32_t j = 0;
  };

  std::size_t index_(const std::vector<std::int64_t>& state) const {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < state.size(); ++a) {
      idx = idx * dims_[a] + static_cast<std::size_t>(state[a]);
    }
    return idx;
  }

  bool solve_(std::vector<std::int64_t>& state) {
    Cell& cell = memo_[index_(state)];
    if (cell.move == Move::Dead) return false;
    if (cell.move != Move::Unknown) return true;

    bool base = true;
    for (std::size_t j = 0; j < k_; ++j) {
      if (state[j] > state[k_ + j]) {
        base = false;
        break;
      }
    }
    if (base) {
      cell.move = Move::Base;
      return true;
    }

    for (std::size_t j = 0; j < k_; ++j) {
      if (state[j] >= 1 && state[k_ + j] >= 1) {
        state[j] -= 1;
        state[k_ + j] -= 1;
        const bool ok = solve_(state);
        state[j] += 1;
        state[k_ + j] += 1;
        if (ok) {
          Cell& c = memo_[index_(state)];
          c.move = Move::Consume;
          c.j = static_cast<std::uint32_t>(j);
          return true;
        }
      }
    }

    const std::size_t sigma = inst_.alphabet()->size();
    std::vector<std::int64_t> pred(2 * k_);
    for (std::uint8_t c = 0; c < sigma; ++c) {
      for (std::uint32_t subset = 0; subset < (1u << k_); ++subset) {
        bool valid = true;
        for (std::size_t j = 0; j < k_ && valid; ++j) {
          if (subset >> j & 1) {
            if (state[j] < 1) {
              valid = false;
              break;
            }
            const std::uint8_t ch =
                inst_.strings[j][static_cast<std::size_t>(state[j] - 1)];
            pred[j] = state[j] - 1;
            pred[k_ + j] = state[k_ + j] - ((c != ch) ? 1 : 0);
          } else {
            pred[j] = state[j];
            pred[k_ + j] = state[k_ + j] - 1;
          }
          if (pred[k_ + j] < 0) valid = false;
        }
        if (!valid) continue;
        if (solve_(pred)) {
          Cell& cl = memo_[index_(state)];
          cl.move = Move::Append;
          cl.c = c;
          cl.subset = subset;
          return true;
        }
      }
    }
    memo_[index_(state)].move = Move::Dead;
    return false;
  }

  const CspInstance& inst_;
  std::size_t k_;
  std::int64_t ecap_;
  std::vector<std::size_t> dims_;
  std::uint64_t total_states_ = 0;
  std::vector<Cell> memo_;
};

}  // namespace detail

// CSP under the Levenshtein distance via the Boolean feasibility table.
// If d is at least the longest input, the empty center already works.
inline SolveResult solve_dp_levenshtein(const CspInstance& inst,
                                        std::uint64_t max_states = kDefaultDpStateBudget) {
  inst.validate();
  if (inst.metric.kind != MetricKind::Levenshtein) {
    throw std::invalid_argument("solve_dp_levenshtein: Levenshtein metric required");
  }
  std::size_t max_len = 0;
  for (const auto& s : inst.strings) max_len = std::max(max_len, s.size());
  if (static_cast<std::uint64_t>(inst.d) >= max_len) {
    Seq eps(inst.alphabet(), {});
    Rational r = radius(eps, inst);
    return SolveResult::found(std::move(eps), std::move(r));
  }

  // budget axes clamped to [0, n]; d < max_len here so the clamp is d itself
  std::uint64_t states = 1;
  for (const auto& s : inst.strings) {
    states *= s.size() + 1;
    states *= static_cast<std::uint64_t>(inst.d) + 1;
    if (states > max_states) break;
  }
  if (states > max_states || inst.k() >= 31) {
    return SolveResult::refused("dp: state space exceeds budget of " +
                                std::to_string(max_states) + " states");
  }
  detail::LevenshteinDp dp(inst, inst.d);
  if (!dp.feasible()) return SolveResult::none();
  Seq center = dp.witness();
  Rational r = radius(center, inst);
  return SolveResult::found(std::move(center), std::move(r));
}

}  // namespace cstr
