#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cstr/instance.hpp"

namespace cstr {

constexpr std::uint64_t kDefaultCsspBudget = 40'000'000;  // candidate checks
constexpr std::uint64_t kDefaultGeneratedCap = 1'048'576;  // strings per generator

// All distinct length-L windows of the inputs, in lexicographic order.
inline std::vector<Seq> enumerate_substrings(const CsspInstance& inst) {
  inst.validate();
  std::set<Seq> seen;
  for (const auto& s : inst.strings) {
    for (std::size_t off = 0; off + inst.L <= s.size(); ++off) {
      seen.insert(s.substr(off, inst.L));
    }
  }
  return {seen.begin(), seen.end()};
}

// A set of equal-length strings; positions split into unanimous ones
// (all members agree, forcing that character in any generated string)
// and conflict ones (free over the whole alphabet).
struct GeneratorSet {
  std::vector<Seq> members;
  std::vector<std::size_t> unanimous;
  std::vector<std::size_t> conflict;

  static GeneratorSet from_members(std::vector<Seq> members) {
    if (members.empty()) {
      throw std::invalid_argument("GeneratorSet: at least one member required");
    }
    const std::size_t L = members.front().size();
    for (const auto& g : members) {
      if (g.size() != L) {
        throw std::invalid_argument("GeneratorSet: members must share one length");
      }
    }
    GeneratorSet gs;
    gs.members = std::move(members);
    for (std::size_t p = 0; p < L; ++p) {
      bool agree = true;
      for (const auto& g : gs.members) {
        if (g[p] != gs.members.front()[p]) {
          agree = false;
          break;
        }
      }
      (agree ? gs.unanimous : gs.conflict).push_back(p);
    }
    return gs;
  }

  std::size_t length() const { return members.front().size(); }
  std::size_t conflict_count() const { return conflict.size(); }
};

inline std::pair<std::size_t, std::vector<std::size_t>> conflict(
    const GeneratorSet& g) {
  return {g.conflict_count(), g.conflict};
}

// Yields the sigma^conflict strings generated by G in lexicographic
// order: unanimous positions fixed, conflict positions running over the
// alphabet with the leftmost conflict position most significant.
inline std::vector<Seq> generated_strings(const GeneratorSet& g,
                                          std::uint64_t cap = kDefaultGeneratedCap) {
  const std::size_t sigma = g.members.front().alphabet()->size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < g.conflict_count(); ++i) {
    if (count > cap / sigma) {
      throw std::length_error("generated_strings: sigma^conflict exceeds cap of " +
                              std::to_string(cap));
    }
    count *= sigma;
  }
  std::vector<std::uint8_t> base(g.length(), 0);
  for (std::size_t p : g.unanimous) base[p] = g.members.front()[p];

  std::vector<Seq> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::uint8_t> choice(g.conflict_count(), 0);
  do {
    std::vector<std::uint8_t> codes = base;
    for (std::size_t i = 0; i < g.conflict.size(); ++i) codes[g.conflict[i]] = choice[i];
    out.emplace_back(g.members.front().alphabet(), std::move(codes));
  } while (detail::next_word(choice, sigma));
  return out;
}

// max over inputs of the best window distance; the CSSP analogue of radius.
inline Rational cssp_radius(const Seq& s, const CsspInstance& inst) {
  std::int64_t worst = 0;
  for (const auto& input : inst.strings) {
    worst = std::max(worst, min_window_distance(s, input, inst.L));
  }
  return Rational(worst);
}

struct CsspSearchInfo {
  std::uint64_t generators_tried = 0;
  std::uint64_t generators_skipped_conflict = 0;
  std::uint64_t candidates_checked = 0;
  std::optional<GeneratorSet> witness_generator;
};

// Generator size cap log2(d)+2 with d in {0,1} collapsing the log term.
inline std::size_t generator_size_cap(std::int64_t d) {
  std::size_t cap = 2;
  std::int64_t v = d;
  while (v >= 2) {
    v >>= 1;
    ++cap;
  }
  return cap;  // floor(log2 d) + 2, and 2 when d <= 1
}

inline std::int64_t conflict_cap(std::int64_t d) {
  return d * static_cast<std::int64_t>(generator_size_cap(d));
}

namespace detail {

// Lexicographic next combination of indices 0..m-1 of fixed size.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t m) {
  const std::size_t r = comb.size();
  std::size_t i = r;
  while (i-- > 0) {
    if (comb[i] < m - r + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Marx's algorithm: enumerate candidate generators among the length-L
// windows, sizes 1..log2(d)+2, skip those with conflict above
// d*(log2(d)+2), and test every generated string against all inputs.
inline std::pair<SolveResult, CsspSearchInfo> solve_cssp(
    const CsspInstance& inst, std::uint64_t max_checks = kDefaultCsspBudget) {
  inst.validate();
  CsspSearchInfo info;
  const std::vector<Seq> windows = enumerate_substrings(inst);
  const std::size_t size_cap = std::min(generator_size_cap(inst.d), windows.size());
  const std::int64_t conf_cap = conflict_cap(inst.d);
  const std::size_t sigma = inst.alphabet()->size();

  for (std::size_t size = 1; size <= size_cap; ++size) {
    std::vector<std::size_t> comb(size);
    for (std::size_t i = 0; i < size; ++i) comb[i] = i;
    do {
      std::vector<Seq> members;
      members.reserve(size);
      for (std::size_t idx : comb) members.push_back(windows[idx]);
      GeneratorSet gen = GeneratorSet::from_members(std::move(members));
      if (static_cast<std::int64_t>(gen.conflict_count()) > conf_cap) {
        ++info.generators_skipped_conflict;
        continue;
      }
      ++info.generators_tried;

      std::uint64_t gen_count = 1;
      for (std::size_t i = 0; i < gen.conflict_count(); ++i) {
        if (gen_count > max_checks / sigma) {
          gen_count = max_checks + 1;
          break;
        }
        gen_count *= sigma;
      }
      if (info.candidates_checked + gen_count > max_checks) {
        return {SolveResult::refused("cssp: candidate budget of " +
                                     std::to_string(max_checks) + " checks exceeded"),
                info};
      }
      for (const Seq& cand : generated_strings(gen)) {
        ++info.candidates_checked;
        if (cssp_feasible_candidate(cand, inst)) {
          info.witness_generator = gen;
          Rational r = cssp_radius(cand, inst);
          return {SolveResult::found(cand, std::move(r)), info};
        }
      }
    } while (detail::next_combination(comb, windows.size()));
  }
  return {SolveResult::none(), info};
}

// Exhaustive oracle over Sigma^L with the same feasibility predicate.
inline SolveResult brute_force_cssp(const CsspInstance& inst,
                                    std::uint64_t max_candidates = kDefaultCsspBudget) {
  inst.validate();
  const std::size_t sigma = inst.alphabet()->size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < inst.L; ++i) {
    if (total > max_candidates / sigma) {
      return SolveResult::refused("cssp brute force: sigma^L exceeds budget");
    }
    total *= sigma;
  }
  std::vector<std::uint8_t> word(inst.L, 0);
  do {
    Seq cand(inst.alphabet(), word);
    if (cssp_feasible_candidate(cand, inst)) {
      Rational r = cssp_radius(cand, inst);
      return SolveResult::found(std::move(cand), std::move(r));
    }
  } while (detail::next_word(word, sigma));
  return SolveResult::none();
}

}  // namespace cstr
