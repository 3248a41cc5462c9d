#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "cstr/instance.hpp"
#include "cstr/preprocess.hpp"
#include "cstr/rng.hpp"
#include "cstr/tree_chain.hpp"
#include "cstr/tree_search.hpp"

namespace cstr {

struct WalkSearchResult {
  std::optional<std::size_t> found;  // node index in the chain
  std::uint64_t rounds_used = 0;
  std::uint64_t walk_steps = 0;
};

namespace detail {

// One exact transition of the tree walk. All row probabilities have a
// common small denominator per node type, so a single bounded uniform
// draw selects the move without floating point.
inline std::size_t walk_step(const TreeChain& chain, std::size_t v,
                             std::mt19937_64& rng) {
  const std::uint64_t b = static_cast<std::uint64_t>(chain.d()) + 1;
  if (chain.is_root(v)) {
    const std::uint64_t r = uniform_below(rng, 2 * b);
    if (r < b) return v;
    return chain.child(v, static_cast<std::uint32_t>(r - b) + 1);
  }
  if (chain.is_leaf(v)) {
    return uniform_below(rng, 2) == 0 ? v : chain.parent(v);
  }
  const std::uint64_t r = uniform_below(rng, 4 * b);
  if (r < 2 * b) return v;
  if (r < 3 * b) return chain.parent(v);
  return chain.child(v, static_cast<std::uint32_t>(r - 3 * b) + 1);
}

// Exact sample from the stationary distribution: pick a layer with
// weights (1, 2, ..., 2, 1)/2d, then a node uniformly inside it.
inline std::size_t sample_stationary(const TreeChain& chain, std::mt19937_64& rng) {
  const std::int64_t d = chain.d();
  const std::uint64_t r = uniform_below(rng, 2 * static_cast<std::uint64_t>(d));
  std::size_t layer;
  if (r == 0) {
    layer = 0;
  } else if (r == 2 * static_cast<std::uint64_t>(d) - 1) {
    layer = static_cast<std::size_t>(d);
  } else {
    layer = static_cast<std::size_t>((r + 1) / 2);
  }
  const std::uint64_t within = uniform_below(rng, chain.layer_size(layer));
  return chain.layer_offset(layer) + static_cast<std::size_t>(within);
}

}  // namespace detail

// Search via random walk: sample a start from pi, check, walk t1 steps,
// repeat up to t2 times. Deterministic for a fixed seed.
inline WalkSearchResult classical_walk_search(const TreeChain& chain,
                                              const std::vector<char>& marked,
                                              std::uint64_t t1, std::uint64_t t2,
                                              std::uint64_t seed) {
  if (t1 < 1 || t2 < 1) {
    throw std::invalid_argument("classical_walk_search: t1, t2 >= 1 required");
  }
  if (marked.size() != chain.node_count()) {
    throw std::invalid_argument("classical_walk_search: marked vector size mismatch");
  }
  std::mt19937_64 rng(seed);
  WalkSearchResult res;
  std::size_t x = detail::sample_stationary(chain, rng);
  for (std::uint64_t round = 1; round <= t2; ++round) {
    res.rounds_used = round;
    if (marked[x]) {
      res.found = x;
      return res;
    }
    for (std::uint64_t s = 0; s < t1; ++s) {
      x = detail::walk_step(chain, x, rng);
    }
    res.walk_steps += t1;
  }
  return res;
}

// Worst-case marked-mass bound: a state sampled from pi is marked with
// probability at least marked_count / (2d (d+1)^d) when only leaves are
// marked; a single marked leaf gives the paper's epsilon.
inline Rational epsilon_marked_bound(std::int64_t d, std::int64_t marked_leaves) {
  if (d < 1) throw std::invalid_argument("epsilon_marked_bound: d >= 1 required");
  if (marked_leaves < 0) {
    throw std::invalid_argument("epsilon_marked_bound: negative count");
  }
  std::int64_t pow = 1;
  for (std::int64_t i = 0; i < d; ++i) pow *= (d + 1);
  return Rational(marked_leaves) / (Rational(2 * d) * Rational(pow));
}

struct MarkingResult {
  std::set<TreeAddress> marked;
  std::vector<std::pair<TreeAddress, WalkHistory>> marked_with_history;
  std::uint64_t nodes_visited = 0;
};

namespace detail {

struct TreeMarker {
  const CspInstance& reduced;
  std::int64_t d;
  MarkingResult result;

  bool is_feasible(const std::vector<std::uint8_t>& cand) const {
    for (const auto& s : reduced.strings) {
      std::int64_t dist = 0;
      for (std::size_t p = 0; p < cand.size(); ++p) dist += (cand[p] != s[p]);
      if (dist > d) return false;
    }
    return true;
  }

  void visit(std::vector<std::uint8_t>& cand, TreeAddress& addr, WalkHistory& hist) {
    ++result.nodes_visited;
    if (is_feasible(cand)) {
      result.marked.insert(addr);
      result.marked_with_history.emplace_back(addr, hist);
    }
    if (addr.layer() == static_cast<std::size_t>(d)) return;

    // replay the branching rule: substitute toward the minimal violating
    // input at its first d+1 mismatch positions; nodes without a
    // violating input pass their candidate through unchanged
    std::size_t violating = 0;
    for (std::size_t i = 0; i < reduced.k(); ++i) {
      std::int64_t dist = 0;
      const Seq& si = reduced.strings[i];
      for (std::size_t p = 0; p < cand.size(); ++p) dist += (cand[p] != si[p]);
      if (dist > d) {
        violating = i + 1;
        break;
      }
    }
    if (violating == 0) {
      for (std::uint32_t b = 1; b <= static_cast<std::uint32_t>(d) + 1; ++b) {
        addr.branches.push_back(b);
        visit(cand, addr, hist);
        addr.branches.pop_back();
      }
      return;
    }
    const Seq& donor = reduced.strings[violating - 1];
    std::vector<std::size_t> branch_positions;
    for (std::size_t p = 0; p < cand.size() &&
                            branch_positions.size() < static_cast<std::size_t>(d) + 1;
         ++p) {
      if (cand[p] != donor[p]) branch_positions.push_back(p);
    }
    for (std::uint32_t b = 1; b <= static_cast<std::uint32_t>(d) + 1; ++b) {
      addr.branches.push_back(b);
      if (b <= branch_positions.size()) {
        const std::size_t pos = branch_positions[b - 1];
        const std::uint8_t saved = cand[pos];
        cand[pos] = donor[pos];
        hist.push(violating, pos);
        visit(cand, addr, hist);
        hist.donors.pop_back();
        hist.positions.pop_back();
        cand[pos] = saved;
      } else {
        visit(cand, addr, hist);
      }
      addr.branches.pop_back();
    }
  }
};

}  // namespace detail

// Bridges the bounded search tree to the walk chain: every tree address
// is mapped to the candidate its modification history builds from s_1,
// and is marked iff that candidate is within d of all inputs. Runs on
// the preprocessed instance; addresses align with build_tree_chain(d).
inline MarkingResult mark_solution_nodes(const CspInstance& inst,
                                         std::uint64_t max_nodes = kDefaultChainNodeCap) {
  inst.validate();
  if (inst.metric.kind != MetricKind::Hamming) {
    throw std::invalid_argument("mark_solution_nodes: Hamming metric required");
  }
  std::uint64_t layer_nodes = 1, total = 0;
  for (std::int64_t l = 0; l <= inst.d; ++l) {
    total += layer_nodes;
    if (total > max_nodes) {
      throw std::length_error("mark_solution_nodes: tree exceeds node cap of " +
                              std::to_string(max_nodes));
    }
    layer_nodes *= static_cast<std::uint64_t>(inst.d) + 1;
  }

  PreprocessResult pre = preprocess(inst);
  detail::TreeMarker marker{pre.reduced, inst.d, MarkingResult{}};
  if (pre.verdict == PreprocessVerdict::Unsolvable) {
    return marker.result;  // nothing can be feasible; empty set
  }
  std::vector<std::uint8_t> cand = pre.reduced.strings[0].codes();
  TreeAddress addr;
  WalkHistory hist;
  marker.visit(cand, addr, hist);
  return marker.result;
}

// Marked flags aligned with a chain's BFS node indexing.
inline std::vector<char> marked_flags(const TreeChain& chain,
                                      const std::set<TreeAddress>& marked) {
  std::vector<char> flags(chain.node_count(), 0);
  for (const auto& addr : marked) flags[chain.index_of(addr)] = 1;
  return flags;
}

}  // namespace cstr
