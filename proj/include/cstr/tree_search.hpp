#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cstr/instance.hpp"
#include "cstr/preprocess.hpp"

namespace cstr {

// History of modifications that rebuilds a candidate from s_1: donor
// string indices (1-based, as in the search-tree data structure D(j))
// and the positions that were substituted, applied in order.
struct WalkHistory {
  std::vector<std::size_t> donors;     // each in [1..k]
  std::vector<std::size_t> positions;  // each < reduced length

  std::size_t depth() const { return donors.size(); }

  void push(std::size_t donor, std::size_t position) {
    donors.push_back(donor);
    positions.push_back(position);
  }
};

// Rebuilds the candidate string from s_1 by applying the recorded
// substitutions in order; later entries win on position collisions.
inline Seq candidate_from_history(const Seq& s1, const WalkHistory& h,
                                  const CspInstance& inst) {
  if (h.donors.size() != h.positions.size()) {
    throw std::invalid_argument("candidate_from_history: ragged history");
  }
  if (h.depth() > static_cast<std::size_t>(inst.d)) {
    throw std::invalid_argument("candidate_from_history: depth exceeds d");
  }
  std::vector<std::uint8_t> codes = s1.codes();
  for (std::size_t j = 0; j < h.depth(); ++j) {
    const std::size_t donor = h.donors[j];
    const std::size_t pos = h.positions[j];
    if (donor < 1 || donor > inst.k()) {
      throw std::out_of_range("candidate_from_history: donor index out of range");
    }
    if (pos >= codes.size() || pos >= inst.strings[donor - 1].size()) {
      throw std::out_of_range("candidate_from_history: position out of range");
    }
    codes[pos] = inst.strings[donor - 1][pos];
  }
  return Seq(s1.alphabet(), std::move(codes));
}

struct SearchStats {
  std::uint64_t nodes_expanded = 0;   // recursive invocations
  std::uint64_t max_depth = 0;
  std::uint64_t pruned_by_budget = 0;  // delta_d < 0 cut-offs
  std::uint64_t pruned_by_bound = 0;   // d_H(s, s_i) > d + delta_d cut-offs
};

// Perfect-tree node bound: sum_{l=0}^{d+1} (d+1)^l.
inline std::uint64_t tree_search_node_bound(std::int64_t d) {
  std::uint64_t total = 0, layer = 1;
  for (std::int64_t l = 0; l <= d + 1; ++l) {
    total += layer;
    layer *= static_cast<std::uint64_t>(d + 1);
  }
  return total;
}

namespace detail {

struct TreeSearcher {
  const CspInstance& inst;  // reduced instance
  std::int64_t d;
  SearchStats stats;

  // Recursion of the bounded search tree: modify the candidate toward the
  // minimal violating input, branching over the first d+1 mismatch
  // positions in ascending order.
  bool search(std::vector<std::uint8_t>& s, std::int64_t delta_d,
              std::uint64_t depth, std::vector<std::uint8_t>& out) {
    ++stats.nodes_expanded;
    if (depth > stats.max_depth) stats.max_depth = depth;

    if (delta_d < 0) {
      ++stats.pruned_by_budget;
      return false;
    }

    // mismatch counts double as the bound check and candidate acceptance
    std::size_t violating = 0;  // 1-based; 0 = none
    for (std::size_t i = 0; i < inst.k(); ++i) {
      std::int64_t dist = 0;
      const Seq& si = inst.strings[i];
      for (std::size_t p = 0; p < s.size(); ++p) dist += (s[p] != si[p]);
      if (dist > d + delta_d) {
        ++stats.pruned_by_bound;
        return false;
      }
      if (violating == 0 && dist > d) violating = i + 1;
    }
    if (violating == 0) {
      out = s;
      return true;
    }

    const Seq& donor = inst.strings[violating - 1];
    std::vector<std::size_t> branch_positions;
    for (std::size_t p = 0; p < s.size() &&
                            branch_positions.size() < static_cast<std::size_t>(d) + 1;
         ++p) {
      if (s[p] != donor[p]) branch_positions.push_back(p);
    }
    for (std::size_t p : branch_positions) {
      const std::uint8_t saved = s[p];
      s[p] = donor[p];
      if (search(s, delta_d - 1, depth + 1, out)) {
        s[p] = saved;
        return true;
      }
      s[p] = saved;
    }
    return false;
  }
};

}  // namespace detail

// Bounded-search-tree CSP solver for the Hamming metric. Preprocessing is
// applied internally; the returned center is in original coordinates.
inline std::pair<SolveResult, SearchStats> tree_search(const CspInstance& inst) {
  inst.validate();
  if (inst.metric.kind != MetricKind::Hamming) {
    throw std::invalid_argument("tree_search: Hamming metric required");
  }
  PreprocessResult pre = preprocess(inst);
  if (pre.verdict == PreprocessVerdict::Unsolvable) {
    return {SolveResult::none(), SearchStats{}};
  }

  detail::TreeSearcher searcher{pre.reduced, inst.d, SearchStats{}};
  std::vector<std::uint8_t> start = pre.reduced.strings[0].codes();
  std::vector<std::uint8_t> found;
  const bool ok = searcher.search(start, inst.d, 0, found);
  if (!ok) return {SolveResult::none(), searcher.stats};

  Seq center = pre.reinsert(Seq(inst.alphabet(), std::move(found)));
  Rational r = radius(center, inst);
  return {SolveResult::found(std::move(center), std::move(r)), searcher.stats};
}

}  // namespace cstr
