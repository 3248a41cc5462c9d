#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstr/rational.hpp"

namespace cstr {

constexpr std::uint64_t kDefaultChainNodeCap = 10'000;  // d <= 5 by default

// Node of the perfect (d+1)-ary search tree, addressed by the branch
// taken at each layer: (j_1..j_l), each in 1..d+1, layer l <= d. The
// root is the empty address. Branch values run to d+1, matching the
// (d+1)-way branching and the 1/(4(d+1)) child transition mass.
struct TreeAddress {
  std::vector<std::uint32_t> branches;

  std::size_t layer() const { return branches.size(); }

  friend bool operator==(const TreeAddress& a, const TreeAddress& b) {
    return a.branches == b.branches;
  }
  friend bool operator<(const TreeAddress& a, const TreeAddress& b) {
    return a.branches < b.branches;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < branches.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(branches[i]);
    }
    return s + ")";
  }
};

// The lazy random walk P on the tree, with exact rational transition
// probabilities:
//   root:     stay 1/2, each child 1/(2(d+1))
//   interior: stay 1/2, parent 1/4, each child 1/(4(d+1))
//   leaf:     stay 1/2, parent 1/2
// Nodes are indexed in BFS order; rows are stored sparsely.
class TreeChain {
 public:
  struct Entry {
    std::uint32_t to;
    Rational p;
  };

  std::int64_t d() const { return d_; }
  std::size_t node_count() const { return offsets_.back(); }
  std::size_t layer_count() const { return static_cast<std::size_t>(d_) + 1; }

  std::size_t layer_of(std::size_t idx) const {
    for (std::size_t l = 0; l + 1 < offsets_.size(); ++l) {
      if (idx < offsets_[l + 1]) return l;
    }
    throw std::out_of_range("TreeChain: node index out of range");
  }
  std::size_t layer_offset(std::size_t l) const { return offsets_[l]; }
  std::size_t layer_size(std::size_t l) const {
    return offsets_[l + 1] - offsets_[l];
  }

  bool is_root(std::size_t idx) const { return idx == 0; }
  bool is_leaf(std::size_t idx) const {
    return idx >= offsets_[static_cast<std::size_t>(d_)];
  }

  std::size_t parent(std::size_t idx) const {
    const std::size_t l = layer_of(idx);
    if (l == 0) throw std::invalid_argument("TreeChain: root has no parent");
    const std::size_t rank = idx - offsets_[l];
    return offsets_[l - 1] + rank / branching_();
  }

  // Child along branch j in 1..d+1.
  std::size_t child(std::size_t idx, std::uint32_t branch) const {
    const std::size_t l = layer_of(idx);
    if (l >= static_cast<std::size_t>(d_)) {
      throw std::invalid_argument("TreeChain: leaves have no children");
    }
    if (branch < 1 || branch > branching_()) {
      throw std::out_of_range("TreeChain: branch out of range");
    }
    const std::size_t rank = idx - offsets_[l];
    return offsets_[l + 1] + rank * branching_() + (branch - 1);
  }

  TreeAddress address_of(std::size_t idx) const {
    const std::size_t l = layer_of(idx);
    std::size_t rank = idx - offsets_[l];
    TreeAddress addr;
    addr.branches.assign(l, 0);
    for (std::size_t i = l; i-- > 0;) {
      addr.branches[i] = static_cast<std::uint32_t>(rank % branching_()) + 1;
      rank /= branching_();
    }
    return addr;
  }

  std::size_t index_of(const TreeAddress& addr) const {
    if (addr.layer() > static_cast<std::size_t>(d_)) {
      throw std::out_of_range("TreeChain: address deeper than d");
    }
    std::size_t rank = 0;
    for (std::uint32_t b : addr.branches) {
      if (b < 1 || b > branching_()) {
        throw std::out_of_range("TreeChain: branch value out of range");
      }
      rank = rank * branching_() + (b - 1);
    }
    return offsets_[addr.layer()] + rank;
  }

  const std::vector<Entry>& row(std::size_t idx) const { return rows_[idx]; }
  std::vector<Entry>& mutable_row(std::size_t idx) { return rows_[idx]; }

  Rational probability(std::size_t from, std::size_t to) const {
    for (const Entry& e : rows_[from]) {
      if (e.to == to) return e.p;
    }
    return Rational(0);
  }

  // Directed parent->child edges, the edge set E of the walk.
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = offsets_[1]; v < node_count(); ++v) {
      edges.emplace_back(parent(v), v);
    }
    return edges;
  }

  friend TreeChain build_tree_chain(std::int64_t d, std::uint64_t max_nodes);

 private:
  std::size_t branching_() const { return static_cast<std::size_t>(d_) + 1; }

  std::int64_t d_ = 0;
  std::vector<std::size_t> offsets_;  // layer start indices, plus total
  std::vector<std::vector<Entry>> rows_;
};

inline TreeChain build_tree_chain(std::int64_t d,
                                  std::uint64_t max_nodes = kDefaultChainNodeCap) {
  if (d < 1) throw std::invalid_argument("build_tree_chain: d >= 1 required");
  const std::uint64_t branching = static_cast<std::uint64_t>(d) + 1;
  std::vector<std::size_t> offsets{0};
  std::uint64_t layer_nodes = 1, total = 0;
  for (std::int64_t l = 0; l <= d; ++l) {
    total += layer_nodes;
    if (total > max_nodes) {
      throw std::length_error("build_tree_chain: node count " +
                              std::to_string(total) + "+ exceeds cap of " +
                              std::to_string(max_nodes));
    }
    offsets.push_back(static_cast<std::size_t>(total));
    layer_nodes *= branching;
  }

  TreeChain chain;
  chain.d_ = d;
  chain.offsets_ = std::move(offsets);
  chain.rows_.resize(chain.node_count());

  const Rational half(1, 2);
  const Rational root_child(1, 2 * (d + 1));
  const Rational interior_child(1, 4 * (d + 1));
  const Rational quarter(1, 4);

  for (std::size_t v = 0; v < chain.node_count(); ++v) {
    auto& row = chain.rows_[v];
    row.push_back({static_cast<std::uint32_t>(v), half});
    const std::size_t l = chain.layer_of(v);
    if (l == 0) {
      for (std::uint32_t b = 1; b <= branching; ++b) {
        row.push_back({static_cast<std::uint32_t>(chain.child(v, b)), root_child});
      }
    } else if (l == static_cast<std::size_t>(d)) {
      row.push_back({static_cast<std::uint32_t>(chain.parent(v)), half});
    } else {
      row.push_back({static_cast<std::uint32_t>(chain.parent(v)), quarter});
      for (std::uint32_t b = 1; b <= branching; ++b) {
        row.push_back({static_cast<std::uint32_t>(chain.child(v, b)), interior_child});
      }
    }
  }
  return chain;
}

struct StationaryDistribution {
  std::vector<Rational> layer;  // pi-tilde over layers 0..d
  std::vector<Rational> node;   // pi over nodes
};

// Closed form from the layer chain: pi~_0 = pi~_d = 1/(2d), 1/d between,
// spread uniformly within each layer: pi_j = pi~_l / (d+1)^l.
inline StationaryDistribution stationary_distribution(const TreeChain& chain) {
  const std::int64_t d = chain.d();
  StationaryDistribution out;
  out.layer.resize(chain.layer_count());
  for (std::size_t l = 0; l < chain.layer_count(); ++l) {
    out.layer[l] = (l == 0 || l == static_cast<std::size_t>(d))
                       ? Rational(1, 2 * d)
                       : Rational(1, d);
  }
  out.node.resize(chain.node_count());
  for (std::size_t v = 0; v < chain.node_count(); ++v) {
    const std::size_t l = chain.layer_of(v);
    out.node[v] = out.layer[l] / Rational(static_cast<std::int64_t>(chain.layer_size(l)));
  }
  return out;
}

inline bool rows_sum_to_one(const TreeChain& chain) {
  for (std::size_t v = 0; v < chain.node_count(); ++v) {
    Rational sum(0);
    for (const auto& e : chain.row(v)) sum += e.p;
    if (sum != Rational(1)) return false;
  }
  return true;
}

// pi P = pi, exact.
inline bool is_stationary(const TreeChain& chain, const std::vector<Rational>& pi) {
  std::vector<Rational> acc(chain.node_count(), Rational(0));
  for (std::size_t v = 0; v < chain.node_count(); ++v) {
    for (const auto& e : chain.row(v)) {
      acc[e.to] += pi[v] * e.p;
    }
  }
  for (std::size_t v = 0; v < chain.node_count(); ++v) {
    if (acc[v] != pi[v]) return false;
  }
  return true;
}

// Detailed balance pi_x p_xy = pi_y p_yx on every edge; for this chain
// (in-degree 1 below the root, so every loop doubles back on itself)
// this is equivalent to Kolmogorov's loop criterion.
inline bool check_reversibility(const TreeChain& chain,
                                const std::vector<Rational>& pi) {
  for (std::size_t v = 0; v < chain.node_count(); ++v) {
    for (const auto& e : chain.row(v)) {
      if (e.to == v) continue;
      if (pi[v] * e.p != pi[e.to] * chain.probability(e.to, v)) return false;
    }
  }
  return true;
}

// The layer-projected chain Q: tri-diagonal with reflecting ends.
struct LayerChain {
  std::int64_t d = 0;
  std::vector<std::vector<Rational>> rows;  // (d+1) x (d+1)
  std::vector<Rational> stationary;         // pi-tilde
};

inline LayerChain build_layer_chain(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("build_layer_chain: d >= 1 required");
  const std::size_t m = static_cast<std::size_t>(d) + 1;
  LayerChain q;
  q.d = d;
  q.rows.assign(m, std::vector<Rational>(m, Rational(0)));
  const Rational half(1, 2), quarter(1, 4);
  q.rows[0][0] = half;
  q.rows[0][1] = half;
  q.rows[m - 1][m - 1] = half;
  q.rows[m - 1][m - 2] = half;
  for (std::size_t l = 1; l + 1 < m; ++l) {
    q.rows[l][l - 1] = quarter;
    q.rows[l][l] = half;
    q.rows[l][l + 1] = quarter;
  }
  q.stationary.resize(m);
  for (std::size_t l = 0; l < m; ++l) {
    q.stationary[l] = (l == 0 || l == m - 1) ? Rational(1, 2 * d) : Rational(1, d);
  }
  return q;
}

}  // namespace cstr
