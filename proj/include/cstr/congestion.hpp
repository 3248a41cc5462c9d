#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cstr/rational.hpp"
#include "cstr/tree_chain.hpp"

namespace cstr {

constexpr std::size_t kDefaultCongestionDirectCap = 100;  // d <= 3

// rho_l for an edge from layer l to l+1, from the closed form
//   rho_l = 2(2(d-l)-1)(2d(d+1)^{l+1} - 2(d-l) + 1) / (d(d+1)^{l+1}),
// maximised at l = 0 where it reduces to 2(2d-1)(2d^2+1)/(d(d+1)).
inline Rational congestion_closed_form(std::int64_t d, std::int64_t l) {
  if (d < 1 || l < 0 || l >= d) {
    throw std::invalid_argument("congestion_closed_form: need 0 <= l < d");
  }
  std::int64_t pow = 1;
  for (std::int64_t i = 0; i <= l; ++i) pow *= (d + 1);
  const Rational a(2 * (d - l) - 1);
  const Rational b = Rational(2 * d) * Rational(pow) - Rational(2 * (d - l)) + Rational(1);
  return Rational(2) * a * b / (Rational(d) * Rational(pow));
}

inline Rational congestion_rho0(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("congestion_rho0: d >= 1 required");
  return Rational(2) * Rational(2 * d - 1) * Rational(2 * d * d + 1) /
         (Rational(d) * Rational(d + 1));
}

struct CongestionReport {
  std::vector<Rational> rho;         // closed form, layers 0..d-1
  Rational rho_max;
  std::vector<Rational> rho_direct;  // path enumeration; empty if skipped
  bool direct_ran = false;
};

namespace detail {

// Edges (as parent-side node index of the child endpoint) on the unique
// simple path between two distinct nodes, through their lowest common
// ancestor. Each tree edge is identified by its child node.
inline std::vector<std::size_t> path_edges(const TreeChain& chain, std::size_t x,
                                           std::size_t y) {
  std::vector<std::size_t> edges;
  std::size_t a = x, b = y;
  std::size_t la = chain.layer_of(a), lb = chain.layer_of(b);
  while (la > lb) {
    edges.push_back(a);
    a = chain.parent(a);
    --la;
  }
  while (lb > la) {
    edges.push_back(b);
    b = chain.parent(b);
    --lb;
  }
  while (a != b) {
    edges.push_back(a);
    edges.push_back(b);
    a = chain.parent(a);
    b = chain.parent(b);
  }
  return edges;
}

}  // namespace detail

// Closed-form congestion per layer, optionally cross-checked by literally
// walking every canonical path and applying the congestion formula edge
// by edge. Ordered pairs (x,y) and (y,x) both count, which is the
// explicit factor 2 of the derivation; self-edges carry zero load since
// no simple path uses them.
inline CongestionReport congestion(const TreeChain& chain,
                                   const std::vector<Rational>& pi,
                                   std::size_t direct_cap_nodes = kDefaultCongestionDirectCap) {
  const std::int64_t d = chain.d();
  CongestionReport rep;
  for (std::int64_t l = 0; l < d; ++l) {
    rep.rho.push_back(congestion_closed_form(d, l));
  }
  rep.rho_max = rep.rho.front();
  for (const auto& r : rep.rho) {
    if (r > rep.rho_max) rep.rho_max = r;
  }

  if (chain.node_count() <= direct_cap_nodes) {
    rep.direct_ran = true;
    const std::size_t n = chain.node_count();
    std::vector<Rational> load(n, Rational(0));  // keyed by child endpoint
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        const Rational w = pi[x] * pi[y];
        for (std::size_t child_end : detail::path_edges(chain, x, y)) {
          load[child_end] += w;
        }
      }
    }
    rep.rho_direct.assign(static_cast<std::size_t>(d), Rational(0));
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (std::size_t v = 1; v < n; ++v) {
      const std::size_t u = chain.parent(v);
      const std::size_t l = chain.layer_of(u);
      const Rational capacity = pi[u] * chain.probability(u, v);
      if (capacity.is_zero()) {
        throw std::logic_error("congestion: tree edge with zero capacity");
      }
      const Rational rho_edge = load[v] / capacity;
      if (!seen[l]) {
        rep.rho_direct[l] = rho_edge;
        seen[l] = true;
      } else if (rep.rho_direct[l] != rho_edge) {
        throw std::logic_error(
            "congestion: edges within one layer disagree (symmetry broken)");
      }
    }
  }
  return rep;
}

}  // namespace cstr
