#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cstr/congestion.hpp"
#include "cstr/tree_chain.hpp"

namespace cstr {

constexpr std::size_t kDefaultDenseEigenCap = 1'000;  // d <= 4
constexpr std::size_t kDefaultExactConductanceCap = 13;  // d <= 2

enum class SpectralMode { Dense, LayerOnly };

struct SpectralReport {
  std::int64_t d = 0;
  SpectralMode mode = SpectralMode::Dense;
  std::vector<double> eigenvalues;  // full spectrum of P, descending (dense mode)
  double lambda2 = 0.0;
  double delta = 0.0;       // 1 - lambda2 of the full chain (dense mode)
  double min_eigenvalue = 0.0;
  double delta_layer = 0.0;  // gap of the layer chain Q, always available
  std::vector<Rational> rho;  // congestion per layer (closed form)
  Rational rho_max;
  Rational bound_congestion;  // 1/(8 rho_0^2)
  Rational bound_paper;       // 2^-9 d^-2
};

namespace detail {

inline std::vector<double> symmetric_spectrum(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral: eigensolver failed to converge");
  }
  std::vector<double> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

inline std::vector<double> layer_chain_spectrum(const LayerChain& q) {
  const std::size_t m = q.rows.size();
  Eigen::MatrixXd s(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // symmetrize with D^{1/2} Q D^{-1/2}, D = diag(pi~)
      const double pij = q.rows[i][j].to_double();
      const double scale = std::sqrt(q.stationary[i].to_double() /
                                     q.stationary[j].to_double());
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = pij * scale;
    }
  }
  // enforce exact symmetry against floating-point noise
  s = (s + s.transpose()) / 2.0;
  return symmetric_spectrum(s);
}

}  // namespace detail

// Full spectrum of P through the similarity transform D^{1/2} P D^{-1/2}
// with D = diag(pi), which is symmetric for a reversible chain. Above the
// dense cap only the layer chain is solved and the report says so.
inline SpectralReport spectral_gap(const TreeChain& chain,
                                   std::size_t dense_cap_nodes = kDefaultDenseEigenCap) {
  const std::int64_t d = chain.d();
  SpectralReport rep;
  rep.d = d;
  for (std::int64_t l = 0; l < d; ++l) rep.rho.push_back(congestion_closed_form(d, l));
  rep.rho_max = congestion_rho0(d);
  rep.bound_congestion = Rational(1) / (Rational(8) * rep.rho_max * rep.rho_max);
  rep.bound_paper = Rational(1, 512 * d * d);

  const LayerChain layer = build_layer_chain(d);
  const std::vector<double> layer_ev = detail::layer_chain_spectrum(layer);
  rep.delta_layer = 1.0 - layer_ev[1];

  if (chain.node_count() > dense_cap_nodes) {
    rep.mode = SpectralMode::LayerOnly;
    rep.eigenvalues = layer_ev;
    rep.lambda2 = layer_ev[1];
    rep.delta = rep.delta_layer;
    rep.min_eigenvalue = layer_ev.back();
    return rep;
  }

  rep.mode = SpectralMode::Dense;
  const StationaryDistribution pi = stationary_distribution(chain);
  const std::size_t n = chain.node_count();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const double pix = pi.node[x].to_double();
    for (const auto& e : chain.row(x)) {
      const double piy = pi.node[e.to].to_double();
      s(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(e.to)) =
          e.p.to_double() * std::sqrt(pix / piy);
    }
  }
  s = (s + s.transpose()) / 2.0;
  rep.eigenvalues = detail::symmetric_spectrum(s);
  rep.lambda2 = rep.eigenvalues[1];
  rep.delta = 1.0 - rep.lambda2;
  rep.min_eigenvalue = rep.eigenvalues.back();
  return rep;
}

enum class ConductanceMode { Exact, Bound };

struct ConductanceReport {
  ConductanceMode mode = ConductanceMode::Bound;
  Rational phi;          // exact conductance (exact mode only)
  Rational phi_upper;    // min over layer cuts; upper bound in both modes
  Rational lower_bound;  // 1/(2 rho_0)
};

// Exact mode minimizes the bottleneck ratio over every subset with
// pi(S) <= 1/2 (2^|Omega| subsets, so d <= 2 by default); bound mode
// evaluates layer cuts only together with the congestion lower bound.
inline ConductanceReport conductance(const TreeChain& chain,
                                     std::size_t exact_cap_nodes = kDefaultExactConductanceCap) {
  const StationaryDistribution pi = stationary_distribution(chain);
  const std::size_t n = chain.node_count();
  const Rational half(1, 2);
  ConductanceReport rep;
  rep.lower_bound = Rational(1) / (Rational(2) * congestion_rho0(chain.d()));

  // layer cuts S = layers 0..l
  bool have_upper = false;
  for (std::size_t l = 0; l + 1 < chain.layer_count(); ++l) {
    const std::size_t cut = chain.layer_offset(l + 1);
    Rational mass(0);
    for (std::size_t v = 0; v < cut; ++v) mass += pi.node[v];
    Rational flow(0);
    for (std::size_t v = 0; v < cut; ++v) {
      for (const auto& e : chain.row(v)) {
        if (e.to >= cut) flow += pi.node[v] * e.p;
      }
    }
    const Rational denom = mass <= half ? mass : Rational(1) - mass;
    const Rational ratio = flow / denom;
    if (!have_upper || ratio < rep.phi_upper) {
      rep.phi_upper = ratio;
      have_upper = true;
    }
  }

  if (n <= exact_cap_nodes && n < 64) {
    rep.mode = ConductanceMode::Exact;
    bool have = false;
    const std::uint64_t limit = 1ULL << n;
    for (std::uint64_t mask = 1; mask + 1 < limit; ++mask) {
      Rational mass(0);
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1) mass += pi.node[v];
      }
      if (mass > half) continue;
      Rational flow(0);
      for (std::size_t v = 0; v < n; ++v) {
        if (!(mask >> v & 1)) continue;
        for (const auto& e : chain.row(v)) {
          if (!(mask >> e.to & 1)) flow += pi.node[v] * e.p;
        }
      }
      const Rational ratio = flow / mass;
      if (!have || ratio < rep.phi) {
        rep.phi = ratio;
        have = true;
      }
    }
  }
  return rep;
}

// Mixing-time sandwich for a reversible chain:
//   log(2) (1/delta - 1)  <=  t_mix  <=  (1/delta) log(4/pi_min).
inline std::pair<double, double> mixing_time_bounds(double delta,
                                                    const Rational& pi_min) {
  if (!(delta > 0.0) || delta > 1.0) {
    throw std::invalid_argument("mixing_time_bounds: delta must be in (0,1]");
  }
  if (!(pi_min > Rational(0)) || pi_min > Rational(1)) {
    throw std::invalid_argument("mixing_time_bounds: pi_min must be in (0,1]");
  }
  const double lower = std::log(2.0) * (1.0 / delta - 1.0);
  const double upper = (1.0 / delta) * std::log(4.0 / pi_min.to_double());
  return {lower, upper};
}

}  // namespace cstr
