#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstr/instance.hpp"
#include "cstr/rational.hpp"

namespace cstr {

struct CostParams {
  std::int64_t sigma = 4;
  std::int64_t n = 1;
  std::int64_t k = 1;
  std::int64_t d = 0;
  MetricKind metric = MetricKind::Hamming;
};

// One algorithm's cost in log2 domain. Costs like d^{(d+5)/2} overflow
// integers almost immediately; regime comparisons only need ordering, so
// everything is carried as log2 doubles. Polylog factors hidden by the
// soft-O are excluded and noted.
struct CostProfile {
  std::string algorithm;
  std::string metric;
  std::string runtime_term;  // the closed-form term, as printed in reports
  std::string optimality;    // optimality-conditions tag (quantum CSP rows)
  double log2_cost = 0.0;
  double log2_cost_hi = 0.0;  // upper end when the cost is an interval
  bool is_interval = false;
  std::map<std::string, double> components;   // named log2 cost terms (S, U, C, ...)
  std::map<std::string, std::string> extras;  // exact side values (epsilon, delta)
  std::string notes;
};

namespace detail {

inline double lg(double x) { return std::log2(x); }

// log2(2^a + 2^b), stable for spread exponents.
inline double log2_sum(double a, double b) {
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

inline double distance_cost_log2(MetricKind metric, std::int64_t n) {
  return metric == MetricKind::Levenshtein ? 2.0 * lg(static_cast<double>(n))
                                           : lg(static_cast<double>(n));
}

}  // namespace detail

inline std::vector<CostProfile> cost_report(const CostParams& p) {
  if (p.sigma < 2 || p.n < 1 || p.k < 1 || p.d < 0) {
    throw std::invalid_argument("cost_report: need sigma >= 2, n >= 1, k >= 1, d >= 0");
  }
  using detail::lg;
  const double sigma = static_cast<double>(p.sigma);
  const double n = static_cast<double>(p.n);
  const double k = static_cast<double>(p.k);
  const double d = static_cast<double>(p.d);
  const double lg_d_cost = detail::distance_cost_log2(p.metric, p.n);
  const double log2_d = p.d >= 1 ? lg(d) : 0.0;

  std::vector<CostProfile> out;

  {
    CostProfile c;
    c.algorithm = "quantum-trivial";
    c.metric = "any weighted edit";
    c.runtime_term = "sigma^{n/2} sqrt(k) D(n)";
    c.optimality = "sigma small, d and k large";
    c.log2_cost = (n / 2.0) * lg(sigma) + 0.5 * lg(k) + lg_d_cost;
    c.log2_cost_hi = c.log2_cost;
    c.components["sigma^{n/2}"] = (n / 2.0) * lg(sigma);
    c.components["sqrt(k)"] = 0.5 * lg(k);
    c.components["D(n)"] = lg_d_cost;
    c.notes = "soft-O polylog factors omitted";
    out.push_back(std::move(c));
  }
  {
    CostProfile c;
    c.algorithm = "classical-trivial";
    c.metric = "any weighted edit";
    c.runtime_term = "sigma^n k D(n)";
    c.log2_cost = n * lg(sigma) + lg(k) + lg_d_cost;
    c.log2_cost_hi = c.log2_cost;
    out.push_back(std::move(c));
  }
  {
    CostProfile c;
    c.algorithm = "quantum-walk";
    c.metric = "hamming";
    c.runtime_term = "kn + k^2 d^{(d+5)/2}";
    c.optimality = "d small";
    const double linear = lg(k) + lg(n);
    c.components["kn"] = linear;
    if (p.d >= 1) {
      const double walk = 2.0 * lg(k) + ((d + 5.0) / 2.0) * log2_d;
      c.components["k^2 d^{(d+5)/2}"] = walk;
      c.log2_cost = detail::log2_sum(linear, walk);
      c.components["S = k^2 d^2"] = 2.0 * lg(k) + 2.0 * log2_d;
      c.components["U = k^2 d"] = 2.0 * lg(k) + log2_d;
      c.components["C = k^2 d"] = 2.0 * lg(k) + log2_d;
      std::int64_t pow = 1;
      for (std::int64_t i = 0; i < p.d && pow < (INT64_MAX / (p.d + 1)); ++i) {
        pow *= (p.d + 1);
      }
      c.extras["epsilon"] = (Rational(1) / (Rational(2 * p.d) * Rational(pow))).to_string();
      c.extras["delta_bound"] = Rational(1, 512 * p.d * p.d).to_string();
    } else {
      c.log2_cost = linear;  // d = 0: the walk term degenerates away
    }
    c.log2_cost_hi = c.log2_cost;
    c.notes = "soft-O polylog factors omitted";
    out.push_back(std::move(c));
  }
  {
    CostProfile c;
    c.algorithm = "classical-treesearch";
    c.metric = "hamming";
    c.runtime_term = "kn + k d^{d+1}";
    const double linear = lg(k) + lg(n);
    c.components["kn"] = linear;
    if (p.d >= 1) {
      const double tree = lg(k) + (d + 1.0) * log2_d;
      c.components["k d^{d+1}"] = tree;
      c.log2_cost = detail::log2_sum(linear, tree);
    } else {
      c.log2_cost = linear;
    }
    c.log2_cost_hi = c.log2_cost;
    out.push_back(std::move(c));
  }
  {
    CostProfile c;
    c.algorithm = "quantum-dp";
    c.metric = "levenshtein";
    c.runtime_term = "sigma 2^k T(n)^{2k}";
    c.optimality = "k small";
    c.is_interval = true;
    // T(n) is only known to satisfy n/e <= T(n) < n
    c.log2_cost = lg(sigma) + k + 2.0 * k * (lg(n) - std::log2(std::exp(1.0)));
    c.log2_cost_hi = lg(sigma) + k + 2.0 * k * lg(n);
    c.notes = "T(n) in [n/e, n); reported as an interval";
    out.push_back(std::move(c));
  }
  {
    CostProfile c;
    c.algorithm = "classical-dp";
    c.metric = "levenshtein";
    c.runtime_term = "sigma 2^k n^{2k}";
    c.log2_cost = lg(sigma) + k + 2.0 * k * lg(n);
    c.log2_cost_hi = c.log2_cost;
    out.push_back(std::move(c));
  }
  {
    CostProfile c;
    c.algorithm = "quantum-cssp";
    c.metric = "hamming";
    c.runtime_term = "sigma^{d(log d + 2)/2} (kn)^{log(d)/2} k^2 n^3";
    const double poly = 2.0 * lg(k) + 3.0 * lg(n);
    if (p.d >= 1) {
      c.log2_cost = (d * (log2_d + 2.0) / 2.0) * lg(sigma) +
                    (log2_d / 2.0) * lg(k * n) + poly;
    } else {
      c.log2_cost = poly;
    }
    c.log2_cost_hi = c.log2_cost;
    c.notes = "soft-O polylog factors omitted";
    out.push_back(std::move(c));
  }
  {
    CostProfile c;
    c.algorithm = "classical-cssp";
    c.metric = "hamming";
    c.runtime_term = "sigma^{d(log d + 2)} (kn)^{log d} k^3 n^4";
    const double poly = 3.0 * lg(k) + 4.0 * lg(n);
    if (p.d >= 1) {
      c.log2_cost = (d * (log2_d + 2.0)) * lg(sigma) + log2_d * lg(k * n) + poly;
    } else {
      c.log2_cost = poly;
    }
    c.log2_cost_hi = c.log2_cost;
    out.push_back(std::move(c));
  }
  return out;
}

// The three quantum CSP rows of the summary table, as fixed strings.
struct SummaryRow {
  std::string algorithm;
  std::string metric;
  std::string runtime;
  std::string optimality;
};

inline std::vector<SummaryRow> csp_summary_table() {
  return {
      {"Trivial Search", "any weighted edit", "sigma^{n/2} sqrt(k) D(n)",
       "sigma small, d and k large"},
      {"Random Walk", "hamming", "kn + k^2 d^{(d+5)/2}", "d small"},
      {"Dynamic Programming", "levenshtein", "sigma 2^k T(n)^{2k}", "k small"},
  };
}

enum class KGrowth { Constant, Logarithmic, Polynomial, Exponential };

inline const char* k_growth_name(KGrowth g) {
  switch (g) {
    case KGrowth::Constant: return "O(1)";
    case KGrowth::Logarithmic: return "O(log n)";
    case KGrowth::Polynomial: return "O(n^p)";
    case KGrowth::Exponential: return "O(2^{qn})";
  }
  return "?";
}

struct RegimeEntry {
  std::string algorithm;
  std::string dominant;  // dominant scaling with d = beta*n substituted
  std::string regime;    // poly. / super-poly. / exp. / ...
};

// Regime classification for the bioinformatics setting d = beta*n,
// sigma = 4, as the number of inputs k grows.
inline std::vector<RegimeEntry> regime_report(double beta, KGrowth k_growth) {
  if (!(beta > 0.0) || beta >= 1.0) {
    throw std::invalid_argument("regime_report: beta must be in (0,1)");
  }
  std::vector<RegimeEntry> rows;
  rows.push_back({"Trivial Search",
                  k_growth == KGrowth::Exponential ? "2^{n + qn/2}" : "2^n",
                  "exp."});
  rows.push_back({"Random Walk", "2^{beta n log(n)/2}", "slightly super-exp."});
  switch (k_growth) {
    case KGrowth::Constant:
      rows.push_back({"Dynamic Programming", "T(n)^{O(1)}", "poly."});
      break;
    case KGrowth::Logarithmic:
      rows.push_back({"Dynamic Programming", "T(n)^{O(log n)}", "super-poly."});
      break;
    case KGrowth::Polynomial:
      rows.push_back({"Dynamic Programming", "T(n)^{2 n^p}", "super-exp."});
      break;
    case KGrowth::Exponential:
      rows.push_back({"Dynamic Programming", "T(n)^{2^{qn+1}}", "doubly exp."});
      break;
  }
  return rows;
}

}  // namespace cstr
