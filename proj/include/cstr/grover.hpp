#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "cstr/rng.hpp"

namespace cstr {

constexpr std::uint64_t kMaxStatevectorSize = 1ULL << 20;

enum class GroverMode { ClosedForm, Statevector };

struct GroverRun {
  std::uint64_t search_space = 0;  // N
  std::uint64_t marked_count = 0;  // |M|
  std::uint64_t iterations = 0;    // t
  double success_probability = 0.0;
  std::uint64_t oracle_queries = 0;  // one per iteration
  GroverMode mode = GroverMode::ClosedForm;
};

// sin^2((2t+1) asin(sqrt(m/N))), the exact success probability of t
// Grover iterations with m marked items out of N.
inline double grover_success_closed_form(std::uint64_t n, std::uint64_t m,
                                         std::uint64_t t) {
  if (n == 0) throw std::invalid_argument("grover: N = 0");
  if (m > n) throw std::invalid_argument("grover: |M| > N");
  if (m == 0) return 0.0;
  const double theta = std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(n)));
  const double s = std::sin(static_cast<double>(2 * t + 1) * theta);
  return s * s;
}

// Grover iterations on an explicit amplitude vector (all amplitudes stay
// real): sign-flip on the marked entries, then inversion about the mean.
inline double grover_success_statevector(std::uint64_t n,
                                         const std::vector<std::uint64_t>& marked,
                                         std::uint64_t t) {
  if (n == 0) throw std::invalid_argument("grover: N = 0");
  if (marked.size() > n) throw std::invalid_argument("grover: |M| > N");
  if (n > kMaxStatevectorSize) {
    throw std::length_error("grover: statevector mode capped at 2^20 amplitudes");
  }
  for (std::uint64_t i : marked) {
    if (i >= n) throw std::out_of_range("grover: marked index out of range");
  }
  std::vector<double> amp(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (std::uint64_t it = 0; it < t; ++it) {
    for (std::uint64_t i : marked) amp[i] = -amp[i];
    double mean = 0.0;
    for (double a : amp) mean += a;
    mean /= static_cast<double>(n);
    for (double& a : amp) a = 2.0 * mean - a;
  }
  double p = 0.0;
  for (std::uint64_t i : marked) p += amp[i] * amp[i];
  return p;
}

inline double grover_success_statevector(std::uint64_t n, std::uint64_t m,
                                         std::uint64_t t) {
  std::vector<std::uint64_t> marked(m);
  for (std::uint64_t i = 0; i < m; ++i) marked[i] = i;
  return grover_success_statevector(n, marked, t);
}

inline GroverRun grover_simulate(std::uint64_t n, std::uint64_t m, std::uint64_t t,
                                 GroverMode mode = GroverMode::ClosedForm) {
  GroverRun run;
  run.search_space = n;
  run.marked_count = m;
  run.iterations = t;
  run.oracle_queries = t;
  run.mode = mode;
  run.success_probability = (mode == GroverMode::ClosedForm)
                                ? grover_success_closed_form(n, m, t)
                                : grover_success_statevector(n, m, t);
  return run;
}

// floor((pi/4) sqrt(N/m)), at least 1.
inline std::uint64_t grover_optimal_iterations(std::uint64_t n, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("grover_optimal_iterations: m = 0");
  if (m > n) throw std::invalid_argument("grover_optimal_iterations: m > N");
  const double t = std::floor((std::acos(-1.0) / 4.0) *
                              std::sqrt(static_cast<double>(n) / static_cast<double>(m)));
  return t < 1.0 ? 1 : static_cast<std::uint64_t>(t);
}

struct MinFindRun {
  std::size_t argmin = 0;
  std::uint64_t modeled_queries = 0;
  std::uint64_t rounds = 0;
};

// Classical simulation of the quantum minimum-finding loop: keep a
// threshold, count the elements strictly below it, charge the round
// ceil(pi/4 sqrt(N/c)) modeled oracle queries, and move the threshold to
// a uniformly random smaller element until none is left. The returned
// index is always a true argmin (ties break to the lowest index).
inline MinFindRun min_find_simulate(const std::vector<double>& values,
                                    std::uint64_t seed) {
  if (values.empty()) {
    throw std::invalid_argument("min_find_simulate: empty input");
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = values.size();
  MinFindRun run;

  std::size_t threshold = static_cast<std::size_t>(uniform_below(rng, n));
  while (true) {
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i] < values[threshold]) below.push_back(i);
    }
    if (below.empty()) break;
    ++run.rounds;
    run.modeled_queries += static_cast<std::uint64_t>(
        std::ceil((std::acos(-1.0) / 4.0) *
                  std::sqrt(static_cast<double>(n) / static_cast<double>(below.size()))));
    threshold = below[static_cast<std::size_t>(uniform_below(rng, below.size()))];
  }

  // normalize to the canonical argmin for tie-breaking
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (values[i] < values[best]) best = i;
  }
  run.argmin = best;
  return run;
}

}  // namespace cstr
