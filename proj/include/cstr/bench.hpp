#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cstr/dp_levenshtein.hpp"
#include "cstr/exhaustive.hpp"
#include "cstr/instance.hpp"
#include "cstr/rng.hpp"
#include "cstr/tree_search.hpp"

namespace cstr {

struct PlantedInstance {
  CspInstance instance;
  Seq center;  // hidden center; radius(center) <= d by construction
};

// Synthetic feasible instance: sample a center uniformly, then derive
// each input by substituting r_i ~ U[0,d] distinct positions to a
// different symbol. Byte-identical output for a fixed seed.
inline PlantedInstance gen_planted_instance(const AlphabetPtr& alphabet,
                                            std::size_t n, std::size_t k,
                                            std::int64_t d, std::uint64_t seed) {
  if (d < 0 || static_cast<std::size_t>(d) > n) {
    throw std::invalid_argument("gen_planted_instance: need 0 <= d <= n");
  }
  if (k < 1) throw std::invalid_argument("gen_planted_instance: k >= 1 required");
  std::mt19937_64 rng(seed);
  const std::size_t sigma = alphabet->size();

  std::vector<std::uint8_t> center(n);
  for (auto& c : center) c = static_cast<std::uint8_t>(uniform_below(rng, sigma));

  PlantedInstance out;
  out.instance.d = d;
  out.instance.metric = Metric::hamming();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint8_t> s = center;
    const std::uint64_t subs = uniform_below(rng, static_cast<std::uint64_t>(d) + 1);
    // choose `subs` distinct positions by partial Fisher-Yates
    std::vector<std::size_t> positions(n);
    for (std::size_t p = 0; p < n; ++p) positions[p] = p;
    for (std::uint64_t j = 0; j < subs; ++j) {
      const std::size_t pick =
          static_cast<std::size_t>(j + uniform_below(rng, n - j));
      std::swap(positions[j], positions[pick]);
      const std::size_t pos = positions[j];
      const std::uint8_t offset =
          static_cast<std::uint8_t>(1 + uniform_below(rng, sigma - 1));
      s[pos] = static_cast<std::uint8_t>((s[pos] + offset) % sigma);
    }
    out.instance.strings.emplace_back(alphabet, std::move(s));
  }
  out.center = Seq(alphabet, std::move(center));
  return out;
}

struct BenchmarkResult {
  std::string instance_label;
  std::string algorithm;
  Outcome outcome = Outcome::Infeasible;
  std::optional<Seq> solution;
  std::optional<Rational> verified_radius;  // recomputed, not trusted
  std::string note;
  std::optional<SearchStats> stats;
  std::uint64_t wall_time_us = 0;  // volatile; excluded from exports by default
  std::uint64_t seed = 0;
};

inline SolveResult run_algorithm(const std::string& algo, const CspInstance& inst,
                                 std::uint64_t budget,
                                 std::optional<SearchStats>* stats_out = nullptr) {
  if (algo == "exhaustive") return solve_exhaustive(inst, budget);
  if (algo == "treesearch") {
    auto [res, stats] = tree_search(inst);
    if (stats_out) *stats_out = stats;
    return res;
  }
  if (algo == "dp") return solve_dp_levenshtein(inst, budget);
  throw std::invalid_argument("run_algorithm: unknown algorithm '" + algo + "'");
}

// Picks the solver the way the summary table's optimality conditions
// read: small d favors the search tree, small k under Levenshtein the
// DP, everything else brute force.
inline std::string auto_algorithm(const CspInstance& inst) {
  if (inst.metric.kind == MetricKind::Hamming && inst.d <= 8) return "treesearch";
  if (inst.metric.kind == MetricKind::Levenshtein && inst.k() <= 3) return "dp";
  return "exhaustive";
}

// Executes every cell of an algorithm x instance grid. Every reported
// solution is re-verified by recomputing its radius; a budget refusal is
// recorded and never aborts the rest of the grid.
inline std::vector<BenchmarkResult> run_benchmark(
    const std::vector<std::string>& algorithms,
    const std::vector<std::pair<std::string, CspInstance>>& instances,
    std::uint64_t seed, std::uint64_t budget = kDefaultExhaustiveBudget) {
  std::vector<BenchmarkResult> results;
  for (const auto& [label, inst] : instances) {
    for (const auto& algo : algorithms) {
      BenchmarkResult r;
      r.instance_label = label;
      r.algorithm = algo;
      r.seed = seed;
      const auto start = std::chrono::steady_clock::now();
      try {
        std::optional<SearchStats> stats;
        const std::string resolved = algo == "auto" ? auto_algorithm(inst) : algo;
        SolveResult solved = run_algorithm(resolved, inst, budget, &stats);
        r.outcome = solved.outcome;
        r.note = solved.note;
        r.stats = stats;
        if (solved.feasible()) {
          r.solution = solved.center;
          r.verified_radius = radius(*solved.center, inst);
          if (*r.verified_radius > Rational(inst.d)) {
            r.outcome = Outcome::Refused;
            r.note = "verification failed: reported center exceeds d";
          }
        }
      } catch (const std::exception& e) {
        r.outcome = Outcome::Refused;
        r.note = e.what();
      }
      r.wall_time_us = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::microseconds>(
              std::chrono::steady_clock::now() - start)
              .count());
      results.push_back(std::move(r));
    }
  }
  return results;
}

}  // namespace cstr
