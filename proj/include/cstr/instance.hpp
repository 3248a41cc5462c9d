#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstr/distance.hpp"

namespace cstr {

enum class MetricKind { Hamming, Levenshtein, Weighted };

inline const char* metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::Hamming: return "hamming";
    case MetricKind::Levenshtein: return "levenshtein";
    case MetricKind::Weighted: return "weighted";
  }
  return "?";
}

struct Metric {
  MetricKind kind = MetricKind::Hamming;
  std::optional<CostScheme> scheme;  // set iff kind == Weighted

  static Metric hamming() { return {MetricKind::Hamming, std::nullopt}; }
  static Metric levenshtein() { return {MetricKind::Levenshtein, std::nullopt}; }
  static Metric weighted(CostScheme s) {
    if (!s.is_metric()) {
      throw std::invalid_argument("Metric::weighted: scheme is not a metric");
    }
    return {MetricKind::Weighted, std::move(s)};
  }

  Rational distance(const Seq& s, const Seq& t) const {
    switch (kind) {
      case MetricKind::Hamming: return Rational(cstr::hamming(s, t));
      case MetricKind::Levenshtein: return Rational(cstr::levenshtein(s, t));
      case MetricKind::Weighted: return weighted_edit(s, t, *scheme);
    }
    throw std::logic_error("Metric: bad kind");
  }
};

// k input strings over one alphabet plus the threshold d.
struct CspInstance {
  std::vector<Seq> strings;
  std::int64_t d = 0;
  Metric metric = Metric::hamming();

  const AlphabetPtr& alphabet() const { return strings.front().alphabet(); }
  std::size_t k() const { return strings.size(); }
  std::size_t n() const { return strings.front().size(); }

  void validate() const {
    if (strings.empty()) throw std::invalid_argument("CspInstance: k >= 1 required");
    if (d < 0) throw std::invalid_argument("CspInstance: d must be non-negative");
    for (const auto& s : strings) {
      if (!same_alphabet(s, strings.front())) {
        throw std::invalid_argument("CspInstance: mixed alphabets");
      }
    }
    if (metric.kind == MetricKind::Hamming) {
      for (const auto& s : strings) {
        if (s.size() != strings.front().size()) {
          throw std::invalid_argument(
              "CspInstance: Hamming metric requires equal-length strings");
        }
      }
    }
  }
};

// Distance from a candidate center to input i; the g_s(i) of the nested
// search formulation.
inline Rational distance_to_input(const Seq& s, const CspInstance& inst,
                                  std::size_t i) {
  if (inst.metric.kind == MetricKind::Hamming && s.size() != inst.n()) {
    throw std::invalid_argument("radius: Hamming candidate length mismatch");
  }
  return inst.metric.distance(s, inst.strings[i]);
}

// max_i d(s, s_i): the objective f minimized over candidate centers.
inline Rational radius(const Seq& s, const CspInstance& inst) {
  Rational worst(0);
  for (std::size_t i = 0; i < inst.strings.size(); ++i) {
    Rational di = distance_to_input(s, inst, i);
    if (di > worst) worst = di;
  }
  return worst;
}

// Closest Substring instance: find a length-L string within Hamming
// distance d of some length-L window of every input.
struct CsspInstance {
  std::vector<Seq> strings;
  std::int64_t d = 0;
  std::size_t L = 0;

  const AlphabetPtr& alphabet() const { return strings.front().alphabet(); }
  std::size_t k() const { return strings.size(); }

  void validate() const {
    if (strings.empty()) throw std::invalid_argument("CsspInstance: k >= 1 required");
    if (d < 0) throw std::invalid_argument("CsspInstance: d must be non-negative");
    if (L < 1) throw std::invalid_argument("CsspInstance: L >= 1 required");
    for (const auto& s : strings) {
      if (!same_alphabet(s, strings.front())) {
        throw std::invalid_argument("CsspInstance: mixed alphabets");
      }
      if (s.size() < L) {
        throw std::invalid_argument("CsspInstance: L exceeds an input length");
      }
    }
  }
};

// Best window distance: min over length-L windows w of s_i of d_H(s, w).
inline std::int64_t min_window_distance(const Seq& s, const Seq& input,
                                        std::size_t L) {
  std::int64_t best = INT64_MAX;
  for (std::size_t off = 0; off + L <= input.size(); ++off) {
    std::int64_t dist = 0;
    for (std::size_t j = 0; j < L && dist < best; ++j) {
      dist += (s[j] != input[off + j]);
    }
    if (dist < best) best = dist;
    if (best == 0) break;
  }
  return best;
}

inline bool cssp_feasible_candidate(const Seq& s, const CsspInstance& inst) {
  for (const auto& input : inst.strings) {
    if (min_window_distance(s, input, inst.L) > inst.d) return false;
  }
  return true;
}

// Shared solver outcome: a refusal (budget) is distinct from infeasibility.
enum class Outcome { Feasible, Infeasible, Refused };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Feasible: return "feasible";
    case Outcome::Infeasible: return "infeasible";
    case Outcome::Refused: return "refused";
  }
  return "?";
}

struct SolveResult {
  Outcome outcome = Outcome::Infeasible;
  std::optional<Seq> center;
  std::optional<Rational> certified_radius;
  std::string note;  // refusal reason when outcome == Refused

  bool feasible() const { return outcome == Outcome::Feasible; }

  static SolveResult found(Seq s, Rational r) {
    return {Outcome::Feasible, std::move(s), std::move(r), ""};
  }
  static SolveResult none() { return {Outcome::Infeasible, std::nullopt, std::nullopt, ""}; }
  static SolveResult refused(std::string why) {
    return {Outcome::Refused, std::nullopt, std::nullopt, std::move(why)};
  }
};

}  // namespace cstr
