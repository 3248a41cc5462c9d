#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstr/alphabet.hpp"
#include "cstr/rational.hpp"

namespace cstr {

struct MetricReport {
  bool is_metric = false;
  bool is_natural = false;
  std::vector<std::string> violations;
};

// Per-symbol edit cost table over the gap-extended alphabet Sigma'
// (gap row/column last). Costs are exact rationals so the metric axioms
// can be checked without tolerance.
class CostScheme {
 public:
  CostScheme(AlphabetPtr alphabet, std::vector<std::vector<Rational>> table)
      : alphabet_(std::move(alphabet)), table_(std::move(table)) {
    const std::size_t m = alphabet_->size() + 1;
    if (table_.size() != m) {
      throw std::invalid_argument("CostScheme: table must be (sigma+1) rows");
    }
    for (const auto& row : table_) {
      if (row.size() != m) {
        throw std::invalid_argument("CostScheme: table must be (sigma+1) columns");
      }
      for (const auto& v : row) {
        if (v.is_negative()) {
          throw std::invalid_argument("CostScheme: costs must be non-negative");
        }
      }
    }
  }

  static CostScheme unit(const AlphabetPtr& alphabet) {
    const std::size_t m = alphabet->size() + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(m, Rational(1)));
    for (std::size_t i = 0; i < m; ++i) t[i][i] = Rational(0);
    return CostScheme(alphabet, std::move(t));
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t extended_size() const { return alphabet_->size() + 1; }
  std::size_t gap() const { return alphabet_->size(); }

  const Rational& cost(std::size_t a, std::size_t b) const {
    return table_[a][b];
  }
  std::vector<std::vector<Rational>>& table() { return table_; }
  const std::vector<std::vector<Rational>>& table() const { return table_; }

  bool is_metric() const { return validate().is_metric; }
  bool is_natural() const { return validate().is_natural; }

  // Exhaustive check of the metric axioms over Sigma' plus the
  // "deleting is strictly cheaper than substitute-then-delete"
  // naturalness condition. Violations are reported, not thrown.
  MetricReport validate() const {
    MetricReport rep;
    const std::size_t m = extended_size();
    bool identity_ok = true, symmetry_ok = true, triangle_ok = true;

    for (std::size_t a = 0; a < m; ++a) {
      if (!table_[a][a].is_zero()) {
        identity_ok = false;
        rep.violations.push_back("identity: cost(" + label_(a) + "," + label_(a) +
                                 ") = " + table_[a][a].to_string() + " != 0");
      }
      for (std::size_t b = a + 1; b < m; ++b) {
        if (table_[a][b].is_zero() || table_[b][a].is_zero()) {
          identity_ok = false;
          rep.violations.push_back("identity: cost(" + label_(a) + "," +
                                   label_(b) + ") = 0 for distinct symbols");
        }
        if (table_[a][b] != table_[b][a]) {
          symmetry_ok = false;
          rep.violations.push_back("symmetry: cost(" + label_(a) + "," + label_(b) +
                                   ") = " + table_[a][b].to_string() +
                                   " but cost(" + label_(b) + "," + label_(a) +
                                   ") = " + table_[b][a].to_string());
        }
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          if (table_[a][c] > table_[a][b] + table_[b][c]) {
            triangle_ok = false;
            rep.violations.push_back(
                "triangle: cost(" + label_(a) + "," + label_(c) + ") = " +
                table_[a][c].to_string() + " > " + table_[a][b].to_string() +
                " + " + table_[b][c].to_string() + " via " + label_(b));
          }
        }
      }
    }
    rep.is_metric = identity_ok && symmetry_ok && triangle_ok;

    rep.is_natural = true;
    const std::size_t g = gap();
    for (std::size_t a = 0; a < g && rep.is_natural; ++a) {
      for (std::size_t b = 0; b < g; ++b) {
        if (a == b) continue;
        if (!(table_[a][g] < table_[a][b] + table_[b][g])) {
          rep.is_natural = false;
          break;
        }
      }
    }
    return rep;
  }

 private:
  std::string label_(std::size_t i) const {
    if (i == gap()) return "-";
    return std::string(1, alphabet_->decode(static_cast<std::uint8_t>(i)));
  }

  AlphabetPtr alphabet_;
  std::vector<std::vector<Rational>> table_;
};

inline MetricReport validate_metric(const CostScheme& scheme) {
  return scheme.validate();
}

}  // namespace cstr
