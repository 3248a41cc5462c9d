#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cstr/instance.hpp"

namespace cstr {

enum class PreprocessVerdict { SolvableUnknown, Unsolvable };

// Result of the dirty-column reduction for Hamming instances. Columns on
// which all k strings agree are removed; if more than k*d columns remain
// no solution can exist. Any solution of the reduced instance becomes a
// solution of the original by reinserting the unanimous characters.
struct PreprocessResult {
  CspInstance reduced;
  std::vector<std::size_t> column_map;  // original positions kept, increasing
  std::vector<std::pair<std::size_t, std::uint8_t>> removed;  // (pos, code)
  PreprocessVerdict verdict = PreprocessVerdict::SolvableUnknown;

  // Maps a reduced-instance center back to original coordinates.
  Seq reinsert(const Seq& reduced_center) const {
    if (reduced_center.size() != column_map.size()) {
      throw std::invalid_argument("reinsert: center length mismatch");
    }
    std::vector<std::uint8_t> codes(column_map.size() + removed.size());
    for (std::size_t i = 0; i < column_map.size(); ++i) {
      codes[column_map[i]] = reduced_center[i];
    }
    for (const auto& [pos, code] : removed) codes[pos] = code;
    return Seq(reduced.alphabet(), std::move(codes));
  }
};

inline PreprocessResult preprocess(const CspInstance& inst) {
  inst.validate();
  if (inst.metric.kind != MetricKind::Hamming) {
    throw std::invalid_argument("preprocess: Hamming metric required");
  }
  PreprocessResult result;
  const std::size_t n = inst.n();
  std::vector<std::vector<std::uint8_t>> reduced_codes(inst.k());
  for (std::size_t col = 0; col < n; ++col) {
    bool unanimous = true;
    const std::uint8_t first = inst.strings[0][col];
    for (std::size_t i = 1; i < inst.k(); ++i) {
      if (inst.strings[i][col] != first) {
        unanimous = false;
        break;
      }
    }
    if (unanimous) {
      result.removed.emplace_back(col, first);
    } else {
      result.column_map.push_back(col);
      for (std::size_t i = 0; i < inst.k(); ++i) {
        reduced_codes[i].push_back(inst.strings[i][col]);
      }
    }
  }
  result.reduced.d = inst.d;
  result.reduced.metric = Metric::hamming();
  result.reduced.strings.reserve(inst.k());
  for (auto& codes : reduced_codes) {
    result.reduced.strings.emplace_back(inst.alphabet(), std::move(codes));
  }
  const std::size_t kd =
      inst.k() * static_cast<std::size_t>(inst.d);
  result.verdict = result.column_map.size() > kd ? PreprocessVerdict::Unsolvable
                                                 : PreprocessVerdict::SolvableUnknown;
  return result;
}

}  // namespace cstr
