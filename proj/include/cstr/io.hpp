#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cstr/bench.hpp"
#include "cstr/cost_model.hpp"
#include "cstr/cost_scheme.hpp"
#include "cstr/instance.hpp"
#include "cstr/spectral.hpp"
#include "cstr/walk_search.hpp"

namespace cstr {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// instance files

struct InstanceFile {
  AlphabetPtr alphabet;
  std::vector<Seq> strings;
  std::int64_t d = 0;
  std::optional<std::size_t> L;
  MetricKind metric = MetricKind::Hamming;
  std::optional<CostScheme> scheme;
  Json provenance;  // free-form passthrough

  CspInstance to_csp() const {
    CspInstance inst;
    inst.strings = strings;
    inst.d = d;
    switch (metric) {
      case MetricKind::Hamming: inst.metric = Metric::hamming(); break;
      case MetricKind::Levenshtein: inst.metric = Metric::levenshtein(); break;
      case MetricKind::Weighted:
        if (!scheme) throw std::invalid_argument("instance: weighted metric without costs");
        inst.metric = Metric::weighted(*scheme);
        break;
    }
    inst.validate();
    return inst;
  }

  CsspInstance to_cssp() const {
    if (!L) throw std::invalid_argument("instance: L required for CSSP");
    if (metric != MetricKind::Hamming) {
      throw std::invalid_argument("instance: CSSP supports the Hamming metric only");
    }
    CsspInstance inst;
    inst.strings = strings;
    inst.d = d;
    inst.L = *L;
    inst.validate();
    return inst;
  }
};

inline Json cost_table_to_json(const CostScheme& scheme) {
  Json rows = Json::array();
  for (const auto& row : scheme.table()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

inline CostScheme cost_table_from_json(const AlphabetPtr& alphabet, const Json& rows) {
  std::vector<std::vector<Rational>> table;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& v : row) {
      if (v.is_string()) {
        r.push_back(Rational::parse(v.get<std::string>()));
      } else {
        r.push_back(Rational(v.get<std::int64_t>()));
      }
    }
    table.push_back(std::move(r));
  }
  return CostScheme(alphabet, std::move(table));
}

inline Json instance_to_json(const InstanceFile& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["alphabet"] = f.alphabet->symbols();
  j["metric"] = metric_name(f.metric);
  j["d"] = f.d;
  if (f.L) j["L"] = *f.L;
  Json strs = Json::array();
  for (const auto& s : f.strings) strs.push_back(s.to_string());
  j["strings"] = std::move(strs);
  if (f.scheme) j["costs"] = cost_table_to_json(*f.scheme);
  if (!f.provenance.is_null()) j["provenance"] = f.provenance;
  return j;
}

inline InstanceFile instance_from_json(const Json& j) {
  if (!j.contains("schema_version")) {
    throw std::invalid_argument("instance: missing schema_version");
  }
  InstanceFile f;
  f.alphabet = make_alphabet(j.at("alphabet").get<std::string>());
  const std::string metric = j.value("metric", std::string("hamming"));
  if (metric == "hamming") {
    f.metric = MetricKind::Hamming;
  } else if (metric == "levenshtein") {
    f.metric = MetricKind::Levenshtein;
  } else if (metric == "weighted") {
    f.metric = MetricKind::Weighted;
  } else {
    throw std::invalid_argument("instance: unknown metric '" + metric + "'");
  }
  f.d = j.at("d").get<std::int64_t>();
  if (j.contains("L")) f.L = j.at("L").get<std::size_t>();
  for (const auto& s : j.at("strings")) {
    f.strings.push_back(Seq::from_string(f.alphabet, s.get<std::string>()));
  }
  if (j.contains("costs")) f.scheme = cost_table_from_json(f.alphabet, j.at("costs"));
  if (j.contains("provenance")) f.provenance = j.at("provenance");
  return f;
}

// ---------------------------------------------------------------------------
// chain analysis

struct ChainAnalysis {
  std::int64_t d = 0;
  std::size_t node_count = 0;
  bool rows_ok = false;
  bool stationary_ok = false;
  bool reversible = false;
  StationaryDistribution pi;
  CongestionReport congestion;
  SpectralReport spectral;
  ConductanceReport conductance;
  double mix_lower = 0.0;
  double mix_upper = 0.0;
  Rational pi_min;
};

inline ChainAnalysis analyze_chain(const TreeChain& chain,
                                   std::size_t dense_cap = kDefaultDenseEigenCap,
                                   std::size_t exact_conductance_cap = kDefaultExactConductanceCap,
                                   std::size_t congestion_direct_cap = kDefaultCongestionDirectCap) {
  ChainAnalysis a;
  a.d = chain.d();
  a.node_count = chain.node_count();
  a.pi = stationary_distribution(chain);
  a.rows_ok = rows_sum_to_one(chain);
  a.stationary_ok = is_stationary(chain, a.pi.node);
  a.reversible = check_reversibility(chain, a.pi.node);
  a.congestion = congestion(chain, a.pi.node, congestion_direct_cap);
  a.spectral = spectral_gap(chain, dense_cap);
  a.conductance = conductance(chain, exact_conductance_cap);
  a.pi_min = a.pi.node.back();  // leaf layer carries the smallest mass
  auto [lo, hi] = mixing_time_bounds(a.spectral.delta, a.pi_min);
  a.mix_lower = lo;
  a.mix_upper = hi;
  return a;
}

inline Json chain_analysis_to_json(const TreeChain& chain, const ChainAnalysis& a,
                                   bool include_graph = true) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["d"] = a.d;
  j["node_count"] = a.node_count;
  j["identities"] = Json{{"rows_sum_to_one", a.rows_ok},
                         {"stationary_verified", a.stationary_ok},
                         {"reversible", a.reversible}};
  Json layer = Json::array();
  for (const auto& v : a.pi.layer) layer.push_back(v.to_string());
  j["layer_stationary"] = std::move(layer);

  if (include_graph) {
    Json nodes = Json::array();
    for (std::size_t v = 0; v < chain.node_count(); ++v) {
      Json node;
      node["index"] = v;
      node["layer"] = chain.layer_of(v);
      Json addr = Json::array();
      for (auto b : chain.address_of(v).branches) addr.push_back(b);
      node["address"] = std::move(addr);
      node["pi"] = a.pi.node[v].to_string();
      nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (std::size_t v = 0; v < chain.node_count(); ++v) {
      for (const auto& e : chain.row(v)) {
        edges.push_back(Json{{"from", v}, {"to", e.to}, {"p", e.p.to_string()}});
      }
    }
    j["edges"] = std::move(edges);
  }

  Json cong;
  Json rho = Json::array();
  for (const auto& r : a.congestion.rho) rho.push_back(r.to_string());
  cong["rho"] = std::move(rho);
  cong["rho_max"] = a.congestion.rho_max.to_string();
  cong["direct_ran"] = a.congestion.direct_ran;
  if (a.congestion.direct_ran) {
    Json dr = Json::array();
    for (const auto& r : a.congestion.rho_direct) dr.push_back(r.to_string());
    cong["rho_direct"] = std::move(dr);
  }
  j["congestion"] = std::move(cong);

  Json spec;
  spec["mode"] = a.spectral.mode == SpectralMode::Dense ? "dense" : "layer-only";
  spec["lambda2"] = a.spectral.lambda2;
  spec["delta"] = a.spectral.delta;
  spec["delta_layer"] = a.spectral.delta_layer;
  spec["min_eigenvalue"] = a.spectral.min_eigenvalue;
  spec["bound_congestion"] = a.spectral.bound_congestion.to_string();
  spec["bound_paper"] = a.spectral.bound_paper.to_string();
  j["spectral"] = std::move(spec);

  Json cond;
  cond["mode"] = a.conductance.mode == ConductanceMode::Exact ? "exact" : "bound";
  if (a.conductance.mode == ConductanceMode::Exact) {
    cond["phi"] = a.conductance.phi.to_string();
  }
  cond["phi_upper"] = a.conductance.phi_upper.to_string();
  cond["lower_bound"] = a.conductance.lower_bound.to_string();
  j["conductance"] = std::move(cond);

  j["mixing_time"] = Json{{"lower", a.mix_lower},
                          {"upper", a.mix_upper},
                          {"pi_min", a.pi_min.to_string()}};
  return j;
}

// ---------------------------------------------------------------------------
// benchmark and cost reports

inline Json benchmark_to_json(const std::vector<BenchmarkResult>& results,
                              bool include_timing = false) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json j;
    j["instance"] = r.instance_label;
    j["algorithm"] = r.algorithm;
    j["outcome"] = outcome_name(r.outcome);
    if (r.solution) j["solution"] = r.solution->to_string();
    if (r.verified_radius) j["radius"] = r.verified_radius->to_string();
    if (!r.note.empty()) j["note"] = r.note;
    if (r.stats) {
      j["stats"] = Json{{"nodes_expanded", r.stats->nodes_expanded},
                        {"max_depth", r.stats->max_depth},
                        {"pruned_by_budget", r.stats->pruned_by_budget},
                        {"pruned_by_bound", r.stats->pruned_by_bound}};
    }
    j["seed"] = r.seed;
    if (include_timing) j["wall_time_us"] = r.wall_time_us;
    arr.push_back(std::move(j));
  }
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["results"] = std::move(arr);
  return doc;
}

inline Json cost_profiles_to_json(const std::vector<CostProfile>& profiles) {
  Json arr = Json::array();
  for (const auto& p : profiles) {
    Json j;
    j["algorithm"] = p.algorithm;
    j["distance_metric"] = p.metric;
    j["runtime_term"] = p.runtime_term;
    if (!p.optimality.empty()) j["optimality"] = p.optimality;
    j["log2_cost"] = p.log2_cost;
    if (p.is_interval) j["log2_cost_hi"] = p.log2_cost_hi;
    if (!p.components.empty()) {
      Json comp;
      for (const auto& [name, v] : p.components) comp[name] = v;
      j["components"] = std::move(comp);
    }
    if (!p.extras.empty()) {
      Json ex;
      for (const auto& [name, v] : p.extras) ex[name] = v;
      j["extras"] = std::move(ex);
    }
    if (!p.notes.empty()) j["notes"] = p.notes;
    arr.push_back(std::move(j));
  }
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["profiles"] = std::move(arr);
  return doc;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace detail

// Fixed four-column layout mirroring the summary table.
inline std::string cost_profiles_to_tsv(const std::vector<CostProfile>& profiles) {
  std::string out = "algorithm\tdistance_metric\tlog2_cost_terms\tregime\n";
  for (const auto& p : profiles) {
    std::string terms = "total=" + detail::format_double(p.log2_cost);
    if (p.is_interval) terms += ";total_hi=" + detail::format_double(p.log2_cost_hi);
    for (const auto& [name, v] : p.components) {
      terms += ";" + name + "=" + detail::format_double(v);
    }
    out += p.algorithm + "\t" + p.metric + "\t" + terms + "\t" +
           (p.optimality.empty() ? "-" : p.optimality) + "\n";
  }
  return out;
}

inline std::string regime_to_tsv(const std::vector<RegimeEntry>& rows,
                                 double beta, KGrowth k_growth) {
  std::string out = "algorithm\tdistance_metric\tlog2_cost_terms\tregime\n";
  for (const auto& r : rows) {
    out += r.algorithm + "\tk=" + std::string(k_growth_name(k_growth)) +
           ",beta=" + detail::format_double(beta) + "\t" + r.dominant + "\t" +
           r.regime + "\n";
  }
  return out;
}

inline Json regime_to_json(const std::vector<RegimeEntry>& rows, double beta,
                           KGrowth k_growth) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(Json{{"algorithm", r.algorithm},
                       {"dominant", r.dominant},
                       {"regime", r.regime}});
  }
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["beta"] = beta;
  doc["k_class"] = k_growth_name(k_growth);
  doc["rows"] = std::move(arr);
  return doc;
}

// ---------------------------------------------------------------------------
// files

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cstr
