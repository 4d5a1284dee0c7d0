#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "netdense/graph.hpp"
#include "netdense/metrics.hpp"

namespace netdense::report {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

enum class Metric { kMoments, kPowerLaw, kAssortativity, kClustering, kDiameter };

// Comma-separated names or "all". Unknown names throw InputError listing the
// valid ones.
std::set<Metric> parse_metrics(const std::string& text);
std::string valid_metric_names();

struct AnalysisOptions {
  std::set<Metric> metrics{Metric::kMoments, Metric::kPowerLaw, Metric::kAssortativity,
                           Metric::kClustering, Metric::kDiameter};
  bool community = false;
  std::uint64_t seed = 1;
  VertexId exact_diameter_limit = kExactDiameterLimit;
  unsigned workers = 1;
  std::string source;  // input description for provenance
};

// Structured analysis document. Undefined quantities are JSON null, never a
// sentinel number. Distance and mixing metrics of a disconnected graph are
// taken on its largest component and say so.
nlohmann::json analyze(const Graph& g, const AnalysisOptions& options);

void print_human(std::ostream& out, const nlohmann::json& report);

}  // namespace netdense::report
