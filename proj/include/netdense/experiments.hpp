#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netdense/graph.hpp"
#include "netdense/transforms.hpp"

namespace netdense::experiments {

// One generated seed graph and its densified image.
struct SweepRow {
  std::string model = "ba";
  VertexId n = 0;
  VertexId m = 0;
  std::uint64_t cell = 0;
  std::uint64_t seed = 0;
  std::optional<double> r_seed;
  std::optional<double> r_densified;
  std::optional<double> gamma_seed;
  std::optional<double> gamma_densified;
  double avg_k_seed = 0.0;
  double avg_k_densified = 0.0;
  EdgeCount k_max = 0;
  std::optional<double> c_densified;
  std::optional<Hops> diameter_seed;
  std::optional<Hops> diameter_densified;
  bool diameter_exact = false;
  std::string violations;
};

struct SweepConfig {
  std::vector<VertexId> n_list;
  std::vector<VertexId> m_list;
  unsigned seeds = 5;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
  bool fits = false;
  bool clustering = false;
  bool diameter = false;
  bool check_signs = true;  // record r >= 0 / r' <= 0 cells as violations
  EdgeCount max_edges = kDefaultEdgeBudget;
};

// Seed of cell `index` under `master`; distinct cells get independent streams.
std::uint64_t cell_seed(std::uint64_t master, std::uint64_t index);

// Cells are enumerated m-major, then n, then replicate. on_row sees rows in
// cell order as soon as every earlier cell has finished.
std::vector<SweepRow> run_ba_sweep(const SweepConfig& config,
                                   const std::function<void(const SweepRow&)>& on_row = {});

struct AssortativitySummary {
  std::size_t cells = 0;
  std::size_t negative_seed = 0;      // r < 0
  std::size_t positive_densified = 0; // r' > 0
  // (m, n) pairs where the seed-averaged r' dropped relative to the previous n
  std::vector<std::pair<VertexId, VertexId>> trend_violations;
};

AssortativitySummary summarize_assortativity(const std::vector<SweepRow>& rows);

struct ScalingSummary {
  std::vector<VertexId> n_values;
  std::vector<double> mean_avg_k_densified;  // per n, seed-averaged
  std::vector<double> mean_avg_k_seed;
  std::vector<double> mean_k_max;
  bool densified_strictly_increasing = false;
  double max_seed_avg_k_deviation = 0.0;  // max relative |<k> - 2m| / 2m
  std::optional<double> mean_exponent_shift;  // mean(gamma_seed - gamma_densified)
  double kmax_slope = 0.0;                    // OLS slope of ln k_max on ln n
};

ScalingSummary summarize_scaling(const std::vector<SweepRow>& rows, VertexId m);

// Fixed column order, header first.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SweepRow& row);
std::string rows_to_json(const std::vector<SweepRow>& rows, const SweepConfig& config,
                         const std::string& kind);

}  // namespace netdense::experiments
