#include "netdense/experiments.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>

#include <nlohmann/json.hpp>

#include "netdense/errors.hpp"
#include "netdense/generators.hpp"
#include "netdense/metrics.hpp"
#include "netdense/parallel.hpp"
#include "netdense/rng.hpp"

namespace netdense::experiments {

std::uint64_t cell_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x5851f42d4c957f2dULL));
}

namespace {

struct Cell {
  VertexId n;
  VertexId m;
};

SweepRow run_cell(const SweepConfig& config, const Cell& cell, std::uint64_t index) {
  SweepRow row;
  row.n = cell.n;
  row.m = cell.m;
  row.cell = index;
  row.seed = cell_seed(config.master_seed, index);

  const Graph seed_graph = barabasi_albert(cell.n, cell.m, row.seed);
  row.avg_k_seed = average_degree(seed_graph);
  row.k_max = max_degree(seed_graph);
  if (auto r = assortativity(seed_graph); r.defined) row.r_seed = r.r;

  const DensifyResult dense = densify(seed_graph, config.max_edges);
  row.avg_k_densified = average_degree(dense.graph);
  if (auto r = assortativity(dense.graph); r.defined) row.r_densified = r.r;

  if (config.fits) {
    if (auto f = fit_power_law(degree_histogram(seed_graph)); f.valid) row.gamma_seed = f.gamma_hat;
    if (auto f = fit_power_law(degree_histogram(dense.graph)); f.valid) row.gamma_densified = f.gamma_hat;
  }
  if (config.clustering) row.c_densified = avg_local_clustering(dense.graph).avg_local_c;
  if (config.diameter) {
    // BA graphs are connected, and so is their densified image
    const auto ds = netdense::diameter(seed_graph, row.seed);
    const auto dd = netdense::diameter(dense.graph, row.seed);
    row.diameter_seed = ds.diameter.value_or(ds.lower_bound);
    row.diameter_densified = dd.diameter.value_or(dd.lower_bound);
    row.diameter_exact = ds.exact && dd.exact;
  }

  if (config.check_signs) {
    std::string v;
    if (!row.r_seed || *row.r_seed >= 0.0) v += "r_seed_not_negative";
    if (!row.r_densified || *row.r_densified <= 0.0) v += std::string(v.empty() ? "" : ";") + "r_densified_not_positive";
    row.violations = v;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_ba_sweep(const SweepConfig& config,
                                   const std::function<void(const SweepRow&)>& on_row) {
  if (config.n_list.empty()) throw InputError("sweep needs at least one n");
  if (config.m_list.empty()) throw InputError("sweep needs at least one m");
  if (config.seeds == 0) throw InputError("sweep needs at least one seed");
  std::vector<Cell> cells;
  for (VertexId m : config.m_list)
    for (VertexId n : config.n_list) {
      if (m < 1 || m >= n)
        throw InputError("sweep cell needs 1 <= m < n (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
      for (unsigned s = 0; s < config.seeds; ++s) cells.push_back({n, m});
    }

  std::vector<std::optional<SweepRow>> slots(cells.size());
  std::mutex emit_mutex;
  std::size_t emitted = 0;
  parallel_for(cells.size(), config.workers, [&](std::size_t i) {
    SweepRow row = run_cell(config, cells[i], i);
    std::lock_guard lock(emit_mutex);
    slots[i] = std::move(row);
    while (emitted < slots.size() && slots[emitted]) {
      if (on_row) on_row(*slots[emitted]);
      ++emitted;
    }
  });

  std::vector<SweepRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

AssortativitySummary summarize_assortativity(const std::vector<SweepRow>& rows) {
  AssortativitySummary s;
  // m -> n -> (sum r', count)
  std::map<VertexId, std::map<VertexId, std::pair<double, std::size_t>>> means;
  for (const auto& row : rows) {
    ++s.cells;
    if (row.r_seed && *row.r_seed < 0.0) ++s.negative_seed;
    if (row.r_densified && *row.r_densified > 0.0) ++s.positive_densified;
    auto& [sum, count] = means[row.m][row.n];
    sum += row.r_densified.value_or(0.0);
    ++count;
  }
  for (const auto& [m, by_n] : means) {
    std::optional<double> previous;
    for (const auto& [n, acc] : by_n) {
      const double mean = acc.first / static_cast<double>(acc.second);
      if (previous && mean < *previous) s.trend_violations.emplace_back(m, n);
      previous = mean;
    }
  }
  return s;
}

ScalingSummary summarize_scaling(const std::vector<SweepRow>& rows, VertexId m) {
  ScalingSummary s;
  std::map<VertexId, std::pair<double, double>> sums;  // n -> (sum <k'>, sum <k>)
  std::map<VertexId, double> kmax_sums;
  std::map<VertexId, std::size_t> counts;
  double shift_sum = 0.0;
  std::size_t shift_count = 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t points = 0;
  const double target = 2.0 * m;
  for (const auto& row : rows) {
    if (row.m != m) continue;
    sums[row.n].first += row.avg_k_densified;
    sums[row.n].second += row.avg_k_seed;
    kmax_sums[row.n] += static_cast<double>(row.k_max);
    ++counts[row.n];
    s.max_seed_avg_k_deviation = std::max(s.max_seed_avg_k_deviation, std::abs(row.avg_k_seed - target) / target);
    if (row.gamma_seed && row.gamma_densified) {
      shift_sum += *row.gamma_seed - *row.gamma_densified;
      ++shift_count;
    }
    const double x = std::log(static_cast<double>(row.n));
    const double y = std::log(static_cast<double>(row.k_max));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++points;
  }
  for (const auto& [n, acc] : sums) {
    s.n_values.push_back(n);
    s.mean_avg_k_densified.push_back(acc.first / static_cast<double>(counts[n]));
    s.mean_avg_k_seed.push_back(acc.second / static_cast<double>(counts[n]));
    s.mean_k_max.push_back(kmax_sums[n] / static_cast<double>(counts[n]));
  }
  s.densified_strictly_increasing = !s.n_values.empty();
  for (std::size_t i = 1; i < s.mean_avg_k_densified.size(); ++i)
    if (!(s.mean_avg_k_densified[i] > s.mean_avg_k_densified[i - 1])) s.densified_strictly_increasing = false;
  if (shift_count > 0) s.mean_exponent_shift = shift_sum / static_cast<double>(shift_count);
  const auto np = static_cast<double>(points);
  const double denom = np * sxx - sx * sx;
  if (points >= 2 && denom > 0.0) s.kmax_slope = (np * sxy - sx * sy) / denom;
  return s;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <typename T>
std::string optional_cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>)
    return format_double(*v);
  else
    return std::to_string(*v);
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void write_csv_header(std::ostream& out) {
  out << "model,n,m,cell,seed,r_seed,r_densified,gamma_seed,gamma_densified,avg_k_seed,"
         "avg_k_densified,k_max,C_densified,diameter_seed,diameter_densified,diameter_exact,violations\n";
}

void write_csv_row(std::ostream& out, const SweepRow& row) {
  out << row.model << ',' << row.n << ',' << row.m << ',' << row.cell << ',' << row.seed << ','
      << optional_cell(row.r_seed) << ',' << optional_cell(row.r_densified) << ','
      << optional_cell(row.gamma_seed) << ',' << optional_cell(row.gamma_densified) << ','
      << format_double(row.avg_k_seed) << ',' << format_double(row.avg_k_densified) << ',' << row.k_max
      << ',' << optional_cell(row.c_densified) << ',' << optional_cell(row.diameter_seed) << ','
      << optional_cell(row.diameter_densified) << ',' << (row.diameter_exact ? "true" : "false") << ','
      << row.violations << '\n';
}

std::string rows_to_json(const std::vector<SweepRow>& rows, const SweepConfig& config,
                         const std::string& kind) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["kind"] = kind;
  doc["provenance"] = {{"tool", "netdense"},
                       {"rng_family", kRngFamily},
                       {"master_seed", config.master_seed},
                       {"seeds_per_cell", config.seeds},
                       {"n_list", config.n_list},
                       {"m_list", config.m_list}};
  auto& out = doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    out.push_back({{"model", row.model},
                   {"n", row.n},
                   {"m", row.m},
                   {"cell", row.cell},
                   {"seed", row.seed},
                   {"r_seed", optional_json(row.r_seed)},
                   {"r_densified", optional_json(row.r_densified)},
                   {"gamma_seed", optional_json(row.gamma_seed)},
                   {"gamma_densified", optional_json(row.gamma_densified)},
                   {"avg_k_seed", row.avg_k_seed},
                   {"avg_k_densified", row.avg_k_densified},
                   {"k_max", row.k_max},
                   {"C_densified", optional_json(row.c_densified)},
                   {"diameter_seed", optional_json(row.diameter_seed)},
                   {"diameter_densified", optional_json(row.diameter_densified)},
                   {"diameter_exact", row.diameter_exact},
                   {"violations", row.violations}});
  }
  return doc.dump(2);
}

}  // namespace netdense::experiments
