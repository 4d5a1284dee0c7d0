// netdense: generate, densify and analyze sparse scale-free graphs.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netdense/community.hpp"
#include "netdense/errors.hpp"
#include "netdense/experiments.hpp"
#include "netdense/generators.hpp"
#include "netdense/io.hpp"
#include "netdense/metrics.hpp"
#include "netdense/parallel.hpp"
#include "netdense/report.hpp"
#include "netdense/transforms.hpp"

namespace {

using namespace netdense;

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

struct GenerateArgs {
  std::string model;
  VertexId n = 0;
  VertexId m = 0;
  double p = -1.0;
  double gamma = 0.0;
  std::uint32_t kmin = 1;
  std::string name;
  VertexId size = 0;
  std::uint64_t seed = 1;
  std::string out;
};

struct TransformArgs {
  std::string op;
  std::string in;
  std::string out;
  std::string provenance;
  EdgeCount max_edges = kDefaultEdgeBudget;
};

struct AnalyzeArgs {
  std::string in;
  std::string metrics = "all";
  bool community = false;
  std::string json;
  std::uint64_t seed = 1;
  VertexId exact_limit = kExactDiameterLimit;
};

struct SweepArgs {
  std::vector<VertexId> n_list{1000, 10000, 100000};
  std::vector<VertexId> m_list{1, 2, 3, 4, 5, 6};
  VertexId m = 3;
  unsigned seeds = 5;
  std::uint64_t master_seed = 1;
  std::string out;
  std::string json;
  bool clustering = false;
  bool diameter = false;
  bool fits = false;
  EdgeCount max_edges = kDefaultEdgeBudget;
};

struct FitArgs {
  std::string in;
  std::string values;
  std::uint64_t kmin = 0;
  std::string json;
};

// Flag-level validation so errors name the offending option.
void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

GenSpec to_spec(const GenerateArgs& a) {
  GenSpec spec;
  spec.model = parse_model(a.model);
  spec.seed = a.seed;
  switch (spec.model) {
    case Model::kBarabasiAlbert:
      require(a.n > 0, "--n is required for model ba");
      require(a.m >= 1, "--m must be >= 1 for model ba");
      require(a.m < a.n, "--m must be smaller than --n (got --m " + std::to_string(a.m) + ", --n " +
                             std::to_string(a.n) + ")");
      spec.n = a.n;
      spec.m = a.m;
      break;
    case Model::kConfigPowerLaw:
      require(a.n >= 2, "--n must be >= 2 for model config_power_law");
      require(a.gamma > 1.0, "--gamma must be > 1 for model config_power_law");
      require(a.kmin >= 1 && a.kmin < a.n, "--kmin must be in [1, n-1]");
      spec.n = a.n;
      spec.gamma = a.gamma;
      spec.kmin = a.kmin;
      break;
    case Model::kCopying:
      require(a.n >= 2, "--n must be >= 2 for model copying");
      require(a.p >= 0.0 && a.p <= 1.0, "--p must be in [0, 1] for model copying");
      spec.n = a.n;
      spec.p = a.p;
      break;
    case Model::kNamed:
      require(!a.name.empty(), "--name is required for model named");
      spec.name = parse_named_graph(a.name);
      spec.size = a.size;
      require(a.size >= 2, "--size is required for model named");
      break;
  }
  return spec;
}

int run_generate(const GenerateArgs& a) {
  const GenSpec spec = to_spec(a);
  const Graph g = generate(spec);
  io::write_edge_list(a.out, g);
  std::cout << "n=" << g.vertex_count() << " edges=" << g.edge_count() << " avg_degree=" << average_degree(g)
            << '\n';
  return 0;
}

int run_transform(const TransformArgs& a) {
  const Graph g = io::read_edge_list(a.in).graph;
  require(a.op == "subdivide" || g.edge_count() > 0, "--op " + a.op + " needs an input with at least one edge");
  std::ofstream prov;
  if (!a.provenance.empty()) {
    prov.open(a.provenance);
    if (!prov) throw std::runtime_error("cannot write " + a.provenance);
  }
  Graph out;
  if (a.op == "subdivide") {
    auto r = subdivide(g);
    if (prov.is_open()) io::write_subdivision_provenance(prov, r);
    out = std::move(r.graph);
  } else if (a.op == "line") {
    auto r = line_graph(g, a.max_edges);
    if (prov.is_open()) io::write_line_provenance(prov, r);
    out = std::move(r.graph);
  } else if (a.op == "densify") {
    auto r = densify(g, a.max_edges);
    if (prov.is_open()) io::write_densify_provenance(prov, r, g);
    if (r.vanished_isolated > 0)
      std::cerr << "note: " << r.vanished_isolated << " isolated seed vertices have no image\n";
    out = std::move(r.graph);
  } else {
    throw InputError("--op must be one of subdivide, line, densify");
  }
  io::write_edge_list(a.out, out);
  std::cout << "n=" << out.vertex_count() << " edges=" << out.edge_count() << " avg_degree=" << average_degree(out)
            << '\n';
  return 0;
}

int run_analyze(const AnalyzeArgs& a) {
  report::AnalysisOptions options;
  options.metrics = report::parse_metrics(a.metrics);
  options.community = a.community;
  options.seed = a.seed;
  options.exact_diameter_limit = a.exact_limit;
  options.workers = worker_count();
  options.source = a.in;
  const Graph g = io::read_edge_list(a.in).graph;
  const auto doc = report::analyze(g, options);
  report::print_human(std::cout, doc);
  if (!a.json.empty()) {
    std::ofstream out(a.json);
    if (!out) throw std::runtime_error("cannot write " + a.json);
    out << doc.dump(2) << '\n';
  }
  return 0;
}

int run_sweep(const SweepArgs& a, bool scaling) {
  experiments::SweepConfig config;
  config.n_list = a.n_list;
  config.m_list = scaling ? std::vector<VertexId>{a.m} : a.m_list;
  config.seeds = a.seeds;
  config.master_seed = a.master_seed;
  config.workers = worker_count();
  config.fits = scaling || a.fits;
  config.clustering = a.clustering;
  config.diameter = a.diameter;
  config.check_signs = !scaling;
  config.max_edges = a.max_edges;
  require(!config.m_list.empty(), "--m-list must not be empty");
  require(!config.n_list.empty(), "--n-list must not be empty");

  std::ofstream csv(a.out);
  if (!csv) throw std::runtime_error("cannot write " + a.out);
  experiments::write_csv_header(csv);
  csv.flush();
  const auto rows = experiments::run_ba_sweep(config, [&](const experiments::SweepRow& row) {
    experiments::write_csv_row(csv, row);
    csv.flush();
    if (!csv) throw std::runtime_error("write failed for " + a.out);
  });
  if (!a.json.empty()) {
    std::ofstream json(a.json);
    if (!json) throw std::runtime_error("cannot write " + a.json);
    json << experiments::rows_to_json(rows, config, scaling ? "scaling-study" : "sweep-assortativity") << '\n';
  }

  if (scaling) {
    const auto s = experiments::summarize_scaling(rows, a.m);
    for (std::size_t i = 0; i < s.n_values.size(); ++i)
      // dense exponent 2 gives the harmonic-sum growth law up to the mean hub degree
      std::cout << "n=" << s.n_values[i] << " mean_avg_k_seed=" << s.mean_avg_k_seed[i]
                << " mean_avg_k_densified=" << s.mean_avg_k_densified[i] << " mean_k_max=" << s.mean_k_max[i]
                << " harmonic_trend="
                << predicted_dense_avg_degree(2.0, static_cast<std::uint64_t>(s.mean_k_max[i]), a.m) << '\n';
    std::cout << "densified_avg_degree_strictly_increasing=" << (s.densified_strictly_increasing ? "yes" : "no")
              << '\n';
    std::cout << "mean_exponent_shift=";
    if (s.mean_exponent_shift)
      std::cout << *s.mean_exponent_shift;
    else
      std::cout << "undefined";
    std::cout << "\nkmax_slope=" << s.kmax_slope << '\n';
  } else {
    const auto s = experiments::summarize_assortativity(rows);
    std::cout << "cells=" << s.cells << " r_seed_negative=" << s.negative_seed
              << " r_densified_positive=" << s.positive_densified
              << " trend_violations=" << s.trend_violations.size() << '\n';
    for (const auto& [m, n] : s.trend_violations)
      std::cout << "trend_violation m=" << m << " n=" << n << '\n';
  }
  return 0;
}

int run_fit(const FitArgs& a) {
  require(a.in.empty() != a.values.empty(), "exactly one of --in or --values is required");
  std::map<std::uint64_t, std::uint64_t> counts;
  if (!a.in.empty()) {
    const auto h = degree_histogram(io::read_edge_list(a.in).graph);
    counts.insert(h.counts.begin(), h.counts.end());
  } else {
    std::ifstream in(a.values);
    if (!in) throw std::runtime_error("cannot open " + a.values);
    std::string token;
    while (in >> token) {
      if (token.front() == '#') {
        std::getline(in, token);
        continue;
      }
      std::size_t used = 0;
      const auto v = std::stoull(token, &used);
      require(used == token.size(), "--values: not an integer: " + token);
      ++counts[v];
    }
  }
  const auto fit = fit_power_law(counts, a.kmin > 0 ? std::optional<std::uint64_t>(a.kmin) : std::nullopt);
  nlohmann::json doc = {{"schema_version", report::kSchemaVersion},
                        {"gamma_hat", fit.valid ? nlohmann::json(fit.gamma_hat) : nlohmann::json(nullptr)},
                        {"kmin", fit.kmin_used},
                        {"ks_distance", fit.valid ? nlohmann::json(fit.ks_distance) : nlohmann::json(nullptr)},
                        {"n_tail", fit.n_tail},
                        {"valid", fit.valid}};
  report::print_human(std::cout, doc);
  if (!a.json.empty()) {
    std::ofstream out(a.json);
    if (!out) throw std::runtime_error("cannot write " + a.json);
    out << doc.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netdense: dense scale-free graphs by subdivision and line graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a seed graph as an edge list");
  generate->add_option("--model", gen.model, "ba | config_power_law | copying | named")->required();
  generate->add_option("--n", gen.n, "Vertex count");
  generate->add_option("--m", gen.m, "Edges per new vertex (ba)");
  generate->add_option("--p", gen.p, "Copy probability (copying)");
  generate->add_option("--gamma", gen.gamma, "Degree exponent (config_power_law)");
  generate->add_option("--kmin", gen.kmin, "Minimum degree (config_power_law)");
  generate->add_option("--name", gen.name, "cycle | path | star | complete (named)");
  generate->add_option("--size", gen.size, "Size of the named graph");
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--out", gen.out, "Output edge list")->required();

  TransformArgs tr;
  auto* transform = app.add_subcommand("transform", "Subdivide, take the line graph, or densify");
  transform->add_option("--op", tr.op, "subdivide | line | densify")->required();
  transform->add_option("--in", tr.in, "Input edge list")->required();
  transform->add_option("--out", tr.out, "Output edge list")->required();
  transform->add_option("--provenance", tr.provenance, "Write the vertex provenance table here");
  transform->add_option("--max-edges", tr.max_edges, "Refuse outputs with more edges than this");

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Report structural metrics of an edge list");
  analyze->add_option("--in", an.in, "Input edge list")->required();
  analyze->add_option("--metrics", an.metrics, "Comma-separated: " + report::valid_metric_names());
  analyze->add_flag("--community", an.community, "Run modularity maximization");
  analyze->add_option("--json", an.json, "Also write the report as JSON");
  analyze->add_option("--seed", an.seed, "Seed for double sweep and community detection");
  analyze->add_option("--exact-diameter-limit", an.exact_limit, "Largest vertex count for all-source BFS");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep-assortativity", "Degree correlation of BA graphs before and after densifying");
  sweep->add_option("--n-list", sw.n_list, "Vertex counts")->delimiter(',');
  sweep->add_option("--m-list", sw.m_list, "Edges per new vertex")->delimiter(',');
  sweep->add_option("--seeds", sw.seeds, "Replicates per cell");
  sweep->add_option("--master-seed", sw.master_seed, "Master seed for per-cell streams");
  sweep->add_option("--out", sw.out, "CSV output")->required();
  sweep->add_option("--json", sw.json, "JSON mirror of the CSV");
  sweep->add_flag("--clustering", sw.clustering, "Also compute clustering of the densified graph");
  sweep->add_flag("--diameter", sw.diameter, "Also compute diameters");
  sweep->add_flag("--fits", sw.fits, "Also fit degree exponents");
  sweep->add_option("--max-edges", sw.max_edges, "Edge budget for densification");

  SweepArgs sc;
  sc.n_list = {1000, 3000, 10000, 30000, 100000};
  auto* scaling = app.add_subcommand("scaling-study", "Exponent shift, density growth and k_max scaling");
  scaling->add_option("--n-list", sc.n_list, "Vertex counts")->delimiter(',');
  scaling->add_option("--m", sc.m, "Edges per new vertex");
  scaling->add_option("--seeds", sc.seeds, "Replicates per n");
  scaling->add_option("--master-seed", sc.master_seed, "Master seed for per-cell streams");
  scaling->add_option("--out", sc.out, "CSV output")->required();
  scaling->add_option("--json", sc.json, "JSON mirror of the CSV");
  scaling->add_flag("--clustering", sc.clustering, "Also compute clustering of the densified graph");
  scaling->add_flag("--diameter", sc.diameter, "Also compute diameters");
  scaling->add_option("--max-edges", sc.max_edges, "Edge budget for densification");

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "Discrete power-law fit of a degree sequence or integer sample");
  fit->add_option("--in", fa.in, "Edge list whose degrees are fitted");
  fit->add_option("--values", fa.values, "Whitespace-separated integers to fit");
  fit->add_option("--kmin", fa.kmin, "Fixed lower cutoff (default: scan for minimal KS distance)");
  fit->add_option("--json", fa.json, "Also write the fit as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return run_generate(gen);
    if (transform->parsed()) return run_transform(tr);
    if (analyze->parsed()) return run_analyze(an);
    if (sweep->parsed()) return run_sweep(sw, false);
    if (scaling->parsed()) return run_sweep(sc, true);
    if (fit->parsed()) return run_fit(fa);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << " (predicted " << e.predicted() << ")\n";
    return kExitResource;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 1;
}
