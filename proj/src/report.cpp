#include "netdense/report.hpp"

#include <ostream>
#include <sstream>

#include "netdense/community.hpp"
#include "netdense/errors.hpp"
#include "netdense/rng.hpp"

namespace netdense::report {

namespace {

const std::pair<const char*, Metric> kMetricNames[] = {
    {"moments", Metric::kMoments},
    {"powerlaw", Metric::kPowerLaw},
    {"assortativity", Metric::kAssortativity},
    {"clustering", Metric::kClustering},
    {"diameter", Metric::kDiameter},
};

nlohmann::json fit_json(const PowerLawFit& f) {
  return {{"gamma_hat", f.valid ? nlohmann::json(f.gamma_hat) : nlohmann::json(nullptr)},
          {"kmin", f.kmin_used},
          {"ks_distance", f.valid ? nlohmann::json(f.ks_distance) : nlohmann::json(nullptr)},
          {"n_tail", f.n_tail},
          {"valid", f.valid}};
}

nlohmann::json keyed(const std::map<EdgeCount, double>& m) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

nlohmann::json keyed(const std::map<std::uint64_t, std::uint64_t>& m) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

std::string valid_metric_names() {
  std::string names;
  for (const auto& [name, metric] : kMetricNames) names += std::string(names.empty() ? "" : ", ") + name;
  return names + ", all";
}

std::set<Metric> parse_metrics(const std::string& text) {
  std::set<Metric> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& [name, metric] : kMetricNames) out.insert(metric);
      continue;
    }
    bool found = false;
    for (const auto& [name, metric] : kMetricNames)
      if (item == name) {
        out.insert(metric);
        found = true;
      }
    if (!found) throw InputError("unknown metric '" + item + "'; valid metrics: " + valid_metric_names());
  }
  if (out.empty()) throw InputError("no metrics requested; valid metrics: " + valid_metric_names());
  return out;
}

nlohmann::json analyze(const Graph& g, const AnalysisOptions& options) {
  nlohmann::json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["provenance"] = {{"tool", "netdense"},
                       {"version", kToolVersion},
                       {"rng_family", kRngFamily},
                       {"seed", options.seed},
                       {"source", options.source},
                       {"gen_spec", nullptr}};

  const auto hist = degree_histogram(g);
  EdgeCount isolated = hist.counts.contains(0) ? hist.counts.at(0) : 0;
  const bool connected = is_connected(g);
  doc["graph"] = {{"n", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"avg_degree", average_degree(g)},
                  {"k_max", max_degree(g)},
                  {"isolated_vertices", isolated},
                  {"connected", connected}};
  doc["degree_histogram"] = keyed(std::map<std::uint64_t, std::uint64_t>(hist.counts.begin(), hist.counts.end()));

  const auto has = [&](Metric m) { return options.metrics.contains(m); };

  if (has(Metric::kMoments) && hist.total > 0) {
    const auto mo = moments(hist);
    doc["moments"] = {{"mean_degree", mo.mean_degree},
                      {"second_moment", mo.second_moment},
                      {"gf_first", mo.gf_first},
                      {"gf_second", mo.gf_second}};
    // both expressions for the line graph's average degree
    if (mo.mean_degree > 0.0)
      doc["line_avg_degree"] = {{"gf_ratio", line_avg_degree_gf_ratio(mo)}, {"exact", line_avg_degree_exact(mo)}};
    else
      doc["line_avg_degree"] = {{"gf_ratio", nullptr}, {"exact", nullptr}};
  }

  if (has(Metric::kPowerLaw)) doc["power_law"] = fit_json(fit_power_law(hist));

  // distance and mixing metrics on the largest component
  const bool need_component = has(Metric::kAssortativity) || has(Metric::kDiameter);
  ComponentResult component;
  const Graph* core = &g;
  if (need_component && !connected) {
    component = largest_component(g);
    core = &component.graph;
  }
  if (need_component)
    doc["largest_component"] = {{"used", !connected}, {"n", core->vertex_count()}, {"edges", core->edge_count()}};

  if (has(Metric::kAssortativity)) {
    nlohmann::json a = {{"r", nullptr}, {"defined", false}, {"on_largest_component", !connected}};
    if (core->edge_count() > 0) {
      const auto r = assortativity(*core);
      if (r.defined) a["r"] = r.r;
      a["defined"] = r.defined;
    }
    doc["assortativity"] = a;
  }

  if (has(Metric::kClustering)) {
    const auto c = avg_local_clustering(g);
    doc["clustering"] = {{"global", c.global_c}, {"avg_local", c.avg_local_c}, {"per_degree", keyed(c.per_degree_c)}};
  }

  if (has(Metric::kDiameter)) {
    nlohmann::json d = {{"value", nullptr}, {"lower_bound", nullptr}, {"exact", false},
                        {"on_largest_component", !connected}};
    if (core->vertex_count() > 0) {
      const auto r = diameter(*core, options.seed, options.exact_diameter_limit, options.workers);
      if (r.diameter) d["value"] = *r.diameter;
      d["lower_bound"] = r.lower_bound;
      d["exact"] = r.exact;
    }
    doc["diameter"] = d;
  }

  if (options.community) {
    nlohmann::json c = {{"modularity", nullptr}, {"communities", nullptr}};
    if (g.edge_count() > 0) {
      const auto p = louvain_maximize(g, options.seed);
      const auto sizes = community_sizes(g, p);
      c["modularity"] = modularity(g, p);
      c["communities"] = p.community_count;
      c["size_histogram"] = keyed(sizes.histogram);
      c["size_fit"] = fit_json(sizes.fit);
      c["size_exponent_convention"] = "fitted as P(s) ~ s^-gamma (decaying); a positive exponent would not normalize";
    }
    doc["community"] = c;
  }
  return doc;
}

namespace {

void print_value(std::ostream& out, const nlohmann::json& v) {
  if (v.is_null())
    out << "undefined";
  else if (v.is_string())
    out << v.get<std::string>();
  else
    out << v.dump();
}

void print_tree(std::ostream& out, const nlohmann::json& node, const std::string& prefix) {
  for (const auto& [key, value] : node.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object() && !value.empty() && name != "degree_histogram" && key != "per_degree" &&
        key != "size_histogram") {
      print_tree(out, value, name);
    } else {
      out << name << ": ";
      print_value(out, value);
      out << '\n';
    }
  }
}

}  // namespace

void print_human(std::ostream& out, const nlohmann::json& report) { print_tree(out, report, ""); }

}  // namespace netdense::report
