#include "netdense/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "netdense/errors.hpp"

namespace netdense {

std::string to_string(Model model) {
  switch (model) {
    case Model::kBarabasiAlbert: return "ba";
    case Model::kConfigPowerLaw: return "config_power_law";
    case Model::kCopying: return "copying";
    case Model::kNamed: return "named";
  }
  return "unknown";
}

std::string to_string(NamedGraph name) {
  switch (name) {
    case NamedGraph::kCycle: return "cycle";
    case NamedGraph::kPath: return "path";
    case NamedGraph::kStar: return "star";
    case NamedGraph::kComplete: return "complete";
  }
  return "unknown";
}

Model parse_model(const std::string& text) {
  for (Model m : {Model::kBarabasiAlbert, Model::kConfigPowerLaw, Model::kCopying, Model::kNamed})
    if (to_string(m) == text) return m;
  throw InputError("unknown model '" + text + "' (expected ba, config_power_law, copying, named)");
}

NamedGraph parse_named_graph(const std::string& text) {
  for (NamedGraph n : {NamedGraph::kCycle, NamedGraph::kPath, NamedGraph::kStar, NamedGraph::kComplete})
    if (to_string(n) == text) return n;
  throw InputError("unknown named graph '" + text + "' (expected cycle, path, star, complete)");
}

Graph barabasi_albert(VertexId n, VertexId m, std::uint64_t seed) {
  if (m < 1 || m >= n)
    throw InputError("barabasi_albert requires 1 <= m < n (got n=" + std::to_string(n) +
                     ", m=" + std::to_string(m) + ")");
  Rng rng(seed);
  std::vector<Edge> edges;
  const EdgeCount expected = EdgeCount{m} * (m + 1) / 2 + EdgeCount{n - m - 1} * m;
  edges.reserve(expected);
  // every edge contributes both endpoints, so a uniform draw from this array
  // picks a vertex with probability proportional to its degree
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * expected);

  for (VertexId u = 0; u <= m; ++u)
    for (VertexId v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }

  std::vector<VertexId> chosen;
  chosen.reserve(m);
  for (VertexId t = m + 1; t < n; ++t) {
    chosen.clear();
    while (chosen.size() < m) {
      const VertexId target = endpoints[rng.below(endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) chosen.push_back(target);
    }
    for (VertexId target : chosen) {
      edges.emplace_back(target, t);
      endpoints.push_back(target);
      endpoints.push_back(t);
    }
  }
  return build_from_edges(edges, n).graph;
}

DiscretePowerLaw::DiscretePowerLaw(double gamma, std::uint64_t kmin, std::uint64_t kmax) : kmin_(kmin) {
  if (!(gamma > 0.0) || kmin < 1 || kmax < kmin)
    throw InputError("discrete power law needs gamma > 0 and 1 <= kmin <= kmax");
  cdf_.resize(kmax - kmin + 1);
  double acc = 0.0;
  for (std::uint64_t k = kmin; k <= kmax; ++k) {
    acc += std::pow(static_cast<double>(k), -gamma);
    cdf_[k - kmin] = acc;
  }
  for (double& c : cdf_) c /= acc;
  cdf_.back() = 1.0;
}

std::uint64_t DiscretePowerLaw::operator()(Rng& rng) const {
  const double u = rng.unit();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return kmin_ + static_cast<std::uint64_t>(it - cdf_.begin());
}

ConfigurationResult configuration_power_law(VertexId n, double gamma, std::uint32_t kmin,
                                            std::uint64_t seed) {
  if (!(gamma > 1.0)) throw InputError("configuration model requires gamma > 1");
  if (kmin < 1) throw InputError("configuration model requires kmin >= 1");
  if (n < 2) throw InputError("configuration model requires n >= 2");
  if (kmin > n - 1) throw InputError("configuration model requires kmin <= n - 1");

  ConfigurationResult result;
  const double cutoff = std::floor(std::pow(static_cast<double>(n), 1.0 / (gamma - 1.0)));
  result.degree_cap = static_cast<std::uint64_t>(
      std::clamp(cutoff, static_cast<double>(kmin), static_cast<double>(n - 1)));
  const DiscretePowerLaw law(gamma, kmin, result.degree_cap);

  Rng rng(seed);
  result.sampled_degrees.resize(n);
  std::uint64_t total = 0;
  for (auto& d : result.sampled_degrees) {
    d = static_cast<std::uint32_t>(law(rng));
    total += d;
  }
  if (total % 2 == 1) {
    const auto i = static_cast<std::size_t>(rng.below(n));
    const std::uint32_t old = result.sampled_degrees[i];
    bool fixed = false;
    for (int attempt = 0; attempt < 1000 && !fixed; ++attempt) {
      const auto d = static_cast<std::uint32_t>(law(rng));
      if ((d + old) % 2 == 1) {
        result.sampled_degrees[i] = d;
        fixed = true;
      }
    }
    // single-point support with odd total: the parity cannot change by resampling
    if (!fixed) {
      --result.sampled_degrees[i];
      ++result.dropped_stubs;
    }
  }

  std::vector<VertexId> stubs;
  for (VertexId u = 0; u < n; ++u) stubs.insert(stubs.end(), result.sampled_degrees[u], u);
  const std::uint64_t budget = 100 * static_cast<std::uint64_t>(stubs.size());

  std::unordered_set<std::uint64_t> present;
  present.reserve(stubs.size());
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  while (stubs.size() >= 2 && result.rejections < budget) {
    const VertexId a = stubs.back();
    const auto j = static_cast<std::size_t>(rng.below(stubs.size() - 1));
    const VertexId b = stubs[j];
    const std::uint64_t key = (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
    if (a == b || present.contains(key)) {
      ++result.rejections;
      continue;
    }
    present.insert(key);
    edges.emplace_back(a, b);
    stubs[j] = stubs[stubs.size() - 2];
    stubs.resize(stubs.size() - 2);
  }
  result.dropped_stubs += stubs.size();
  result.graph = build_from_edges(edges, n).graph;
  return result;
}

Graph copying_model(VertexId n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("copying model requires 0 <= p <= 1");
  if (n < 2) throw InputError("copying model requires n >= 2");
  Rng rng(seed);
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<Edge> edges{{0, 1}};
  adj[0].push_back(1);
  adj[1].push_back(0);
  std::vector<VertexId> snapshot;
  for (VertexId t = 2; t < n; ++t) {
    const auto target = static_cast<VertexId>(rng.below(t));
    snapshot = adj[target];
    edges.emplace_back(target, t);
    adj[target].push_back(t);
    adj[t].push_back(target);
    for (VertexId w : snapshot) {
      if (rng.bernoulli(p)) {
        edges.emplace_back(w, t);
        adj[w].push_back(t);
        adj[t].push_back(w);
      }
    }
  }
  return build_from_edges(edges, n).graph;
}

double copying_exponent_solve(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw InputError("copying exponent requires 0 < p <= 1");
  const double log_p = std::log(p);
  const auto residual = [&](double gamma) { return gamma - 1.0 - 1.0 / p + std::pow(p, gamma - 2.0); };

  // residual is convex in gamma with residual(1) = 0
  if (1.0 + log_p / p >= 0.0) return 1.0;

  // stationary point: 1 + ln(p) p^(gamma-2) = 0
  double lo = 2.0 + std::log(-1.0 / log_p) / log_p;
  double hi = 1.0 + 1.0 / p;
  for (int iter = 0; iter < 400 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (residual(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return std::abs(residual(lo)) < std::abs(residual(hi)) ? lo : hi;
}

Graph named_graph(NamedGraph name, VertexId size) {
  const VertexId minimum = (name == NamedGraph::kCycle || name == NamedGraph::kComplete) ? 3 : 2;
  if (size < minimum)
    throw InputError(to_string(name) + " needs size >= " + std::to_string(minimum));
  std::vector<Edge> edges;
  switch (name) {
    case NamedGraph::kCycle:
      for (VertexId u = 0; u < size; ++u) edges.emplace_back(u, (u + 1) % size);
      break;
    case NamedGraph::kPath:
      for (VertexId u = 0; u + 1 < size; ++u) edges.emplace_back(u, u + 1);
      break;
    case NamedGraph::kStar:
      for (VertexId u = 1; u < size; ++u) edges.emplace_back(0, u);
      break;
    case NamedGraph::kComplete:
      for (VertexId u = 0; u < size; ++u)
        for (VertexId v = u + 1; v < size; ++v) edges.emplace_back(u, v);
      break;
  }
  return build_from_edges(edges, size).graph;
}

Graph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::kBarabasiAlbert: return barabasi_albert(spec.n, spec.m, spec.seed);
    case Model::kConfigPowerLaw:
      return configuration_power_law(spec.n, spec.gamma, spec.kmin, spec.seed).graph;
    case Model::kCopying: return copying_model(spec.n, spec.p, spec.seed);
    case Model::kNamed: return named_graph(spec.name, spec.size);
  }
  throw InputError("unknown model");
}

}  // namespace netdense
