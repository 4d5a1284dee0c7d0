#include "netdense/community.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "netdense/errors.hpp"
#include "netdense/louvain_levels.hpp"
#include "netdense/rng.hpp"

namespace netdense {

Partition Partition::from_labels(const Graph& g, std::span<const std::uint32_t> labels) {
  if (labels.size() != g.vertex_count())
    throw InputError("partition has " + std::to_string(labels.size()) + " labels for " +
                     std::to_string(g.vertex_count()) + " vertices");
  Partition p;
  p.community_of.resize(labels.size());
  std::unordered_map<std::uint32_t, CommunityId> dense;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const auto [it, inserted] = dense.try_emplace(labels[v], p.community_count);
    if (inserted) ++p.community_count;
    p.community_of[v] = it->second;
  }
  p.degree_sums.assign(p.community_count, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) p.degree_sums[p.community_of[v]] += g.degree(v);
  return p;
}

Partition Partition::singletons(const Graph& g) {
  std::vector<std::uint32_t> labels(g.vertex_count());
  std::iota(labels.begin(), labels.end(), 0u);
  return from_labels(g, labels);
}

Partition Partition::one_block(const Graph& g) {
  const std::vector<std::uint32_t> labels(g.vertex_count(), 0);
  return from_labels(g, labels);
}

double modularity(const Graph& g, const Partition& p) {
  if (p.community_of.size() != g.vertex_count() || p.degree_sums.size() != p.community_count)
    throw InputError("partition does not match the graph");
  if (g.edge_count() == 0) throw InputError("modularity of an edgeless graph");
  std::vector<std::uint64_t> intra(p.community_count, 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.neighbors(u))
      if (v > u && p.community_of[u] == p.community_of[v]) ++intra[p.community_of[u]];
  const auto m = static_cast<long double>(g.edge_count());
  long double q = 0.0L;
  for (CommunityId c = 0; c < p.community_count; ++c) {
    const long double share = static_cast<long double>(p.degree_sums[c]) / (2.0L * m);
    q += static_cast<long double>(intra[c]) / m - share * share;
  }
  return static_cast<double>(q);
}

namespace louvain {

double WeightedGraph::strength(std::uint32_t u) const {
  double s = 2.0 * loops[u];
  for (std::uint64_t i = offsets[u]; i < offsets[u + 1]; ++i) s += weights[i];
  return s;
}

WeightedGraph WeightedGraph::from_graph(const Graph& g) {
  WeightedGraph w;
  w.offsets.assign(g.offsets().begin(), g.offsets().end());
  w.targets.assign(g.targets().begin(), g.targets().end());
  w.weights.assign(w.targets.size(), 1.0);
  w.loops.assign(g.vertex_count(), 0.0);
  w.total_weight = 2.0 * static_cast<double>(g.edge_count());
  return w;
}

WeightedGraph aggregate(const WeightedGraph& g, const std::vector<std::uint32_t>& assignment,
                        std::uint32_t community_count) {
  // members grouped by community, counting sort
  std::vector<std::uint32_t> start(community_count + 1, 0);
  for (std::uint32_t c : assignment) ++start[c + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::uint32_t> members(assignment.size());
  {
    std::vector<std::uint32_t> cursor(start.begin(), start.end() - 1);
    for (std::uint32_t u = 0; u < assignment.size(); ++u) members[cursor[assignment[u]]++] = u;
  }

  WeightedGraph out;
  out.loops.assign(community_count, 0.0);
  out.offsets.assign(community_count + 1, 0);
  out.total_weight = g.total_weight;
  std::vector<double> acc(community_count, 0.0);
  std::vector<char> seen(community_count, 0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t c = 0; c < community_count; ++c) {
    touched.clear();
    for (std::uint32_t k = start[c]; k < start[c + 1]; ++k) {
      const std::uint32_t u = members[k];
      out.loops[c] += g.loops[u];
      for (std::uint64_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
        const std::uint32_t d = assignment[g.targets[i]];
        if (d == c) {
          // each internal edge is met from both ends
          out.loops[c] += 0.5 * g.weights[i];
        } else {
          if (!seen[d]) {
            seen[d] = 1;
            touched.push_back(d);
          }
          acc[d] += g.weights[i];
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t d : touched) {
      out.targets.push_back(d);
      out.weights.push_back(acc[d]);
      acc[d] = 0.0;
      seen[d] = 0;
    }
    out.offsets[c + 1] = out.targets.size();
  }
  return out;
}

double modularity(const WeightedGraph& g, const std::vector<std::uint32_t>& assignment) {
  const std::uint32_t count = assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
  std::vector<long double> inside(count, 0.0L);
  std::vector<long double> total(count, 0.0L);
  for (std::uint32_t u = 0; u < g.node_count(); ++u) {
    const std::uint32_t c = assignment[u];
    inside[c] += 2.0L * g.loops[u];
    total[c] += 2.0L * g.loops[u];
    for (std::uint64_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
      total[c] += g.weights[i];
      if (assignment[g.targets[i]] == c) inside[c] += g.weights[i];
    }
  }
  const long double m2 = g.total_weight;
  long double q = 0.0L;
  for (std::uint32_t c = 0; c < count; ++c) q += inside[c] / m2 - (total[c] / m2) * (total[c] / m2);
  return static_cast<double>(q);
}

namespace {

constexpr double kMinGain = 1e-10;

// One level of local moves. Returns whether any node changed community.
bool move_nodes(const WeightedGraph& g, Rng& rng, std::vector<std::uint32_t>& community) {
  const std::uint32_t n = g.node_count();
  community.resize(n);
  std::iota(community.begin(), community.end(), 0u);
  std::vector<double> strength(n);
  for (std::uint32_t u = 0; u < n; ++u) strength[u] = g.strength(u);
  std::vector<double> total = strength;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(std::span<std::uint32_t>(order));

  std::vector<double> link(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> touched;
  const double m2 = g.total_weight;
  bool any_move = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::uint32_t u : order) {
      const std::uint32_t own = community[u];
      const double ku = strength[u];
      touched.clear();
      for (std::uint64_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i) {
        const std::uint32_t c = community[g.targets[i]];
        if (!seen[c]) {
          seen[c] = 1;
          touched.push_back(c);
        }
        link[c] += g.weights[i];
      }
      total[own] -= ku;
      const double stay = link[own] - total[own] * ku / m2;
      bool have_other = false;
      double other_gain = 0.0;
      std::uint32_t other = own;
      for (std::uint32_t c : touched) {
        if (c == own) continue;
        const double gain = link[c] - total[c] * ku / m2;
        if (!have_other || gain > other_gain || (gain == other_gain && c < other)) {
          other = c;
          other_gain = gain;
          have_other = true;
        }
      }
      const std::uint32_t best = (have_other && other_gain > stay + kMinGain) ? other : own;
      total[best] += ku;
      community[u] = best;
      if (best != own) moved = true;
      for (std::uint32_t c : touched) {
        link[c] = 0.0;
        seen[c] = 0;
      }
    }
    any_move = any_move || moved;
  }
  return any_move;
}

std::uint32_t renumber(std::vector<std::uint32_t>& community) {
  std::vector<std::uint32_t> dense(community.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (auto& c : community) {
    if (dense[c] == UINT32_MAX) dense[c] = next++;
    c = dense[c];
  }
  return next;
}

}  // namespace

std::vector<Level> run_levels(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Level> levels;
  WeightedGraph current = WeightedGraph::from_graph(g);
  std::vector<std::uint32_t> expanded(g.vertex_count());
  std::iota(expanded.begin(), expanded.end(), 0u);
  while (true) {
    Level level;
    if (!move_nodes(current, rng, level.assignment)) break;
    level.community_count = renumber(level.assignment);
    for (auto& c : expanded) c = level.assignment[c];
    level.expanded = expanded;
    WeightedGraph next = aggregate(current, level.assignment, level.community_count);
    level.graph = std::move(current);
    current = std::move(next);
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace louvain

Partition louvain_maximize(const Graph& g, std::uint64_t seed) {
  if (g.edge_count() == 0) throw InputError("louvain needs at least one edge");
  const auto levels = louvain::run_levels(g, seed);
  if (levels.empty()) return Partition::singletons(g);
  return Partition::from_labels(g, levels.back().expanded);
}

CommunitySizeDistribution community_sizes(const Graph& g, const Partition& p) {
  if (p.community_of.size() != g.vertex_count()) throw InputError("partition does not match the graph");
  CommunitySizeDistribution d;
  d.sizes.assign(p.community_count, 0);
  for (CommunityId c : p.community_of) ++d.sizes[c];
  for (std::uint64_t s : d.sizes) ++d.histogram[s];
  d.fit = fit_power_law(d.histogram);
  return d;
}

}  // namespace netdense
