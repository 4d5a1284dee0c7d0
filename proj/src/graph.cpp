#include "netdense/graph.hpp"

#include <algorithm>
#include <string>

#include "netdense/errors.hpp"

namespace netdense {

Graph::Graph(std::vector<EdgeCount> offsets, std::vector<VertexId> targets)
    : offsets_(std::move(offsets)), targets_(std::move(targets)) {
  validate();
}

Graph Graph::from_trusted_csr(std::vector<EdgeCount> offsets, std::vector<VertexId> targets) {
  Graph g;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  return g;
}

void Graph::validate() const {
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != targets_.size())
    throw InputError("graph: offsets do not span the target array");
  if (targets_.size() % 2 != 0)
    throw InputError("graph: odd number of adjacency slots");
  const VertexId n = vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    if (offsets_[u] > offsets_[u + 1]) throw InputError("graph: offsets not monotone");
    auto nb = neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const VertexId v = nb[i];
      if (v >= n) throw InputError("graph: neighbor id out of range");
      if (v == u) throw InputError("graph: self-loop at vertex " + std::to_string(u));
      if (i > 0 && nb[i - 1] >= v) throw InputError("graph: neighbor list not strictly sorted");
    }
  }
  // symmetry: every slot (u, v) must have its mirror (v, u)
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : neighbors(u))
      if (v > u && !has_edge(v, u))
        throw InputError("graph: adjacency is not symmetric");
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(u))
      if (v > u) edges.emplace_back(u, v);
  return edges;
}

std::vector<EdgeCount> Graph::slot_edge_index() const {
  std::vector<EdgeCount> index(targets_.size());
  EdgeCount next = 0;
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (EdgeCount s = offsets_[u]; s < offsets_[u + 1]; ++s) {
      const VertexId v = targets_[s];
      if (v > u) {
        index[s] = next++;
      } else {
        // mirror slot was numbered when v was visited
        auto nb = neighbors(v);
        auto it = std::lower_bound(nb.begin(), nb.end(), u);
        index[s] = index[offsets_[v] + static_cast<EdgeCount>(it - nb.begin())];
      }
    }
  }
  return index;
}

BuildResult build_from_edges(std::span<const Edge> edges, std::optional<VertexId> vertex_count) {
  BuildResult result;
  VertexId n = 0;
  if (vertex_count) {
    n = *vertex_count;
    for (const auto& [u, v] : edges)
      if (u >= n || v >= n)
        throw InputError("vertex id " + std::to_string(std::max(u, v)) +
                         " out of range for vertex count " + std::to_string(n));
  } else {
    for (const auto& [u, v] : edges) n = std::max<VertexId>(n, std::max(u, v) + 1);
  }

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) {
      ++result.dropped_self_loops;
      continue;
    }
    if (u > v) std::swap(u, v);
    canon.emplace_back(u, v);
  }
  std::sort(canon.begin(), canon.end());
  const auto last = std::unique(canon.begin(), canon.end());
  result.dropped_duplicates = static_cast<std::uint64_t>(canon.end() - last);
  canon.erase(last, canon.end());

  std::vector<EdgeCount> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : canon) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (VertexId u = 0; u < n; ++u) offsets[u + 1] += offsets[u];
  std::vector<VertexId> targets(offsets.back());
  std::vector<EdgeCount> cursor(offsets.begin(), offsets.end() - 1);
  // canon is sorted, so the first pass hands every vertex its smaller
  // neighbors ascending and the second pass its larger ones ascending
  for (const auto& [u, v] : canon) targets[cursor[v]++] = u;
  for (const auto& [u, v] : canon) targets[cursor[u]++] = v;

  result.graph = Graph::from_trusted_csr(std::move(offsets), std::move(targets));
  return result;
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  h.total = g.vertex_count();
  for (VertexId u = 0; u < g.vertex_count(); ++u) ++h.counts[g.degree(u)];
  return h;
}

std::vector<Hops> bfs_distances(const Graph& g, VertexId source) {
  if (source >= g.vertex_count())
    throw InputError("bfs source " + std::to_string(source) + " out of range");
  std::vector<Hops> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> frontier{source};
  dist[source] = 0;
  std::size_t head = 0;
  while (head < frontier.size()) {
    const VertexId u = frontier[head++];
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

namespace {

// Component label per vertex, labels numbered in order of smallest member.
std::vector<VertexId> component_labels(const Graph& g, VertexId& count) {
  const VertexId n = g.vertex_count();
  std::vector<VertexId> label(n, ComponentResult::kNotInComponent);
  std::vector<VertexId> stack;
  count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != ComponentResult::kNotInComponent) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : g.neighbors(u)) {
        if (label[v] == ComponentResult::kNotInComponent) {
          label[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

ComponentResult largest_component(const Graph& g) {
  ComponentResult result;
  if (g.vertex_count() == 0) return result;

  VertexId count = 0;
  const auto label = component_labels(g, count);
  std::vector<VertexId> size(count, 0);
  for (VertexId l : label) ++size[l];
  // labels are ordered by smallest member, so the first maximum wins ties
  const auto best = static_cast<VertexId>(std::max_element(size.begin(), size.end()) - size.begin());

  result.relabel.assign(g.vertex_count(), ComponentResult::kNotInComponent);
  VertexId next = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (label[u] == best) result.relabel[u] = next++;

  std::vector<EdgeCount> offsets(static_cast<std::size_t>(next) + 1, 0);
  std::vector<VertexId> targets;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (label[u] != best) continue;
    // relabeling is monotone, so neighbor order is preserved
    for (VertexId v : g.neighbors(u)) targets.push_back(result.relabel[v]);
    offsets[result.relabel[u] + 1] = targets.size();
  }
  result.graph = Graph::from_trusted_csr(std::move(offsets), std::move(targets));
  return result;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  VertexId count = 0;
  component_labels(g, count);
  return count == 1;
}

double average_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0.0;
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
}

}  // namespace netdense
