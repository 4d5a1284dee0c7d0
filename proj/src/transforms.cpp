#include "netdense/transforms.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "netdense/errors.hpp"

namespace netdense {

namespace {

void check_vertex_capacity(std::uint64_t vertices, const char* what) {
  if (vertices > std::numeric_limits<VertexId>::max() - 1)
    throw ResourceError(std::string(what) + ": " + std::to_string(vertices) +
                            " vertices exceed the 32-bit vertex id space",
                        vertices);
}

}  // namespace

SubdivisionResult subdivide(const Graph& g) {
  const VertexId n = g.vertex_count();
  const EdgeCount m = g.edge_count();
  check_vertex_capacity(EdgeCount{n} + m, "subdivide");

  SubdivisionResult result;
  result.original_vertex_count = n;
  result.edge_of_subvertex = g.edge_list();

  const auto slot_edge = g.slot_edge_index();
  std::vector<EdgeCount> offsets(static_cast<std::size_t>(n + m) + 1);
  std::vector<VertexId> targets(4 * m);
  // original vertices keep their CSR layout with neighbors replaced by the
  // subdivision vertex of the edge; incident edge ids are already ascending
  for (VertexId u = 0; u <= n; ++u) offsets[u] = g.offsets()[u];
  for (EdgeCount s = 0; s < 2 * m; ++s) targets[s] = n + static_cast<VertexId>(slot_edge[s]);
  for (EdgeCount e = 0; e < m; ++e) {
    const auto [a, b] = result.edge_of_subvertex[e];
    offsets[n + e + 1] = offsets[n + e] + 2;
    targets[offsets[n + e]] = a;
    targets[offsets[n + e] + 1] = b;
  }
  result.graph = Graph::from_trusted_csr(std::move(offsets), std::move(targets));
  return result;
}

EdgeCount line_graph_edge_count(const Graph& g) {
  EdgeCount total = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const EdgeCount d = g.degree(u);
    total += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return total;
}

LineGraphResult line_graph(const Graph& g, EdgeCount max_edges) {
  const EdgeCount predicted = line_graph_edge_count(g);
  if (predicted > max_edges)
    throw ResourceError("line graph would have " + std::to_string(predicted) +
                            " edges (sum of C(deg,2)), above the budget of " +
                            std::to_string(max_edges),
                        predicted);
  check_vertex_capacity(g.edge_count(), "line graph");

  LineGraphResult result;
  result.base_edges = g.edge_list();
  const EdgeCount m = g.edge_count();
  const auto slot_edge = g.slot_edge_index();
  const auto base_offsets = g.offsets();

  std::vector<EdgeCount> offsets(static_cast<std::size_t>(m) + 1, 0);
  for (EdgeCount e = 0; e < m; ++e) {
    const auto [a, b] = result.base_edges[e];
    offsets[e + 1] = offsets[e] + g.degree(a) + g.degree(b) - 2;
  }
  std::vector<VertexId> targets(offsets.back());

  for (EdgeCount e = 0; e < m; ++e) {
    const auto [a, b] = result.base_edges[e];
    // incident edge ids at each endpoint are ascending; the two lists only
    // share e itself because the base graph is simple
    auto first_a = slot_edge.begin() + static_cast<std::ptrdiff_t>(base_offsets[a]);
    auto last_a = slot_edge.begin() + static_cast<std::ptrdiff_t>(base_offsets[a + 1]);
    auto first_b = slot_edge.begin() + static_cast<std::ptrdiff_t>(base_offsets[b]);
    auto last_b = slot_edge.begin() + static_cast<std::ptrdiff_t>(base_offsets[b + 1]);
    auto out = targets.begin() + static_cast<std::ptrdiff_t>(offsets[e]);
    while (first_a != last_a || first_b != last_b) {
      EdgeCount next;
      if (first_b == last_b || (first_a != last_a && *first_a < *first_b))
        next = *first_a++;
      else
        next = *first_b++;
      if (next != e) *out++ = static_cast<VertexId>(next);
    }
  }
  result.graph = Graph::from_trusted_csr(std::move(offsets), std::move(targets));
  return result;
}

DensifyResult densify(const Graph& g, EdgeCount max_edges) {
  const auto sub = subdivide(g);
  auto line = line_graph(sub.graph, max_edges);
  const VertexId n = g.vertex_count();

  DensifyResult result;
  result.half_edge_vertex.resize(g.edge_count());
  result.clique_of_vertex.resize(n);
  result.seed_vertex_of.resize(line.base_edges.size());
  result.seed_edge_of.resize(line.base_edges.size());
  for (std::size_t i = 0; i < line.base_edges.size(); ++i) {
    // subdivided edges are (seed vertex, n + seed edge) with the seed vertex first
    const auto [x, w] = line.base_edges[i];
    const EdgeCount e = w - n;
    const auto vertex = static_cast<VertexId>(i);
    result.seed_vertex_of[i] = x;
    result.seed_edge_of[i] = e;
    result.clique_of_vertex[x].push_back(vertex);
    const bool low_end = sub.edge_of_subvertex[e].first == x;
    result.half_edge_vertex[e][low_end ? 0 : 1] = vertex;
  }
  for (VertexId u = 0; u < n; ++u)
    if (g.degree(u) == 0) ++result.vanished_isolated;
  result.graph = std::move(line.graph);
  return result;
}

DegreeHistogram predicted_degree_multiplicities(const DegreeHistogram& seed) {
  DegreeHistogram out;
  for (const auto& [k, count] : seed.counts) {
    if (k == 0) continue;
    out.counts[k] = k * count;
    out.total += k * count;
  }
  return out;
}

}  // namespace netdense
