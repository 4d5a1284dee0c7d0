#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "netdense/graph.hpp"

namespace netdense {

inline constexpr EdgeCount kDefaultEdgeBudget = EdgeCount{1} << 31;

struct SubdivisionResult {
  Graph graph;
  VertexId original_vertex_count = 0;  // ids [0, original) are the seed's vertices
  // subdivision vertex original + e sits on seed edge e
  std::vector<Edge> edge_of_subvertex;

  VertexId subdivision_vertex(EdgeCount edge) const {
    return original_vertex_count + static_cast<VertexId>(edge);
  }
};

// Replaces every edge uv by a path u-w-v through a fresh vertex w.
SubdivisionResult subdivide(const Graph& g);

struct LineGraphResult {
  Graph graph;
  // line vertex e stands for base edge base_edges[e]; numbering follows the
  // base graph's canonical edge order, so vertex_of_edge is the identity
  std::vector<Edge> base_edges;
};

// Number of edges line_graph(g) would have: sum over u of C(deg(u), 2).
EdgeCount line_graph_edge_count(const Graph& g);

// Throws ResourceError before allocating when the output would exceed
// max_edges.
LineGraphResult line_graph(const Graph& g, EdgeCount max_edges = kDefaultEdgeBudget);

struct DensifyResult {
  Graph graph;
  // half_edge_vertex[e] = {line vertex of half-edge (a, w), of (w, b)} for
  // seed edge e = (a, b), a < b
  std::vector<std::array<VertexId, 2>> half_edge_vertex;
  // line vertices forming the clique K_deg(u) at seed vertex u, ascending
  std::vector<std::vector<VertexId>> clique_of_vertex;
  // seed vertex whose clique holds each line vertex
  std::vector<VertexId> seed_vertex_of;
  // seed edge each line vertex came from
  std::vector<EdgeCount> seed_edge_of;
  // seed vertices with no incident edge; they have no image
  std::uint64_t vanished_isolated = 0;
};

// line_graph(subdivide(g)) with provenance back to the seed graph.
DensifyResult densify(const Graph& g, EdgeCount max_edges = kDefaultEdgeBudget);

// {k -> k * n_k}: the exact degree multiplicities of densify(g) given the
// seed histogram. Degree 0 drops out.
DegreeHistogram predicted_degree_multiplicities(const DegreeHistogram& seed);

}  // namespace netdense
