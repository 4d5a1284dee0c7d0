#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace netdense {

using VertexId = std::uint32_t;
using EdgeCount = std::uint64_t;
using Edge = std::pair<VertexId, VertexId>;

// Hop distance returned by BFS. Unreachable vertices hold kUnreachable;
// reports must translate it, never print the raw value.
using Hops = std::uint32_t;
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

// Immutable simple undirected graph in compressed sparse row form.
//
// Vertex ids are dense in [0, vertex_count()). Every neighbor list is sorted
// ascending and free of self-loops and duplicates. Edges are indexed in
// lexicographic order of (u, v) with u < v; edge_list() and every
// edge-indexed provenance map in the library use that order.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Takes ownership of CSR arrays. The arrays must already satisfy the class
  // invariants; this is checked and InputError is thrown otherwise.
  Graph(std::vector<EdgeCount> offsets, std::vector<VertexId> targets);

  // Skips the O(|E| log d) invariant check. For builders in this library
  // whose output is correct by construction.
  static Graph from_trusted_csr(std::vector<EdgeCount> offsets, std::vector<VertexId> targets);

  // Throws InputError naming the first violated invariant.
  void validate() const;

  VertexId vertex_count() const { return static_cast<VertexId>(offsets_.size() - 1); }
  EdgeCount edge_count() const { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  EdgeCount degree(VertexId u) const { return offsets_[u + 1] - offsets_[u]; }
  bool has_edge(VertexId u, VertexId v) const;

  // Edges (u, v), u < v, in canonical index order.
  std::vector<Edge> edge_list() const;

  // For every CSR slot, the canonical index of the edge it stores. Slot s of
  // vertex u lives at offsets()[u] + position.
  std::vector<EdgeCount> slot_edge_index() const;

  std::span<const EdgeCount> offsets() const { return offsets_; }
  std::span<const VertexId> targets() const { return targets_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<EdgeCount> offsets_;
  std::vector<VertexId> targets_;
};

struct BuildResult {
  Graph graph;
  std::uint64_t dropped_self_loops = 0;
  std::uint64_t dropped_duplicates = 0;
};

// Builds a simple graph from an arbitrary edge list. Self-loops and repeated
// pairs (either orientation) are dropped and counted. When vertex_count is
// given every id must be below it; otherwise it is max id + 1.
BuildResult build_from_edges(std::span<const Edge> edges,
                             std::optional<VertexId> vertex_count = std::nullopt);

struct DegreeHistogram {
  std::map<EdgeCount, std::uint64_t> counts;  // degree -> number of vertices
  std::uint64_t total = 0;                    // number of vertices

  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;
};

DegreeHistogram degree_histogram(const Graph& g);

std::vector<Hops> bfs_distances(const Graph& g, VertexId source);

struct ComponentResult {
  Graph graph;
  // old id -> new id, or kNotInComponent
  std::vector<VertexId> relabel;
  static constexpr VertexId kNotInComponent = std::numeric_limits<VertexId>::max();
};

// Largest connected component by vertex count; ties go to the component
// holding the smallest vertex id. Relative vertex order is preserved.
ComponentResult largest_component(const Graph& g);

bool is_connected(const Graph& g);

double average_degree(const Graph& g);

}  // namespace netdense
