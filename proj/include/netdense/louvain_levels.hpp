#pragma once

// Level-by-level view of the Louvain run, for diagnostics and tests. The
// weighted multigraph here never leaves the community module's API otherwise.

#include <cstdint>
#include <vector>

#include "netdense/community.hpp"
#include "netdense/graph.hpp"

namespace netdense::louvain {

// Undirected weighted graph with self-loops. A loop of weight w adds 2w to
// its vertex's strength, matching the multigraph degree convention.
struct WeightedGraph {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> targets;  // no self entries; loops live in `loops`
  std::vector<double> weights;
  std::vector<double> loops;
  double total_weight = 0.0;  // 2m: sum of all strengths

  std::uint32_t node_count() const { return static_cast<std::uint32_t>(loops.size()); }
  double strength(std::uint32_t u) const;

  static WeightedGraph from_graph(const Graph& g);
};

// Collapses each community of `assignment` (dense ids) into one node.
WeightedGraph aggregate(const WeightedGraph& g, const std::vector<std::uint32_t>& assignment,
                        std::uint32_t community_count);

double modularity(const WeightedGraph& g, const std::vector<std::uint32_t>& assignment);

struct Level {
  WeightedGraph graph;                   // graph the local moves ran on
  std::vector<std::uint32_t> assignment; // node -> community after moving, dense
  std::uint32_t community_count = 0;
  std::vector<std::uint32_t> expanded;   // original vertex -> community
};

// Every level that changed the partition, in order.
std::vector<Level> run_levels(const Graph& g, std::uint64_t seed);

}  // namespace netdense::louvain
