#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "netdense/graph.hpp"
#include "netdense/metrics.hpp"

namespace netdense {

using CommunityId = std::uint32_t;

struct Partition {
  std::vector<CommunityId> community_of;  // vertex -> community, dense ids
  CommunityId community_count = 0;
  std::vector<std::uint64_t> degree_sums;  // community -> sum of member degrees

  // Renumbers labels densely in order of first appearance and fills the
  // degree-sum cache from g. labels.size() must equal g.vertex_count().
  static Partition from_labels(const Graph& g, std::span<const std::uint32_t> labels);
  static Partition singletons(const Graph& g);
  static Partition one_block(const Graph& g);
};

// Q = sum_c [ e_c/|E| - (d_c / 2|E|)^2 ], e_c intra-community edges and d_c
// the community degree sum.
double modularity(const Graph& g, const Partition& p);

// Two-phase local-move and aggregation heuristic at resolution 1. The visit
// order is shuffled once per level from `seed`; equal gains go to the
// smallest community id and a vertex only moves on strictly positive
// improvement, so the result is a deterministic function of (g, seed).
Partition louvain_maximize(const Graph& g, std::uint64_t seed);

struct CommunitySizeDistribution {
  std::vector<std::uint64_t> sizes;             // per community
  std::map<std::uint64_t, std::uint64_t> histogram;  // size -> communities
  PowerLawFit fit;                              // decaying power law over sizes
};

CommunitySizeDistribution community_sizes(const Graph& g, const Partition& p);

}  // namespace netdense
