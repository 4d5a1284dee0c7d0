// Hand-computed fixtures: small graphs whose answers are known in closed form.

#include <doctest.h>

#include <cmath>

#include "netdense/community.hpp"
#include "netdense/errors.hpp"
#include "netdense/generators.hpp"
#include "netdense/metrics.hpp"
#include "netdense/transforms.hpp"
#include "oracles.hpp"

using namespace netdense;

namespace {

Graph from(std::vector<Edge> edges, std::optional<VertexId> n = std::nullopt) {
  return build_from_edges(edges, n).graph;
}

const Graph k3 = named_graph(NamedGraph::kComplete, 3);
const Graph c4 = named_graph(NamedGraph::kCycle, 4);
const Graph c6 = named_graph(NamedGraph::kCycle, 6);
const Graph p4 = named_graph(NamedGraph::kPath, 4);
const Graph star3 = named_graph(NamedGraph::kStar, 4);  // K_{1,3}
const Graph star4 = named_graph(NamedGraph::kStar, 5);  // K_{1,4}
const Graph k5 = named_graph(NamedGraph::kComplete, 5);

std::map<EdgeCount, std::uint64_t> hist(const Graph& g) { return degree_histogram(g).counts; }

bool same_shape(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && hist(a) == hist(b);
}

}  // namespace

TEST_CASE("building from edge lists") {
  const auto tri = build_from_edges(std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(tri.graph == k3);
  const auto dup = build_from_edges(std::vector<Edge>{{0, 1}, {0, 1}, {1, 0}});
  CHECK(dup.graph.edge_count() == 1);
  CHECK(dup.dropped_duplicates == 2);
  const auto loop = build_from_edges(std::vector<Edge>{{0, 0}, {0, 1}});
  CHECK(loop.graph.edge_count() == 1);
  CHECK(loop.dropped_self_loops == 1);
}

TEST_CASE("degree histograms") {
  CHECK(hist(k3) == std::map<EdgeCount, std::uint64_t>{{2, 3}});
  CHECK(hist(star3) == std::map<EdgeCount, std::uint64_t>{{1, 3}, {3, 1}});
  CHECK(hist(p4) == std::map<EdgeCount, std::uint64_t>{{1, 2}, {2, 2}});
}

TEST_CASE("BFS fixtures") {
  CHECK(bfs_distances(p4, 0) == std::vector<Hops>{0, 1, 2, 3});
  CHECK(bfs_distances(k3, 1) == std::vector<Hops>{1, 0, 1});
  CHECK(bfs_distances(from({{0, 1}, {2, 3}}), 0) == std::vector<Hops>{0, 1, kUnreachable, kUnreachable});
}

TEST_CASE("largest component fixtures") {
  CHECK(largest_component(from({{0, 1}, {1, 2}, {0, 2}}, 4)).graph == k3);
  const auto two = largest_component(from({{3, 4}, {4, 5}, {3, 5}, {0, 1}, {1, 2}, {0, 2}}));
  CHECK(two.graph == k3);
  CHECK(two.relabel[0] == 0);
  CHECK(two.relabel[3] == ComponentResult::kNotInComponent);
  CHECK(largest_component(p4).graph == p4);
}

TEST_CASE("BA fixtures") {
  CHECK(barabasi_albert(5, 4, 1) == k5);
  // C(m+1, 2) + (n - m - 1) m: a tree on 1000 vertices
  CHECK(barabasi_albert(1000, 1, 3).edge_count() == 999);
  CHECK(is_connected(barabasi_albert(1000, 1, 3)));
  const auto fit = fit_power_law(degree_histogram(barabasi_albert(10000, 3, 42)));
  REQUIRE(fit.valid);
  CHECK(fit.gamma_hat >= 2.5);
  CHECK(fit.gamma_hat <= 3.5);
}

TEST_CASE("configuration model fixtures") {
  const auto r = configuration_power_law(100000, 2.5, 2, 7);
  const auto fit = fit_power_law(degree_histogram(r.graph));
  REQUIRE(fit.valid);
  CHECK(fit.gamma_hat >= 2.3);
  CHECK(fit.gamma_hat <= 2.7);
  CHECK_THROWS_AS(configuration_power_law(100, 1.0, 1, 1), InputError);
  const auto small = configuration_power_law(10, 3.0, 1, 5);
  CHECK_NOTHROW(small.graph.validate());
  std::uint64_t degree_sum = 0;
  for (VertexId u = 0; u < 10; ++u) degree_sum += small.graph.degree(u);
  CHECK(degree_sum % 2 == 0);
}

TEST_CASE("copying model fixtures") {
  CHECK(copying_model(500, 0.0, 9).edge_count() == 499);
  // with p = 1 the newcomer's neighborhood is the target's closed neighborhood
  const Graph full = copying_model(60, 1.0, 13);
  for (VertexId t = 2; t < 60; ++t) {
    std::vector<VertexId> older;
    for (VertexId v : full.neighbors(t))
      if (v < t) older.push_back(v);
    bool found = false;
    for (VertexId target : older) {
      std::vector<VertexId> closed{target};
      for (VertexId w : full.neighbors(target))
        if (w < t) closed.push_back(w);
      std::sort(closed.begin(), closed.end());
      found = found || closed == older;
    }
    CHECK(found);
  }
  CHECK(average_degree(copying_model(10000, 0.4, 11)) > average_degree(copying_model(10000, 0.0, 11)));
}

TEST_CASE("copying exponent fixtures") {
  CHECK(std::abs(copying_exponent_solve(1.0) - 1.0) < 1e-10);
  CHECK(std::abs(copying_exponent_solve(0.5) - oracle::copying_fixed_point(0.5)) < 1e-8);
  CHECK(copying_exponent_solve(1e-3) == doctest::Approx(1001.0).epsilon(0.01));
}

TEST_CASE("named graph fixtures") {
  CHECK(hist(c4) == std::map<EdgeCount, std::uint64_t>{{2, 4}});
  CHECK(star3 == from({{0, 1}, {0, 2}, {0, 3}}));
  CHECK(k5.edge_count() == 10);
}

TEST_CASE("subdivision fixtures") {
  CHECK(same_shape(subdivide(k3).graph, c6));
  CHECK(is_connected(subdivide(k3).graph));
  // 0 - 2 - 1: the path P3 with the new vertex in the middle
  CHECK(subdivide(from({{0, 1}})).graph == from({{0, 2}, {1, 2}}));
  const Graph spider = subdivide(star3).graph;
  CHECK(spider.vertex_count() == 7);
  CHECK(spider.edge_count() == 6);
  CHECK(hist(spider) == std::map<EdgeCount, std::uint64_t>{{1, 3}, {2, 3}, {3, 1}});
}

TEST_CASE("line graph fixtures") {
  CHECK(line_graph(k3).graph == k3);
  CHECK(line_graph(p4).graph == named_graph(NamedGraph::kPath, 3));
  CHECK(line_graph(star3).graph == k3);
}

TEST_CASE("densify fixtures") {
  const Graph d = densify(k3).graph;
  CHECK(same_shape(d, c6));
  CHECK(is_connected(d));
  const auto s = densify(star3);
  CHECK(hist(s.graph) == std::map<EdgeCount, std::uint64_t>{{1, 3}, {3, 3}});
  for (VertexId v : s.clique_of_vertex[0]) CHECK(s.graph.degree(v) == 3);
  CHECK(densify(from({{0, 1}})).graph == named_graph(NamedGraph::kPath, 2));
  CHECK(predicted_degree_multiplicities(degree_histogram(k3)).counts == std::map<EdgeCount, std::uint64_t>{{2, 6}});
  CHECK(predicted_degree_multiplicities(degree_histogram(star3)).counts ==
        std::map<EdgeCount, std::uint64_t>{{1, 3}, {3, 3}});
}

TEST_CASE("moment and line-degree fixtures") {
  const auto mc4 = moments(degree_histogram(c4));
  CHECK(mc4.mean_degree == 2.0);
  CHECK(mc4.second_moment == 4.0);
  CHECK(mc4.gf_second == 2.0);
  const auto ms = moments(degree_histogram(star3));
  CHECK(ms.mean_degree == 1.5);
  CHECK(ms.second_moment == 3.0);
  const auto mk5 = moments(degree_histogram(k5));
  CHECK(mk5.mean_degree == 4.0);
  CHECK(mk5.second_moment == 16.0);

  CHECK(line_avg_degree_gf_ratio(mc4) == 1.0);
  CHECK(line_avg_degree_gf_ratio(mk5) == 3.0);
  const Graph c7 = named_graph(NamedGraph::kCycle, 7);
  CHECK(line_avg_degree_gf_ratio(moments(degree_histogram(c7))) == 1.0);

  CHECK(line_avg_degree_exact(mc4) == 2.0);
  CHECK(average_degree(line_graph(c4).graph) == 2.0);
  CHECK(line_avg_degree_exact(moments(degree_histogram(k3))) == 2.0);

  // C4 with two isolated vertices: <k> = 4/3 and a line graph of average degree 2
  const Graph padded = from({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 6);
  const auto mp = moments(degree_histogram(padded));
  CHECK(mp.mean_degree == doctest::Approx(4.0 / 3.0));
  CHECK(line_avg_degree_exact(mp) == doctest::Approx(2.0));
  CHECK(average_degree(line_graph(padded).graph) == 2.0);
}

TEST_CASE("exact line-graph degree holds on every connected graph up to six vertices") {
  oracle::for_each_small_graph(6, [](const oracle::SmallGraph& s) {
    if (!oracle::floyd_warshall_diameter(s.n, s.edges) || s.edges.empty()) return;
    const Graph g = oracle::to_graph(s);
    CHECK(std::abs(line_avg_degree_exact(moments(degree_histogram(g))) - average_degree(line_graph(g).graph)) <
          1e-12);
  });
}

TEST_CASE("power-law fit fixtures") {
  Rng rng(373);
  const DiscretePowerLaw law(2.5, 2, 1000000);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (int i = 0; i < 100000; ++i) ++counts[law(rng)];
  const auto fit = fit_power_law(counts, 2);
  CHECK(fit.gamma_hat >= 2.45);
  CHECK(fit.gamma_hat <= 2.55);

  const Graph ba = barabasi_albert(100000, 3, 42);
  const auto seed_fit = fit_power_law(degree_histogram(ba));
  CHECK(seed_fit.gamma_hat >= 2.6);
  CHECK(seed_fit.gamma_hat <= 3.4);
  const Graph dense = densify(ba).graph;
  const auto dense_fit = fit_power_law(degree_histogram(dense));
  CHECK(dense_fit.gamma_hat >= 1.6);
  CHECK(dense_fit.gamma_hat <= 2.4);

  const auto r = assortativity(ba);
  const auto rp = assortativity(dense);
  REQUIRE(r.defined);
  REQUIRE(rp.defined);
  CHECK(r.r < 0.0);
  CHECK(rp.r > 0.0);
  CHECK(rp.r > r.r);
}

TEST_CASE("assortativity fixtures") {
  CHECK(assortativity(star3).r == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_FALSE(assortativity(named_graph(NamedGraph::kCycle, 5)).defined);
}

TEST_CASE("clustering fixtures") {
  CHECK(global_clustering(k3) == 1.0);
  CHECK(global_clustering(named_graph(NamedGraph::kPath, 3)) == 0.0);
  CHECK(global_clustering(named_graph(NamedGraph::kComplete, 4)) == 1.0);
  const auto hub = densify(star4);
  const auto c = avg_local_clustering(hub.graph);
  for (VertexId v : hub.clique_of_vertex[0]) CHECK(c.local_c[v] == 0.5);
  for (double x : avg_local_clustering(c6).local_c) CHECK(x == 0.0);
}

TEST_CASE("diameter fixtures") {
  CHECK(*diameter_exact(p4).diameter == 3);
  CHECK(*diameter_exact(c6).diameter == 3);
  CHECK(diameter_double_sweep(c6, 1).lower_bound == 3);
  const Graph d = densify(p4).graph;
  CHECK(d == named_graph(NamedGraph::kPath, 6));
  CHECK(*diameter_exact(d).diameter == 5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = oracle::random_connected(2 + seed % 9, 0.3, seed);
    const Graph g = oracle::to_graph(s);
    CHECK(diameter_double_sweep(g, seed).lower_bound <= *diameter_exact(g).diameter);
  }
}

TEST_CASE("harmonic and dense-degree fixtures") {
  const double h = harmonic_partial_sum(2, 1000000);
  // Euler-Maclaurin: H_n = ln n + gamma_E + 1/2n - 1/12n^2
  constexpr double euler_gamma = 0.57721566490153286;
  const double n = 1e6;
  const double em = std::log(n) + euler_gamma + 0.5 / n - 1.0 / (12 * n * n) - 1.0;
  CHECK(std::abs(h - em) < 1e-6);
  CHECK(predicted_dense_avg_degree(2.0, 4, 1) == doctest::Approx(25.0 / 12).epsilon(1e-15));
  CHECK(predicted_dense_avg_degree(1.5, 400, 1) ==
        doctest::Approx(2.0 * predicted_dense_avg_degree(1.5, 100, 1)).epsilon(1e-12));
}

TEST_CASE("max degree fixtures") {
  CHECK(max_degree(star3) == 3);
  CHECK(max_degree(c4) == 2);
}

TEST_CASE("community fixtures") {
  const Graph two = from({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto p = louvain_maximize(two, 3);
  CHECK(p.community_count == 2);
  CHECK(modularity(two, p) == doctest::Approx(0.5).epsilon(1e-12));
  const auto sizes = community_sizes(two, p);
  CHECK(sizes.sizes == std::vector<std::uint64_t>{3, 3});
  CHECK_FALSE(sizes.fit.valid);

  // densify(K_{1,4}) is K4 with a pendant on every vertex. Splitting K4 into
  // four hub-pendant pairs scores Q = 4 (1/10 - (5/20)^2) = 0.15, above the
  // whole clique in one block (Q = 0), so the optimum does split the clique.
  // Each community still holds at most one clique with two or more vertices.
  const auto hub = densify(star4);
  std::vector<oracle::Edge> hub_edges = hub.graph.edge_list();
  const double best = oracle::max_modularity_exhaustive(hub.graph.vertex_count(), hub_edges);
  CHECK(best == doctest::Approx(0.15).epsilon(1e-12));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto q = louvain_maximize(hub.graph, seed);
    CHECK(modularity(hub.graph, q) == doctest::Approx(best).epsilon(1e-12));
    std::map<CommunityId, int> cores;
    for (const auto& c : hub.clique_of_vertex)
      if (c.size() >= 2) ++cores[q.community_of[c[0]]];
    for (const auto& [community, count] : cores) CHECK(count <= 1);
  }

  const Graph seed = barabasi_albert(5000, 3, 21);
  const Graph dense = densify(seed).graph;
  CHECK(louvain_maximize(dense, 1).community_count <= seed.vertex_count() + seed.edge_count());
}

TEST_CASE("community size exponent of a large densified BA graph") {
  const Graph dense = densify(barabasi_albert(100000, 3, 5)).graph;
  const auto p = louvain_maximize(dense, 1);
  const auto sizes = community_sizes(dense, p);
  REQUIRE(sizes.fit.valid);
  CHECK(sizes.fit.gamma_hat >= 2.0);
  CHECK(sizes.fit.gamma_hat <= 4.0);
}
