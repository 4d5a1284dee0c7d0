#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "netdense/graph.hpp"

namespace netdense {

struct MomentSummary {
  double mean_degree = 0.0;    // <k> = G'(1)
  double second_moment = 0.0;  // <k^2>
  double gf_first = 0.0;       // G'(1)
  double gf_second = 0.0;      // G''(1) = <k^2> - <k>
};

MomentSummary moments(const DegreeHistogram& h);

// Average degree of the line graph as the generating-function ratio
// G''(1)/G'(1) = (<k^2> - <k>)/<k>.
double line_avg_degree_gf_ratio(const MomentSummary& m);

// Average degree the line graph actually has: 2<k^2>/<k> - 2. Agrees with
// average_degree(line_graph(g).graph) whenever g has an edge.
double line_avg_degree_exact(const MomentSummary& m);

// sum_{k=a}^{b} k^-s for integers 1 <= a <= b, s > 0. Long ranges use an
// Euler-Maclaurin tail past k = max(a, 64, 4s) with relative error below 1e-13.
double truncated_zeta(double s, std::uint64_t a, std::uint64_t b);

struct PowerLawFit {
  double gamma_hat = 0.0;
  std::uint64_t kmin_used = 0;
  double ks_distance = 1.0;
  std::uint64_t n_tail = 0;
  bool valid = false;
};

inline constexpr std::uint64_t kMinTailSamples = 10;

// Discrete maximum-likelihood power-law fit. The normalization is the
// truncated zeta sum over [kmin, max observed value]. Without kmin every
// observed value with at least kMinTailSamples samples at or above it is
// tried and the fit with the smallest Kolmogorov-Smirnov distance is kept.
// A tail holding a single distinct value is never fitted. Zero-valued entries
// are ignored.
PowerLawFit fit_power_law(const std::map<std::uint64_t, std::uint64_t>& counts,
                          std::optional<std::uint64_t> kmin = std::nullopt);
PowerLawFit fit_power_law(const DegreeHistogram& h, std::optional<std::uint64_t> kmin = std::nullopt);

struct AssortativityReport {
  double r = 0.0;
  bool defined = false;
};

// Pearson degree correlation over the edge list, each undirected edge counted
// once with endpoint terms symmetrized.
AssortativityReport assortativity(const Graph& g);

// Triangles through each vertex.
std::vector<std::uint64_t> local_triangles(const Graph& g);

// 3 * triangles / connected triples; 0 when there are no triples.
double global_clustering(const Graph& g);

struct ClusteringReport {
  double global_c = 0.0;
  double avg_local_c = 0.0;
  std::map<EdgeCount, double> per_degree_c;
  std::vector<double> local_c;
};

// Vertices of degree < 2 count as 0.
ClusteringReport avg_local_clustering(const Graph& g);

struct DiameterReport {
  std::optional<Hops> diameter;
  Hops lower_bound = 0;
  bool exact = false;
};

inline constexpr VertexId kExactDiameterLimit = 20000;

DiameterReport diameter_exact(const Graph& g, unsigned workers = 1);
DiameterReport diameter_double_sweep(const Graph& g, std::uint64_t seed);

// Exact all-source BFS up to vertex_limit vertices, double sweep beyond.
DiameterReport diameter(const Graph& g, std::uint64_t seed, VertexId vertex_limit = kExactDiameterLimit,
                        unsigned workers = 1);

// sum_{i=vmin}^{vmax} 1/i, Neumaier-compensated.
double harmonic_partial_sum(std::uint64_t vmin, std::uint64_t vmax);

// Large-size average degree of the dense graph for exponent gamma_prime in
// (1, 2]: kmax^{2-g}/(2-g) below 2, the harmonic sum over [kmin, kmax] at 2.
double predicted_dense_avg_degree(double gamma_prime, std::uint64_t kmax, std::uint64_t kmin);

EdgeCount max_degree(const Graph& g);

}  // namespace netdense
