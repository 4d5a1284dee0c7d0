#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdense/graph.hpp"
#include "netdense/rng.hpp"

namespace netdense {

enum class Model { kBarabasiAlbert, kConfigPowerLaw, kCopying, kNamed };
enum class NamedGraph { kCycle, kPath, kStar, kComplete };

struct GenSpec {
  Model model = Model::kBarabasiAlbert;
  VertexId n = 0;
  VertexId m = 1;          // barabasi-albert: edges per new vertex
  double gamma = 2.5;      // configuration model: target exponent
  std::uint32_t kmin = 1;  // configuration model: minimum degree
  double p = 0.0;          // copying model: copy probability
  NamedGraph name = NamedGraph::kCycle;
  VertexId size = 0;       // named graph size
  std::uint64_t seed = 0;
};

std::string to_string(Model model);
std::string to_string(NamedGraph name);
Model parse_model(const std::string& text);
NamedGraph parse_named_graph(const std::string& text);

// Preferential attachment growth from the clique K_{m+1}. Every new vertex
// picks m distinct targets with probability proportional to degree.
Graph barabasi_albert(VertexId n, VertexId m, std::uint64_t seed);

// Inverse-CDF sampler for P(k) ∝ k^-gamma on [kmin, kmax].
class DiscretePowerLaw {
 public:
  DiscretePowerLaw(double gamma, std::uint64_t kmin, std::uint64_t kmax);
  std::uint64_t operator()(Rng& rng) const;

  std::uint64_t kmin() const { return kmin_; }
  std::uint64_t kmax() const { return kmin_ + cdf_.size() - 1; }

 private:
  std::uint64_t kmin_;
  std::vector<double> cdf_;
};

struct ConfigurationResult {
  Graph graph;
  std::vector<std::uint32_t> sampled_degrees;
  std::uint64_t degree_cap = 0;
  std::uint64_t dropped_stubs = 0;
  std::uint64_t rejections = 0;
};

// Degrees drawn i.i.d. from the power law capped at the natural cutoff
// n^{1/(gamma-1)}, then matched stub-by-stub rejecting loops and repeats.
ConfigurationResult configuration_power_law(VertexId n, double gamma, std::uint32_t kmin,
                                            std::uint64_t seed);

// Grows from a single edge: each new vertex links to a uniform target and to
// each of the target's neighbors independently with probability p.
Graph copying_model(VertexId n, double p, std::uint64_t seed);

// Largest root in [1, 1 + 1/p] of gamma = 1 + 1/p - p^(gamma-2).
//
// gamma = 1 solves the equation for every p. A second root exists when the
// right-hand side crosses below the identity at 1, i.e. 1 + ln(p)/p < 0
// (p below ~0.567); it is bracketed between the minimum of the residual and
// 1 + 1/p and found by bisection. Otherwise 1 is returned.
double copying_exponent_solve(double p);

Graph named_graph(NamedGraph name, VertexId size);

// Dispatches on spec.model.
Graph generate(const GenSpec& spec);

}  // namespace netdense
