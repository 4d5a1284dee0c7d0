#include "netdense/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "netdense/errors.hpp"
#include "netdense/parallel.hpp"
#include "netdense/rng.hpp"

namespace netdense {

MomentSummary moments(const DegreeHistogram& h) {
  if (h.total == 0) throw InputError("moments of an empty histogram");
  unsigned __int128 first = 0;
  unsigned __int128 second = 0;
  for (const auto& [k, count] : h.counts) {
    first += static_cast<unsigned __int128>(k) * count;
    second += static_cast<unsigned __int128>(k) * k * count;
  }
  MomentSummary m;
  const auto n = static_cast<long double>(h.total);
  m.mean_degree = static_cast<double>(static_cast<long double>(first) / n);
  m.second_moment = static_cast<double>(static_cast<long double>(second) / n);
  m.gf_first = m.mean_degree;
  m.gf_second = static_cast<double>(static_cast<long double>(second - first) / n);
  return m;
}

double line_avg_degree_gf_ratio(const MomentSummary& m) {
  if (!(m.mean_degree > 0.0)) throw InputError("line-graph average degree needs <k> > 0");
  return m.gf_second / m.gf_first;
}

double line_avg_degree_exact(const MomentSummary& m) {
  if (!(m.mean_degree > 0.0)) throw InputError("line-graph average degree needs <k> > 0");
  return 2.0 * m.second_moment / m.mean_degree - 2.0;
}

namespace {

// expm1(t)/t, continuous at 0
double expm1_ratio(double t) { return std::abs(t) < 1e-12 ? 1.0 + 0.5 * t : std::expm1(t) / t; }

}  // namespace

double truncated_zeta(double s, std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < a) throw InputError("truncated_zeta needs 1 <= a <= b");
  const auto c = std::max<std::uint64_t>({a, 64, static_cast<std::uint64_t>(std::ceil(4.0 * s))});
  double sum = 0.0;
  const std::uint64_t exact_end = std::min(b, c);
  // small terms first
  for (std::uint64_t k = exact_end; k >= a && k > 0; --k) {
    sum += std::pow(static_cast<double>(k), -s);
    if (k == a) break;
  }
  if (b <= c) return sum;

  // Euler-Maclaurin for sum_{k=c+1}^{b} k^-s = sum_{k=c}^{b} - c^-s
  const double lc = std::log(static_cast<double>(c));
  const double lb = std::log(static_cast<double>(b));
  // b^(1-s) - c^(1-s) = c^(1-s) expm1((1-s)(lb-lc)), free of cancellation
  const double integral =
      std::exp((1.0 - s) * lc) * (lb - lc) * expm1_ratio((1.0 - s) * (lb - lc));
  const auto f = [s](double x) { return std::pow(x, -s); };
  const auto d1 = [s](double x) { return -s * std::pow(x, -s - 1.0); };
  const auto d3 = [s](double x) { return -s * (s + 1.0) * (s + 2.0) * std::pow(x, -s - 3.0); };
  const auto d5 = [s](double x) {
    return -s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(x, -s - 5.0);
  };
  const auto cd = static_cast<double>(c);
  const auto bd = static_cast<double>(b);
  const double tail = integral + 0.5 * (f(cd) + f(bd)) + (d1(bd) - d1(cd)) / 12.0 -
                      (d3(bd) - d3(cd)) / 720.0 + (d5(bd) - d5(cd)) / 30240.0;
  return sum + (tail - f(cd));
}

namespace {

struct Tail {
  std::vector<std::uint64_t> values;  // distinct observed values, ascending
  std::vector<std::uint64_t> counts;
};

struct CandidateFit {
  double gamma = 0.0;
  double ks = 1.0;
  std::uint64_t n = 0;
};

// Maximizes the truncated discrete log-likelihood for the tail starting at
// index `first`, normalized over [kmin, largest value], by golden-section
// search (the log-likelihood is concave in gamma because log Z is a
// log-sum-exp).
CandidateFit fit_tail(const Tail& t, std::size_t first, std::uint64_t kmin) {
  const std::uint64_t kmax = t.values.back();
  double sum_log = 0.0;
  std::uint64_t n = 0;
  for (std::size_t i = first; i < t.values.size(); ++i) {
    sum_log += static_cast<double>(t.counts[i]) * std::log(static_cast<double>(t.values[i]));
    n += t.counts[i];
  }
  const auto nd = static_cast<double>(n);
  const auto loglik = [&](double g) { return -g * sum_log - nd * std::log(truncated_zeta(g, kmin, kmax)); };

  CandidateFit fit;
  fit.n = n;

  constexpr double kInvPhi = 0.6180339887498949;
  double lo = 1.0 + 1e-9;
  double hi = 20.0;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = loglik(x1);
  double f2 = loglik(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = loglik(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = loglik(x1);
    }
  }
  fit.gamma = 0.5 * (lo + hi);

  // KS over integers in [kmin, kmax]; both CDFs are step functions, so the
  // supremum is attained at an observed value or just before the next one
  const double z = truncated_zeta(fit.gamma, kmin, kmax);
  double model = 0.0;
  double empirical = 0.0;
  double ks = 0.0;
  std::uint64_t covered = kmin - 1;
  for (std::size_t i = first; i < t.values.size(); ++i) {
    const std::uint64_t k = t.values[i];
    if (k - 1 > covered) {
      model += truncated_zeta(fit.gamma, covered + 1, k - 1) / z;
      ks = std::max(ks, std::abs(model - empirical));
    }
    model += std::pow(static_cast<double>(k), -fit.gamma) / z;
    empirical += static_cast<double>(t.counts[i]) / nd;
    ks = std::max(ks, std::abs(model - empirical));
    covered = k;
  }
  fit.ks = std::min(1.0, ks);
  return fit;
}

}  // namespace

PowerLawFit fit_power_law(const std::map<std::uint64_t, std::uint64_t>& counts,
                          std::optional<std::uint64_t> kmin) {
  Tail t;
  for (const auto& [k, c] : counts) {
    if (k == 0 || c == 0) continue;
    t.values.push_back(k);
    t.counts.push_back(c);
  }
  // samples at or above each index
  std::vector<std::uint64_t> at_or_above(t.values.size() + 1, 0);
  for (std::size_t i = t.values.size(); i-- > 0;) at_or_above[i] = at_or_above[i + 1] + t.counts[i];

  PowerLawFit best;
  const auto record = [&](std::size_t first, std::uint64_t lower) {
    const CandidateFit f = fit_tail(t, first, lower);
    if (!best.valid || f.ks < best.ks_distance) {
      best.gamma_hat = f.gamma;
      best.kmin_used = lower;
      best.ks_distance = f.ks;
      best.n_tail = f.n;
      best.valid = true;
    }
  };

  if (kmin) {
    const std::uint64_t lower = std::max<std::uint64_t>(*kmin, 1);
    const auto it = std::lower_bound(t.values.begin(), t.values.end(), lower);
    const auto first = static_cast<std::size_t>(it - t.values.begin());
    best.kmin_used = lower;
    best.n_tail = at_or_above[first];
    // a single support point carries no exponent information
    if (best.n_tail < kMinTailSamples || first + 1 >= t.values.size()) return best;
    record(first, lower);
    return best;
  }

  for (std::size_t first = 0; first < t.values.size(); ++first) {
    if (at_or_above[first] < kMinTailSamples || first + 1 >= t.values.size()) break;
    record(first, t.values[first]);
  }
  if (!best.valid && !t.values.empty()) {
    best.kmin_used = t.values.front();
    best.n_tail = at_or_above[0];
  }
  return best;
}

PowerLawFit fit_power_law(const DegreeHistogram& h, std::optional<std::uint64_t> kmin) {
  return fit_power_law(std::map<std::uint64_t, std::uint64_t>(h.counts.begin(), h.counts.end()), kmin);
}

AssortativityReport assortativity(const Graph& g) {
  if (g.edge_count() == 0) throw InputError("assortativity of an edgeless graph");
  // exact integer sums: products, half-sums and half-sums of squares
  unsigned __int128 sum_prod = 0;
  unsigned __int128 sum_deg = 0;
  unsigned __int128 sum_sq = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const EdgeCount ku = g.degree(u);
    for (VertexId v : g.neighbors(u)) {
      if (v < u) continue;
      const EdgeCount kv = g.degree(v);
      sum_prod += static_cast<unsigned __int128>(ku) * kv;
      sum_deg += ku + kv;
      sum_sq += static_cast<unsigned __int128>(ku) * ku + static_cast<unsigned __int128>(kv) * kv;
    }
  }
  // scaled by 4|E|^2: numerator 4|E| sum_prod - sum_deg^2,
  // denominator 2|E| sum_sq - sum_deg^2
  const auto m = static_cast<__int128>(g.edge_count());
  const __int128 num = 4 * m * static_cast<__int128>(sum_prod) - static_cast<__int128>(sum_deg * sum_deg);
  const __int128 den = 2 * m * static_cast<__int128>(sum_sq) - static_cast<__int128>(sum_deg * sum_deg);

  AssortativityReport report;
  const long double scale = 2.0L * static_cast<long double>(m) * static_cast<long double>(sum_sq);
  if (static_cast<long double>(den) <= 1e-12L * scale) return report;
  report.r = static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
  report.defined = true;
  return report;
}

std::vector<std::uint64_t> local_triangles(const Graph& g) {
  std::vector<std::uint64_t> t(g.vertex_count(), 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto nu = g.neighbors(u);
    for (auto vi = std::upper_bound(nu.begin(), nu.end(), u); vi != nu.end(); ++vi) {
      const VertexId v = *vi;
      const auto nv = g.neighbors(v);
      // w > v in both lists
      auto a = vi + 1;
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++t[u];
          ++t[v];
          ++t[*a];
          ++a;
          ++b;
        }
      }
    }
  }
  return t;
}

namespace {

double pairs(EdgeCount d) { return 0.5 * static_cast<double>(d) * static_cast<double>(d > 0 ? d - 1 : 0); }

double global_from_triangles(const Graph& g, const std::vector<std::uint64_t>& t) {
  unsigned __int128 triangles_x3 = 0;
  unsigned __int128 triples = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    triangles_x3 += t[u];
    const EdgeCount d = g.degree(u);
    triples += static_cast<unsigned __int128>(d) * (d > 0 ? d - 1 : 0) / 2;
  }
  if (triples == 0) return 0.0;
  return static_cast<double>(static_cast<long double>(triangles_x3) / static_cast<long double>(triples));
}

}  // namespace

double global_clustering(const Graph& g) { return global_from_triangles(g, local_triangles(g)); }

ClusteringReport avg_local_clustering(const Graph& g) {
  ClusteringReport report;
  const auto t = local_triangles(g);
  report.global_c = global_from_triangles(g, t);
  report.local_c.assign(g.vertex_count(), 0.0);
  std::map<EdgeCount, std::pair<double, std::uint64_t>> by_degree;
  double total = 0.0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const EdgeCount d = g.degree(u);
    const double c = d < 2 ? 0.0 : static_cast<double>(t[u]) / pairs(d);
    report.local_c[u] = c;
    total += c;
    auto& [sum, count] = by_degree[d];
    sum += c;
    ++count;
  }
  if (g.vertex_count() > 0) report.avg_local_c = total / static_cast<double>(g.vertex_count());
  for (const auto& [d, acc] : by_degree)
    report.per_degree_c[d] = acc.first / static_cast<double>(acc.second);
  return report;
}

namespace {

void require_connected(const Graph& g, const char* what) {
  if (g.vertex_count() == 0) throw InputError(std::string(what) + ": empty graph");
  if (!is_connected(g)) throw InputError(std::string(what) + ": graph is disconnected");
}

Hops eccentricity(const std::vector<Hops>& dist) { return *std::max_element(dist.begin(), dist.end()); }

}  // namespace

DiameterReport diameter_exact(const Graph& g, unsigned workers) {
  require_connected(g, "diameter");
  const VertexId n = g.vertex_count();
  constexpr std::size_t kBlock = 64;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<Hops> block_max(blocks, 0);
  parallel_for(blocks, workers, [&](std::size_t b) {
    std::vector<Hops> dist(n);
    std::vector<VertexId> queue(n);
    Hops best = 0;
    const auto end = static_cast<VertexId>(std::min<std::size_t>(n, (b + 1) * kBlock));
    for (auto s = static_cast<VertexId>(b * kBlock); s < end; ++s) {
      std::fill(dist.begin(), dist.end(), kUnreachable);
      dist[s] = 0;
      std::size_t head = 0;
      std::size_t tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        const VertexId u = queue[head++];
        for (VertexId v : g.neighbors(u))
          if (dist[v] == kUnreachable) {
            dist[v] = dist[u] + 1;
            queue[tail++] = v;
          }
      }
      best = std::max(best, dist[queue[tail - 1]]);
    }
    block_max[b] = best;
  });
  DiameterReport report;
  report.diameter = *std::max_element(block_max.begin(), block_max.end());
  report.lower_bound = *report.diameter;
  report.exact = true;
  return report;
}

DiameterReport diameter_double_sweep(const Graph& g, std::uint64_t seed) {
  require_connected(g, "double sweep");
  Rng rng(seed);
  const auto start = static_cast<VertexId>(rng.below(g.vertex_count()));
  const auto first = bfs_distances(g, start);
  const auto far = static_cast<VertexId>(std::max_element(first.begin(), first.end()) - first.begin());
  DiameterReport report;
  report.lower_bound = eccentricity(bfs_distances(g, far));
  report.exact = false;
  return report;
}

DiameterReport diameter(const Graph& g, std::uint64_t seed, VertexId vertex_limit, unsigned workers) {
  if (g.vertex_count() <= vertex_limit) return diameter_exact(g, workers);
  return diameter_double_sweep(g, seed);
}

double harmonic_partial_sum(std::uint64_t vmin, std::uint64_t vmax) {
  if (vmin < 1 || vmax < vmin) throw InputError("harmonic_partial_sum needs 1 <= vmin <= vmax");
  double sum = 0.0;
  double comp = 0.0;
  for (std::uint64_t i = vmin; i <= vmax; ++i) {
    const double term = 1.0 / static_cast<double>(i);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double predicted_dense_avg_degree(double gamma_prime, std::uint64_t kmax, std::uint64_t kmin) {
  if (!(gamma_prime > 1.0 && gamma_prime <= 2.0))
    throw InputError("dense average degree needs gamma' in (1, 2]");
  if (kmin < 1 || kmax < kmin) throw InputError("dense average degree needs 1 <= kmin <= kmax");
  if (gamma_prime == 2.0) return harmonic_partial_sum(kmin, kmax);
  return std::pow(static_cast<double>(kmax), 2.0 - gamma_prime) / (2.0 - gamma_prime);
}

EdgeCount max_degree(const Graph& g) {
  EdgeCount best = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) best = std::max(best, g.degree(u));
  return best;
}

}  // namespace netdense
