#include "cascade/network.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "cascade/error.hpp"
#include "cascade/format.hpp"
#include "cascade/random.hpp"

namespace cascade {

NetworkModel::NetworkModel(std::size_t n, std::vector<Edge> edges, double p_c,
                           std::uint64_t seed, const CentralityOptions& options)
    : n_(n), p_c_(p_c), seed_(seed), edges_(std::move(edges)) {
  if (n_ == 0) throw InvalidParameter("network needs at least one node");
  for (auto& [a, b] : edges_) {
    if (a == b) throw InvalidParameter("self-loop at node " + std::to_string(a));
    if (a >= n_ || b >= n_) throw InvalidParameter("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidParameter("duplicate edge");

  offsets_.assign(n_ + 1, 0);
  for (auto [a, b] : edges_) {
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [a, b] : edges_) {
    targets_[fill[a]++] = b;
    targets_[fill[b]++] = a;
  }
  for (std::size_t v = 0; v < n_; ++v)
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);

  if (edges_.empty())
    centrality_.assign(n_, 0.0);
  else
    centrality_ = eigenvector_centrality(*this, options);
}

NetworkModel generate_er(std::size_t n, double p_c, std::uint64_t seed,
                         const CentralityOptions& options) {
  if (n == 0) throw InvalidParameter("generate_er: n must be >= 1");
  if (!(p_c >= 0.0 && p_c <= 1.0)) throw InvalidParameter("generate_er: p_c outside [0, 1]");
  RandomStream rng(derive_seed(seed, {static_cast<std::uint64_t>(Stage::kNetwork)}));
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.bernoulli(p_c)) edges.emplace_back(i, j);
  return NetworkModel(n, std::move(edges), p_c, seed, options);
}

std::vector<double> eigenvector_centrality(const NetworkModel& net,
                                           const CentralityOptions& options) {
  if (net.edges().empty()) throw DegenerateGraph("eigenvector centrality of an edgeless graph");
  if (!(options.tol > 0.0)) throw InvalidParameter("centrality tolerance must be positive");

  const std::size_t n = net.size();
  std::vector<double> x(n, 1.0), next(n);
  double residual = 0.0;
  for (int iter = 0; iter < options.max_iter; ++iter) {
    double peak = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double acc = x[v];
      for (NodeId w : net.neighbors(v)) acc += x[w];
      next[v] = acc;
      peak = std::max(peak, acc);
    }
    residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] /= peak;
      residual = std::max(residual, std::abs(next[v] - x[v]));
    }
    x.swap(next);
    if (residual < options.tol) {
      if (options.mode == CentralityMode::kEuclidNorm) {
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        for (double& v : x) v /= norm;
      }
      return x;
    }
  }
  throw ConvergenceError("eigenvector centrality did not converge in " +
                             std::to_string(options.max_iter) + " iterations",
                         residual);
}

double degree_pmf(std::size_t n, double p_c, std::size_t d) {
  if (n == 0 || d > n - 1) throw InvalidParameter("degree_pmf: degree out of range");
  if (!(p_c >= 0.0 && p_c <= 1.0)) throw InvalidParameter("degree_pmf: p_c outside [0, 1]");
  const std::size_t trials = n - 1;
  // Exact endpoints avoid 0 * log(0).
  if (p_c == 0.0) return d == 0 ? 1.0 : 0.0;
  if (p_c == 1.0) return d == trials ? 1.0 : 0.0;
  const double log_choose = std::lgamma(trials + 1.0) - std::lgamma(d + 1.0) -
                            std::lgamma(static_cast<double>(trials - d) + 1.0);
  return std::exp(log_choose + d * std::log(p_c) +
                  static_cast<double>(trials - d) * std::log1p(-p_c));
}

void write_edge_list(std::ostream& out, const NetworkModel& net) {
  out << "# er n=" << net.size() << " p=" << format_shortest(net.connection_probability())
      << " seed=" << net.seed() << '\n';
  for (auto [a, b] : net.edges()) out << a << ' ' << b << '\n';
}

}  // namespace cascade
