#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace cascade {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

enum class CentralityMode { kMaxNorm, kEuclidNorm };

struct CentralityOptions {
  double tol = 1e-10;
  int max_iter = 10'000;
  CentralityMode mode = CentralityMode::kMaxNorm;
};

// Immutable undirected simple graph. Edges are stored as (i, j) with i < j in
// ascending order, plus a CSR neighbor index for propagation.
class NetworkModel {
 public:
  // Builds from an explicit edge list. Throws InvalidParameter on self-loops,
  // duplicates or out-of-range ids. Centrality is computed with `options`, or
  // left all-zero when the edge set is empty.
  NetworkModel(std::size_t n, std::vector<Edge> edges, double p_c = 0.0,
               std::uint64_t seed = 0, const CentralityOptions& options = {});

  std::size_t size() const noexcept { return n_; }
  double connection_probability() const noexcept { return p_c_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const double> centrality() const noexcept { return centrality_; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::size_t n_;
  double p_c_;
  std::uint64_t seed_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<double> centrality_;
};

// G(n, p): each of the n(n-1)/2 pairs, visited in (i, j) lexicographic order,
// is kept when a uniform draw falls below p_c.
NetworkModel generate_er(std::size_t n, double p_c, std::uint64_t seed,
                         const CentralityOptions& options = {});

// Leading eigenvector of the adjacency matrix by power iteration on A + I
// starting from the uniform vector. The identity shift leaves eigenvectors
// unchanged and makes bipartite graphs (paths, stars) converge.
std::vector<double> eigenvector_centrality(const NetworkModel& net,
                                           const CentralityOptions& options = {});

// Binomial(n - 1, p_c) probability of degree d.
double degree_pmf(std::size_t n, double p_c, std::size_t d);

// `# er n=<n> p=<p_c> seed=<seed>` followed by one `i j` line per edge.
void write_edge_list(std::ostream& out, const NetworkModel& net);

}  // namespace cascade
