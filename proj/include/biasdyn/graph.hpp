#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biasdyn/common.hpp"
#include "biasdyn/rng.hpp"

namespace biasdyn {

enum class GraphKind { Complete, Star, Cycle, Custom };

inline const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Complete: return "complete";
    case GraphKind::Star: return "star";
    case GraphKind::Cycle: return "cycle";
    case GraphKind::Custom: return "custom";
  }
  return "custom";
}

struct Edge {
  int a = 0;  // 0-based, a < b after normalization
  int b = 0;
  double weight = 1.0;
};

struct Neighbor {
  int node;
  double weight;
};

/// Undirected weighted social graph with per-node self-confidence weights.
/// Node indices are 0-based throughout the API; file formats and the CLI use
/// 1-based indices. Immutable after construction, safe to share across
/// threads.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<Edge> edges, std::vector<double> self_weights,
                GraphKind kind = GraphKind::Custom)
      : n_(n), kind_(kind), self_weights_(std::move(self_weights)) {
    if (n_ < 2) throw std::invalid_argument("graph needs at least 2 nodes");
    if (static_cast<int>(self_weights_.size()) != n_)
      throw std::invalid_argument("self-weight count must equal node count");
    for (double w : self_weights_)
      if (!(w >= 0.0)) throw std::invalid_argument("self-weights must be >= 0");

    edges_ = std::move(edges);
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_) {
      if (e.a == e.b) throw std::invalid_argument("self-loop edges are not allowed");
      if (e.a < 0 || e.a >= n_ || e.b < 0 || e.b >= n_)
        throw std::invalid_argument("edge endpoint out of range");
      if (!(e.weight > 0.0)) throw std::invalid_argument("edge weights must be > 0");
      if (e.a > e.b) std::swap(e.a, e.b);
      if (!seen.insert({e.a, e.b}).second)
        throw std::invalid_argument("duplicate edge");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
      return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });

    adjacency_.assign(n_, {});
    for (const auto& e : edges_) {
      adjacency_[e.a].push_back({e.b, e.weight});
      adjacency_[e.b].push_back({e.a, e.weight});
    }
    // Degrees are accumulated in adjacency order; evidence sums reuse the same
    // order so that s_i <= d_i holds in floating point as well.
    degrees_.assign(n_, 0.0);
    for (int i = 0; i < n_; ++i)
      for (const auto& nb : adjacency_[i]) degrees_[i] += nb.weight;

    connected_ = compute_connected();
  }

  int size() const { return n_; }
  GraphKind kind() const { return kind_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Neighbor> neighbors(int i) const { return adjacency_[i]; }
  double self_weight(int i) const { return self_weights_[i]; }
  const std::vector<double>& self_weights() const { return self_weights_; }
  double degree(int i) const { return degrees_[i]; }
  const std::vector<double>& degrees() const { return degrees_; }
  double min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }
  bool connected() const { return connected_; }

  /// FNV-1a over the canonical edge list and self-weights; used to stamp
  /// trajectories with the graph they came from.
  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
      for (int k = 0; k < 8; ++k) {
        h ^= (v >> (8 * k)) & 0xff;
        h *= 0x100000001b3ull;
      }
    };
    auto mix_double = [&](double d) {
      std::uint64_t bits;
      static_assert(sizeof(bits) == sizeof(d));
      __builtin_memcpy(&bits, &d, sizeof(bits));
      mix(bits);
    };
    mix(static_cast<std::uint64_t>(n_));
    for (const auto& e : edges_) {
      mix(static_cast<std::uint64_t>(e.a));
      mix(static_cast<std::uint64_t>(e.b));
      mix_double(e.weight);
    }
    for (double w : self_weights_) mix_double(w);
    return h;
  }

 private:
  bool compute_connected() const {
    std::vector<char> visited(n_, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& nb : adjacency_[v]) {
        if (!visited[nb.node]) {
          visited[nb.node] = 1;
          ++reached;
          stack.push_back(nb.node);
        }
      }
    }
    return reached == n_;
  }

  int n_;
  GraphKind kind_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> self_weights_;
  std::vector<double> degrees_;
  bool connected_ = false;
};

/// Canonical generators. All edge weights are 1 and every node gets the same
/// self-weight. The star hub is the last node; cycle edges close the circuit
/// between the last node and the first.
inline WeightedGraph make_graph(GraphKind kind, int n, double uniform_self_weight) {
  if (!(uniform_self_weight >= 0.0))
    throw std::invalid_argument("self-weight must be >= 0");
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::Complete:
      if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
      break;
    case GraphKind::Star:
      if (n < 2) throw std::invalid_argument("star graph needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, n - 1, 1.0});
      break;
    case GraphKind::Cycle:
      if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
      edges.push_back({n - 1, 0, 1.0});
      break;
    case GraphKind::Custom:
      throw std::invalid_argument("custom graphs require an explicit edge list");
  }
  return WeightedGraph(n, std::move(edges),
                       std::vector<double>(n, uniform_self_weight), kind);
}

struct RandomGraphOptions {
  double edge_weight_lo = 0.5;
  double edge_weight_hi = 2.0;
  double self_weight_lo = 0.1;
  double self_weight_hi = 2.0;
  int max_extra_edges = -1;  // -1 picks uniformly in [0, n]
};

/// Random connected graph: a random attachment spanning tree plus extra edges.
inline WeightedGraph random_connected_graph(Rng& rng, int n,
                                            const RandomGraphOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("graph needs at least 2 nodes");
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;
  auto add = [&](int a, int b, double w) {
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) return false;
    edges.push_back({a, b, w});
    return true;
  };
  for (int i = 1; i < n; ++i) {
    const int j = static_cast<int>(rng.uniform_int(0, i - 1));
    add(i, j, rng.uniform(opts.edge_weight_lo, opts.edge_weight_hi));
  }
  const int extra = opts.max_extra_edges >= 0
                        ? opts.max_extra_edges
                        : static_cast<int>(rng.uniform_int(0, n));
  for (int k = 0; k < extra; ++k) {
    const int a = static_cast<int>(rng.uniform_int(0, n - 1));
    const int b = static_cast<int>(rng.uniform_int(0, n - 1));
    if (a != b) add(a, b, rng.uniform(opts.edge_weight_lo, opts.edge_weight_hi));
  }
  std::vector<double> selfs(n);
  for (auto& w : selfs) w = rng.uniform(opts.self_weight_lo, opts.self_weight_hi);
  return WeightedGraph(n, std::move(edges), std::move(selfs));
}

}  // namespace biasdyn
