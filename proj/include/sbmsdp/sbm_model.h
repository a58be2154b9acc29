// Copyright 2026 The sbmsdp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Planted-partition random graphs G(p, q, k) with k clusters of size m.

#ifndef SBMSDP_SBM_MODEL_H_
#define SBMSDP_SBM_MODEL_H_

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sbmsdp {

// p = alpha * ln(m) / m and q = beta * ln(m) / m, n = k * m.
struct SbmParams {
  double alpha = 0.0;
  double beta = 0.0;
  int k = 2;
  int m = 2;
  std::uint64_t seed = 0;

  int n() const { return k * m; }

  // Throws ParamOutOfRange unless alpha > beta >= 0, k >= 2, m >= 2 and the
  // derived probabilities satisfy 0 <= q < p <= 1.
  void validate() const;
};

struct EdgeProbabilities {
  double p = 0.0;
  double q = 0.0;
};

// Natural logarithm throughout. p > 1 is an error rather than a clamp; a
// relative excess below 1e-12 is treated as rounding noise and snapped to 1.
EdgeProbabilities derive_pq(const SbmParams& params);

// Equipartition of n = k * m vertices into clusters labelled [0, k).
class Partition {
 public:
  // Throws MismatchedPartition if the labels are not contiguous or the
  // clusters have unequal sizes.
  explicit Partition(std::vector<int> assignment);

  // Vertices [t*m, (t+1)*m) form cluster t.
  static Partition contiguous(int k, int m);

  int num_vertices() const { return static_cast<int>(assignment_.size()); }
  int num_clusters() const { return num_clusters_; }
  int cluster_size() const { return cluster_size_; }
  int cluster_of(int vertex) const { return assignment_[vertex]; }
  const std::vector<int>& assignment() const { return assignment_; }
  const std::vector<int>& members(int cluster) const {
    return members_[cluster];
  }

  // Indicator vector v_t of cluster t.
  Eigen::VectorXd indicator(int cluster) const;

  // Same clustering up to a relabelling of cluster indices.
  bool same_clustering(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> assignment_;
  int num_clusters_ = 0;
  int cluster_size_ = 0;
  std::vector<std::vector<int>> members_;
};

// Undirected edge with first < second.
using Edge = std::pair<int, int>;

// Simple undirected graph with dense adjacency and a sorted edge list
// mirror. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Edges may be given in either orientation and any order. Throws
  // BadDimensions on out-of-range endpoints, self loops or duplicates.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int i, int j) const {
    return adjacency_[static_cast<std::size_t>(i) * n_ + j] != 0;
  }
  int degree(int i) const { return degrees_[i]; }

  // A(G) as a dense 0/1 double matrix.
  Eigen::MatrixXd adjacency() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<int> degrees_;
};

// A graph together with the parameters that generated it and the planted
// partition.
struct SbmInstance {
  SbmParams params;
  Graph graph;
  Partition partition = Partition::contiguous(1, 1);
};

// Samples G ~ G(p, q, k) with the contiguous planted partition. Vertex pairs
// (i, j), i < j, are visited in lexicographic order and each consumes exactly
// one uniform draw, so the result is a pure function of params (incl. seed).
SbmInstance sample_graph(const SbmParams& params);

// Disjoint union of k cliques of size m (the p = 1, q = 0 instance).
Graph disjoint_cliques(int k, int m);

// Applies a uniformly random vertex relabelling (its own seed) to both the
// graph and the partition.
SbmInstance shuffle_vertices(const SbmInstance& instance, std::uint64_t seed);

// Y*[i][j] = 1 when i and j share a cluster, 0 otherwise.
Eigen::MatrixXd planted_matrix(const Partition& partition);

// Number of edges with both endpoints in the same cluster.
std::size_t within_edge_count(const Graph& graph, const Partition& partition);
std::size_t cross_edge_count(const Graph& graph, const Partition& partition);

}  // namespace sbmsdp

#endif  // SBMSDP_SBM_MODEL_H_
