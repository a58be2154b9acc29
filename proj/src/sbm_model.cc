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

#include "sbmsdp/sbm_model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sbmsdp/errors.h"
#include "sbmsdp/random.h"

namespace sbmsdp {

void SbmParams::validate() const {
  if (k < 2) throw ParamOutOfRange("k must be at least 2");
  if (m < 2) throw ParamOutOfRange("m must be at least 2");
  if (!(alpha > 0.0)) throw ParamOutOfRange("alpha must be positive");
  if (!(beta >= 0.0)) throw ParamOutOfRange("beta must be nonnegative");
  if (!(alpha > beta)) throw ParamOutOfRange("alpha must exceed beta");
  derive_pq(*this);
}

EdgeProbabilities derive_pq(const SbmParams& params) {
  if (params.m < 2) throw ParamOutOfRange("m must be at least 2");
  const double scale = std::log(static_cast<double>(params.m)) / params.m;
  EdgeProbabilities probs{params.alpha * scale, params.beta * scale};
  if (probs.q < 0.0 || probs.p < 0.0) {
    throw ParamOutOfRange("edge probabilities must be nonnegative");
  }
  if (probs.p > 1.0) {
    if (probs.p - 1.0 > 1e-12) {
      throw ParamOutOfRange("p = " + std::to_string(probs.p) + " exceeds 1");
    }
    probs.p = 1.0;
  }
  if (probs.q > 1.0) {
    throw ParamOutOfRange("q = " + std::to_string(probs.q) + " exceeds 1");
  }
  return probs;
}

Partition::Partition(std::vector<int> assignment)
    : assignment_(std::move(assignment)) {
  if (assignment_.empty()) throw MismatchedPartition("empty partition");
  const int max_label = *std::max_element(assignment_.begin(), assignment_.end());
  const int min_label = *std::min_element(assignment_.begin(), assignment_.end());
  if (min_label < 0) throw MismatchedPartition("negative cluster label");
  num_clusters_ = max_label + 1;
  members_.assign(num_clusters_, {});
  for (int v = 0; v < num_vertices(); ++v) members_[assignment_[v]].push_back(v);
  cluster_size_ = static_cast<int>(members_[0].size());
  for (const auto& cluster : members_) {
    if (cluster.empty()) {
      throw MismatchedPartition("cluster labels are not contiguous");
    }
    if (static_cast<int>(cluster.size()) != cluster_size_) {
      throw MismatchedPartition("clusters have unequal sizes");
    }
  }
}

Partition Partition::contiguous(int k, int m) {
  std::vector<int> assignment(static_cast<std::size_t>(k) * m);
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    assignment[v] = static_cast<int>(v / m);
  }
  return Partition(std::move(assignment));
}

Eigen::VectorXd Partition::indicator(int cluster) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(num_vertices());
  for (int i : members_[cluster]) v[i] = 1.0;
  return v;
}

bool Partition::same_clustering(const Partition& other) const {
  if (other.num_vertices() != num_vertices() ||
      other.num_clusters() != num_clusters()) {
    return false;
  }
  std::vector<int> mapping(num_clusters_, -1);
  std::vector<int> inverse(num_clusters_, -1);
  for (int v = 0; v < num_vertices(); ++v) {
    const int a = assignment_[v];
    const int b = other.assignment_[v];
    if (mapping[a] == -1 && inverse[b] == -1) {
      mapping[a] = b;
      inverse[b] = a;
    } else if (mapping[a] != b || inverse[b] != a) {
      return false;
    }
  }
  return true;
}

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices),
      adjacency_(static_cast<std::size_t>(num_vertices) * num_vertices, 0),
      degrees_(num_vertices, 0) {
  if (num_vertices < 0) throw BadDimensions("negative vertex count");
  for (auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
      throw BadDimensions("edge endpoint out of range");
    }
    if (i == j) throw BadDimensions("self loop on vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    auto& slot = adjacency_[static_cast<std::size_t>(i) * n_ + j];
    if (slot != 0) {
      throw BadDimensions("duplicate edge (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
    }
    slot = 1;
    adjacency_[static_cast<std::size_t>(j) * n_ + i] = 1;
    ++degrees_[i];
    ++degrees_[j];
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& [i, j] : edges_) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  return a;
}

SbmInstance sample_graph(const SbmParams& params) {
  params.validate();
  const EdgeProbabilities probs = derive_pq(params);
  const int n = params.n();
  Partition partition = Partition::contiguous(params.k, params.m);
  Rng rng(params.seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool same = partition.cluster_of(i) == partition.cluster_of(j);
      if (rng.bernoulli(same ? probs.p : probs.q)) edges.emplace_back(i, j);
    }
  }
  return SbmInstance{params, Graph(n, std::move(edges)), std::move(partition)};
}

Graph disjoint_cliques(int k, int m) {
  std::vector<Edge> edges;
  for (int t = 0; t < k; ++t) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) edges.emplace_back(t * m + a, t * m + b);
    }
  }
  return Graph(k * m, std::move(edges));
}

SbmInstance shuffle_vertices(const SbmInstance& instance, std::uint64_t seed) {
  const int n = instance.graph.num_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  // Fisher-Yates with the portable integer sampler.
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  std::vector<Edge> edges;
  edges.reserve(instance.graph.num_edges());
  for (const auto& [i, j] : instance.graph.edges()) edges.emplace_back(perm[i], perm[j]);
  std::vector<int> assignment(n);
  for (int v = 0; v < n; ++v) {
    assignment[perm[v]] = instance.partition.cluster_of(v);
  }
  return SbmInstance{instance.params, Graph(n, std::move(edges)),
                     Partition(std::move(assignment))};
}

Eigen::MatrixXd planted_matrix(const Partition& partition) {
  const int n = partition.num_vertices();
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j : partition.members(partition.cluster_of(i))) y(i, j) = 1.0;
  }
  return y;
}

std::size_t within_edge_count(const Graph& graph, const Partition& partition) {
  std::size_t count = 0;
  for (const auto& [i, j] : graph.edges()) {
    if (partition.cluster_of(i) == partition.cluster_of(j)) ++count;
  }
  return count;
}

std::size_t cross_edge_count(const Graph& graph, const Partition& partition) {
  return graph.num_edges() - within_edge_count(graph, partition);
}

}  // namespace sbmsdp
