// Copyright 2026 The Casesum Authors.
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

#ifndef CASESUM_KMEANS_H_
#define CASESUM_KMEANS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casesum/vectorize.h"

namespace casesum {

struct KMeansConfig {
  size_t k = 0;  // 0 selects k automatically
  uint64_t seed = 42;
  size_t max_iterations = 300;
  double tolerance = 1e-6;  // relative inertia improvement that stops iteration
  bool normalize = true;    // L2-normalize points before clustering
};

struct Clustering {
  size_t k = 0;
  size_t dimension = 0;
  std::vector<uint32_t> assignments;  // per point, in [0, k)
  std::vector<double> centroids;      // k rows of `dimension` values
  double inertia = 0;
  size_t iterations = 0;  // completed assign+update steps
  // True when the last assignment step changed nothing, i.e. the returned
  // centroids and assignments are a Lloyd fixpoint.
  bool converged = false;
  // Inertia after each assign+update step.
  std::vector<double> inertia_history;

  std::span<const double> centroid(size_t c) const {
    return std::span<const double>(centroids).subspan(c * dimension, dimension);
  }
};

// Lloyd's algorithm with greedy k-means++ seeding (2 + ln k candidates per
// centre). Squared Euclidean distance; ties go to the lowest cluster id unless
// a point's current cluster is among them. An empty cluster receives the point farthest from
// its centroid among clusters with more than one member. If every point is a
// zero vector the result is a single cluster regardless of config.k.
// Throws Error(kInvalidK) unless 1 <= k <= points.size(), and
// Error(kInvalidArgument) for max_iterations == 0 or a negative tolerance.
Clustering KMeans(std::span<const SparseVector> points, size_t dimension,
                  const KMeansConfig &config);

// Clusters the model's sentence vectors. config.k == 0 resolves through
// SelectK with no target limit.
Clustering KMeans(const TfIdfModel &model, const KMeansConfig &config);

// Lloyd iterations from caller-supplied initial centroids (k rows of
// `dimension` values, row-major). Points are normalized if config.normalize.
Clustering KMeansFromCentroids(std::span<const SparseVector> points, size_t dimension,
                               const KMeansConfig &config,
                               std::vector<double> initial_centroids);

// Unit-norm copies of points; zero vectors stay empty.
std::vector<SparseVector> NormalizeRows(std::span<const SparseVector> points);

// Nearest-centroid assignment with the same distance and tie rule as KMeans:
// ties go to the lowest cluster id unless the current cluster is among them.
std::vector<uint32_t> AssignToNearest(std::span<const SparseVector> points,
                                      const Clustering &clustering);

// Sum of squared distances from points to their assigned centroids.
double Inertia(std::span<const SparseVector> points, const Clustering &clustering);

// requested_k clamped to [1, n_sentences] if given; otherwise
// round(sqrt(n_sentences / 2)) clamped to [1, min(target, n_sentences)].
size_t SelectK(size_t n_sentences, size_t target_summary_sentences,
               std::optional<size_t> requested_k);

// Elbow method: the k in [k_min, k_max] whose (k, inertia) point lies
// farthest from the chord between the range endpoints, ties to smaller k.
// Throws Error(kInvalidK) unless 1 <= k_min < k_max <= number of points.
size_t ElbowK(std::span<const SparseVector> points, size_t dimension, size_t k_min,
              size_t k_max, const KMeansConfig &base_config);
size_t ElbowK(const TfIdfModel &model, size_t k_min, size_t k_max, uint64_t seed);

// Knee selection on a precomputed curve; inertias[i] belongs to k_min + i.
size_t ElbowFromCurve(size_t k_min, std::span<const double> inertias);

// {"k", "iterations", "inertia", "assignments": [...]}
std::string ClusteringToJson(const Clustering &clustering);

}  // namespace casesum

#endif  // CASESUM_KMEANS_H_
