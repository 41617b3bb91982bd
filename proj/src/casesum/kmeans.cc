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

#include "casesum/kmeans.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <json.hpp>

#include "casesum/status.h"

namespace casesum {
namespace {

constexpr uint32_t kUnassigned = std::numeric_limits<uint32_t>::max();

// Uniform double in [0, 1) from the top 53 bits, identical on every platform
// (std::uniform_real_distribution is implementation-defined).
double UniformUnit(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double SquaredNorm(const SparseVector &v) {
  double sum = 0;
  for (const SparseEntry &e : v) sum += e.weight * e.weight;
  return sum;
}

double SquaredNorm(std::span<const double> v) {
  double sum = 0;
  for (double x : v) sum += x * x;
  return sum;
}

double Dot(const SparseVector &x, std::span<const double> c) {
  double sum = 0;
  for (const SparseEntry &e : x) sum += e.weight * c[e.term];
  return sum;
}

// ||x - c||^2 = ||x||^2 - 2 x.c + ||c||^2, clamped at 0.
double SquaredDistance(const SparseVector &x, double x_norm2, std::span<const double> c,
                       double c_norm2) {
  return std::max(0.0, x_norm2 - 2 * Dot(x, c) + c_norm2);
}

void CheckPoints(std::span<const SparseVector> points, size_t dimension) {
  for (const SparseVector &v : points) {
    if (!v.empty() && v.back().term >= dimension) {
      throw Error(ErrorCode::kInvalidArgument, "point has a term outside the dimension");
    }
  }
}

void CheckConfig(const KMeansConfig &config, size_t n) {
  if (config.max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_iterations must be at least 1");
  }
  if (!(config.tolerance >= 0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be non-negative");
  }
  if (config.k < 1 || config.k > n) {
    throw Error(ErrorCode::kInvalidK, "k = " + std::to_string(config.k) +
                                          " outside [1, " + std::to_string(n) + "]");
  }
}

class Lloyd {
 public:
  Lloyd(std::span<const SparseVector> points, size_t dimension, size_t k)
      : points_(points), dimension_(dimension), k_(k), point_norm2_(points.size()) {
    for (size_t i = 0; i < points.size(); ++i) point_norm2_[i] = SquaredNorm(points[i]);
  }

  Clustering Run(const KMeansConfig &config, std::vector<double> centroids) {
    Clustering result;
    result.k = k_;
    result.dimension = dimension_;
    result.centroids = std::move(centroids);
    result.assignments.assign(points_.size(), kUnassigned);

    std::vector<double> distance(points_.size());
    double previous = std::numeric_limits<double>::infinity();
    for (size_t iter = 1; iter <= config.max_iterations; ++iter) {
      bool changed = Assign(result, &distance);
      if (!changed) {
        result.converged = true;
        break;
      }
      RepairEmptyClusters(&result, &distance);
      UpdateCentroids(&result);
      double inertia = ComputeInertia(result);
      result.inertia = inertia;
      result.inertia_history.push_back(inertia);
      result.iterations = iter;
      if (std::isfinite(previous) && previous - inertia < config.tolerance * previous) break;
      previous = inertia;
    }
    return result;
  }

  // Returns whether any assignment changed.
  bool Assign(Clustering &c, std::vector<double> *distance) const {
    std::vector<double> centroid_norm2(k_);
    for (size_t j = 0; j < k_; ++j) centroid_norm2[j] = SquaredNorm(c.centroid(j));
    bool changed = false;
    for (size_t i = 0; i < points_.size(); ++i) {
      uint32_t best = 0;
      double best_distance = std::numeric_limits<double>::infinity();
      for (size_t j = 0; j < k_; ++j) {
        double d = SquaredDistance(points_[i], point_norm2_[i], c.centroid(j), centroid_norm2[j]);
        if (d < best_distance) {
          best_distance = d;
          best = static_cast<uint32_t>(j);
        }
      }
      // A point tied between its current cluster and a lower id stays put;
      // otherwise a repaired singleton could be pulled back and cycle.
      uint32_t current = c.assignments[i];
      if (current != kUnassigned && current != best &&
          SquaredDistance(points_[i], point_norm2_[i], c.centroid(current),
                          centroid_norm2[current]) == best_distance) {
        best = current;
      }
      if (current != best) changed = true;
      c.assignments[i] = best;
      (*distance)[i] = best_distance;
    }
    return changed;
  }

  double ComputeInertia(const Clustering &c) const {
    std::vector<double> centroid_norm2(k_);
    for (size_t j = 0; j < k_; ++j) centroid_norm2[j] = SquaredNorm(c.centroid(j));
    double total = 0;
    for (size_t i = 0; i < points_.size(); ++i) {
      uint32_t j = c.assignments[i];
      total += SquaredDistance(points_[i], point_norm2_[i], c.centroid(j), centroid_norm2[j]);
    }
    return total;
  }

 private:
  void RepairEmptyClusters(Clustering *c, std::vector<double> *distance) const {
    std::vector<size_t> sizes(k_, 0);
    for (uint32_t a : c->assignments) ++sizes[a];
    for (size_t j = 0; j < k_; ++j) {
      if (sizes[j] > 0) continue;
      size_t farthest = points_.size();
      for (size_t i = 0; i < points_.size(); ++i) {
        if (sizes[c->assignments[i]] < 2) continue;
        if (farthest == points_.size() || (*distance)[i] > (*distance)[farthest]) farthest = i;
      }
      // k <= n guarantees a donor exists.
      --sizes[c->assignments[farthest]];
      c->assignments[farthest] = static_cast<uint32_t>(j);
      ++sizes[j];
      (*distance)[farthest] = 0;
    }
  }

  // Arithmetic means, accumulated in point order.
  void UpdateCentroids(Clustering *c) const {
    std::fill(c->centroids.begin(), c->centroids.end(), 0.0);
    std::vector<size_t> sizes(k_, 0);
    for (size_t i = 0; i < points_.size(); ++i) {
      uint32_t j = c->assignments[i];
      ++sizes[j];
      double *row = c->centroids.data() + j * dimension_;
      for (const SparseEntry &e : points_[i]) row[e.term] += e.weight;
    }
    for (size_t j = 0; j < k_; ++j) {
      double *row = c->centroids.data() + j * dimension_;
      auto count = static_cast<double>(sizes[j]);
      for (size_t d = 0; d < dimension_; ++d) row[d] /= count;
    }
  }

  std::span<const SparseVector> points_;
  size_t dimension_;
  size_t k_;
  std::vector<double> point_norm2_;
};

// Greedy k-means++: each new centre is the best of several D^2-weighted
// candidates by resulting potential, which avoids many of the poor seedings
// plain sampling falls into on small or skewed inputs.
std::vector<double> KMeansPlusPlus(std::span<const SparseVector> points, size_t dimension,
                                   size_t k, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const size_t n = points.size();
  const size_t trials = 2 + static_cast<size_t>(std::log(static_cast<double>(k)));
  std::vector<double> centroids(k * dimension, 0.0);
  std::vector<double> point_norm2(n);
  for (size_t i = 0; i < n; ++i) point_norm2[i] = SquaredNorm(points[i]);
  std::vector<bool> chosen(n, false);
  std::vector<double> min_distance(n, std::numeric_limits<double>::infinity());
  std::vector<double> scratch(dimension, 0.0);
  std::vector<double> candidate_distance(n);
  std::vector<double> best_distance(n);

  // Distances from every point to point i, written to *out.
  auto distances_to = [&](size_t i, std::vector<double> *out) {
    for (const SparseEntry &e : points[i]) scratch[e.term] = e.weight;
    for (size_t p = 0; p < n; ++p) {
      (*out)[p] = SquaredDistance(points[p], point_norm2[p], scratch, point_norm2[i]);
    }
    for (const SparseEntry &e : points[i]) scratch[e.term] = 0.0;
  };
  auto place = [&](size_t c, size_t i, const std::vector<double> &distance) {
    chosen[i] = true;
    std::span<double> row(centroids.data() + c * dimension, dimension);
    for (const SparseEntry &e : points[i]) row[e.term] = e.weight;
    for (size_t p = 0; p < n; ++p) min_distance[p] = std::min(min_distance[p], distance[p]);
  };
  auto sample = [&](double total) {
    double target = UniformUnit(rng) * total;
    double cumulative = 0;
    size_t pick = n;
    for (size_t p = 0; p < n; ++p) {
      if (chosen[p] || min_distance[p] <= 0) continue;
      cumulative += min_distance[p];
      pick = p;
      if (cumulative > target) break;
    }
    return pick;
  };

  size_t first = std::min(n - 1, static_cast<size_t>(UniformUnit(rng) * n));
  distances_to(first, &best_distance);
  place(0, first, best_distance);
  for (size_t c = 1; c < k; ++c) {
    double total = 0;
    for (size_t p = 0; p < n; ++p) {
      if (!chosen[p]) total += min_distance[p];
    }
    size_t pick = n;
    if (total > 0) {
      double best_potential = std::numeric_limits<double>::infinity();
      for (size_t t = 0; t < trials; ++t) {
        size_t candidate = sample(total);
        if (candidate == n) continue;
        distances_to(candidate, &candidate_distance);
        double potential = 0;
        for (size_t p = 0; p < n; ++p) potential += std::min(min_distance[p], candidate_distance[p]);
        if (potential < best_potential) {
          best_potential = potential;
          pick = candidate;
          best_distance.swap(candidate_distance);
        }
      }
    }
    if (pick == n) {
      // Every remaining point coincides with a chosen centre.
      pick = static_cast<size_t>(std::find(chosen.begin(), chosen.end(), false) - chosen.begin());
      distances_to(pick, &best_distance);
    }
    place(c, pick, best_distance);
  }
  return centroids;
}

bool AllZero(std::span<const SparseVector> points) {
  return std::all_of(points.begin(), points.end(),
                     [](const SparseVector &v) { return v.empty(); });
}

Clustering SingleZeroCluster(size_t n, size_t dimension) {
  Clustering result;
  result.k = 1;
  result.dimension = dimension;
  result.assignments.assign(n, 0);
  result.centroids.assign(dimension, 0.0);
  result.inertia = 0;
  result.converged = true;
  return result;
}

}  // namespace

std::vector<SparseVector> NormalizeRows(std::span<const SparseVector> points) {
  std::vector<SparseVector> out(points.begin(), points.end());
  for (SparseVector &v : out) {
    double norm = VectorNorm(v);
    if (norm == 0) continue;
    for (SparseEntry &e : v) e.weight /= norm;
  }
  return out;
}

Clustering KMeansFromCentroids(std::span<const SparseVector> points, size_t dimension,
                               const KMeansConfig &config,
                               std::vector<double> initial_centroids) {
  CheckConfig(config, points.size());
  CheckPoints(points, dimension);
  if (initial_centroids.size() != config.k * dimension) {
    throw Error(ErrorCode::kInvalidArgument, "initial centroids do not match k x dimension");
  }
  std::vector<SparseVector> normalized;
  if (config.normalize) {
    normalized = NormalizeRows(points);
    points = normalized;
  }
  return Lloyd(points, dimension, config.k).Run(config, std::move(initial_centroids));
}

Clustering KMeans(std::span<const SparseVector> points, size_t dimension,
                  const KMeansConfig &config) {
  CheckConfig(config, points.size());
  CheckPoints(points, dimension);
  if (AllZero(points)) return SingleZeroCluster(points.size(), dimension);
  std::vector<SparseVector> normalized;
  if (config.normalize) {
    normalized = NormalizeRows(points);
    points = normalized;
  }
  std::vector<double> init = KMeansPlusPlus(points, dimension, config.k, config.seed);
  return Lloyd(points, dimension, config.k).Run(config, std::move(init));
}

Clustering KMeans(const TfIdfModel &model, const KMeansConfig &config) {
  KMeansConfig resolved = config;
  if (resolved.k == 0) {
    resolved.k = SelectK(model.n_sentences, model.n_sentences, std::nullopt);
  }
  return KMeans(model.vectors, model.dimension(), resolved);
}

std::vector<uint32_t> AssignToNearest(std::span<const SparseVector> points,
                                      const Clustering &clustering) {
  Clustering copy = clustering;
  std::vector<double> distance(points.size());
  Lloyd(points, clustering.dimension, clustering.k).Assign(copy, &distance);
  return copy.assignments;
}

double Inertia(std::span<const SparseVector> points, const Clustering &clustering) {
  return Lloyd(points, clustering.dimension, clustering.k).ComputeInertia(clustering);
}

size_t SelectK(size_t n_sentences, size_t target_summary_sentences,
               std::optional<size_t> requested_k) {
  size_t n = std::max<size_t>(n_sentences, 1);
  if (requested_k) return std::clamp<size_t>(*requested_k, 1, n);
  auto heuristic = static_cast<size_t>(std::lround(std::sqrt(static_cast<double>(n) / 2.0)));
  size_t upper = std::max<size_t>(1, std::min(target_summary_sentences, n));
  return std::clamp<size_t>(heuristic, 1, upper);
}

size_t ElbowFromCurve(size_t k_min, std::span<const double> inertias) {
  if (inertias.size() < 2) throw Error(ErrorCode::kInvalidK, "elbow needs at least two k values");
  const double dx = static_cast<double>(inertias.size() - 1);
  const double y0 = inertias.front();
  const double dy = inertias.back() - y0;
  // Perpendicular distance is |cross| / chord length; the length is shared.
  const double slack = 1e-12 * (std::abs(y0) + std::abs(inertias.back()) + 1e-300) * dx;
  size_t best = 0;
  double best_cross = 0;
  for (size_t i = 0; i < inertias.size(); ++i) {
    double cross = std::abs(static_cast<double>(i) * dy - (inertias[i] - y0) * dx);
    if (cross > best_cross + slack) {
      best_cross = cross;
      best = i;
    }
  }
  return k_min + best;
}

size_t ElbowK(std::span<const SparseVector> points, size_t dimension, size_t k_min,
              size_t k_max, const KMeansConfig &base_config) {
  if (k_min < 1 || k_min >= k_max || k_max > points.size()) {
    throw Error(ErrorCode::kInvalidK, "elbow range [" + std::to_string(k_min) + ", " +
                                          std::to_string(k_max) + "] is invalid for " +
                                          std::to_string(points.size()) + " points");
  }
  std::vector<double> inertias;
  for (size_t k = k_min; k <= k_max; ++k) {
    KMeansConfig config = base_config;
    config.k = k;
    inertias.push_back(KMeans(points, dimension, config).inertia);
  }
  return ElbowFromCurve(k_min, inertias);
}

size_t ElbowK(const TfIdfModel &model, size_t k_min, size_t k_max, uint64_t seed) {
  KMeansConfig config;
  config.seed = seed;
  return ElbowK(model.vectors, model.dimension(), k_min, k_max, config);
}

std::string ClusteringToJson(const Clustering &clustering) {
  nlohmann::ordered_json j;
  j["k"] = clustering.k;
  j["iterations"] = clustering.iterations;
  j["inertia"] = clustering.inertia;
  j["assignments"] = clustering.assignments;
  return j.dump();
}

}  // namespace casesum
