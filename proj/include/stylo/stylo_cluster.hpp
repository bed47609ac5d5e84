#pragma once

#include <array>
#include <limits>
#include <string_view>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/error.hpp"
#include "stylo/types.hpp"

namespace stylo::cluster {

inline constexpr int kStyloDims = 6;
using StyloVector = Eigen::Matrix<Scalar, kStyloDims, 1>;

struct StyloFeatures {
  Scalar avg_words_per_sentence = 0;
  Scalar sentence_len_stddev = 0;
  Scalar vocab_diversity = 0;  // type-token ratio over the whole text
  Scalar semicolons_per_sentence = 0;
  Scalar colons_per_sentence = 0;
  Scalar commas_per_sentence = 0;

  StyloVector as_vector() const;
  static StyloFeatures from_vector(const StyloVector& v);
  static const std::array<std::string_view, kStyloDims>& names();
};

StyloFeatures extract_stylo(std::string_view text);

// Component-wise mean of the features of every comment.
StyloFeatures average_stylo(const std::vector<std::string>& texts);

template <typename T, int Dim>
struct KMeansResult {
  Eigen::Matrix<T, 2, Dim> centroids;
  std::vector<int> assignments;
  // Within-cluster SSE after every assignment step and every centroid update.
  std::vector<T> sse_history;
  int iterations = 0;
};

namespace detail {

template <typename Point, typename Centroids>
int nearest(const Point& p, const Centroids& c) {
  const auto d0 = (p - c.row(0)).squaredNorm();
  const auto d1 = (p - c.row(1)).squaredNorm();
  return d1 < d0 ? 1 : 0;
}

template <typename Points, typename Centroids>
auto total_sse(const Points& points, const Centroids& c, const std::vector<int>& assign) {
  typename Points::Scalar sse = 0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    sse += (points.row(i) - c.row(assign[static_cast<std::size_t>(i)])).squaredNorm();
  }
  return sse;
}

}  // namespace detail

// Lloyd's algorithm with k = 2 over the rows of `points`. Initial centroids are
// the first pair at maximal distance found by a row-major scan.
template <typename Derived>
auto kmeans2(const Eigen::MatrixBase<Derived>& points, int max_iters = 100) {
  using T = typename Derived::Scalar;
  constexpr int Dim = Derived::ColsAtCompileTime;
  using Centroids = Eigen::Matrix<T, 2, Dim>;

  const Eigen::Index count = points.rows();
  if (max_iters <= 0) throw ArgumentError("max_iters must be positive");

  Eigen::Index first = 0;
  Eigen::Index second = 0;
  T widest = 0;
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index j = i + 1; j < count; ++j) {
      const T d = (points.row(i) - points.row(j)).squaredNorm();
      if (d > widest) {
        widest = d;
        first = i;
        second = j;
      }
    }
  }
  if (!(widest > 0)) throw DegenerateInputError("k-means needs at least two distinct points");

  KMeansResult<T, Dim> out;
  Centroids c(2, points.cols());
  c.row(0) = points.row(first);
  c.row(1) = points.row(second);
  out.assignments.assign(static_cast<std::size_t>(count), -1);

  for (int iter = 0; iter < max_iters; ++iter) {
    std::vector<int> next(static_cast<std::size_t>(count));
    std::array<Eigen::Index, 2> sizes{0, 0};
    for (Eigen::Index i = 0; i < count; ++i) {
      next[static_cast<std::size_t>(i)] = detail::nearest(points.row(i), c);
      ++sizes[static_cast<std::size_t>(next[static_cast<std::size_t>(i)])];
    }
    for (int empty = 0; empty < 2; ++empty) {
      if (sizes[static_cast<std::size_t>(empty)] != 0) continue;
      // Move the point farthest from its centroid into the empty cluster.
      Eigen::Index far_point = 0;
      T far_dist = -1;
      for (Eigen::Index i = 0; i < count; ++i) {
        const T d = (points.row(i) - c.row(next[static_cast<std::size_t>(i)])).squaredNorm();
        if (d > far_dist) {
          far_dist = d;
          far_point = i;
        }
      }
      next[static_cast<std::size_t>(far_point)] = empty;
      c.row(empty) = points.row(far_point);
      ++sizes[static_cast<std::size_t>(empty)];
      --sizes[static_cast<std::size_t>(1 - empty)];
    }

    const bool stable = next == out.assignments;
    out.assignments = std::move(next);
    out.sse_history.push_back(detail::total_sse(points, c, out.assignments));
    out.iterations = iter + 1;
    if (stable) break;

    Centroids sums = Centroids::Zero(2, points.cols());
    for (Eigen::Index i = 0; i < count; ++i) {
      sums.row(out.assignments[static_cast<std::size_t>(i)]) += points.row(i);
    }
    for (int k = 0; k < 2; ++k) {
      c.row(k) = sums.row(k) / static_cast<T>(sizes[static_cast<std::size_t>(k)]);
    }
    out.sse_history.push_back(detail::total_sse(points, c, out.assignments));
  }
  out.centroids = c;
  return out;
}

struct ClusterModel {
  Eigen::Matrix<Scalar, 2, kStyloDims> centroids;  // in normalized space
  std::array<bool, 2> labels{false, false};
  StyloVector mean = StyloVector::Zero();
  StyloVector stddev = StyloVector::Zero();  // 0 marks a dropped dimension
};

StyloVector normalize(const ClusterModel& model, const StyloVector& raw);

ClusterModel train_cluster(const corpus::Dataset& train, int max_iters = 100);

// Same as train_cluster, over precomputed raw feature rows.
ClusterModel train_cluster_features(const Eigen::Matrix<Scalar, Eigen::Dynamic, kStyloDims>& raw,
                                    const std::vector<bool>& labels, int max_iters = 100);

bool classify(const ClusterModel& model, std::string_view text);
bool classify_features(const ClusterModel& model, const StyloVector& raw);

}  // namespace stylo::cluster
