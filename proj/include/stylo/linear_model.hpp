#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "stylo/types.hpp"

namespace stylo::linear {

struct Hyperparams {
  Scalar learning_rate = 0.1;
  int epochs = 300;
  Scalar l2_penalty = 1e-4;
  std::uint64_t seed = 42;  // unused by full-batch descent; kept for stochastic variants
};

// Binary logistic regression (two-class maximum entropy).
struct LinearModel {
  DenseVector<> weights;
  Scalar bias = 0;
  Hyperparams hyperparams;

  Eigen::Index dim() const { return weights.size(); }
};

struct Prediction {
  Scalar probability = 0.5;
  bool decision = true;
};

template <typename T>
T sigmoid(T z) {
  if (z >= T(0)) return T(1) / (T(1) + std::exp(-z));
  const T e = std::exp(z);
  return e / (T(1) + e);
}

// log(1 + exp(z)) without overflow.
template <typename T>
T softplus(T z) {
  return z > T(0) ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

template <typename T>
struct LossAndGradient {
  T loss = 0;
  DenseVector<T> grad_weights;
  T grad_bias = 0;
};

// Mean log-loss over the rows of `features` plus (l2/2)*|w|^2; the bias is not
// penalized. `labels` holds 0/1 targets.
template <typename T>
LossAndGradient<T> regularized_log_loss(const SparseRowMatrix<T>& features,
                                        const DenseVector<T>& labels,
                                        const DenseVector<T>& weights, T bias, T l2) {
  const auto m = static_cast<T>(features.rows());
  const DenseVector<T> margin = (features * weights).array() + bias;

  LossAndGradient<T> out;
  DenseVector<T> residual(margin.size());
  T total = 0;
  for (Eigen::Index i = 0; i < margin.size(); ++i) {
    // -[y log s(z) + (1-y) log(1-s(z))] = softplus(z) - y z
    total += softplus(margin[i]) - labels[i] * margin[i];
    residual[i] = sigmoid(margin[i]) - labels[i];
  }
  out.loss = total / m + T(0.5) * l2 * weights.squaredNorm();
  out.grad_weights = features.transpose() * residual / m + l2 * weights;
  out.grad_bias = residual.sum() / m;
  return out;
}

using EpochCallback = std::function<void(int epoch, Scalar loss)>;

// Full-batch gradient descent from all-zero weights. Rows of `features` are
// samples; `dim` is the column count.
LinearModel train(const SparseRowMatrix<>& features, const std::vector<bool>& labels,
                  const Hyperparams& hp = {}, const EpochCallback& on_epoch = {});

LinearModel train(const std::vector<std::pair<SparseVector<>, bool>>& samples,
                  Eigen::Index dim, const Hyperparams& hp = {},
                  const EpochCallback& on_epoch = {});

Prediction predict(const LinearModel& model, const SparseVector<>& x);

// Stacks sparse rows into a design matrix with `dim` columns.
SparseRowMatrix<> stack_rows(const std::vector<SparseVector<>>& rows, Eigen::Index dim);

}  // namespace stylo::linear
