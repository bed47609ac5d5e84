#include "stylo/linear_model.hpp"

#include <algorithm>
#include <string>

#include "stylo/error.hpp"

namespace stylo::linear {

SparseRowMatrix<> stack_rows(const std::vector<SparseVector<>>& rows, Eigen::Index dim) {
  std::vector<Eigen::Triplet<Scalar>> triplets;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != dim) {
      throw ArgumentError("feature vector " + std::to_string(r) + " has dimension " +
                          std::to_string(rows[r].size()) + ", expected " +
                          std::to_string(dim));
    }
    for (SparseVector<>::InnerIterator it(rows[r]); it; ++it) {
      triplets.emplace_back(static_cast<int>(r), static_cast<int>(it.index()), it.value());
    }
  }
  SparseRowMatrix<> out(static_cast<Eigen::Index>(rows.size()), dim);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

LinearModel train(const SparseRowMatrix<>& features, const std::vector<bool>& labels,
                  const Hyperparams& hp, const EpochCallback& on_epoch) {
  if (static_cast<std::size_t>(features.rows()) != labels.size()) {
    throw ArgumentError("feature rows and labels differ in length");
  }
  const auto positives = std::count(labels.begin(), labels.end(), true);
  if (positives == 0 || positives == static_cast<std::ptrdiff_t>(labels.size())) {
    throw TrainingError("training data must contain both classes");
  }
  if (!(hp.learning_rate > 0) || hp.epochs < 0 || hp.l2_penalty < 0) {
    throw ArgumentError("invalid hyperparameters");
  }

  DenseVector<> y(static_cast<Eigen::Index>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    y[static_cast<Eigen::Index>(i)] = labels[i] ? 1.0 : 0.0;
  }

  LinearModel model{DenseVector<>::Zero(features.cols()), 0.0, hp};
  for (int epoch = 0; epoch < hp.epochs; ++epoch) {
    const auto step =
        regularized_log_loss<Scalar>(features, y, model.weights, model.bias, hp.l2_penalty);
    if (!std::isfinite(step.loss)) {
      throw DivergenceError("training diverged at epoch " + std::to_string(epoch), epoch);
    }
    if (on_epoch) on_epoch(epoch, step.loss);
    model.weights -= hp.learning_rate * step.grad_weights;
    model.bias -= hp.learning_rate * step.grad_bias;
  }
  if (!model.weights.allFinite() || !std::isfinite(model.bias)) {
    throw DivergenceError("training produced non-finite weights", hp.epochs);
  }
  return model;
}

LinearModel train(const std::vector<std::pair<SparseVector<>, bool>>& samples,
                  Eigen::Index dim, const Hyperparams& hp, const EpochCallback& on_epoch) {
  std::vector<SparseVector<>> rows;
  std::vector<bool> labels;
  rows.reserve(samples.size());
  labels.reserve(samples.size());
  for (const auto& [x, label] : samples) {
    rows.push_back(x);
    labels.push_back(label);
  }
  return train(stack_rows(rows, dim), labels, hp, on_epoch);
}

Prediction predict(const LinearModel& model, const SparseVector<>& x) {
  if (x.size() != model.dim()) {
    throw ArgumentError("feature vector has dimension " + std::to_string(x.size()) +
                        ", model expects " + std::to_string(model.dim()));
  }
  const Scalar p = sigmoid(x.dot(model.weights) + model.bias);
  return {p, p >= 0.5};
}

}  // namespace stylo::linear
