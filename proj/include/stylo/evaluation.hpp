#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/ensemble.hpp"

namespace stylo::eval {

// Positive class = target author.
struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  void add(bool predicted, bool actual);
  Confusion& operator+=(const Confusion& other);
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

struct Metrics {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Zero denominators yield 0 rather than an error.
double f1_score(double precision, double recall);

// Throws ArgumentError on an all-zero confusion.
Metrics metrics(const Confusion& c);

Confusion confusion_of(const std::vector<bool>& predicted, const std::vector<bool>& actual);

struct FoldResult {
  int fold = 0;  // 0-based
  Metrics metrics;
  Confusion confusion;
};

struct EvalReport {
  std::vector<FoldResult> per_fold;
  Confusion pooled_confusion;
  Metrics pooled;      // metrics over summed confusion counts
  Metrics fold_mean;   // arithmetic mean of the per-fold metrics
  std::vector<bool> predictions;  // by dataset index, each predicted once while held out
  corpus::FoldPlan plan;
};

// Stratified k-fold: train the full ensemble on k-1 folds, majority-vote the
// held-out fold.
EvalReport cross_validate(const corpus::Dataset& dataset, int k, std::uint64_t seed,
                          const ensemble::EnsembleConfig& config = {});

// Header `fold,accuracy,precision,recall,f1,tp,fp,tn,fn`; folds are numbered
// from 1, followed by `avg` and `pooled` rows.
std::string report_csv(const EvalReport& report);

// `precision=0.xxx recall=0.xxx f1=0.xxx`
std::string summary_line(const Metrics& m);

struct MethodEvaluation {
  Confusion confusion;
  double accuracy = 0;
};

// Stratified train_fraction split, one method trained and scored.
MethodEvaluation evaluate_method(const corpus::Dataset& dataset, ensemble::Method method,
                                 std::uint64_t seed, const ensemble::EnsembleConfig& config = {},
                                 double train_fraction = 0.7);

MethodEvaluation evaluate_method(const corpus::Dataset& train, const corpus::Dataset& test,
                                 ensemble::Method method,
                                 const ensemble::EnsembleConfig& config = {});

struct VerifierSweepCell {
  int n = 0;
  double gamma = 0;
  double accuracy = 0;
};

// Verifier accuracy over a grid of n-gram sizes and margins; n-major.
std::vector<VerifierSweepCell> sweep_verifier(const corpus::Dataset& train,
                                              const corpus::Dataset& test,
                                              const std::vector<int>& n_range,
                                              const std::vector<double>& gamma_range,
                                              const verifier::VerifierParams& base = {});

// Header `n,gamma,accuracy`.
std::string verifier_sweep_csv(const std::vector<VerifierSweepCell>& cells);

}  // namespace stylo::eval
