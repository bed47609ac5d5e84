#include "stylo/evaluation.hpp"

#include <cstdio>
#include <future>

#include "stylo/error.hpp"
#include "stylo/textproc.hpp"

namespace stylo::eval {

void Confusion::add(bool predicted, bool actual) {
  if (predicted) {
    ++(actual ? tp : fp);
  } else {
    ++(actual ? fn : tn);
  }
}

Confusion& Confusion::operator+=(const Confusion& o) {
  tp += o.tp;
  fp += o.fp;
  tn += o.tn;
  fn += o.fn;
  return *this;
}

double f1_score(double precision, double recall) {
  const double denom = precision + recall;
  return denom > 0 ? 2 * precision * recall / denom : 0.0;
}

Metrics metrics(const Confusion& c) {
  if (c.total() == 0) throw ArgumentError("metrics of an empty confusion matrix");
  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  Metrics m;
  m.accuracy = ratio(c.tp + c.tn, c.total());
  m.precision = ratio(c.tp, c.tp + c.fp);
  m.recall = ratio(c.tp, c.tp + c.fn);
  m.f1 = f1_score(m.precision, m.recall);
  return m;
}

Confusion confusion_of(const std::vector<bool>& predicted, const std::vector<bool>& actual) {
  if (predicted.size() != actual.size()) {
    throw ArgumentError("prediction and label lists differ in length");
  }
  Confusion c;
  for (std::size_t i = 0; i < predicted.size(); ++i) c.add(predicted[i], actual[i]);
  return c;
}

namespace {

// Training subset in a content-determined order, so the report does not
// depend on how the dataset happens to be stored.
corpus::Dataset fold_training_set(const corpus::Dataset& dataset, const corpus::FoldPlan& plan,
                                  int fold, std::uint64_t seed) {
  std::vector<std::size_t> idx;
  for (bool label : {true, false}) {
    for (auto i : corpus::seeded_class_order(dataset, label, seed)) {
      if (plan.assignments[i] != fold) idx.push_back(i);
    }
  }
  return dataset.subset(idx);
}

}  // namespace

EvalReport cross_validate(const corpus::Dataset& dataset, int k, std::uint64_t seed,
                          const ensemble::EnsembleConfig& config) {
  EvalReport report;
  report.plan = corpus::make_folds(dataset, k, seed);

  struct FoldOutput {
    std::vector<std::size_t> held_out;
    std::vector<bool> predicted;
  };
  std::vector<std::future<FoldOutput>> jobs;
  for (int fold = 0; fold < k; ++fold) {
    jobs.push_back(std::async(std::launch::async, [&, fold] {
      FoldOutput out;
      const auto train = fold_training_set(dataset, report.plan, fold, seed);
      ensemble::EnsembleModel model;
      try {
        model = ensemble::train_ensemble(train, config);
      } catch (const std::exception& e) {
        throw TrainingError("fold " + std::to_string(fold + 1) + ": " + e.what());
      }
      out.held_out = report.plan.held_out(fold);
      for (auto i : out.held_out) {
        out.predicted.push_back(ensemble::predict(model, dataset.samples[i].text));
      }
      return out;
    }));
  }

  report.predictions.assign(dataset.size(), false);
  for (int fold = 0; fold < k; ++fold) {
    const auto out = jobs[static_cast<std::size_t>(fold)].get();
    FoldResult row;
    row.fold = fold;
    for (std::size_t j = 0; j < out.held_out.size(); ++j) {
      const auto i = out.held_out[j];
      report.predictions[i] = out.predicted[j];
      row.confusion.add(out.predicted[j], dataset.samples[i].label);
    }
    row.metrics = metrics(row.confusion);
    report.pooled_confusion += row.confusion;
    report.per_fold.push_back(row);
  }
  report.pooled = metrics(report.pooled_confusion);
  for (const auto& row : report.per_fold) {
    report.fold_mean.accuracy += row.metrics.accuracy / k;
    report.fold_mean.precision += row.metrics.precision / k;
    report.fold_mean.recall += row.metrics.recall / k;
    report.fold_mean.f1 += row.metrics.f1 / k;
  }
  return report;
}

std::string report_csv(const EvalReport& report) {
  std::string out = "fold,accuracy,precision,recall,f1,tp,fp,tn,fn\n";
  char line[160];
  auto emit = [&](const std::string& label, const Metrics& m, const Confusion& c) {
    std::snprintf(line, sizeof line, "%s,%.3f,%.3f,%.3f,%.3f,%zu,%zu,%zu,%zu\n", label.c_str(),
                  m.accuracy, m.precision, m.recall, m.f1, c.tp, c.fp, c.tn, c.fn);
    out += line;
  };
  for (const auto& row : report.per_fold) {
    emit(std::to_string(row.fold + 1), row.metrics, row.confusion);
  }
  emit("avg", report.fold_mean, report.pooled_confusion);
  emit("pooled", report.pooled, report.pooled_confusion);
  return out;
}

std::string summary_line(const Metrics& m) {
  char line[96];
  std::snprintf(line, sizeof line, "precision=%.3f recall=%.3f f1=%.3f", m.precision, m.recall,
                m.f1);
  return line;
}

MethodEvaluation evaluate_method(const corpus::Dataset& train, const corpus::Dataset& test,
                                 ensemble::Method method,
                                 const ensemble::EnsembleConfig& config) {
  // Train only the requested member; the ensemble model is a convenient holder.
  ensemble::EnsembleModel model;
  using ensemble::Method;
  switch (method) {
    case Method::WordFreq:
      model.word = ngram::train_method(train, ngram::MethodId::WordFreq, config.word,
                                       config.hyperparams);
      break;
    case Method::CharNgram:
      model.chars = ngram::train_method(train, ngram::MethodId::CharNgram, config.chars,
                                        config.hyperparams);
      break;
    case Method::PosNgram:
      model.pos = ngram::train_method(train, ngram::MethodId::PosNgram, config.pos,
                                      config.hyperparams);
      break;
    case Method::StyloCluster:
      model.cluster = cluster::train_cluster(train, config.cluster_max_iters);
      break;
    case Method::Verifier:
      model.verifier = verifier::train_verifier(train, config.verifier).profile;
      break;
  }
  MethodEvaluation out;
  for (const auto& s : test.samples) {
    out.confusion.add(ensemble::method_vote(model, method, s.text), s.label);
  }
  out.accuracy = metrics(out.confusion).accuracy;
  return out;
}

MethodEvaluation evaluate_method(const corpus::Dataset& dataset, ensemble::Method method,
                                 std::uint64_t seed, const ensemble::EnsembleConfig& config,
                                 double train_fraction) {
  const auto [train, test] = corpus::split(dataset, train_fraction, seed);
  return evaluate_method(train, test, method, config);
}

std::vector<VerifierSweepCell> sweep_verifier(const corpus::Dataset& train,
                                              const corpus::Dataset& test,
                                              const std::vector<int>& n_range,
                                              const std::vector<double>& gamma_range,
                                              const verifier::VerifierParams& base) {
  if (n_range.empty() || gamma_range.empty()) {
    throw ArgumentError("sweep ranges must be non-empty");
  }
  std::vector<VerifierSweepCell> cells;
  for (int n : n_range) {
    auto params = base;
    params.n = n;
    // Calibration does not depend on gamma, so one profile serves the whole row.
    auto profile = verifier::train_verifier(train, params).profile;
    std::vector<double> scores;
    scores.reserve(test.size());
    for (const auto& s : test.samples) {
      scores.push_back(text::scalar_count(s.text) < static_cast<std::size_t>(n)
                           ? -1.0
                           : verifier::shared_pct(s.text, profile));
    }
    for (double gamma : gamma_range) {
      Confusion c;
      for (std::size_t i = 0; i < test.samples.size(); ++i) {
        const bool accept = scores[i] >= 0 && scores[i] >= profile.epsilon + gamma;
        c.add(accept, test.samples[i].label);
      }
      cells.push_back({n, gamma, metrics(c).accuracy});
    }
  }
  return cells;
}

std::string verifier_sweep_csv(const std::vector<VerifierSweepCell>& cells) {
  std::string out = "n,gamma,accuracy\n";
  char line[64];
  for (const auto& c : cells) {
    std::snprintf(line, sizeof line, "%d,%g,%.3f\n", c.n, c.gamma, c.accuracy);
    out += line;
  }
  return out;
}

}  // namespace stylo::eval
