#pragma once

#include <array>
#include <string>
#include <string_view>

#include "stylo/corpus.hpp"
#include "stylo/error.hpp"
#include "stylo/linear_model.hpp"
#include "stylo/ngram_models.hpp"
#include "stylo/stylo_cluster.hpp"
#include "stylo/verifier.hpp"

namespace stylo::ensemble {

enum class Method { WordFreq = 0, CharNgram, PosNgram, StyloCluster, Verifier };
inline constexpr std::size_t kMethodCount = 5;
inline constexpr std::array<Method, kMethodCount> kMethods = {
    Method::WordFreq, Method::CharNgram, Method::PosNgram, Method::StyloCluster,
    Method::Verifier};

std::string_view to_string(Method method);

// Votes in the order of kMethods.
using VoteVector = std::array<bool, kMethodCount>;

struct EnsembleConfig {
  ngram::MethodParams word = ngram::default_params(ngram::MethodId::WordFreq);
  ngram::MethodParams chars = ngram::default_params(ngram::MethodId::CharNgram);
  ngram::MethodParams pos = ngram::default_params(ngram::MethodId::PosNgram);
  linear::Hyperparams hyperparams;
  int cluster_max_iters = 100;
  verifier::VerifierParams verifier;
};

struct EnsembleModel {
  ngram::MethodModel word;
  ngram::MethodModel chars;
  ngram::MethodModel pos;
  cluster::ClusterModel cluster;
  verifier::VerifierProfile verifier;
  EnsembleConfig config;
};

class EnsembleTrainingError : public TrainingError {
 public:
  EnsembleTrainingError(Method method, const std::string& cause)
      : TrainingError(std::string(to_string(method)) + " training failed: " + cause),
        method_(method) {}
  Method method() const noexcept { return method_; }

 private:
  Method method_;
};

// Trains all five methods on the same data; any failure aborts the whole model.
EnsembleModel train_ensemble(const corpus::Dataset& train, const EnsembleConfig& config = {});

bool method_vote(const EnsembleModel& model, Method method, std::string_view text);

VoteVector predict_votes(const EnsembleModel& model, std::string_view text);

bool majority_vote(const VoteVector& votes);

inline bool predict(const EnsembleModel& model, std::string_view text) {
  return majority_vote(predict_votes(model, text));
}

}  // namespace stylo::ensemble
