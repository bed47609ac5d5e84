#include "stylo/ensemble.hpp"

#include <algorithm>
#include <future>

#include "stylo/textproc.hpp"

namespace stylo::ensemble {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::WordFreq: return "word_freq";
    case Method::CharNgram: return "char_ngram";
    case Method::PosNgram: return "pos_ngram";
    case Method::StyloCluster: return "stylo_cluster";
    case Method::Verifier: return "verifier";
  }
  return "unknown";
}

namespace {

template <typename Fn>
auto guarded(Method method, Fn&& fn) {
  return [method, fn = std::forward<Fn>(fn)]() {
    try {
      return fn();
    } catch (const EnsembleTrainingError&) {
      throw;
    } catch (const std::exception& e) {
      throw EnsembleTrainingError(method, e.what());
    }
  };
}

}  // namespace

EnsembleModel train_ensemble(const corpus::Dataset& train, const EnsembleConfig& config) {
  using ngram::MethodId;
  auto word = std::async(std::launch::async, guarded(Method::WordFreq, [&] {
    return ngram::train_method(train, MethodId::WordFreq, config.word, config.hyperparams);
  }));
  auto chars = std::async(std::launch::async, guarded(Method::CharNgram, [&] {
    return ngram::train_method(train, MethodId::CharNgram, config.chars, config.hyperparams);
  }));
  auto pos = std::async(std::launch::async, guarded(Method::PosNgram, [&] {
    return ngram::train_method(train, MethodId::PosNgram, config.pos, config.hyperparams);
  }));
  auto cluster = std::async(std::launch::async, guarded(Method::StyloCluster, [&] {
    return cluster::train_cluster(train, config.cluster_max_iters);
  }));
  auto verify = std::async(std::launch::async, guarded(Method::Verifier, [&] {
    return verifier::train_verifier(train, config.verifier).profile;
  }));

  // Collect in vote order so the first failing method (in that order) is reported.
  EnsembleModel model;
  model.word = word.get();
  model.chars = chars.get();
  model.pos = pos.get();
  model.cluster = cluster.get();
  model.verifier = verify.get();
  model.config = config;
  return model;
}

bool method_vote(const EnsembleModel& model, Method method, std::string_view text) {
  switch (method) {
    case Method::WordFreq: return ngram::predict(model.word, text).decision;
    case Method::CharNgram: return ngram::predict(model.chars, text).decision;
    case Method::PosNgram: return ngram::predict(model.pos, text).decision;
    case Method::StyloCluster: return cluster::classify(model.cluster, text);
    case Method::Verifier:
      // Too short to carry any n-gram: reject.
      if (text::scalar_count(text) < static_cast<std::size_t>(model.verifier.n)) return false;
      return verifier::verify(model.verifier, text);
  }
  return false;
}

VoteVector predict_votes(const EnsembleModel& model, std::string_view text) {
  VoteVector votes{};
  for (std::size_t i = 0; i < kMethodCount; ++i) votes[i] = method_vote(model, kMethods[i], text);
  return votes;
}

bool majority_vote(const VoteVector& votes) {
  return std::count(votes.begin(), votes.end(), true) >= 3;
}

}  // namespace stylo::ensemble
