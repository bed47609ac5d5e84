#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/linear_model.hpp"
#include "stylo/types.hpp"

namespace stylo::ngram {

enum class FeatureKind { Word, CharNgram, PosNgram };

struct VocabKind {
  FeatureKind kind = FeatureKind::Word;
  int n = 1;  // ignored for Word

  friend bool operator==(const VocabKind&, const VocabKind&) = default;
};

// Features ranked by descending training frequency, ties lexicographic.
struct TopKVocabulary {
  VocabKind kind;
  std::vector<std::string> items;
  std::unordered_map<std::string, Eigen::Index> index;

  Eigen::Index size() const { return static_cast<Eigen::Index>(items.size()); }
};

enum class MethodId { WordFreq, CharNgram, PosNgram };

std::string_view to_string(MethodId method);
VocabKind vocab_kind(MethodId method, int n);

struct MethodParams {
  int n = 1;
  int features = 1;
};

// WordFreq K=480; CharNgram n=2 K=860; PosNgram n=1 K=330.
MethodParams default_params(MethodId method);

struct MethodModel {
  MethodId method = MethodId::WordFreq;
  TopKVocabulary vocab;
  linear::LinearModel model;
};

// Raw feature occurrences of `text` under `kind`, in text order.
std::vector<std::string> extract_features(std::string_view text, VocabKind kind);

TopKVocabulary build_vocab(const std::vector<std::string>& train_texts, VocabKind kind, int k);
TopKVocabulary vocab_from_items(VocabKind kind, std::vector<std::string> items);

SparseVector<> featurize(std::string_view text, const TopKVocabulary& vocab);

MethodModel train_method(const corpus::Dataset& train, MethodId method, MethodParams params,
                         const linear::Hyperparams& hp = {});
MethodModel train_method(const corpus::Dataset& train, MethodId method,
                         const linear::Hyperparams& hp = {});

linear::Prediction predict(const MethodModel& model, std::string_view text);

struct SweepCell {
  int n = 0;
  int features = 0;
  double accuracy = 0;
};

// One cell per (n, K), n-major. Each cell trains on `train` and scores `test`.
std::vector<SweepCell> sweep(const corpus::Dataset& train, const corpus::Dataset& test,
                             MethodId method, const std::vector<int>& n_range,
                             const std::vector<int>& k_range,
                             const linear::Hyperparams& hp = {});

// CSV with header `n,K,accuracy`, accuracy to three decimals.
std::string sweep_csv(const std::vector<SweepCell>& cells);

}  // namespace stylo::ngram
