#include "stylo/ngram_models.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <future>
#include <map>

#include "stylo/error.hpp"
#include "stylo/textproc.hpp"

namespace stylo::ngram {

namespace {

std::string fold_case(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> ranked_features(const std::vector<std::vector<std::string>>& docs) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& doc : docs) {
    for (const auto& f : doc) ++counts[f];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<std::string> items;
  items.reserve(ranked.size());
  for (auto& [f, c] : ranked) items.push_back(std::move(f));
  return items;
}

SparseVector<> count_into(const std::vector<std::string>& features,
                          const TopKVocabulary& vocab) {
  std::map<Eigen::Index, Scalar> counts;
  for (const auto& f : features) {
    if (auto it = vocab.index.find(f); it != vocab.index.end()) counts[it->second] += 1.0;
  }
  SparseVector<> v(vocab.size());
  v.reserve(static_cast<Eigen::Index>(counts.size()));
  for (const auto& [i, c] : counts) v.insertBack(i) = c;
  return v;
}

double accuracy_of(const MethodModel& model, const std::vector<SparseVector<>>& rows,
                   const std::vector<bool>& labels) {
  std::size_t correct = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (linear::predict(model.model, rows[i]).decision == labels[i]) ++correct;
  }
  return rows.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(rows.size());
}

}  // namespace

std::string_view to_string(MethodId method) {
  switch (method) {
    case MethodId::WordFreq: return "word_freq";
    case MethodId::CharNgram: return "char_ngram";
    case MethodId::PosNgram: return "pos_ngram";
  }
  return "unknown";
}

VocabKind vocab_kind(MethodId method, int n) {
  switch (method) {
    case MethodId::WordFreq: return {FeatureKind::Word, 1};
    case MethodId::CharNgram: return {FeatureKind::CharNgram, n};
    case MethodId::PosNgram: return {FeatureKind::PosNgram, n};
  }
  return {};
}

MethodParams default_params(MethodId method) {
  switch (method) {
    case MethodId::WordFreq: return {1, 480};
    case MethodId::CharNgram: return {2, 860};
    case MethodId::PosNgram: return {1, 330};
  }
  return {};
}

std::vector<std::string> extract_features(std::string_view text, VocabKind kind) {
  switch (kind.kind) {
    case FeatureKind::Word: {
      auto tokens = text::word_tokens(text);
      for (auto& t : tokens) t = fold_case(std::move(t));
      return tokens;
    }
    case FeatureKind::CharNgram:
      return text::char_ngrams(text, kind.n);
    case FeatureKind::PosNgram: {
      if (kind.n <= 0) throw ArgumentError("n-gram size must be positive");
      const auto tags = text::pos_tag(text::word_tokens(text));
      const auto n = static_cast<std::size_t>(kind.n);
      std::vector<std::string> out;
      for (std::size_t i = 0; i + n <= tags.size(); ++i) {
        std::string gram(text::to_string(tags[i]));
        for (std::size_t j = 1; j < n; ++j) {
          gram += ' ';
          gram += text::to_string(tags[i + j]);
        }
        out.push_back(std::move(gram));
      }
      return out;
    }
  }
  return {};
}

TopKVocabulary vocab_from_items(VocabKind kind, std::vector<std::string> items) {
  TopKVocabulary vocab{kind, std::move(items), {}};
  for (std::size_t i = 0; i < vocab.items.size(); ++i) {
    if (!vocab.index.emplace(vocab.items[i], static_cast<Eigen::Index>(i)).second) {
      throw SchemaError("duplicate vocabulary item '" + vocab.items[i] + "'");
    }
  }
  return vocab;
}

TopKVocabulary build_vocab(const std::vector<std::string>& train_texts, VocabKind kind, int k) {
  if (k <= 0) throw ArgumentError("vocabulary size K must be positive");
  if (train_texts.empty()) throw InsufficientDataError("no training texts for vocabulary");
  std::vector<std::vector<std::string>> docs;
  docs.reserve(train_texts.size());
  for (const auto& t : train_texts) docs.push_back(extract_features(t, kind));
  auto items = ranked_features(docs);
  if (items.size() > static_cast<std::size_t>(k)) items.resize(static_cast<std::size_t>(k));
  return vocab_from_items(kind, std::move(items));
}

SparseVector<> featurize(std::string_view text, const TopKVocabulary& vocab) {
  return count_into(extract_features(text, vocab.kind), vocab);
}

MethodModel train_method(const corpus::Dataset& train, MethodId method, MethodParams params,
                         const linear::Hyperparams& hp) {
  auto vocab = build_vocab(train.texts(), vocab_kind(method, params.n), params.features);
  std::vector<SparseVector<>> rows;
  rows.reserve(train.size());
  for (const auto& s : train.samples) rows.push_back(featurize(s.text, vocab));
  auto model = linear::train(linear::stack_rows(rows, vocab.size()), train.labels(), hp);
  return {method, std::move(vocab), std::move(model)};
}

MethodModel train_method(const corpus::Dataset& train, MethodId method,
                         const linear::Hyperparams& hp) {
  return train_method(train, method, default_params(method), hp);
}

linear::Prediction predict(const MethodModel& model, std::string_view text) {
  return linear::predict(model.model, featurize(text, model.vocab));
}

std::vector<SweepCell> sweep(const corpus::Dataset& train, const corpus::Dataset& test,
                             MethodId method, const std::vector<int>& n_range,
                             const std::vector<int>& k_range, const linear::Hyperparams& hp) {
  if (n_range.empty() || k_range.empty()) throw ArgumentError("sweep ranges must be non-empty");
  for (int k : k_range) {
    if (k <= 0) throw ArgumentError("sweep feature sizes must be positive");
  }
  const auto train_labels = train.labels();
  const auto test_labels = test.labels();

  std::vector<SweepCell> cells;
  for (int n : n_range) {
    const auto kind = vocab_kind(method, n);
    std::vector<std::vector<std::string>> train_docs;
    std::vector<std::vector<std::string>> test_docs;
    for (const auto& s : train.samples) train_docs.push_back(extract_features(s.text, kind));
    for (const auto& s : test.samples) test_docs.push_back(extract_features(s.text, kind));
    const auto ranking = ranked_features(train_docs);

    // The top-K list is a prefix of the full ranking, so every K reuses it.
    std::vector<std::future<SweepCell>> jobs;
    for (int k : k_range) {
      jobs.push_back(std::async(std::launch::async, [&, k] {
        const auto take = std::min(ranking.size(), static_cast<std::size_t>(k));
        auto vocab = vocab_from_items(
            kind, std::vector<std::string>(ranking.begin(),
                                           ranking.begin() + static_cast<std::ptrdiff_t>(take)));
        std::vector<SparseVector<>> train_rows;
        std::vector<SparseVector<>> test_rows;
        for (const auto& d : train_docs) train_rows.push_back(count_into(d, vocab));
        for (const auto& d : test_docs) test_rows.push_back(count_into(d, vocab));
        MethodModel m{method, vocab,
                      linear::train(linear::stack_rows(train_rows, vocab.size()), train_labels,
                                    hp)};
        return SweepCell{n, k, accuracy_of(m, test_rows, test_labels)};
      }));
    }
    for (auto& j : jobs) cells.push_back(j.get());
  }
  return cells;
}

std::string sweep_csv(const std::vector<SweepCell>& cells) {
  std::string out = "n,K,accuracy\n";
  char line[64];
  for (const auto& c : cells) {
    std::snprintf(line, sizeof line, "%d,%d,%.3f\n", c.n, c.features, c.accuracy);
    out += line;
  }
  return out;
}

}  // namespace stylo::ngram
