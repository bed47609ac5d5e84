#include "stylo/stylo_cluster.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <string>

#include "stylo/textproc.hpp"

namespace stylo::cluster {

StyloVector StyloFeatures::as_vector() const {
  StyloVector v;
  v << avg_words_per_sentence, sentence_len_stddev, vocab_diversity, semicolons_per_sentence,
      colons_per_sentence, commas_per_sentence;
  return v;
}

StyloFeatures StyloFeatures::from_vector(const StyloVector& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

const std::array<std::string_view, kStyloDims>& StyloFeatures::names() {
  static const std::array<std::string_view, kStyloDims> n = {
      "avg_words_per_sentence",  "sentence_len_stddev", "vocab_diversity",
      "semicolons_per_sentence", "colons_per_sentence", "commas_per_sentence"};
  return n;
}

StyloFeatures extract_stylo(std::string_view input) {
  const auto sents = text::sentences(input);
  if (sents.empty()) return {};

  std::vector<Scalar> lengths;
  std::set<std::string> distinct;
  std::size_t total_words = 0;
  for (const auto& s : sents) {
    std::size_t words = 0;
    for (auto& tok : text::word_tokens(s)) {
      if (!text::is_word(tok)) continue;
      ++words;
      for (auto& ch : tok) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      distinct.insert(std::move(tok));
    }
    total_words += words;
    lengths.push_back(static_cast<Scalar>(words));
  }

  const auto count = static_cast<Scalar>(sents.size());
  const Eigen::Map<const DenseVector<>> len(lengths.data(),
                                            static_cast<Eigen::Index>(lengths.size()));
  const Scalar mean = len.mean();
  const Scalar variance = (len.array() - mean).square().mean();

  auto rate = [&](char mark) {
    return static_cast<Scalar>(std::count(input.begin(), input.end(), mark)) / count;
  };

  StyloFeatures f;
  f.avg_words_per_sentence = static_cast<Scalar>(total_words) / count;
  f.sentence_len_stddev = std::sqrt(variance);
  f.vocab_diversity = total_words == 0 ? 0.0
                                       : static_cast<Scalar>(distinct.size()) /
                                             static_cast<Scalar>(total_words);
  f.semicolons_per_sentence = rate(';');
  f.colons_per_sentence = rate(':');
  f.commas_per_sentence = rate(',');
  return f;
}

StyloFeatures average_stylo(const std::vector<std::string>& texts) {
  if (texts.empty()) throw InsufficientDataError("no comments to average");
  StyloVector sum = StyloVector::Zero();
  for (const auto& t : texts) sum += extract_stylo(t).as_vector();
  return StyloFeatures::from_vector(sum / static_cast<Scalar>(texts.size()));
}

StyloVector normalize(const ClusterModel& model, const StyloVector& raw) {
  StyloVector z = StyloVector::Zero();
  for (int d = 0; d < kStyloDims; ++d) {
    if (model.stddev[d] > 0) z[d] = (raw[d] - model.mean[d]) / model.stddev[d];
  }
  return z;
}

ClusterModel train_cluster_features(const Eigen::Matrix<Scalar, Eigen::Dynamic, kStyloDims>& raw,
                                    const std::vector<bool>& labels, int max_iters) {
  const auto rows = raw.rows();
  if (static_cast<std::size_t>(rows) != labels.size()) {
    throw ArgumentError("feature rows and labels differ in length");
  }
  if (rows < 2) throw DegenerateInputError("clustering needs at least two samples");

  ClusterModel model;
  model.mean = raw.colwise().mean().transpose();
  model.stddev =
      ((raw.rowwise() - model.mean.transpose()).array().square().colwise().mean().sqrt())
          .transpose();

  Eigen::Matrix<Scalar, Eigen::Dynamic, kStyloDims> z(rows, kStyloDims);
  for (Eigen::Index i = 0; i < rows; ++i) {
    z.row(i) = normalize(model, raw.row(i).transpose()).transpose();
  }

  const auto result = kmeans2(z, max_iters);
  model.centroids = result.centroids;

  std::array<std::size_t, 2> pos{0, 0};
  std::array<std::size_t, 2> total{0, 0};
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto c = static_cast<std::size_t>(result.assignments[i]);
    ++total[c];
    if (labels[i]) ++pos[c];
  }
  for (std::size_t c = 0; c < 2; ++c) {
    // Strict majority; ties go to the negative label.
    model.labels[c] = 2 * pos[c] > total[c];
  }
  return model;
}

ClusterModel train_cluster(const corpus::Dataset& train, int max_iters) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, kStyloDims> raw(static_cast<Eigen::Index>(train.size()),
                                                        kStyloDims);
  for (Eigen::Index i = 0; i < raw.rows(); ++i) {
    raw.row(i) = extract_stylo(train.samples[static_cast<std::size_t>(i)].text).as_vector();
  }
  return train_cluster_features(raw, train.labels(), max_iters);
}

bool classify_features(const ClusterModel& model, const StyloVector& raw) {
  const StyloVector z = normalize(model, raw);
  const Scalar d0 = (z.transpose() - model.centroids.row(0)).squaredNorm();
  const Scalar d1 = (z.transpose() - model.centroids.row(1)).squaredNorm();
  if (d0 == d1) return false;
  return model.labels[d0 < d1 ? 0 : 1];
}

bool classify(const ClusterModel& model, std::string_view text) {
  return classify_features(model, extract_stylo(text).as_vector());
}

}  // namespace stylo::cluster
