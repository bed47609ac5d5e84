#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stylo::corpus {

struct UserComments {
  std::string author;
  std::vector<std::string> comments;
};

// `source` names the author the text came from; the verifier groups impostor
// text by it. Empty when unknown.
struct LabeledSample {
  std::string text;
  bool label = false;
  std::string source;
};

struct Dataset {
  std::string target_author;
  std::vector<LabeledSample> samples;

  std::size_t size() const { return samples.size(); }
  std::size_t positives() const;
  std::size_t negatives() const { return size() - positives(); }
  std::vector<std::string> texts() const;
  std::vector<bool> labels() const;
  Dataset subset(const std::vector<std::size_t>& indices) const;
};

struct FoldPlan {
  int k = 0;
  std::vector<int> assignments;  // sample index -> fold in [0, k)

  std::vector<std::size_t> held_out(int fold) const;
  std::vector<std::size_t> training(int fold) const;
};

// Caps are applied by seeded subsampling; unset means keep everything.
struct DatasetOptions {
  std::optional<std::size_t> max_positives;
  std::optional<std::size_t> max_negatives;
  std::uint64_t seed = 42;
};

UserComments load_user_file(std::string_view content, const std::string& author);
std::string to_json(const UserComments& user);

UserComments load_user_path(const std::filesystem::path& path);

// Every `<author>.json` under `dir`, sorted by author.
std::vector<UserComments> load_directory(const std::filesystem::path& dir);

Dataset build_dataset(const UserComments& target, const std::vector<UserComments>& others,
                      const DatasetOptions& options = {});

// Loads `<target>.json` plus every other user file from `dir` and builds the
// labeled dataset.
Dataset load_dataset(const std::filesystem::path& dir, const std::string& target,
                     const DatasetOptions& options = {});

// Stratified split; train_fraction is applied to each class separately.
std::pair<Dataset, Dataset> split(const Dataset& dataset, double train_fraction,
                                  std::uint64_t seed);

FoldPlan make_folds(const Dataset& dataset, int k, std::uint64_t seed);

// Per-class sample indices in a seeded order that depends only on the sample
// contents, not on their storage order.
std::vector<std::size_t> seeded_class_order(const Dataset& dataset, bool label,
                                            std::uint64_t seed);

}  // namespace stylo::corpus
