#include "stylo/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "stylo/error.hpp"
#include "stylo/rng.hpp"

namespace stylo::corpus {

namespace {

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

std::vector<std::size_t> indices_with_label(const Dataset& dataset, bool label) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
    if (dataset.samples[i].label == label) out.push_back(i);
  }
  return out;
}

std::vector<std::string> subsample(const std::vector<std::string>& items, std::size_t cap,
                                   Rng& rng) {
  if (items.size() <= cap) return items;
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span(order));
  order.resize(cap);
  std::sort(order.begin(), order.end());
  std::vector<std::string> out;
  out.reserve(cap);
  for (auto i : order) out.push_back(items[i]);
  return out;
}

}  // namespace

std::size_t Dataset::positives() const {
  return static_cast<std::size_t>(std::count_if(
      samples.begin(), samples.end(), [](const LabeledSample& s) { return s.label; }));
}

std::vector<std::string> Dataset::texts() const {
  std::vector<std::string> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.text);
  return out;
}

std::vector<bool> Dataset::labels() const {
  std::vector<bool> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.label);
  return out;
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
  Dataset out{target_author, {}};
  out.samples.reserve(indices.size());
  for (auto i : indices) out.samples.push_back(samples.at(i));
  return out;
}

std::vector<std::size_t> FoldPlan::held_out(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::training(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(i);
  }
  return out;
}

UserComments load_user_file(std::string_view content, const std::string& author) {
  if (author.empty()) throw ArgumentError("author name must be non-empty");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content.begin(), content.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON for author '" + author + "' at byte " +
                         std::to_string(e.byte) + ": " + e.what(),
                     e.byte);
  }
  if (!doc.is_array()) {
    throw SchemaError("corpus file for '" + author + "' must be a JSON array of strings");
  }
  UserComments user{author, {}};
  user.comments.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_string()) {
      throw SchemaError("corpus file for '" + author + "': element at index " +
                        std::to_string(i) + " is not a string");
    }
    auto text = doc[i].get<std::string>();
    if (!is_blank(text)) user.comments.push_back(std::move(text));
  }
  return user;
}

std::string to_json(const UserComments& user) {
  return nlohmann::json(user.comments).dump();
}

UserComments load_user_path(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InsufficientDataError("cannot open corpus file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_user_file(buf.str(), path.stem().string());
}

std::vector<UserComments> load_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw InsufficientDataError("corpus directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<UserComments> users;
  users.reserve(files.size());
  for (const auto& f : files) users.push_back(load_user_path(f));
  return users;
}

Dataset build_dataset(const UserComments& target, const std::vector<UserComments>& others,
                      const DatasetOptions& options) {
  if (target.comments.empty()) {
    throw InsufficientDataError("target author '" + target.author + "' has no comments");
  }
  Rng rng(options.seed);
  Dataset out{target.author, {}};
  auto positives = options.max_positives ? subsample(target.comments, *options.max_positives, rng)
                                         : target.comments;
  for (auto& text : positives) out.samples.push_back({std::move(text), true, target.author});

  std::vector<LabeledSample> pool;
  for (const auto& other : others) {
    for (const auto& text : other.comments) pool.push_back({text, false, other.author});
  }
  if (pool.empty()) throw InsufficientDataError("no negative comments from other authors");
  if (options.max_negatives && pool.size() > *options.max_negatives) {
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span(order));
    order.resize(*options.max_negatives);
    std::sort(order.begin(), order.end());
    std::vector<LabeledSample> capped;
    for (auto i : order) capped.push_back(std::move(pool[i]));
    pool = std::move(capped);
  }
  for (auto& s : pool) out.samples.push_back(std::move(s));
  return out;
}

Dataset load_dataset(const std::filesystem::path& dir, const std::string& target,
                     const DatasetOptions& options) {
  const auto target_path = dir / (target + ".json");
  if (!std::filesystem::exists(target_path)) {
    throw InsufficientDataError("target corpus file not found: expected " +
                                target_path.string());
  }
  auto users = load_directory(dir);
  std::optional<UserComments> target_user;
  std::vector<UserComments> others;
  for (auto& u : users) {
    if (u.author == target) {
      target_user = std::move(u);
    } else {
      others.push_back(std::move(u));
    }
  }
  if (others.empty()) {
    throw InsufficientDataError("corpus directory " + dir.string() +
                                " has no user files besides " + target + ".json");
  }
  return build_dataset(*target_user, others, options);
}

std::vector<std::size_t> seeded_class_order(const Dataset& dataset, bool label,
                                            std::uint64_t seed) {
  auto idx = indices_with_label(dataset, label);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& sa = dataset.samples[a];
    const auto& sb = dataset.samples[b];
    return std::tie(sa.text, sa.source) < std::tie(sb.text, sb.source);
  });
  // Distinct streams per class so the two shuffles are independent.
  Rng rng(seed * 2 + (label ? 1 : 0));
  rng.shuffle(std::span(idx));
  return idx;
}

std::pair<Dataset, Dataset> split(const Dataset& dataset, double train_fraction,
                                  std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ArgumentError("train fraction must lie in (0, 1)");
  }
  std::vector<std::size_t> train_idx;
  std::vector<std::size_t> test_idx;
  for (bool label : {true, false}) {
    const auto order = seeded_class_order(dataset, label, seed);
    const auto n_train =
        static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(order.size())));
    if (n_train == 0 || n_train >= order.size()) {
      throw InsufficientDataError(std::string("split leaves the ") +
                                  (label ? "positive" : "negative") + " class empty (" +
                                  std::to_string(order.size()) + " samples)");
    }
    train_idx.insert(train_idx.end(), order.begin(), order.begin() + n_train);
    test_idx.insert(test_idx.end(), order.begin() + n_train, order.end());
  }
  return {dataset.subset(train_idx), dataset.subset(test_idx)};
}

FoldPlan make_folds(const Dataset& dataset, int k, std::uint64_t seed) {
  if (k <= 0) throw ArgumentError("fold count must be positive");
  FoldPlan plan{k, std::vector<int>(dataset.samples.size(), -1)};
  for (bool label : {true, false}) {
    const auto order = seeded_class_order(dataset, label, seed);
    if (order.size() < static_cast<std::size_t>(k)) {
      throw InsufficientDataError(std::string("cannot make ") + std::to_string(k) +
                                  " folds: the " + (label ? "positive" : "negative") +
                                  " class has only " + std::to_string(order.size()) +
                                  " samples");
    }
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      plan.assignments[order[pos]] = static_cast<int>(pos % static_cast<std::size_t>(k));
    }
  }
  return plan;
}

}  // namespace stylo::corpus
