#include "stylo/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "stylo/textproc.hpp"

namespace stylo::verifier {

std::vector<std::string> make_blocks(const std::vector<std::string>& text_pool, int block_size) {
  if (block_size <= 0) throw ArgumentError("block size must be positive");
  std::u32string joined;
  for (std::size_t i = 0; i < text_pool.size(); ++i) {
    if (i > 0) joined.push_back(U' ');
    joined += text::decode_utf8(text_pool[i]);
  }
  const auto width = static_cast<std::size_t>(block_size);
  if (joined.size() < width) {
    throw InsufficientDataError("text pool has " + std::to_string(joined.size()) +
                                " characters, fewer than one block of " +
                                std::to_string(block_size));
  }
  std::vector<std::string> blocks;
  const std::u32string_view view(joined);
  for (std::size_t at = 0; at + width <= joined.size(); at += width) {
    blocks.push_back(text::encode_utf8(view.substr(at, width)));
  }
  return blocks;
}

std::unordered_set<std::string> unique_ngrams(std::string_view text, int n) {
  auto grams = text::char_ngrams(text, n);
  return {std::make_move_iterator(grams.begin()), std::make_move_iterator(grams.end())};
}

Scalar shared_pct(std::string_view block, const VerifierProfile& profile) {
  const auto grams = unique_ngrams(block, profile.n);
  if (grams.empty()) {
    throw ArgumentError("text is shorter than the n-gram size " + std::to_string(profile.n));
  }
  const auto shared = std::count_if(grams.begin(), grams.end(), [&](const std::string& g) {
    return profile.profile_ngrams.count(g) > 0;
  });
  return 100.0 * static_cast<Scalar>(shared) / static_cast<Scalar>(grams.size());
}

Scalar frr_from_scores(std::span<const Scalar> user_scores, Scalar epsilon, Scalar gamma) {
  if (user_scores.empty()) throw ArgumentError("FRR needs at least one user block");
  std::size_t rejected = 0;
  for (Scalar p : user_scores) {
    if (p < epsilon + gamma) ++rejected;
  }
  return static_cast<Scalar>(rejected) / static_cast<Scalar>(user_scores.size());
}

Scalar far_from_scores(const std::vector<std::vector<Scalar>>& impostor_scores, Scalar epsilon,
                       Scalar gamma) {
  if (impostor_scores.empty()) throw ArgumentError("FAR needs at least one impostor");
  const auto blocks = impostor_scores.front().size();
  if (blocks == 0) throw ArgumentError("FAR needs at least one block per impostor");
  std::size_t accepted = 0;
  for (const auto& user : impostor_scores) {
    if (user.size() != blocks) {
      throw ArgumentError("every impostor must contribute the same number of blocks");
    }
    for (Scalar p : user) {
      if (p >= epsilon + gamma) ++accepted;
    }
  }
  return static_cast<Scalar>(accepted) /
         (static_cast<Scalar>(blocks) * static_cast<Scalar>(impostor_scores.size()));
}

namespace {

std::vector<Scalar> scores(const VerifierProfile& profile,
                           const std::vector<std::string>& blocks) {
  std::vector<Scalar> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(shared_pct(b, profile));
  return out;
}

std::vector<std::vector<Scalar>> scores(const VerifierProfile& profile,
                                        const std::vector<std::vector<std::string>>& users) {
  std::vector<std::vector<Scalar>> out;
  out.reserve(users.size());
  for (const auto& u : users) out.push_back(scores(profile, u));
  return out;
}

}  // namespace

Scalar frr(const VerifierProfile& profile, const std::vector<std::string>& user_blocks,
           Scalar epsilon, Scalar gamma) {
  const auto s = scores(profile, user_blocks);
  return frr_from_scores(s, epsilon, gamma);
}

Scalar far(const VerifierProfile& profile,
           const std::vector<std::vector<std::string>>& impostor_blocks_by_user, Scalar epsilon,
           Scalar gamma) {
  return far_from_scores(scores(profile, impostor_blocks_by_user), epsilon, gamma);
}

Calibration calibrate_scores(std::span<const Scalar> user_scores,
                             const std::vector<std::vector<Scalar>>& impostor_scores,
                             Scalar gamma, int max_iterations) {
  if (user_scores.empty()) throw ArgumentError("calibration needs user blocks");
  const Eigen::Map<const DenseVector<>> user(user_scores.data(),
                                             static_cast<Eigen::Index>(user_scores.size()));

  CalibrationStats stats;
  stats.mu = user.mean();
  stats.sigma = std::sqrt((user.array() - stats.mu).square().mean());

  bool up = false;
  bool down = false;
  Scalar delta = 1;
  Scalar epsilon = stats.mu - stats.sigma / 2;
  stats.initial_epsilon = epsilon;
  stats.delta_history.push_back(delta);

  while (delta > 0.0001) {
    if (stats.iterations >= max_iterations) {
      stats.final_frr = frr_from_scores(user_scores, epsilon, gamma);
      stats.final_far = far_from_scores(impostor_scores, epsilon, gamma);
      throw CalibrationFailed("threshold calibration hit the iteration cap of " +
                                  std::to_string(max_iterations),
                              std::move(stats));
    }
    ++stats.iterations;
    const Scalar frr_u = frr_from_scores(user_scores, epsilon, gamma);
    const Scalar far_u = far_from_scores(impostor_scores, epsilon, gamma);
    if (frr_u == far_u) break;
    if (frr_u - far_u > 0) {
      down = true;
      epsilon -= delta;
    }
    if (far_u - frr_u > 0) {
      up = true;
      epsilon += delta;
    }
    if (up && down) {
      up = false;
      down = false;
      delta /= 10;
      stats.delta_history.push_back(delta);
    }
  }
  stats.final_frr = frr_from_scores(user_scores, epsilon, gamma);
  stats.final_far = far_from_scores(impostor_scores, epsilon, gamma);
  return {epsilon, std::move(stats)};
}

Calibration calibrate_threshold(const std::vector<std::string>& user_blocks,
                                const std::vector<std::vector<std::string>>& impostor_blocks,
                                const VerifierProfile& profile, Scalar gamma,
                                int max_iterations) {
  const auto user = scores(profile, user_blocks);
  return calibrate_scores(user, scores(profile, impostor_blocks), gamma, max_iterations);
}

TrainedVerifier train_verifier(const corpus::Dataset& train, const VerifierParams& params) {
  if (params.n <= 0) throw ArgumentError("verifier n-gram size must be positive");
  if (params.block_size < params.n) {
    throw ArgumentError("block size must be at least the n-gram size");
  }

  std::vector<std::string> target;
  std::map<std::string, std::vector<std::string>> impostors;
  for (const auto& s : train.samples) {
    if (s.label) {
      target.push_back(s.text);
    } else {
      impostors[s.source].push_back(s.text);
    }
  }
  std::size_t target_chars = 0;
  for (const auto& t : target) target_chars += text::scalar_count(t);
  if (target_chars < 2 * static_cast<std::size_t>(params.block_size) || target.size() < 2) {
    throw InsufficientDataError("target text has " + std::to_string(target_chars) +
                                " characters; the verifier needs at least two blocks of " +
                                std::to_string(params.block_size));
  }

  const auto half = (target.size() + 1) / 2;
  VerifierProfile profile;
  profile.n = params.n;
  profile.gamma = params.gamma;
  profile.block_size = params.block_size;
  for (std::size_t i = 0; i < half; ++i) {
    for (auto& g : text::char_ngrams(target[i], params.n)) {
      profile.profile_ngrams.insert(std::move(g));
    }
  }
  if (profile.profile_ngrams.empty()) {
    throw InsufficientDataError("profile subset yields no n-grams");
  }
  const std::vector<std::string> second(target.begin() + static_cast<std::ptrdiff_t>(half),
                                        target.end());
  const auto user_blocks = make_blocks(second, params.block_size);

  std::vector<std::vector<std::string>> impostor_blocks;
  for (const auto& [author, texts] : impostors) {
    try {
      impostor_blocks.push_back(make_blocks(texts, params.block_size));
    } catch (const InsufficientDataError&) {
      // Authors with less than one block of text cannot contribute.
    }
  }
  if (impostor_blocks.empty()) {
    throw InsufficientDataError("no impostor author has a full block of text");
  }
  std::size_t common = impostor_blocks.front().size();
  for (const auto& b : impostor_blocks) common = std::min(common, b.size());
  for (auto& b : impostor_blocks) b.resize(common);

  auto calibration = calibrate_threshold(user_blocks, impostor_blocks, profile,
                                         params.calibration_gamma, params.max_iterations);
  profile.epsilon = calibration.epsilon;
  return {std::move(profile), std::move(calibration.stats)};
}

bool verify(const VerifierProfile& profile, std::string_view text) {
  return shared_pct(text, profile) >= profile.epsilon + profile.gamma;
}

}  // namespace stylo::verifier
