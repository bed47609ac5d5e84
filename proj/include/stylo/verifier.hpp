#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/error.hpp"
#include "stylo/types.hpp"

namespace stylo::verifier {

struct VerifierParams {
  int n = 3;
  Scalar gamma = 3;  // percentage points added to epsilon at verification time
  int block_size = 500;
  // Margin used while calibrating; the threshold search runs with zero margin
  // and gamma is only applied by verify().
  Scalar calibration_gamma = 0;
  int max_iterations = 10000;
};

struct VerifierProfile {
  std::unordered_set<std::string> profile_ngrams;
  int n = 3;
  Scalar epsilon = 0;
  Scalar gamma = 3;
  int block_size = 500;
};

struct CalibrationStats {
  Scalar mu = 0;
  Scalar sigma = 0;
  Scalar initial_epsilon = 0;
  Scalar final_frr = 0;
  Scalar final_far = 0;
  int iterations = 0;
  std::vector<Scalar> delta_history;  // every step size used, in order
};

class CalibrationFailed : public Error {
 public:
  CalibrationFailed(const std::string& what, CalibrationStats stats)
      : Error(what), stats_(std::move(stats)) {}
  const CalibrationStats& stats() const noexcept { return stats_; }

 private:
  CalibrationStats stats_;
};

struct Calibration {
  Scalar epsilon = 0;
  CalibrationStats stats;
};

// Joins the pool with single spaces and cuts it into equal blocks of
// `block_size` Unicode scalars; the short remainder is dropped.
std::vector<std::string> make_blocks(const std::vector<std::string>& text_pool, int block_size);

std::unordered_set<std::string> unique_ngrams(std::string_view text, int n);

// Percentage (0-100) of the block's distinct n-grams found in the profile.
Scalar shared_pct(std::string_view block, const VerifierProfile& profile);

Scalar frr_from_scores(std::span<const Scalar> user_scores, Scalar epsilon, Scalar gamma);
Scalar far_from_scores(const std::vector<std::vector<Scalar>>& impostor_scores, Scalar epsilon,
                       Scalar gamma);

Scalar frr(const VerifierProfile& profile, const std::vector<std::string>& user_blocks,
           Scalar epsilon, Scalar gamma);
Scalar far(const VerifierProfile& profile,
           const std::vector<std::vector<std::string>>& impostor_blocks_by_user,
           Scalar epsilon, Scalar gamma);

// Iterative threshold search balancing FRR against FAR. Starts at
// mu - sigma/2 of the user's scores with unit step, reversing direction and
// dividing the step by ten after each up/down pair, until the step reaches
// 1e-4 or FRR equals FAR.
Calibration calibrate_scores(std::span<const Scalar> user_scores,
                             const std::vector<std::vector<Scalar>>& impostor_scores,
                             Scalar gamma, int max_iterations = 10000);

Calibration calibrate_threshold(const std::vector<std::string>& user_blocks,
                                const std::vector<std::vector<std::string>>& impostor_blocks,
                                const VerifierProfile& profile, Scalar gamma,
                                int max_iterations = 10000);

struct TrainedVerifier {
  VerifierProfile profile;
  CalibrationStats stats;
};

TrainedVerifier train_verifier(const corpus::Dataset& train, const VerifierParams& params = {});

bool verify(const VerifierProfile& profile, std::string_view text);

}  // namespace stylo::verifier
