#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "stylo/ensemble.hpp"

namespace stylo::bundle {

inline constexpr int kFormatVersion = 1;

struct ModelBundle {
  int format_version = kFormatVersion;
  std::string target_author;
  ensemble::EnsembleModel model;
};

nlohmann::json to_json(const linear::LinearModel& model);
linear::LinearModel linear_model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const verifier::VerifierProfile& profile);
verifier::VerifierProfile verifier_profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ensemble::EnsembleConfig& config);
ensemble::EnsembleConfig config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ModelBundle& bundle);
ModelBundle bundle_from_json(const nlohmann::json& j);

// Serialized text is fully determined by the bundle contents.
std::string dump(const ModelBundle& bundle);
ModelBundle parse(const std::string& text);

void save(const ModelBundle& bundle, const std::filesystem::path& path);
ModelBundle load(const std::filesystem::path& path);

}  // namespace stylo::bundle
