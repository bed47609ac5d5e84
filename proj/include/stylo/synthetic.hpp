#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stylo/corpus.hpp"

namespace stylo::synthetic {

inline constexpr const char* kTargetAuthor = "quickscope_kid";
inline constexpr const char* kOtherAuthor = "policy_wonk";

// Two generated authors with distinct vocabularies, phrase structures,
// sentence lengths (mean 8 vs 16 words) and punctuation habits. A share of
// each author's phrases is borrowed from the other so the classes overlap.
std::vector<corpus::UserComments> generate_corpus(std::size_t comments_per_author = 600,
                                                  std::uint64_t seed = 7);

}  // namespace stylo::synthetic
