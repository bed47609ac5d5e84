#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stylo::text {

// UTF-8 <-> Unicode scalar values. Invalid sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);
std::size_t scalar_count(std::string_view s);

// Casual social-media tokenizer: whitespace split, punctuation peeled off word
// edges, URLs, @mentions, #hashtags, emoticons and contractions kept whole.
std::vector<std::string> word_tokens(std::string_view text);

bool is_emoticon(std::string_view token);
bool is_url(std::string_view token);
// True when the token contains at least one letter or digit (or any non-ASCII
// scalar, which is treated as a letter).
bool is_word(std::string_view token);

// Splits after runs of '.', '!' or '?' that are followed by whitespace or the
// end of text. Segments are trimmed; empty segments are never returned.
std::vector<std::string> sentences(std::string_view text);

// Contiguous length-n substrings over Unicode scalar values, spaces included.
std::vector<std::string> char_ngrams(std::string_view text, int n);

enum class PosTag {
  NN, NNS, NNP, IN, DT, PRP, PRPS, VB, VBP, VBZ, VBD, VBG, VBN,
  JJ, RB, CC, UH, CD, MD, TO, WP, WRB, PUNCT, OTHER,
};

std::string_view to_string(PosTag tag);

// Lexicon plus suffix/shape rules, with a one-token look-behind for verb
// agreement. Output length always equals input length.
std::vector<PosTag> pos_tag(const std::vector<std::string>& tokens);

}  // namespace stylo::text
