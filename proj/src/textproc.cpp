#include "stylo/textproc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>

#include "stylo/error.hpp"

namespace stylo::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

bool is_ascii_alnum(unsigned char c) { return c < 0x80 && std::isalnum(c) != 0; }

// Characters peeled off word edges. Non-ASCII bytes count as word material.
bool is_edge_punct(unsigned char c) {
  return c < 0x80 && std::isalnum(c) == 0 && !is_space(c);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

void push_chunk(std::string_view chunk, std::vector<std::string>& out) {
  if (is_emoticon(chunk)) {
    out.emplace_back(chunk);
    return;
  }

  std::size_t begin = 0;
  std::size_t end = chunk.size();
  const bool url = is_url(chunk);

  std::vector<std::string> tail;
  // Trailing punctuation, collected right to left.
  while (end > begin && is_edge_punct(static_cast<unsigned char>(chunk[end - 1]))) {
    if (url && chunk[end - 1] == '/') break;
    if (chunk[end - 1] == '.') {
      std::size_t run = end;
      while (run > begin && chunk[run - 1] == '.') --run;
      tail.emplace_back(chunk.substr(run, end - run));
      end = run;
    } else {
      tail.emplace_back(1, chunk[end - 1]);
      --end;
    }
  }

  if (!url) {
    while (begin < end && is_edge_punct(static_cast<unsigned char>(chunk[begin])) &&
           chunk[begin] != '@' && chunk[begin] != '#') {
      if (chunk[begin] == '.') {
        std::size_t run = begin;
        while (run < end && chunk[run] == '.') ++run;
        out.emplace_back(chunk.substr(begin, run - begin));
        begin = run;
      } else {
        out.emplace_back(1, chunk[begin]);
        ++begin;
      }
    }
  }

  if (end > begin) out.emplace_back(chunk.substr(begin, end - begin));
  out.insert(out.end(), tail.rbegin(), tail.rend());
}

}  // namespace

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto lead = static_cast<unsigned char>(s[i]);
    int extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(extra) >= s.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      const auto c = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
      if ((c & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (c & 0x3F);
    }
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::size_t scalar_count(std::string_view s) { return decode_utf8(s).size(); }

bool is_emoticon(std::string_view token) {
  static const std::regex western(R"(^[<>]?[:;=8][\-o\*']?[\)\]\(\[dDpP/\\:\}\{@\|]+$)");
  static const std::regex reversed(R"(^[\)\]\(\[dDpP/\\:\}\{@\|]+[\-o\*']?[:;=8][<>]?$)");
  static const std::regex misc(R"(^(<3+|</3|[xX][dD]+|\^_*\^|-_+-|o_O|O_o|T_T|:'\()$)");
  if (token.empty() || token.size() > 8) return false;
  const std::string s(token);
  return std::regex_match(s, western) || std::regex_match(s, reversed) ||
         std::regex_match(s, misc);
}

bool is_url(std::string_view token) {
  return starts_with(token, "http://") || starts_with(token, "https://") ||
         starts_with(token, "www.");
}

bool is_word(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || is_ascii_alnum(u);
  });
}

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) push_chunk(text.substr(i, j - i), out);
    i = j;
  }
  return out;
}

std::vector<std::string> sentences(std::string_view text) {
  std::vector<std::string> out;
  auto emit = [&](std::size_t from, std::size_t to) {
    while (from < to && is_space(static_cast<unsigned char>(text[from]))) ++from;
    while (to > from && is_space(static_cast<unsigned char>(text[to - 1]))) --to;
    if (to > from) out.emplace_back(text.substr(from, to - from));
  };
  auto is_terminal = [](char c) { return c == '.' || c == '!' || c == '?'; };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < text.size() && is_terminal(text[run_end])) ++run_end;
    if (run_end == text.size() || is_space(static_cast<unsigned char>(text[run_end]))) {
      emit(start, run_end);
      start = run_end;
    }
    i = run_end;
  }
  emit(start, text.size());
  return out;
}

std::vector<std::string> char_ngrams(std::string_view text, int n) {
  if (n <= 0) throw ArgumentError("n-gram size must be positive");
  const auto scalars = decode_utf8(text);
  const auto width = static_cast<std::size_t>(n);
  std::vector<std::string> out;
  if (scalars.size() < width) return out;
  out.reserve(scalars.size() - width + 1);
  const std::u32string_view view(scalars);
  for (std::size_t i = 0; i + width <= scalars.size(); ++i) {
    out.push_back(encode_utf8(view.substr(i, width)));
  }
  return out;
}

}  // namespace stylo::text
