#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "stylo/textproc.hpp"

namespace stylo::text {

namespace {

using Lexicon = std::unordered_map<std::string, PosTag>;

const Lexicon& closed_class() {
  static const Lexicon lex = [] {
    Lexicon m;
    auto add = [&m](PosTag tag, std::initializer_list<const char*> words) {
      for (const char* w : words) m.emplace(w, tag);
    };
    add(PosTag::DT, {"the", "a", "an", "this", "that", "these", "those", "every", "each",
                     "some", "any", "no", "all", "both", "either", "neither", "another",
                     "such", "half"});
    add(PosTag::IN, {"of", "in", "on", "at", "for", "with", "by", "from", "about", "into",
                     "over", "under", "after", "before", "through", "between", "against",
                     "during", "without", "within", "among", "around", "than", "if",
                     "because", "while", "since", "until", "although", "though", "unless",
                     "whether", "upon", "across", "behind", "beyond", "towards", "toward",
                     "despite", "per", "via", "as", "like", "near", "off", "onto"});
    add(PosTag::PRP, {"i", "you", "he", "she", "it", "we", "they", "me", "him", "us", "them",
                      "myself", "yourself", "himself", "herself", "itself", "ourselves",
                      "themselves", "u", "ya", "y'all", "i'm", "i've", "i'll", "i'd",
                      "you're", "you've", "you'll", "you'd", "he's", "she's", "it's",
                      "we're", "we've", "we'll", "they're", "they've", "they'll", "im",
                      "ive"});
    add(PosTag::PRPS, {"my", "your", "his", "her", "its", "our", "their", "ur", "mine",
                       "yours", "ours", "theirs"});
    add(PosTag::CC, {"and", "or", "but", "nor", "yet", "plus"});
    add(PosTag::MD, {"can", "could", "will", "would", "shall", "should", "may", "might",
                     "must", "can't", "cannot", "won't", "wouldn't", "couldn't", "shouldn't",
                     "gonna", "wanna", "gotta", "cant", "wont"});
    add(PosTag::TO, {"to"});
    add(PosTag::WP, {"who", "whom", "what", "whoever", "whatever", "which"});
    add(PosTag::WRB, {"when", "where", "why", "how", "whenever", "wherever"});
    add(PosTag::UH, {"lol", "lmao", "haha", "hahaha", "oh", "wow", "hey", "yeah", "yes",
                     "yep", "nope", "ok", "okay", "hmm", "ugh", "omg", "please", "thanks",
                     "hi", "hello", "welp", "yay", "gg", "rofl", "meh", "nah", "ah", "oops",
                     "damn", "dang"});
    add(PosTag::RB, {"not", "very", "really", "just", "too", "also", "so", "never", "always",
                     "now", "then", "here", "there", "still", "even", "only", "already",
                     "again", "ever", "often", "sometimes", "maybe", "perhaps", "quite",
                     "almost", "soon", "later", "away", "back", "together", "rather",
                     "pretty", "much", "more", "most", "less", "least", "well", "far",
                     "else", "yet", "once", "anyway", "definitely", "probably", "n't",
                     "literally", "actually", "basically", "honestly", "totally"});
    add(PosTag::CD, {"one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
                     "ten", "eleven", "twelve", "twenty", "thirty", "hundred", "thousand",
                     "million", "zero"});
    add(PosTag::JJ, {"good", "bad", "great", "new", "old", "big", "small", "best", "better",
                     "worse", "worst", "nice", "cool", "real", "sure", "same", "other",
                     "last", "first", "little", "long", "high", "hard", "easy", "free",
                     "full", "right", "wrong", "true", "false", "late", "early", "whole",
                     "awesome", "fine", "happy", "sad", "funny", "weird", "strange",
                     "different", "important", "many", "few", "several", "own", "next",
                     "young", "huge", "tiny", "top", "low", "fast", "slow", "strong",
                     "weak", "main", "certain", "clear", "simple", "possible", "able",
                     "interesting", "amazing", "stupid", "smart", "crazy", "dead", "hot",
                     "cold", "short", "large", "entire", "epic", "favorite", "rare",
                     "insane", "broken", "whole", "overall", "recent", "general",
                     "specific", "similar", "common", "likely", "necessary", "significant",
                     "particular", "relevant"});
    // Irregular verb forms with fixed tags.
    add(PosTag::VBZ, {"is", "has", "does", "isn't", "hasn't", "doesn't", "'s", "that's",
                      "there's", "what's", "here's", "who's", "how's", "where's"});
    add(PosTag::VBP, {"are", "am", "do", "aren't", "don't", "dont", "'re", "'m", "'ve",
                      "ain't"});
    add(PosTag::VBD, {"was", "were", "did", "had", "wasn't", "weren't", "didn't", "hadn't",
                      "said", "went", "got", "made", "knew", "thought", "took", "came",
                      "saw", "found", "gave", "told", "felt", "left", "kept", "ran", "began",
                      "brought", "bought", "wrote", "sat", "stood", "heard", "meant", "lost",
                      "won", "paid", "met", "sent", "built", "spent", "fell", "held",
                      "taught", "caught", "fought", "ate", "drove", "rode", "spoke", "broke",
                      "chose", "became", "forgot", "understood", "tried", "played", "used",
                      "liked", "loved", "wanted", "needed", "looked", "seemed", "started"});
    add(PosTag::VBN, {"been", "done", "gone", "seen", "taken", "given", "known", "written",
                      "eaten", "driven", "spoken", "chosen", "forgotten", "gotten", "shown",
                      "grown", "thrown", "flown", "drawn", "fallen", "beaten"});
    add(PosTag::VB, {"be"});
    add(PosTag::OTHER, {"&", "&amp;"});
    return m;
  }();
  return lex;
}

const std::unordered_set<std::string>& base_verbs() {
  static const std::unordered_set<std::string> verbs = {
      "see", "go", "get", "make", "know", "think", "take", "come", "want", "like", "love",
      "play", "say", "use", "find", "give", "tell", "work", "feel", "try", "need", "look",
      "seem", "leave", "call", "keep", "let", "begin", "help", "talk", "turn", "start",
      "show", "hear", "run", "move", "live", "believe", "bring", "happen", "write", "sit",
      "stand", "lose", "pay", "meet", "include", "continue", "set", "learn", "change",
      "lead", "understand", "watch", "follow", "stop", "create", "speak", "read", "spend",
      "grow", "open", "walk", "win", "offer", "remember", "consider", "appear", "buy",
      "wait", "serve", "die", "send", "expect", "build", "stay", "fall", "cut", "reach",
      "kill", "remain", "suggest", "raise", "pass", "sell", "require", "report", "decide",
      "pull", "hate", "hope", "mean", "agree", "eat", "drink", "sleep", "miss", "enjoy",
      "guess", "wish", "care", "mind", "matter", "bet", "check", "post", "read", "laugh",
      "cry", "fix", "ask", "answer", "beat", "break", "choose", "drive", "fight", "forget",
      "hold", "join", "jump", "notice", "prefer", "prove", "quit", "realize", "shoot",
      "stream", "trade", "upvote", "downvote", "argue", "depend", "exist", "imply",
      "indicate", "support", "explain", "improve", "reduce", "provide", "describe",
      "argue", "claim", "assume", "note", "observe", "demonstrate", "determine"};
  return verbs;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_number(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != ',' && c != '.' && c != '%' && c != '$' && c != '-') {
      return false;
    }
  }
  return digit;
}

// Base form for a third-person singular verb candidate ("runs" -> "run").
std::optional<std::string> verb_stem_s(const std::string& w) {
  const auto& verbs = base_verbs();
  if (ends_with(w, "ies")) {
    auto stem = w.substr(0, w.size() - 3) + "y";
    if (verbs.count(stem)) return stem;
  }
  if (ends_with(w, "es")) {
    auto stem = w.substr(0, w.size() - 2);
    if (verbs.count(stem)) return stem;
  }
  if (ends_with(w, "s") && !ends_with(w, "ss")) {
    auto stem = w.substr(0, w.size() - 1);
    if (verbs.count(stem)) return stem;
  }
  return std::nullopt;
}

bool is_third_singular_pronoun(const std::string& w) {
  return w == "he" || w == "she" || w == "it" || w == "this" || w == "that";
}

bool is_nominal(PosTag t) {
  return t == PosTag::NN || t == PosTag::NNP || t == PosTag::NNS || t == PosTag::CD;
}

bool blocks_verb(PosTag t) {
  return t == PosTag::DT || t == PosTag::JJ || t == PosTag::PRPS || t == PosTag::IN ||
         t == PosTag::CD;
}

bool is_have_or_be(const std::string& w) {
  static const std::unordered_set<std::string> aux = {
      "has", "have", "had", "is", "are", "was", "were", "be", "been", "am", "being",
      "i've", "you've", "we've", "they've", "hasn't", "haven't", "hadn't", "isn't",
      "aren't", "wasn't", "weren't", "get", "got"};
  return aux.count(w) > 0;
}

struct Context {
  std::optional<PosTag> prev;       // previous tag, skipping adverbs
  std::string prev_word;            // lowercase word carrying `prev`
  bool sentence_start = true;
};

PosTag tag_base_verb(const Context& ctx) {
  if (!ctx.prev || ctx.sentence_start) return PosTag::VB;
  switch (*ctx.prev) {
    case PosTag::MD:
    case PosTag::TO:
      return PosTag::VB;
    case PosTag::PRP:
    case PosTag::NNS:
    case PosTag::WP:
    case PosTag::CC:
      return PosTag::VBP;
    default:
      break;
  }
  if (blocks_verb(*ctx.prev)) return PosTag::NN;
  if (*ctx.prev == PosTag::VBP && (ctx.prev_word == "do" || ctx.prev_word == "don't" ||
                                   ctx.prev_word == "dont")) {
    return PosTag::VB;
  }
  return PosTag::VBP;
}

PosTag tag_word(const std::string& surface, const Context& ctx) {
  if (is_emoticon(surface)) return PosTag::UH;
  if (!is_word(surface)) return PosTag::PUNCT;
  if (is_url(surface)) return PosTag::OTHER;
  if (surface.front() == '@' || surface.front() == '#') return PosTag::NNP;
  if (is_number(surface)) return PosTag::CD;

  const auto w = lower(surface);
  const auto& lex = closed_class();
  if (auto it = lex.find(w); it != lex.end()) {
    if (w == "like" || w == "that") {
      // "I like it" / "they said that": pick the verb or complementizer reading
      // when the left context is a subject.
      if (w == "like" && ctx.prev &&
          (*ctx.prev == PosTag::PRP || *ctx.prev == PosTag::NNS || *ctx.prev == PosTag::MD ||
           *ctx.prev == PosTag::TO)) {
        return tag_base_verb(ctx);
      }
    }
    if (it->second == PosTag::VBD && is_have_or_be(ctx.prev_word)) return PosTag::VBN;
    return it->second;
  }

  const bool capitalized = std::isupper(static_cast<unsigned char>(surface.front())) != 0;
  if (capitalized && !ctx.sentence_start) return PosTag::NNP;

  if (base_verbs().count(w)) return tag_base_verb(ctx);

  if (auto stem = verb_stem_s(w)) {
    if (ctx.prev && (is_nominal(*ctx.prev) || *ctx.prev == PosTag::WP ||
                     (*ctx.prev == PosTag::PRP && is_third_singular_pronoun(ctx.prev_word)))) {
      return PosTag::VBZ;
    }
    return PosTag::NNS;
  }

  if (ends_with(w, "ing") && w.size() > 4) return PosTag::VBG;
  if (ends_with(w, "ed") && w.size() > 3) {
    return is_have_or_be(ctx.prev_word) ? PosTag::VBN : PosTag::VBD;
  }
  if (ends_with(w, "ly") && w.size() > 3) return PosTag::RB;
  for (const char* suffix : {"ous", "ful", "able", "ible", "ive", "less", "ish", "ic", "al",
                             "est", "ary", "ant", "ent"}) {
    if (ends_with(w, suffix) && w.size() > 4) return PosTag::JJ;
  }
  for (const char* suffix : {"tion", "sion", "ment", "ness", "ity", "ism", "ship", "ance",
                             "ence", "er", "or", "ist"}) {
    if (ends_with(w, suffix) && w.size() > 3) return PosTag::NN;
  }

  if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is") && w.size() > 3) {
    if (ctx.prev && *ctx.prev == PosTag::PRP && is_third_singular_pronoun(ctx.prev_word)) {
      return PosTag::VBZ;
    }
    return PosTag::NNS;
  }
  return PosTag::NN;
}

}  // namespace

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::NN: return "NN";
    case PosTag::NNS: return "NNS";
    case PosTag::NNP: return "NNP";
    case PosTag::IN: return "IN";
    case PosTag::DT: return "DT";
    case PosTag::PRP: return "PRP";
    case PosTag::PRPS: return "PRP$";
    case PosTag::VB: return "VB";
    case PosTag::VBP: return "VBP";
    case PosTag::VBZ: return "VBZ";
    case PosTag::VBD: return "VBD";
    case PosTag::VBG: return "VBG";
    case PosTag::VBN: return "VBN";
    case PosTag::JJ: return "JJ";
    case PosTag::RB: return "RB";
    case PosTag::CC: return "CC";
    case PosTag::UH: return "UH";
    case PosTag::CD: return "CD";
    case PosTag::MD: return "MD";
    case PosTag::TO: return "TO";
    case PosTag::WP: return "WP";
    case PosTag::WRB: return "WRB";
    case PosTag::PUNCT: return "PUNCT";
    case PosTag::OTHER: return "OTHER";
  }
  return "OTHER";
}

std::vector<PosTag> pos_tag(const std::vector<std::string>& tokens) {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  Context ctx;
  for (const auto& token : tokens) {
    const PosTag tag = tag_word(token, ctx);
    tags.push_back(tag);
    if (tag == PosTag::PUNCT) {
      const bool terminal = token.find_first_of(".!?") != std::string::npos;
      if (terminal) {
        ctx = Context{};
      }
      continue;
    }
    ctx.sentence_start = false;
    if (tag == PosTag::RB) continue;
    ctx.prev = tag;
    ctx.prev_word = lower(token);
  }
  return tags;
}

}  // namespace stylo::text
