#include "stylo/synthetic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "stylo/rng.hpp"

namespace stylo::synthetic {

namespace {

using Pool = std::vector<std::string>;
using Phrase = std::vector<std::string>;  // slot names

// Share of phrases taken from the other author's grammar and vocabulary.
constexpr double kBorrowRate = 0.18;

struct Style {
  std::string name;
  double mean_words;
  double sd_words;
  int min_words;
  int max_words;
  double comma_rate;
  double semicolon_rate;
  double colon_rate;
  double lowercase_start;
  double emoticon_rate;
  std::vector<std::pair<std::string, double>> terminators;
  std::vector<std::pair<Phrase, double>> phrases;
  std::map<std::string, Pool> pools;
};

const Pool kSharedNouns = {"time",  "people", "thing",  "way",    "point",   "year",
                           "day",   "work",   "part",   "place",  "idea",    "world",
                           "life",  "friend", "money",  "week",   "problem", "reason",
                           "story", "post",   "thread", "answer", "comment", "question",
                           "home",  "city",   "car",    "phone",  "video",   "music",
                           "movie", "book",   "job",    "night",  "school",  "country"};

Style target_style() {
  Style s;
  s.name = kTargetAuthor;
  s.mean_words = 8;
  s.sd_words = 2.5;
  s.min_words = 3;
  s.max_words = 16;
  s.comma_rate = 0.15;
  s.semicolon_rate = 0.0;
  s.colon_rate = 0.05;
  s.lowercase_start = 0.5;
  s.emoticon_rate = 0.15;
  s.terminators = {{"!", 0.3}, {".", 0.3}, {"?", 0.1}, {"...", 0.15}, {"", 0.15}};
  s.phrases = {{{"PRP", "VBP"}, 3},        {{"PRP", "VBP", "DT", "NN"}, 3},
               {{"DT", "NN"}, 2},          {{"JJ", "NN"}, 2},
               {{"UH"}, 2},                {{"RB", "JJ"}, 1.5},
               {{"IN", "DT", "NN"}, 1.5},  {{"VBG"}, 1},
               {{"PRP", "RB", "VBP"}, 1.5}, {{"CC"}, 1},
               {{"DT", "NN", "VBZ", "JJ"}, 1}};
  s.pools = {
      {"PRP", {"I", "you", "we", "they"}},
      {"VBP", {"think", "love", "play", "know", "want", "need", "like", "hate", "guess",
               "mean", "feel", "see", "get", "miss"}},
      {"DT", {"the", "this", "that", "a", "every", "some"}},
      {"NN", {"game", "map", "team", "match", "build", "server", "stream", "clip", "boss",
              "level", "loot", "skin", "gun", "round", "rank", "squad", "lobby", "patch",
              "mod", "raid", "controller", "headset", "weekend", "noob", "shot", "spawn",
              "sniper", "camper", "quest", "dungeon", "console", "keyboard", "mouse",
              "streamer", "twitch", "meme", "dude", "bro", "kill", "frag", "ping", "lag",
              "glitch", "hitbox", "nerf", "buff", "tank", "healer", "combo", "jump",
              "crate", "drop", "zone", "vibe", "hype", "bot", "grind", "tryhard", "smurf",
              "pickup", "respawn", "scope", "shotgun", "rocket", "pizza", "snack", "couch"}},
      {"JJ", {"good", "nice", "cool", "great", "epic", "huge", "broken", "insane", "easy",
              "hard", "fast", "new", "best", "crazy", "funny", "sick", "dope", "lit", "toxic",
              "sweaty", "cheesy", "laggy", "goofy", "wild", "chill", "sketchy", "janky",
              "busted", "clutch", "solid", "trash"}},
      {"UH", {"lol", "haha", "yeah", "omg", "gg", "nah", "wow", "lmao", "yep", "bruh",
              "welp", "yay", "oops"}},
      {"RB", {"really", "just", "so", "pretty", "totally", "literally", "always", "never",
              "actually"}},
      {"IN", {"in", "on", "for", "with", "at"}},
      {"VBG", {"playing", "grinding", "streaming", "farming", "waiting", "trying",
               "looking", "camping", "sniping", "queueing", "looting", "rushing", "raging",
               "spamming", "chilling"}},
      {"VBZ", {"is", "looks", "feels", "gets"}},
      {"CC", {"and", "but", "or"}},
  };
  return s;
}

Style other_style() {
  Style s;
  s.name = kOtherAuthor;
  s.mean_words = 16;
  s.sd_words = 4;
  s.min_words = 8;
  s.max_words = 30;
  s.comma_rate = 0.9;
  s.semicolon_rate = 0.25;
  s.colon_rate = 0.1;
  s.lowercase_start = 0.0;
  s.emoticon_rate = 0.0;
  s.terminators = {{".", 0.9}, {"?", 0.1}};
  s.phrases = {{{"DT", "JJ", "NN"}, 3},   {{"IN", "DT", "NN"}, 3},
               {{"DT", "NN", "VBZ"}, 2},  {{"JJ", "NNS"}, 2},
               {{"PRPS", "NN"}, 1.5},     {{"MD", "VB"}, 1.5},
               {{"RB"}, 1},               {{"CC"}, 1},
               {{"DT", "NNS"}, 1.5},      {{"IN", "JJ", "NNS"}, 1.5},
               {{"NN", "IN", "NN"}, 1}};
  s.pools = {
      {"DT", {"the", "a", "this", "these", "each", "any"}},
      {"JJ", {"significant", "economic", "political", "historical", "broader", "relevant",
              "substantial", "considerable", "particular", "important", "general", "social",
              "complex", "modern", "regional", "fiscal", "legislative", "empirical",
              "structural", "institutional", "comparative", "sustainable", "statutory",
              "judicial", "municipal", "demographic", "theoretical", "systemic",
              "bureaucratic", "constitutional", "monetary"}},
      {"NN", {"policy", "evidence", "analysis", "government", "economy", "market",
              "research", "argument", "context", "framework", "perspective", "approach",
              "history", "society", "community", "system", "institution", "decade",
              "outcome", "development", "region", "industry", "population", "theory",
              "legislation", "taxation", "inflation", "regulation", "budget", "deficit",
              "parliament", "committee", "jurisdiction", "infrastructure", "governance",
              "accountability", "transparency", "bureaucracy", "constituency", "treaty",
              "amendment", "referendum", "subsidy", "tariff", "revenue", "expenditure",
              "welfare", "pension", "healthcare", "education", "housing", "employment",
              "productivity", "immigration", "sovereignty", "diplomacy", "mandate",
              "coalition", "electorate", "census", "methodology", "hypothesis"}},
      {"NNS", {"policies", "institutions", "outcomes", "researchers", "citizens", "measures",
               "factors", "studies", "markets", "governments", "sources", "reforms",
               "economists", "legislators", "taxpayers", "voters", "regulators", "statutes",
               "indicators", "incentives", "constraints", "stakeholders", "provisions",
               "municipalities", "agencies", "budgets", "tariffs", "subsidies"}},
      {"VBZ", {"suggests", "indicates", "remains", "requires", "provides", "supports",
               "describes", "explains"}},
      {"PRPS", {"their", "its", "our"}},
      {"MD", {"would", "could", "should", "might", "must"}},
      {"VB", {"argue", "suggest", "consider", "explain", "note", "observe", "support",
              "improve", "reduce", "determine", "demonstrate", "provide", "require",
              "describe", "indicate", "assume", "claim", "prove"}},
      {"RB", {"particularly", "largely", "generally", "clearly", "ultimately",
              "fundamentally", "notably", "arguably", "substantially", "considerably",
              "historically", "empirically", "theoretically", "consequently",
              "accordingly", "furthermore"}},
      {"IN", {"of", "in", "for", "within", "between", "through", "despite", "across",
              "among"}},
      {"CC", {"and", "but", "or"}},
  };
  return s;
}

template <typename T>
const T& weighted_pick(const std::vector<std::pair<T, double>>& items, Rng& rng) {
  double total = 0;
  for (const auto& [item, w] : items) total += w;
  double r = rng.uniform() * total;
  for (const auto& [item, w] : items) {
    if (r < w) return item;
    r -= w;
  }
  return items.back().first;
}

// Zipf-like choice: the word at rank r is drawn with weight 1 / (r + 1).
const std::string& pick(const Pool& pool, Rng& rng) {
  double total = 0;
  for (std::size_t r = 0; r < pool.size(); ++r) total += 1.0 / static_cast<double>(r + 1);
  double u = rng.uniform() * total;
  for (std::size_t r = 0; r < pool.size(); ++r) {
    u -= 1.0 / static_cast<double>(r + 1);
    if (u < 0) return pool[r];
  }
  return pool.back();
}

double normal(Rng& rng) {
  // Box-Muller; platform-independent given Rng::uniform.
  const double u1 = 1.0 - rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::string sentence(const Style& own, const Style& borrowed, double borrow_rate, Rng& rng) {
  const int target_len = std::clamp(
      static_cast<int>(std::lround(own.mean_words + own.sd_words * normal(rng))),
      own.min_words, own.max_words);

  std::vector<std::string> words;
  while (static_cast<int>(words.size()) < target_len) {
    const Style& src = rng.uniform() < borrow_rate ? borrowed : own;
    for (const auto& slot : weighted_pick(src.phrases, rng)) {
      if ((slot == "NN") && rng.uniform() < 0.3) {
        words.push_back(pick(kSharedNouns, rng));
      } else {
        words.push_back(pick(src.pools.at(slot), rng));
      }
    }
  }
  words.resize(static_cast<std::size_t>(target_len));

  auto punctuate = [&](double rate, char mark) {
    // Poisson-ish: one mark with probability min(rate, 1), a second with the excess.
    for (double r = rate; r > 0 && words.size() > 2; r -= 1.0) {
      if (rng.uniform() < std::min(r, 1.0)) {
        const auto at = 1 + rng.below(words.size() - 2);
        if (std::isalpha(static_cast<unsigned char>(words[at].back()))) words[at] += mark;
      }
    }
  };
  punctuate(own.comma_rate, ',');
  punctuate(own.semicolon_rate, ';');
  punctuate(own.colon_rate, ':');

  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  if (rng.uniform() >= own.lowercase_start) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out + weighted_pick(own.terminators, rng);
}

std::string comment(const Style& own, const Style& borrowed, Rng& rng) {
  const auto count = 1 + rng.below(3);
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    auto s = sentence(own, borrowed, kBorrowRate, rng);
    // An unterminated sentence can only end a comment.
    if (i + 1 < count && std::isalpha(static_cast<unsigned char>(s.back()))) s += '.';
    if (i > 0) out += ' ';
    out += s;
  }
  if (rng.uniform() < own.emoticon_rate) out += rng.uniform() < 0.5 ? " :)" : " :D";
  return out;
}

}  // namespace

std::vector<corpus::UserComments> generate_corpus(std::size_t comments_per_author,
                                                  std::uint64_t seed) {
  const Style target = target_style();
  const Style other = other_style();
  Rng rng(seed);
  corpus::UserComments a{target.name, {}};
  corpus::UserComments b{other.name, {}};
  for (std::size_t i = 0; i < comments_per_author; ++i) {
    a.comments.push_back(comment(target, other, rng));
    b.comments.push_back(comment(other, target, rng));
  }
  return {a, b};
}

}  // namespace stylo::synthetic
