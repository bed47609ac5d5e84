#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stylo/corpus.hpp"
#include "stylo/error.hpp"
#include "stylo/synthetic.hpp"
#include "test_support.hpp"

using namespace stylo;
using corpus::UserComments;

namespace {

UserComments user(const std::string& name, std::size_t n, const std::string& stem = "c") {
  UserComments u{name, {}};
  for (std::size_t i = 0; i < n; ++i) u.comments.push_back(stem + " " + name + " " + std::to_string(i));
  return u;
}

corpus::Dataset balanced(std::size_t pos, std::size_t neg) {
  return corpus::build_dataset(user("target", pos), {user("other", neg)});
}

std::multiset<std::string> texts_of(const corpus::Dataset& ds) {
  auto t = ds.texts();
  return {t.begin(), t.end()};
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("user file loads comments in order") {
  const auto u = corpus::load_user_file(R"(["hi there","ok"])", "VRCKid");
  CHECK(u.author == "VRCKid");
  CHECK(u.comments == std::vector<std::string>{"hi there", "ok"});
  CHECK(corpus::load_user_file("[]", "x").comments.empty());
}

TEST_CASE("whitespace-only comments are dropped") {
  const auto u = corpus::load_user_file(R"(["a", "  \n", ""])", "x");
  CHECK(u.comments == std::vector<std::string>{"a"});
}

TEST_CASE("non-string element is a schema error naming the index") {
  try {
    corpus::load_user_file(R"(["a", 5])", "x");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
  CHECK_THROWS_AS(corpus::load_user_file(R"({"a": 1})", "x"), SchemaError);
}

TEST_CASE("malformed json reports a byte offset") {
  try {
    corpus::load_user_file(R"(["a",)", "x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() > 0);
  }
}

TEST_CASE("serialize then load round-trips arbitrary strings") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    UserComments u{"someone", {}};
    const int count = static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) {
      auto s = oracle::random_text(rng, 30) + "\"\\\t/x";
      u.comments.push_back(s);
    }
    const auto back = corpus::load_user_file(corpus::to_json(u), "someone");
    CHECK(back.comments == u.comments);
  }
}

TEST_CASE("build_dataset labels target first") {
  const auto ds = corpus::build_dataset(user("t", 2), {user("o", 3)});
  CHECK(ds.labels() == std::vector<bool>{true, true, false, false, false});
  CHECK(ds.samples[3].source == "o");
  CHECK(ds.target_author == "t");
}

TEST_CASE("build_dataset keeps everything by default") {
  std::vector<UserComments> others;
  for (int i = 0; i < 20; ++i) others.push_back(user("o" + std::to_string(i), 50));
  const auto ds = corpus::build_dataset(user("t", 1000), others);
  CHECK(ds.size() == 2000);
  CHECK(ds.positives() == 1000);
}

TEST_CASE("build_dataset rejects an empty negative pool or empty target") {
  CHECK_THROWS_AS(corpus::build_dataset(user("t", 3), {}), InsufficientDataError);
  CHECK_THROWS_AS(corpus::build_dataset(user("t", 0), {user("o", 3)}), InsufficientDataError);
}

TEST_CASE("negative cap subsamples deterministically") {
  std::vector<UserComments> others{user("a", 40), user("b", 40)};
  corpus::DatasetOptions opts;
  opts.max_negatives = 25;
  const auto one = corpus::build_dataset(user("t", 10), others, opts);
  const auto two = corpus::build_dataset(user("t", 10), others, opts);
  CHECK(one.negatives() == 25);
  CHECK(one.texts() == two.texts());
  opts.seed = 43;
  const auto three = corpus::build_dataset(user("t", 10), others, opts);
  CHECK(three.negatives() == 25);
  CHECK(three.texts() != one.texts());
}

TEST_CASE("split applies the fraction per class") {
  const auto ds = balanced(1000, 1000);
  const auto [train, test] = corpus::split(ds, 0.7, 42);
  CHECK(train.positives() == 700);
  CHECK(train.negatives() == 700);
  CHECK(test.positives() == 300);
  CHECK(test.negatives() == 300);
}

TEST_CASE("split is a deterministic partition") {
  const auto ds = balanced(40, 60);
  const auto [a_train, a_test] = corpus::split(ds, 0.7, 1);
  const auto [b_train, b_test] = corpus::split(ds, 0.7, 1);
  CHECK(a_train.texts() == b_train.texts());
  CHECK(a_test.texts() == b_test.texts());

  auto all = texts_of(a_train);
  for (const auto& t : a_test.texts()) all.insert(t);
  CHECK(all == texts_of(ds));

  const auto [c_train, c_test] = corpus::split(ds, 0.7, 2);
  CHECK(c_train.size() == a_train.size());
  CHECK(texts_of(c_train) != texts_of(a_train));
}

TEST_CASE("split that would empty a class fails") {
  CHECK_THROWS_AS(corpus::split(balanced(1, 10), 0.7, 42), InsufficientDataError);
  CHECK_THROWS_AS(corpus::split(balanced(10, 10), 0.99, 42), InsufficientDataError);
  CHECK_THROWS_AS(corpus::split(balanced(10, 10), 1.0, 42), ArgumentError);
}

TEST_CASE("folds: one positive and one negative each on 10+10") {
  const auto plan = corpus::make_folds(balanced(10, 10), 10, 42);
  const auto ds = balanced(10, 10);
  for (int f = 0; f < 10; ++f) {
    const auto held = plan.held_out(f);
    REQUIRE(held.size() == 2);
    CHECK(ds.samples[held[0]].label != ds.samples[held[1]].label);
  }
}

TEST_CASE("folds of 200 on a balanced 2000") {
  const auto plan = corpus::make_folds(balanced(1000, 1000), 10, 42);
  for (int f = 0; f < 10; ++f) CHECK(plan.held_out(f).size() == 200);
}

TEST_CASE("fold argument errors") {
  CHECK_THROWS_AS(corpus::make_folds(balanced(10, 10), 0, 42), ArgumentError);
  CHECK_THROWS_AS(corpus::make_folds(balanced(5, 10), 10, 42), InsufficientDataError);
}

TEST_CASE("folds partition the data and stay stratified") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 9);
    const auto pos = static_cast<std::size_t>(k) + rng() % 60;
    const auto neg = static_cast<std::size_t>(k) + rng() % 60;
    const auto ds = balanced(pos, neg);
    const auto plan = corpus::make_folds(ds, k, rng());
    std::vector<int> seen(ds.size(), 0);
    std::vector<std::size_t> pos_counts, neg_counts;
    for (int f = 0; f < k; ++f) {
      std::size_t p = 0;
      const auto held = plan.held_out(f);
      for (auto i : held) {
        ++seen[i];
        p += ds.samples[i].label ? 1 : 0;
      }
      pos_counts.push_back(p);
      neg_counts.push_back(held.size() - p);
      CHECK(plan.training(f).size() + held.size() == ds.size());
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    const auto [pmin, pmax] = std::minmax_element(pos_counts.begin(), pos_counts.end());
    const auto [nmin, nmax] = std::minmax_element(neg_counts.begin(), neg_counts.end());
    CHECK(*pmax - *pmin <= 1);
    CHECK(*nmax - *nmin <= 1);
  }
}

TEST_CASE("load_dataset reads a directory and names a missing target file") {
  const auto dir = testing_support::scratch_dir("corpus_dir");
  std::ofstream(dir / "alice.json") << R"(["one", "two"])";
  std::ofstream(dir / "bob.json") << R"(["three"])";
  std::ofstream(dir / "notes.txt") << "ignored";
  const auto ds = corpus::load_dataset(dir, "alice");
  CHECK(ds.labels() == std::vector<bool>{true, true, false});
  CHECK(corpus::load_directory(dir).size() == 2);
  try {
    corpus::load_dataset(dir, "nobody");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("nobody.json") != std::string::npos);
  }
}

TEST_CASE("bundled synthetic corpus matches its generator") {
  const auto generated = synthetic::generate_corpus();
  for (const auto& u : generated) {
    const auto loaded =
        corpus::load_user_path(testing_support::data_dir() / "synthetic" / (u.author + ".json"));
    CHECK(loaded.comments == u.comments);
  }
}

}  // TEST_SUITE
