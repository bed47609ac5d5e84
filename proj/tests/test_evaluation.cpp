#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "stylo/error.hpp"
#include "stylo/evaluation.hpp"
#include "test_support.hpp"

using namespace stylo;
using eval::Confusion;

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream cell_in(line);
    for (std::string cell; std::getline(cell_in, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

const corpus::Dataset& cv_dataset() {
  static const auto ds = corpus::split(testing_support::synthetic_dataset(), 0.5, 7).first;
  return ds;
}

const eval::EvalReport& cv_report() {
  static const auto report = eval::cross_validate(cv_dataset(), 10, 42);
  return report;
}

}  // namespace

TEST_SUITE("evaluation") {

TEST_CASE("f1 of a reported precision and recall pair") {
  CHECK(std::abs(eval::f1_score(0.82, 0.926) - 0.869) <= 0.001);
  CHECK(eval::f1_score(0, 0) == 0.0);
}

TEST_CASE("metrics conventions") {
  const auto perfect = eval::metrics({5, 0, 5, 0});
  CHECK(perfect.accuracy == 1.0);
  CHECK(perfect.precision == 1.0);
  CHECK(perfect.recall == 1.0);
  CHECK(perfect.f1 == 1.0);
  const auto negatives = eval::metrics({0, 0, 10, 0});
  CHECK(negatives.precision == 0.0);
  CHECK(negatives.recall == 0.0);
  CHECK(negatives.accuracy == 1.0);
  CHECK_THROWS_AS(eval::metrics({}), ArgumentError);
}

TEST_CASE("metrics agree with a recount on random predictions") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    std::vector<bool> predicted, actual;
    for (std::size_t i = 0; i < n; ++i) {
      predicted.push_back(rng() % 2);
      actual.push_back(rng() % 2);
    }
    const auto c = eval::confusion_of(predicted, actual);
    const auto o = oracle::recount(predicted, actual);
    CHECK(c == Confusion{o.tp, o.fp, o.tn, o.fn});
    const auto m = eval::metrics(c);
    const double p = o.tp + o.fp ? static_cast<double>(o.tp) / static_cast<double>(o.tp + o.fp) : 0;
    const double r = o.tp + o.fn ? static_cast<double>(o.tp) / static_cast<double>(o.tp + o.fn) : 0;
    CHECK(m.precision == doctest::Approx(p));
    CHECK(m.recall == doctest::Approx(r));
    CHECK(m.accuracy == doctest::Approx(static_cast<double>(o.tp + o.tn) / static_cast<double>(n)));
    CHECK(m.f1 <= (m.precision + m.recall) / 2 + 1e-12);
    if (m.precision == m.recall) CHECK(m.f1 == doctest::Approx(m.precision));
    else CHECK(m.f1 < (m.precision + m.recall) / 2);
  }
}

TEST_CASE("cross-validation report") {
  const auto& report = cv_report();
  const auto& ds = cv_dataset();
  REQUIRE(report.per_fold.size() == 10);

  Confusion sum;
  for (const auto& f : report.per_fold) sum += f.confusion;
  CHECK(sum == report.pooled_confusion);
  const auto o = oracle::recount(report.predictions, ds.labels());
  CHECK(report.pooled_confusion == Confusion{o.tp, o.fp, o.tn, o.fn});
  CHECK(report.pooled_confusion.total() == ds.size());

  const auto rows = csv_rows(eval::report_csv(report));
  REQUIRE(rows.size() == 13);
  CHECK(rows[0] == std::vector<std::string>{"fold", "accuracy", "precision", "recall", "f1",
                                            "tp", "fp", "tn", "fn"});
  CHECK(rows[1][0] == "1");
  CHECK(rows[10][0] == "10");
  CHECK(rows[11][0] == "avg");
  CHECK(rows[12][0] == "pooled");
  CHECK(std::stoul(rows[12][5]) == report.pooled_confusion.tp);
  MESSAGE("pooled accuracy " << report.pooled.accuracy);
}

TEST_CASE("cross-validation ignores storage order") {
  auto shuffled = cv_dataset();
  std::mt19937_64 rng(59);
  std::shuffle(shuffled.samples.begin(), shuffled.samples.end(), rng);
  const auto again = eval::cross_validate(shuffled, 10, 42);
  CHECK(eval::report_csv(again) == eval::report_csv(cv_report()));
}

TEST_CASE("summary line") {
  CHECK(eval::summary_line({0.9, 0.82, 0.926, 0.8698}) == "precision=0.820 recall=0.926 f1=0.870");
}

TEST_CASE("single-method evaluation") {
  Confusion all_negative;
  for (int i = 0; i < 50; ++i) all_negative.add(false, true);
  for (int i = 0; i < 50; ++i) all_negative.add(false, false);
  CHECK(eval::metrics(all_negative).accuracy == 0.5);

  const auto r = eval::evaluate_method(testing_support::synthetic_dataset(),
                                       ensemble::Method::WordFreq, 42);
  CHECK(r.accuracy == eval::metrics(r.confusion).accuracy);
  CHECK(r.confusion.total() == 360);
}

TEST_CASE("verifier margin sweep peaks in the interior") {
  const auto [train, test] = corpus::split(testing_support::synthetic_dataset(), 0.7, 42);
  const auto cells =
      eval::sweep_verifier(train, test, {3}, {0, 1, 2, 3, 4, 5, 6});
  REQUIRE(cells.size() == 7);
  std::size_t best = 0;
  std::string curve;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].accuracy > cells[best].accuracy) best = i;
    curve += std::to_string(cells[i].accuracy) + " ";
  }
  MESSAGE("accuracy by gamma: " << curve);
  CHECK(best > 0);
  CHECK(best < cells.size() - 1);
  CHECK(eval::verifier_sweep_csv(cells).rfind("n,gamma,accuracy\n3,0,", 0) == 0);
}

}  // TEST_SUITE
