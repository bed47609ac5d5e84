#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "stylo/bundle.hpp"
#include "stylo/error.hpp"
#include "stylo/linear_model.hpp"

using namespace stylo;
using Sample = std::pair<SparseVector<>, bool>;

namespace {

SparseVector<> sparse(Eigen::Index dim, std::initializer_list<std::pair<int, double>> entries) {
  SparseVector<> v(dim);
  for (auto [i, x] : entries) v.insert(i) = x;
  return v;
}

// Random sparse design with roughly half the entries zero.
std::pair<SparseRowMatrix<>, std::vector<bool>> random_problem(std::mt19937_64& rng, int rows,
                                                               int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<SparseVector<>> xs;
  std::vector<bool> ys;
  for (int i = 0; i < rows; ++i) {
    SparseVector<> v(cols);
    for (int j = 0; j < cols; ++j) {
      if (rng() % 2) v.insert(j) = gauss(rng);
    }
    xs.push_back(v);
    ys.push_back(i % 2 == 0);
  }
  return {linear::stack_rows(xs, cols), ys};
}

}  // namespace

TEST_SUITE("linear_model") {

TEST_CASE("separable set is learned") {
  std::vector<Sample> samples;
  for (int i = 0; i < 20; ++i) {
    samples.emplace_back(sparse(2, {{0, 1.0}}), true);
    samples.emplace_back(sparse(2, {{1, 1.0}}), false);
  }
  const auto model = linear::train(samples, 2);
  int correct = 0;
  for (const auto& [x, y] : samples) correct += linear::predict(model, x).decision == y ? 1 : 0;
  CHECK(correct / 40.0 >= 0.99);
}

TEST_CASE("identical inputs learn the class prior") {
  std::vector<Sample> samples;
  for (int i = 0; i < 100; ++i) samples.emplace_back(SparseVector<>(3), i < 30);
  linear::Hyperparams hp;
  hp.epochs = 3000;
  hp.learning_rate = 0.5;
  const auto model = linear::train(samples, 3, hp);
  CHECK(model.weights.isZero());
  CHECK(model.bias == doctest::Approx(std::log(0.3 / 0.7)).epsilon(0.02));
  CHECK(linear::predict(model, SparseVector<>(3)).probability == doctest::Approx(0.3).epsilon(0.01));
}

TEST_CASE("single class is rejected") {
  std::vector<Sample> samples{{sparse(2, {{0, 1.0}}), true}, {sparse(2, {{1, 1.0}}), true}};
  CHECK_THROWS_AS(linear::train(samples, 2), TrainingError);
}

TEST_CASE("predict") {
  linear::LinearModel zero;
  zero.weights = DenseVector<>::Zero(3);
  CHECK(linear::predict(zero, sparse(3, {{1, 5.0}})).probability == 0.5);

  auto big = zero;
  big.weights[0] = 50;
  const auto p = linear::predict(big, sparse(3, {{0, 1.0}}));
  CHECK(p.probability == doctest::Approx(1.0));
  CHECK(p.decision);

  auto biased = zero;
  biased.bias = std::log(3.0);
  CHECK(linear::predict(biased, SparseVector<>(3)).probability == doctest::Approx(0.75));

  CHECK_THROWS_AS(linear::predict(zero, SparseVector<>(4)), ArgumentError);
}

TEST_CASE("analytic gradient matches finite differences") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 5 + static_cast<int>(rng() % 10);
    const int cols = 2 + static_cast<int>(rng() % 6);
    auto [x, y] = random_problem(rng, rows, cols);
    DenseVector<> w(cols);
    for (int j = 0; j < cols; ++j) w[j] = gauss(rng);
    const double b = gauss(rng);
    const double l2 = 0.01;
    DenseVector<> yv(rows);
    std::vector<double> ys;
    for (int i = 0; i < rows; ++i) {
      yv[i] = y[static_cast<std::size_t>(i)] ? 1.0 : 0.0;
      ys.push_back(yv[i]);
    }
    const auto got = linear::regularized_log_loss<double>(x, yv, w, b, l2);
    const Eigen::MatrixXd dense(x);
    std::vector<long double> wl(w.data(), w.data() + cols);
    const auto num = oracle::numeric_gradient(dense, ys, wl, b, l2);
    CHECK(got.loss == doctest::Approx(static_cast<double>(oracle::log_loss(dense, ys, wl, b, l2))));
    for (int j = 0; j <= cols; ++j) {
      const double analytic = j < cols ? got.grad_weights[j] : got.grad_bias;
      const double numeric = static_cast<double>(num[static_cast<std::size_t>(j)]);
      const double rel = std::abs(analytic - numeric) /
                         std::max({std::abs(analytic), std::abs(numeric), 1e-8});
      CHECK(rel <= 1e-5);
    }
  }
}

TEST_CASE("loss does not increase with a small step") {
  std::mt19937_64 rng(9);
  auto [x, y] = random_problem(rng, 30, 5);
  linear::Hyperparams hp;
  hp.learning_rate = 0.05;
  hp.epochs = 100;
  std::vector<double> losses;
  linear::train(x, y, hp, [&](int, double loss) { losses.push_back(loss); });
  REQUIRE(losses.size() == 100);
  for (std::size_t i = 1; i < losses.size(); ++i) CHECK(losses[i] <= losses[i - 1] + 1e-12);
}

TEST_CASE("training is deterministic and ignores explicit zeros") {
  std::mt19937_64 rng(2);
  auto [x, y] = random_problem(rng, 25, 4);
  const auto a = linear::train(x, y);
  const auto b = linear::train(x, y);
  CHECK(a.weights == b.weights);
  CHECK(a.bias == b.bias);

  std::vector<Sample> with_zeros, without;
  for (int i = 0; i < 10; ++i) {
    auto v = sparse(3, {{0, i * 0.1}});
    auto z = v;
    z.insert(2) = 0.0;
    without.emplace_back(v, i % 2 == 0);
    with_zeros.emplace_back(z, i % 2 == 0);
  }
  const auto m1 = linear::train(without, 3);
  const auto m2 = linear::train(with_zeros, 3);
  CHECK(m1.weights == m2.weights);
  CHECK(m1.bias == m2.bias);
}

TEST_CASE("exploding updates raise a divergence error") {
  std::vector<Sample> samples{{sparse(1, {{0, 1e200}}), true}, {sparse(1, {{0, -1e200}}), true},
                              {sparse(1, {{0, 1e200}}), false}};
  linear::Hyperparams hp;
  hp.learning_rate = 1e300;
  CHECK_THROWS_AS(linear::train(samples, 1, hp), DivergenceError);
}

TEST_CASE("json round trip keeps decisions") {
  std::mt19937_64 rng(12);
  auto [x, y] = random_problem(rng, 40, 6);
  const auto model = linear::train(x, y);
  const auto back = bundle::linear_model_from_json(
      nlohmann::json::parse(bundle::to_json(model).dump()));
  CHECK(back.weights == model.weights);
  CHECK(back.bias == model.bias);
  for (int i = 0; i < x.rows(); ++i) {
    const SparseVector<> row = x.row(i);
    CHECK(linear::predict(back, row).probability == linear::predict(model, row).probability);
  }
}

}  // TEST_SUITE
