#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stylo/error.hpp"
#include "stylo/stylo_cluster.hpp"
#include "stylo/synthetic.hpp"
#include "test_support.hpp"

using namespace stylo;
using RawMatrix = Eigen::Matrix<double, Eigen::Dynamic, cluster::kStyloDims>;

namespace {

std::string sentence(std::mt19937_64& rng, int words) {
  static const std::vector<std::string> pool{"alpha", "beta", "gamma", "delta", "omega",
                                             "river", "stone", "cloud", "green", "swift"};
  std::string s;
  for (int i = 0; i < words; ++i) s += (i ? " " : "") + pool[rng() % pool.size()];
  return s + ".";
}

corpus::Dataset short_vs_long(std::mt19937_64& rng) {
  std::normal_distribution<double> short_len(5, 1.5), long_len(20, 4);
  corpus::UserComments target{"t", {}}, other{"o", {}};
  for (int i = 0; i < 120; ++i) {
    target.comments.push_back(sentence(rng, std::max(1, static_cast<int>(short_len(rng)))) + " " +
                              sentence(rng, std::max(1, static_cast<int>(short_len(rng)))));
    other.comments.push_back(sentence(rng, std::max(1, static_cast<int>(long_len(rng)))) + " " +
                             sentence(rng, std::max(1, static_cast<int>(long_len(rng)))));
  }
  return corpus::build_dataset(target, {other});
}

}  // namespace

TEST_SUITE("stylo_cluster") {

TEST_CASE("features of a short text") {
  const auto f = cluster::extract_stylo("I came. I saw. I conquered quickly.");
  CHECK(f.avg_words_per_sentence == doctest::Approx(7.0 / 3.0));
  CHECK(f.sentence_len_stddev == doctest::Approx(std::sqrt(2.0 / 9.0)));
  CHECK(f.vocab_diversity == doctest::Approx(5.0 / 7.0));
  CHECK(f.commas_per_sentence == 0.0);

  const auto p = cluster::extract_stylo("One, two; three: four. Five, six.");
  CHECK(p.commas_per_sentence == doctest::Approx(1.0));
  CHECK(p.semicolons_per_sentence == doctest::Approx(0.5));
  CHECK(p.colons_per_sentence == doctest::Approx(0.5));
}

TEST_CASE("empty text gives zero features") {
  CHECK(cluster::extract_stylo("").as_vector().isZero());
  CHECK(cluster::extract_stylo("   ").as_vector().isZero());
}

TEST_CASE("single sentence has zero spread and bounded diversity") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = cluster::extract_stylo(sentence(rng, 1 + static_cast<int>(rng() % 15)));
    CHECK(f.sentence_len_stddev == 0.0);
    CHECK(f.vocab_diversity > 0.0);
    CHECK(f.vocab_diversity <= 1.0);
    CHECK((f.as_vector().array() >= 0).all());
  }
}

TEST_CASE("synthetic target never uses semicolons") {
  const auto& ds = testing_support::synthetic_dataset();
  std::vector<std::string> target;
  for (const auto& s : ds.samples) if (s.label) target.push_back(s.text);
  CHECK(cluster::average_stylo(target).semicolons_per_sentence == 0.0);
}

TEST_CASE("kmeans separates two symmetric blobs") {
  RawMatrix pts(10, 6);
  pts.topRows(5).setZero();
  pts.bottomRows(5).setConstant(10);
  const auto r = cluster::kmeans2(pts);
  for (int i = 1; i < 5; ++i) CHECK(r.assignments[i] == r.assignments[0]);
  for (int i = 6; i < 10; ++i) CHECK(r.assignments[i] == r.assignments[5]);
  CHECK(r.assignments[0] != r.assignments[5]);
}

TEST_CASE("kmeans degenerate inputs") {
  Eigen::MatrixXd three(3, 2);
  three << 0, 0, 0, 0, 4, 4;
  const auto r = cluster::kmeans2(three);
  CHECK(r.assignments[0] == r.assignments[1]);
  CHECK(r.assignments[2] != r.assignments[0]);
  CHECK(r.centroids.row(r.assignments[2]) == three.row(2));

  Eigen::MatrixXd two(2, 3);
  two << 1, 2, 3, -1, 0, 5;
  const auto t = cluster::kmeans2(two);
  CHECK(t.centroids.row(t.assignments[0]) == two.row(0));
  CHECK(t.centroids.row(t.assignments[1]) == two.row(1));

  Eigen::MatrixXd same = Eigen::MatrixXd::Ones(4, 3);
  CHECK_THROWS_AS(cluster::kmeans2(same), DegenerateInputError);
}

TEST_CASE("kmeans SSE never increases and matches a recount") {
  std::mt19937_64 rng(19);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 40);
    RawMatrix pts(n, 6);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 6; ++j) pts(i, j) = gauss(rng) + (i % 3 == 0 ? 3 : 0);
    const auto r = cluster::kmeans2(pts);
    for (std::size_t i = 1; i < r.sse_history.size(); ++i)
      CHECK(r.sse_history[i] <= r.sse_history[i - 1] + 1e-9);
    CHECK(r.sse_history.back() ==
          doctest::Approx(oracle::sse(pts, r.centroids, r.assignments)));
    const auto again = cluster::kmeans2(pts);
    CHECK(again.assignments == r.assignments);
    CHECK(again.centroids == r.centroids);
  }
}

TEST_CASE("clusters follow sentence length") {
  std::mt19937_64 rng(23);
  const auto ds = short_vs_long(rng);
  const auto model = cluster::train_cluster(ds);
  std::size_t agree = 0;
  for (const auto& s : ds.samples) agree += cluster::classify(model, s.text) == s.label ? 1 : 0;
  const double purity = static_cast<double>(agree) / static_cast<double>(ds.size());
  MESSAGE("purity " << purity);
  CHECK(purity >= 0.9);
}

TEST_CASE("identical features cannot be clustered") {
  corpus::UserComments t{"t", {"Same words here.", "Same words here."}};
  corpus::UserComments o{"o", {"Same words here."}};
  CHECK_THROWS_AS(cluster::train_cluster(corpus::build_dataset(t, {o})), DegenerateInputError);
}

TEST_CASE("classification rules") {
  std::mt19937_64 rng(29);
  const auto ds = short_vs_long(rng);
  const auto model = cluster::train_cluster(ds);
  CHECK(cluster::classify(model, ds.samples.front().text));

  cluster::ClusterModel tie;
  tie.centroids.row(0).setConstant(1);
  tie.centroids.row(1).setConstant(-1);
  tie.labels = {true, false};
  tie.stddev.setOnes();
  CHECK_FALSE(cluster::classify_features(tie, cluster::StyloVector::Zero()));
  CHECK(cluster::classify_features(tie, cluster::StyloVector::Constant(0.5)));
}

TEST_CASE("a semicolon pushes a text away from the synthetic target") {
  const auto& ds = testing_support::synthetic_dataset();
  const auto model = cluster::train_cluster(ds);
  const std::string plain = "gg that was close lol. nice shot";
  const std::string semi = "gg that was close lol; nice shot; we won; again";
  const auto d = [&](const std::string& t, int c) {
    return (cluster::normalize(model, cluster::extract_stylo(t).as_vector()).transpose() -
            model.centroids.row(c))
        .norm();
  };
  const int pos = model.labels[0] ? 0 : 1;
  const int neg = 1 - pos;
  CHECK(d(semi, neg) - d(semi, pos) < d(plain, neg) - d(plain, pos));
  CHECK_FALSE(cluster::classify(model, semi));
}

TEST_CASE("rescaling a feature does not change decisions") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    RawMatrix raw(30, 6);
    std::vector<bool> labels;
    for (int i = 0; i < 30; ++i) {
      labels.push_back(i < 15);
      for (int j = 0; j < 6; ++j) raw(i, j) = gauss(rng) + (i < 15 ? 2.0 : 0.0);
    }
    const int dim = static_cast<int>(rng() % 6);
    const double scale = 0.01 + static_cast<double>(rng() % 1000);
    RawMatrix scaled = raw;
    scaled.col(dim) *= scale;
    const auto a = cluster::train_cluster_features(raw, labels);
    const auto b = cluster::train_cluster_features(scaled, labels);
    for (int q = 0; q < 20; ++q) {
      cluster::StyloVector x;
      for (int j = 0; j < 6; ++j) x[j] = gauss(rng) + 1.0;
      cluster::StyloVector xs = x;
      xs[dim] *= scale;
      CHECK(cluster::classify_features(a, x) == cluster::classify_features(b, xs));
    }
  }
}

}  // TEST_SUITE
