#pragma once

// Brute-force reference implementations used to check the library.

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace oracle {

// Byte offsets where a UTF-8 scalar starts, plus the end offset.
inline std::vector<std::size_t> scalar_starts(const std::string& s) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) starts.push_back(i);
  }
  starts.push_back(s.size());
  return starts;
}

inline std::vector<std::string> char_ngrams(const std::string& s, int n) {
  const auto starts = scalar_starts(s);
  std::vector<std::string> out;
  const std::size_t count = starts.size() - 1;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= count; ++i) {
    out.push_back(s.substr(starts[i], starts[i + n] - starts[i]));
  }
  return out;
}

// Overlapping occurrences of `needle` in `hay` that start on a scalar boundary
// and span exactly n scalars.
inline int count_substring(const std::string& hay, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1)) {
    if ((static_cast<unsigned char>(hay[pos]) & 0xC0) != 0x80) ++count;
  }
  return count;
}

inline std::set<std::string> distinct_ngrams(const std::string& s, int n) {
  const auto grams = char_ngrams(s, n);
  return {grams.begin(), grams.end()};
}

inline double shared_pct(const std::string& block, const std::set<std::string>& profile, int n) {
  const auto grams = distinct_ngrams(block, n);
  int hit = 0;
  for (const auto& g : grams) hit += profile.count(g) ? 1 : 0;
  return 100.0 * hit / static_cast<double>(grams.size());
}

inline bool majority(unsigned mask) { return std::popcount(mask) >= 3; }

struct Counts {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

inline Counts recount(const std::vector<bool>& predicted, const std::vector<bool>& actual) {
  Counts c;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] && actual[i]) ++c.tp;
    if (predicted[i] && !actual[i]) ++c.fp;
    if (!predicted[i] && !actual[i]) ++c.tn;
    if (!predicted[i] && actual[i]) ++c.fn;
  }
  return c;
}

// Mean log-loss plus (l2/2)|w|^2, computed directly from the definition in
// long double.
inline long double log_loss(const Eigen::MatrixXd& x, const std::vector<double>& y,
                            const std::vector<long double>& w, long double b, long double l2) {
  long double total = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    long double z = b;
    for (Eigen::Index j = 0; j < x.cols(); ++j) z += x(i, j) * w[static_cast<std::size_t>(j)];
    const long double p = 1.0L / (1.0L + std::exp(-z));
    total += -(y[static_cast<std::size_t>(i)] * std::log(p) +
               (1 - y[static_cast<std::size_t>(i)]) * std::log(1 - p));
  }
  long double sq = 0;
  for (auto v : w) sq += v * v;
  return total / x.rows() + 0.5L * l2 * sq;
}

// Central finite differences of log_loss; the last entry is the bias.
inline std::vector<long double> numeric_gradient(const Eigen::MatrixXd& x,
                                                 const std::vector<double>& y,
                                                 const std::vector<long double>& w,
                                                 long double b, long double l2,
                                                 long double h = 1e-6L) {
  std::vector<long double> g;
  for (std::size_t j = 0; j < w.size(); ++j) {
    auto up = w;
    auto down = w;
    up[j] += h;
    down[j] -= h;
    g.push_back((log_loss(x, y, up, b, l2) - log_loss(x, y, down, b, l2)) / (2 * h));
  }
  g.push_back((log_loss(x, y, w, b + h, l2) - log_loss(x, y, w, b - h, l2)) / (2 * h));
  return g;
}

inline double sse(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centroids,
                  const std::vector<int>& assign) {
  double total = 0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index j = 0; j < points.cols(); ++j) {
      const double d = points(i, j) - centroids(assign[static_cast<std::size_t>(i)], j);
      total += d * d;
    }
  }
  return total;
}

// Random strings over a small alphabet with ASCII, spaces and a few
// multi-byte scalars so n-gram windows cross byte boundaries.
inline std::string random_text(std::mt19937_64& rng, std::size_t max_scalars) {
  static const std::vector<std::string> alphabet = {
      "a", "b", "c", "e", " ", " ", ".", ",", "A", "é", "ж", "☺", "😀", "x", "'"};
  std::uniform_int_distribution<std::size_t> len(0, max_scalars);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  const auto n = len(rng);
  for (std::size_t i = 0; i < n; ++i) s += alphabet[pick(rng)];
  return s;
}

}  // namespace oracle
