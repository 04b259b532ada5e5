#include "lzdist/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace lzdist {
namespace {

struct Moments {
  double mean_x = 0, mean_y = 0, var_x = 0, var_y = 0, cov = 0;  // sums, not normalized
};

Moments moments_of(const PairedSamples& s) {
  if (s.xs.size() != s.ys.size())
    throw InvalidInputError("paired samples differ in length");
  const std::size_t n = s.xs.size();
  if (n < 2) throw InvalidInputError("need at least 2 paired samples");
  Moments m;
  m.mean_x = std::accumulate(s.xs.begin(), s.xs.end(), 0.0) / static_cast<double>(n);
  m.mean_y = std::accumulate(s.ys.begin(), s.ys.end(), 0.0) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = s.xs[i] - m.mean_x, dy = s.ys[i] - m.mean_y;
    m.var_x += dx * dx;
    m.var_y += dy * dy;
    m.cov += dx * dy;
  }
  return m;
}

// Continued fraction for the regularized incomplete beta (Lentz's method).
double incomplete_beta_cf(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEps = 1e-14, kTiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return h;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * incomplete_beta_cf(a, b, x) / a;
  return 1.0 - front * incomplete_beta_cf(b, a, 1.0 - x) / b;
}

}  // namespace

double pearson(const PairedSamples& samples) {
  const Moments m = moments_of(samples);
  if (m.var_x == 0.0 || m.var_y == 0.0)
    throw DegenerateInputError("zero variance in a correlation input");
  const double r = m.cov / std::sqrt(m.var_x * m.var_y);
  return std::clamp(r, -1.0, 1.0);
}

double students_t_two_sided_pvalue(double t, double degrees_of_freedom) {
  if (degrees_of_freedom <= 0.0) throw InvalidInputError("degrees of freedom must be positive");
  const double x = degrees_of_freedom / (degrees_of_freedom + t * t);
  return regularized_incomplete_beta(degrees_of_freedom / 2.0, 0.5, x);
}

double pearson_pvalue(const PairedSamples& samples) {
  const std::size_t n = samples.xs.size();
  if (n < 3) throw InvalidInputError("p-value needs at least 3 paired samples");
  const double r = pearson(samples);
  if (std::fabs(r) >= 1.0) return 0.0;
  const double df = static_cast<double>(n - 2);
  const double t = r * std::sqrt(df / (1.0 - r * r));
  return students_t_two_sided_pvalue(t, df);
}

RegressionFit linear_fit(const PairedSamples& samples) {
  const Moments m = moments_of(samples);
  if (m.var_x == 0.0) throw DegenerateInputError("zero variance in regression x values");
  RegressionFit fit;
  fit.slope = m.cov / m.var_x;
  fit.intercept = m.mean_y - fit.slope * m.mean_x;
  if (m.var_y == 0.0) {
    fit.r2 = 0.0;  // constant target: explained variance is undefined, report 0
    return fit;
  }
  double ss_res = 0.0;
  for (std::size_t i = 0; i < samples.xs.size(); ++i) {
    const double e = samples.ys[i] - (fit.slope * samples.xs[i] + fit.intercept);
    ss_res += e * e;
  }
  fit.r2 = 1.0 - ss_res / m.var_y;
  return fit;
}

std::vector<double> knn_fit_predict(const PairedSamples& train, const std::vector<double>& test_x,
                                    std::size_t k) {
  if (train.xs.size() != train.ys.size())
    throw InvalidInputError("paired samples differ in length");
  if (k < 1 || k > train.xs.size())
    throw InvalidInputError("k must be between 1 and the training size");

  std::vector<std::size_t> order(train.xs.size());
  std::vector<double> predictions;
  predictions.reserve(test_x.size());
  for (const double q : test_x) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double da = std::fabs(train.xs[a] - q), db = std::fabs(train.xs[b] - q);
      return da != db ? da < db : a < b;
    });
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += train.ys[order[i]];
    predictions.push_back(sum / static_cast<double>(k));
  }
  return predictions;
}

double r2_score(const std::vector<double>& y_true, const std::vector<double>& y_pred) {
  if (y_true.size() != y_pred.size()) throw InvalidInputError("prediction length mismatch");
  if (y_true.size() < 2) throw InvalidInputError("need at least 2 values for r2");
  const double mean =
      std::accumulate(y_true.begin(), y_true.end(), 0.0) / static_cast<double>(y_true.size());
  double ss_tot = 0.0, ss_res = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    ss_tot += (y_true[i] - mean) * (y_true[i] - mean);
    ss_res += (y_true[i] - y_pred[i]) * (y_true[i] - y_pred[i]);
  }
  if (ss_tot == 0.0) throw DegenerateInputError("zero variance in true values");
  return 1.0 - ss_res / ss_tot;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> train_test_split(
    std::size_t n, double train_fraction, std::uint64_t seed) {
  if (n < 2) throw InvalidInputError("need at least 2 rows to split");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw InvalidInputError("train fraction must be in (0, 1)");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(idx[i], idx[j]);
  }

  std::size_t train_count =
      static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(n)));
  train_count = std::clamp<std::size_t>(train_count, 1, n - 1);

  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
  out.first.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(train_count));
  out.second.assign(idx.begin() + static_cast<std::ptrdiff_t>(train_count), idx.end());
  return out;
}

}  // namespace lzdist
