#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lzdist/error.hpp"

namespace lzdist {

struct PairedSamples {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<std::string> labels;  // optional row ids, empty or same length
};

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// Product-moment correlation. Requires n >= 2 and nonzero variance on both
// sides (degenerate input raises rather than returning NaN).
double pearson(const PairedSamples& samples);

// Two-sided p-value for the null of zero correlation, from the t statistic
// t = r * sqrt((n-2) / (1-r^2)) with n-2 degrees of freedom. |r| = 1 gives 0.
double pearson_pvalue(const PairedSamples& samples);

// Two-sided tail mass of Student's t. Evaluated through the regularized
// incomplete beta function (Lentz continued fraction), absolute accuracy
// around 1e-8.
double students_t_two_sided_pvalue(double t, double degrees_of_freedom);

// Ordinary least squares y = slope * x + intercept. Zero x-variance raises;
// zero y-variance yields r2 = 0 by convention.
RegressionFit linear_fit(const PairedSamples& samples);

struct KnnModel {
  std::size_t k = 5;
  std::vector<double> train_x;
  std::vector<double> train_y;
};

// Mean target of the k nearest training points by |x - q|; distance ties
// break toward the lower training index. k must be in [1, |train|].
std::vector<double> knn_fit_predict(const PairedSamples& train, const std::vector<double>& test_x,
                                    std::size_t k);

// 1 - SS_res / SS_tot; negative when predictions are worse than the mean.
// Zero variance in y_true raises.
double r2_score(const std::vector<double>& y_true, const std::vector<double>& y_pred);

// Seeded shuffle of 0..n-1 then a prefix/suffix split. The train side gets
// round(train_fraction * n) elements, clamped so both sides stay nonempty.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> train_test_split(
    std::size_t n, double train_fraction, std::uint64_t seed);

template <typename Row>
std::pair<std::vector<Row>, std::vector<Row>> train_test_split_rows(const std::vector<Row>& rows,
                                                                    double train_fraction,
                                                                    std::uint64_t seed) {
  auto [train_idx, test_idx] = train_test_split(rows.size(), train_fraction, seed);
  std::pair<std::vector<Row>, std::vector<Row>> out;
  out.first.reserve(train_idx.size());
  out.second.reserve(test_idx.size());
  for (std::size_t i : train_idx) out.first.push_back(rows[i]);
  for (std::size_t i : test_idx) out.second.push_back(rows[i]);
  return out;
}

}  // namespace lzdist
