#include "stlf/metrics.hpp"

#include <cmath>

#include "stlf/error.hpp"

namespace stlf {

namespace {

void check_lengths(std::span<const double> actual, std::span<const double> predicted) {
  if (actual.size() != predicted.size())
    fail(errc::length_mismatch, "actual has " + std::to_string(actual.size()) + " points, predicted " +
                                    std::to_string(predicted.size()));
  if (actual.empty()) fail(errc::length_mismatch, "empty vectors");
}

}  // namespace

double nmae(std::span<const double> actual, std::span<const double> predicted) {
  check_lengths(actual, predicted);
  double num = 0.0, den = 0.0;
  for (std::size_t t = 0; t < actual.size(); ++t) {
    num += std::fabs(actual[t] - predicted[t]);
    den += std::fabs(actual[t]);
  }
  if (den == 0.0) fail(errc::zero_denominator, "sum |actual| is zero");
  return num / den;
}

double mae(std::span<const double> actual, std::span<const double> predicted) {
  check_lengths(actual, predicted);
  double s = 0.0;
  for (std::size_t t = 0; t < actual.size(); ++t) s += std::fabs(actual[t] - predicted[t]);
  return s / static_cast<double>(actual.size());
}

double rmse(std::span<const double> actual, std::span<const double> predicted) {
  check_lengths(actual, predicted);
  double s = 0.0;
  for (std::size_t t = 0; t < actual.size(); ++t) {
    double e = actual[t] - predicted[t];
    s += e * e;
  }
  return std::sqrt(s / static_cast<double>(actual.size()));
}

double mape_safe(std::span<const double> actual, std::span<const double> predicted, double tau,
                 std::size_t* skipped) {
  check_lengths(actual, predicted);
  double s = 0.0;
  std::size_t used = 0, excl = 0;
  for (std::size_t t = 0; t < actual.size(); ++t) {
    if (std::fabs(actual[t]) < tau) {
      ++excl;
      continue;
    }
    s += std::fabs((actual[t] - predicted[t]) / actual[t]);
    ++used;
  }
  if (skipped) *skipped = excl;
  if (used == 0) fail(errc::all_points_skipped, "every actual below mape tau");
  return 100.0 * s / static_cast<double>(used);
}

MetricSet compute_metrics(std::span<const double> actual, std::span<const double> predicted,
                          double mape_tau) {
  MetricSet m;
  m.nmae = nmae(actual, predicted);
  m.mae = mae(actual, predicted);
  m.rmse = rmse(actual, predicted);
  m.n_points = actual.size();
  try {
    m.mape_safe = mape_safe(actual, predicted, mape_tau, &m.mape_skipped);
  } catch (const Error&) {
    m.mape_safe = 0.0;
    m.mape_skipped = actual.size();
  }
  return m;
}

}  // namespace stlf
