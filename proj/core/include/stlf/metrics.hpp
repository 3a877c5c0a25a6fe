#pragma once

#include <cstddef>
#include <span>

namespace stlf {

/// Near-zero actuals below this (kWh) are excluded from MAPE.
inline constexpr double kDefaultMapeTau = 1e-3;

/// NMAE = sum |x - xhat| / sum |x|. Scale-free, which is what makes errors
/// comparable across aggregation levels. Throws ZeroDenominator when
/// sum |x| = 0.
double nmae(std::span<const double> actual, std::span<const double> predicted);

double mae(std::span<const double> actual, std::span<const double> predicted);
double rmse(std::span<const double> actual, std::span<const double> predicted);

/// MAPE over points with |actual| >= tau; `skipped`, when given, receives the
/// exclusion count. Throws AllPointsSkipped if nothing survives the filter.
double mape_safe(std::span<const double> actual, std::span<const double> predicted,
                 double tau = kDefaultMapeTau, std::size_t* skipped = nullptr);

struct MetricSet {
  double nmae = 0.0;
  double mae = 0.0;
  double rmse = 0.0;
  double mape_safe = 0.0;
  std::size_t n_points = 0;
  std::size_t mape_skipped = 0;
};

MetricSet compute_metrics(std::span<const double> actual, std::span<const double> predicted,
                          double mape_tau = kDefaultMapeTau);

}  // namespace stlf
