#pragma once

#include <span>
#include <string>
#include <vector>

#include "stlf/aggregation.hpp"
#include "stlf/series.hpp"

namespace stlf {

/// Approximate-entropy parameters. The match tolerance is relative:
/// r = r_rel * SD(series), so series at different aggregation levels (and
/// hence magnitudes) stay comparable.
struct ApEnParams {
  int m = 2;
  double r_rel = 0.2;
};

/// Approximate entropy ApEn(m, r, N) = Phi^m(r) - Phi^{m+1}(r) with
/// Chebyshev template matching and self-matches included, so every match
/// count is >= 1 and the logarithms stay finite. A zero-variance series
/// returns 0 directly. Throws SeriesTooShort when N <= m + 1.
double apen(std::span<const double> series, const ApEnParams& params);

/// First difference: out[t] = in[t+1] - in[t]; length N-1.
std::vector<double> difference(std::span<const double> series);

/// Cumulative-sum inverse of difference; output length = diffs.size() + 1.
std::vector<double> undifference(double first_value, std::span<const double> diffs);

struct PredictabilityRecord {
  LoadClass cls = LoadClass::other;
  int level = 1;
  int group = 0;
  double apen_raw = 0.0;
  double apen_diff = 0.0;
  ApEnParams params;
  std::size_t n = 0;  // window length actually used
};

struct PredictabilityCurve {
  std::vector<PredictabilityRecord> records;
  std::vector<std::string> skipped;  // "<level>/<group>: reason" per skipped subject
};

/// One record per aggregate: ApEn of the first `window_len` values and of
/// their first difference, each with r scaled to that sequence's own SD.
/// Subjects that fail (too short) are skipped and logged, not fatal.
PredictabilityCurve predictability_curve(std::span<const AggregateSeries> aggregates,
                                         const ApEnParams& params, std::size_t window_len);

/// CSV rows "class,level,group,apen_raw,apen_diff,m,r_rel,n" with header.
std::string predictability_csv(std::span<const PredictabilityRecord> records);

}  // namespace stlf
