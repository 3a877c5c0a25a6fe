#include "stlf/predictability.hpp"

#include <cmath>
#include <sstream>

#include "stlf/csvio.hpp"
#include "stlf/error.hpp"

namespace stlf {

namespace {

double sample_sd(std::span<const double> x) {
  const std::size_t n = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

}  // namespace

double apen(std::span<const double> series, const ApEnParams& params) {
  const int m = params.m;
  if (m < 1 || params.r_rel <= 0.0) fail(errc::invalid_params, "apen requires m >= 1 and r_rel > 0");
  const std::size_t n = series.size();
  if (n <= static_cast<std::size_t>(m) + 1)
    fail(errc::series_too_short,
         "apen needs N > m+1, got N=" + std::to_string(n) + " m=" + std::to_string(m));

  const double sd = sample_sd(series);
  if (sd == 0.0) return 0.0;
  const double r = params.r_rel * sd;

  // Template counts for lengths m and m+1 in one pass over pairs; the
  // length-(m+1) check reuses the length-m Chebyshev result. Self-matches
  // are counted by initializing at 1.
  const std::size_t nm = n - static_cast<std::size_t>(m) + 1;   // templates of length m
  const std::size_t nm1 = n - static_cast<std::size_t>(m);      // templates of length m+1
  std::vector<std::uint32_t> cm(nm, 1), cm1(nm1, 1);

  const double* x = series.data();
  for (std::size_t i = 0; i + 1 < nm; ++i) {
    for (std::size_t j = i + 1; j < nm; ++j) {
      bool close = true;
      for (int k = 0; k < m; ++k) {
        if (std::fabs(x[i + static_cast<std::size_t>(k)] - x[j + static_cast<std::size_t>(k)]) > r) {
          close = false;
          break;
        }
      }
      if (!close) continue;
      ++cm[i];
      ++cm[j];
      if (j < nm1 &&
          std::fabs(x[i + static_cast<std::size_t>(m)] - x[j + static_cast<std::size_t>(m)]) <= r) {
        ++cm1[i];
        ++cm1[j];
      }
    }
  }

  double phi_m = 0.0;
  for (std::size_t i = 0; i < nm; ++i) phi_m += std::log(static_cast<double>(cm[i]) / static_cast<double>(nm));
  phi_m /= static_cast<double>(nm);

  double phi_m1 = 0.0;
  for (std::size_t i = 0; i < nm1; ++i)
    phi_m1 += std::log(static_cast<double>(cm1[i]) / static_cast<double>(nm1));
  phi_m1 /= static_cast<double>(nm1);

  return phi_m - phi_m1;
}

std::vector<double> difference(std::span<const double> series) {
  if (series.size() < 2) fail(errc::series_too_short, "difference needs length >= 2");
  std::vector<double> out(series.size() - 1);
  for (std::size_t t = 0; t + 1 < series.size(); ++t) out[t] = series[t + 1] - series[t];
  return out;
}

std::vector<double> undifference(double first_value, std::span<const double> diffs) {
  std::vector<double> out;
  out.reserve(diffs.size() + 1);
  out.push_back(first_value);
  double acc = first_value;
  for (double d : diffs) {
    acc += d;
    out.push_back(acc);
  }
  return out;
}

PredictabilityCurve predictability_curve(std::span<const AggregateSeries> aggregates,
                                         const ApEnParams& params, std::size_t window_len) {
  PredictabilityCurve curve;
  for (const AggregateSeries& agg : aggregates) {
    const std::size_t w = std::min(window_len, agg.values.size());
    std::span<const double> window(agg.values.data(), w);
    try {
      PredictabilityRecord rec;
      rec.cls = agg.cls;
      rec.level = agg.group.level;
      rec.group = agg.group.index;
      rec.params = params;
      rec.n = w;
      rec.apen_raw = apen(window, params);
      std::vector<double> diffs = difference(window);
      rec.apen_diff = apen(diffs, params);
      curve.records.push_back(rec);
    } catch (const Error& e) {
      curve.skipped.push_back(std::to_string(agg.group.level) + "/" +
                              std::to_string(agg.group.index) + ": " + e.what());
    }
  }
  return curve;
}

std::string predictability_csv(std::span<const PredictabilityRecord> records) {
  std::ostringstream out;
  out << "class,level,group,apen_raw,apen_diff,m,r_rel,n\n";
  for (const PredictabilityRecord& r : records) {
    out << to_string(r.cls) << ',' << r.level << ',' << r.group << ',' << fmt_double(r.apen_raw)
        << ',' << fmt_double(r.apen_diff) << ',' << r.params.m << ',' << fmt_double(r.params.r_rel)
        << ',' << r.n << '\n';
  }
  return out.str();
}

}  // namespace stlf
