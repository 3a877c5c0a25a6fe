#include "stlf/dataset.hpp"

#include <cmath>
#include <sstream>

#include "stlf/csvio.hpp"
#include "stlf/error.hpp"

namespace stlf {

const char* to_string(TargetMode mode) noexcept {
  return mode == TargetMode::raw ? "raw" : "horizon_diff";
}

void SplitSpec::validate() const {
  if (train <= 0.0 || val <= 0.0 || test <= 0.0)
    fail(errc::invalid_params, "split fractions must be positive");
  if (std::fabs(train + val + test - 1.0) > 1e-9)
    fail(errc::invalid_params, "split fractions must sum to 1");
}

Eigen::VectorXd SupervisedDataset::raw_targets() const {
  if (mode == TargetMode::raw) return targets;
  return targets + features.col(0);
}

SlotIndex SupervisedDataset::target_time(Eigen::Index row) const {
  return slot_add(sample_times[static_cast<std::size_t>(row)], spec.horizon.steps);
}

SupervisedDataset make_lag_dataset(std::span<const double> series, SlotIndex start,
                                   const LagSpec& spec, TargetMode mode) {
  if (spec.n_lags < 1 || spec.horizon.steps < 1)
    fail(errc::invalid_params, "n_lags and horizon steps must be >= 1");
  const std::int64_t n = static_cast<std::int64_t>(series.size());
  const std::int64_t lags = spec.n_lags;
  const std::int64_t m = spec.horizon.steps;
  const std::int64_t rows = n - lags - m + 1;
  if (rows < 1)
    fail(errc::series_too_short, "need length >= n_lags + horizon, got " + std::to_string(n));

  SupervisedDataset ds;
  ds.spec = spec;
  ds.mode = mode;
  ds.series_start = start;
  ds.series_days = slot_add(start, n - 1).day - start.day + 1;
  ds.features.resize(rows, lags);
  ds.targets.resize(rows);
  ds.sample_times.reserve(static_cast<std::size_t>(rows));

  for (std::int64_t i = 0; i < rows; ++i) {
    const std::int64_t anchor = lags - 1 + i;  // index of x(t) in `series`
    for (std::int64_t j = 0; j < lags; ++j) ds.features(i, j) = series[static_cast<std::size_t>(anchor - j)];
    const double target = series[static_cast<std::size_t>(anchor + m)];
    ds.targets(i) = mode == TargetMode::raw ? target : target - series[static_cast<std::size_t>(anchor)];
    ds.sample_times.push_back(slot_add(start, anchor));
  }
  return ds;
}

namespace {

SupervisedDataset take_rows(const SupervisedDataset& ds, std::int64_t begin, std::int64_t end) {
  SupervisedDataset out;
  out.spec = ds.spec;
  out.mode = ds.mode;
  out.series_start = ds.series_start;
  out.series_days = ds.series_days;
  const std::int64_t n = end - begin;
  out.features = ds.features.middleRows(begin, n);
  out.targets = ds.targets.segment(begin, n);
  out.sample_times.assign(ds.sample_times.begin() + begin, ds.sample_times.begin() + end);
  return out;
}

}  // namespace

DatasetSplit chrono_split(const SupervisedDataset& ds, const SplitSpec& spec) {
  spec.validate();
  const std::int64_t rows = ds.rows();
  if (rows < 3) fail(errc::too_few_samples, "chrono_split needs at least 3 samples");

  // day-boundary split over the source series' whole day span
  const std::int64_t d0 = ds.series_start.day;
  const std::int64_t days = ds.series_days;
  const std::int64_t train_days = std::llround(static_cast<double>(days) * spec.train);
  const std::int64_t trainval_days = std::llround(static_cast<double>(days) * (spec.train + spec.val));
  const std::int64_t val_start_day = d0 + train_days;
  const std::int64_t test_start_day = d0 + trainval_days;

  std::int64_t b1 = rows, b2 = rows;  // row index where val / test begin
  for (std::int64_t i = 0; i < rows; ++i) {
    const std::int64_t target_day = ds.target_time(i).day;
    if (target_day >= val_start_day && b1 == rows) b1 = i;
    if (target_day >= test_start_day) {
      b2 = i;
      break;
    }
  }

  if (b1 == 0 || b1 == rows || b2 <= b1 || b2 == rows) {
    // some day partition is empty (short or sub-day series): row-count split
    b1 = std::llround(static_cast<double>(rows) * spec.train);
    b2 = std::llround(static_cast<double>(rows) * (spec.train + spec.val));
    b1 = std::max<std::int64_t>(1, std::min(b1, rows - 2));
    b2 = std::max(b1 + 1, std::min(b2, rows - 1));
  }

  DatasetSplit out;
  out.train = take_rows(ds, 0, b1);
  out.val = take_rows(ds, b1, b2);
  out.test = take_rows(ds, b2, rows);

  const std::int64_t lags = ds.spec.n_lags;
  for (std::int64_t i = b1; i < b2; ++i)
    if (ds.sample_times[static_cast<std::size_t>(i)].linear() - (lags - 1) <
        ds.sample_times[static_cast<std::size_t>(b1)].linear())
      ++out.val_window_overlap;
  for (std::int64_t i = b2; i < rows; ++i)
    if (ds.sample_times[static_cast<std::size_t>(i)].linear() - (lags - 1) <
        ds.sample_times[static_cast<std::size_t>(b2)].linear())
      ++out.test_window_overlap;
  return out;
}

SupervisedDataset drop_weekend_targets(const SupervisedDataset& ds, int epoch_weekday) {
  std::vector<std::int64_t> keep;
  for (std::int64_t i = 0; i < ds.rows(); ++i)
    if (is_weekday(ds.target_time(i).day, epoch_weekday)) keep.push_back(i);

  SupervisedDataset out;
  out.spec = ds.spec;
  out.mode = ds.mode;
  out.series_start = ds.series_start;
  out.series_days = ds.series_days;
  out.features.resize(static_cast<Eigen::Index>(keep.size()), ds.features.cols());
  out.targets.resize(static_cast<Eigen::Index>(keep.size()));
  out.sample_times.reserve(keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    out.features.row(static_cast<Eigen::Index>(r)) = ds.features.row(keep[r]);
    out.targets(static_cast<Eigen::Index>(r)) = ds.targets(keep[r]);
    out.sample_times.push_back(ds.sample_times[static_cast<std::size_t>(keep[r])]);
  }
  return out;
}

Scaler fit_scaler(const SupervisedDataset& train) {
  const Eigen::Index n = train.rows();
  if (n < 1) fail(errc::too_few_samples, "cannot fit scaler on empty dataset");
  Scaler s;
  s.feat_mean = train.features.colwise().mean();
  s.feat_scale.resize(train.features.cols());
  for (Eigen::Index j = 0; j < train.features.cols(); ++j) {
    const double sd =
        n > 1 ? std::sqrt((train.features.col(j).array() - s.feat_mean(j)).square().sum() /
                          static_cast<double>(n - 1))
              : 0.0;
    s.feat_scale(j) = sd > 0.0 ? sd : 1.0;  // identity-shift on degenerate columns
  }
  s.target_mean = train.targets.mean();
  const double tsd = n > 1 ? std::sqrt((train.targets.array() - s.target_mean).square().sum() /
                                       static_cast<double>(n - 1))
                           : 0.0;
  s.target_scale = tsd > 0.0 ? tsd : 1.0;
  return s;
}

Eigen::MatrixXd apply_feature_scaler(const Scaler& s, const Eigen::MatrixXd& x) {
  return (x.rowwise() - s.feat_mean.transpose()).array().rowwise() /
         s.feat_scale.transpose().array();
}

Eigen::VectorXd apply_target_scaler(const Scaler& s, const Eigen::VectorXd& y) {
  return (y.array() - s.target_mean) / s.target_scale;
}

Eigen::VectorXd invert_target_scaler(const Scaler& s, const Eigen::VectorXd& y) {
  return y.array() * s.target_scale + s.target_mean;
}

std::string dataset_csv(const SupervisedDataset& ds) {
  std::ostringstream out;
  for (int j = 0; j < ds.spec.n_lags; ++j) out << "lag_" << j << ',';
  out << "target,day,slot\n";
  for (Eigen::Index i = 0; i < ds.rows(); ++i) {
    for (Eigen::Index j = 0; j < ds.features.cols(); ++j) out << fmt_double(ds.features(i, j)) << ',';
    const SlotIndex t = ds.sample_times[static_cast<std::size_t>(i)];
    out << fmt_double(ds.targets(i)) << ',' << t.day << ',' << t.slot << '\n';
  }
  return out.str();
}

}  // namespace stlf
