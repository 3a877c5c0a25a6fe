#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "stlf/series.hpp"
#include "stlf/slots.hpp"

namespace stlf {

/// Raw: target = x(t+M). HorizonDiff: target = x(t+M) - x(t); the anchor
/// x(t) is feature column 0, so predictions reconstruct exactly.
enum class TargetMode { raw, horizon_diff };

const char* to_string(TargetMode mode) noexcept;

struct LagSpec {
  int n_lags = 480;  // ten days of half-hour history
  Horizon horizon = Horizon::one_day();
};

/// Chronological day-fraction split; fractions must be positive and sum to 1.
struct SplitSpec {
  double train = 0.70;
  double val = 0.20;
  double test = 0.10;

  void validate() const;
};

/// Lag-feature matrix with horizon targets. Row i anchors at time t =
/// sample_times[i]; feature column j holds x(t-j).
struct SupervisedDataset {
  Eigen::MatrixXd features;
  Eigen::VectorXd targets;
  std::vector<SlotIndex> sample_times;
  LagSpec spec;
  TargetMode mode = TargetMode::raw;
  SlotIndex series_start;        // day span of the source series; the split
  std::int64_t series_days = 0;  // partitions whole days of this span

  Eigen::Index rows() const { return features.rows(); }

  /// Targets in source units: identity in Raw mode, anchor + diff otherwise.
  Eigen::VectorXd raw_targets() const;
  SlotIndex target_time(Eigen::Index row) const;
};

SupervisedDataset make_lag_dataset(std::span<const double> series, SlotIndex start,
                                   const LagSpec& spec, TargetMode mode);

struct DatasetSplit {
  SupervisedDataset train, val, test;
  // windows straddling a boundary are allowed; these advisory counts say how
  // many val/test feature windows reach back before their partition
  std::size_t val_window_overlap = 0;
  std::size_t test_window_overlap = 0;
};

/// Splits by target day at whole-day boundaries over the source series' day
/// span; falls back to a row-count split when any day partition comes up
/// empty. Samples stay in time order. Throws TooFewSamples below 3 rows.
DatasetSplit chrono_split(const SupervisedDataset& ds, const SplitSpec& spec);

/// Drops samples whose target falls on a weekend (windows may still span
/// weekends). SME weekday forecasting uses this after windowing.
SupervisedDataset drop_weekend_targets(const SupervisedDataset& ds, int epoch_weekday);

/// Per-column standardization fitted on training data only. A zero-sd column
/// degenerates to an identity-shift (scale 1).
struct Scaler {
  Eigen::VectorXd feat_mean;
  Eigen::VectorXd feat_scale;
  double target_mean = 0.0;
  double target_scale = 1.0;
};

Scaler fit_scaler(const SupervisedDataset& train);
Eigen::MatrixXd apply_feature_scaler(const Scaler& s, const Eigen::MatrixXd& x);
Eigen::VectorXd apply_target_scaler(const Scaler& s, const Eigen::VectorXd& y);
Eigen::VectorXd invert_target_scaler(const Scaler& s, const Eigen::VectorXd& y);

/// Optional dump, header "lag_0..lag_{N-1},target,day,slot".
std::string dataset_csv(const SupervisedDataset& ds);

}  // namespace stlf
