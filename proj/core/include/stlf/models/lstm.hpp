#pragma once

#include "stlf/models/model.hpp"

namespace stlf {

/// Gate blocks are packed [input, forget, output, candidate] along columns.
struct LstmWeights {
  Eigen::MatrixXd wx;      // step_features x 4H
  Eigen::MatrixXd wh;      // H x 4H
  Eigen::RowVectorXd bias; // 4H; forget block initialized to 1
  Eigen::VectorXd head_w;  // H
  double head_b = 0.0;
};

/// Single-layer LSTM over the lag window, final hidden state through an
/// affine head. FlatLags feeds one lag per step; DayMatrix feeds one day
/// (48 slots) per step, oldest day first.
class LstmModel final : public Regressor {
 public:
  LstmParams params;
  LstmWeights weights;
  Eigen::Index n_features_ = 0;
  int seq_len = 0;
  int step_features = 0;

  ModelFamily family() const noexcept override { return ModelFamily::lstm; }
  Eigen::Index n_features() const noexcept override { return n_features_; }
  Eigen::VectorXd eval(const Eigen::MatrixXd& x) const override;
};

/// (seq_len, step_features) implied by the layout for a lag row of `n_lags`
/// columns. DayMatrix requires n_lags to be a whole number of days.
std::pair<int, int> sequence_shape(SeqLayout layout, Eigen::Index n_lags);

/// Step matrices (rows = samples), oldest step first, time-ascending within a
/// step. Column j of `x` holds x(t-j).
std::vector<Eigen::MatrixXd> pack_steps(const Eigen::MatrixXd& x, SeqLayout layout);

LstmWeights lstm_init(const LstmParams& params, int step_features, std::uint64_t seed);

/// Full-batch MSE and, when grad != nullptr, its analytic BPTT gradient
/// (unclipped; clipping is a training-loop concern). Finite-difference
/// checks exercise this function.
double lstm_loss_grad(const LstmParams& params, const LstmWeights& weights,
                      const std::vector<Eigen::MatrixXd>& steps, const Eigen::VectorXd& y,
                      LstmWeights* grad);

std::shared_ptr<LstmModel> train_lstm(const LstmParams& params, const Eigen::MatrixXd& x,
                                      const Eigen::VectorXd& y, std::uint64_t seed,
                                      TrainingInfo* info = nullptr);

}  // namespace stlf
