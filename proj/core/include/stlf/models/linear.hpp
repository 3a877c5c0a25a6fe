#pragma once

#include "stlf/models/model.hpp"

namespace stlf {

/// Ridge regression with unpenalized intercept. lambda = 0 on a
/// rank-deficient design falls back to the minimum-norm least-squares
/// solution instead of failing.
class LinearModel final : public Regressor {
 public:
  Eigen::VectorXd w;
  double b = 0.0;
  double ridge_lambda = 0.0;
  bool rank_deficient = false;

  ModelFamily family() const noexcept override { return ModelFamily::linear; }
  Eigen::Index n_features() const noexcept override { return w.size(); }
  Eigen::VectorXd eval(const Eigen::MatrixXd& x) const override;
};

std::shared_ptr<LinearModel> train_linear(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                          double ridge_lambda, TrainingInfo* info = nullptr);

}  // namespace stlf
