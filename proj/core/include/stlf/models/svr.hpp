#pragma once

#include "stlf/models/model.hpp"

namespace stlf {

/// Epsilon-SVR with RBF kernel, trained by pairwise coordinate (SMO) updates
/// on the 2n-variable dual until the max KKT violation drops below kkt_tol
/// or the pass budget runs out. f(x) = sum_i beta_i k(x_i, x) + bias with
/// beta_i in [-C, C] and sum beta = 0.
class SvrModel final : public Regressor {
 public:
  SvrParams params;
  Eigen::MatrixXd support;  // rows with beta != 0
  Eigen::VectorXd beta;
  double bias = 0.0;

  double kkt_violation = 0.0;  // at termination
  double beta_sum = 0.0;       // over all training points
  long iterations = 0;
  bool converged_flag = true;
  Eigen::Index n_features_ = 0;

  ModelFamily family() const noexcept override { return ModelFamily::svr; }
  Eigen::Index n_features() const noexcept override { return n_features_; }
  Eigen::VectorXd eval(const Eigen::MatrixXd& x) const override;
};

std::shared_ptr<SvrModel> train_svr(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                    const SvrParams& params, TrainingInfo* info = nullptr);

}  // namespace stlf
