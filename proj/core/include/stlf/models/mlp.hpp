#pragma once

#include "stlf/models/model.hpp"

namespace stlf {

struct MlpWeights {
  std::vector<Eigen::MatrixXd> w;  // per layer, fan_in x fan_out
  std::vector<Eigen::VectorXd> b;
};

/// Feedforward net with a linear output head, trained on MSE by mini-batch
/// gradient descent with momentum. Weights start from seeded uniform fan-in
/// scaling; the fit keeps the best-on-train snapshot of a fixed epoch budget.
class MlpModel final : public Regressor {
 public:
  MlpParams params;
  MlpWeights weights;
  Eigen::Index n_features_ = 0;

  ModelFamily family() const noexcept override { return ModelFamily::mlp; }
  Eigen::Index n_features() const noexcept override { return n_features_; }
  Eigen::VectorXd eval(const Eigen::MatrixXd& x) const override;
};

MlpWeights mlp_init(const MlpParams& params, Eigen::Index n_in, std::uint64_t seed);

/// Full-batch MSE and, when grad != nullptr, its analytic gradient. This is
/// the function the finite-difference check exercises.
double mlp_loss_grad(const MlpParams& params, const MlpWeights& weights, const Eigen::MatrixXd& x,
                     const Eigen::VectorXd& y, MlpWeights* grad);

std::shared_ptr<MlpModel> train_mlp(const MlpParams& params, const Eigen::MatrixXd& x,
                                    const Eigen::VectorXd& y, std::uint64_t seed,
                                    TrainingInfo* info = nullptr);

}  // namespace stlf
