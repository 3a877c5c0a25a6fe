#pragma once

#include "stlf/models/model.hpp"

namespace stlf {

/// One node of a depth-limited regression tree. Leaves have feature = -1 and
/// carry the mean residual of their samples.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;

  bool is_leaf() const noexcept { return feature < 0; }
};

struct RegressionTree {
  std::vector<TreeNode> nodes;

  double eval_row(const Eigen::Ref<const Eigen::RowVectorXd>& row) const;
};

/// Squared-loss gradient boosting: F_0 = mean(y), then shrinkage-weighted
/// trees fit to residuals. Split search is exact over sorted unique feature
/// values; ties resolve to the first feature and lowest threshold.
class GbrtModel final : public Regressor {
 public:
  GbrtParams params;
  double base = 0.0;
  std::vector<RegressionTree> trees;
  std::vector<double> train_mse_per_round;  // index 0 = after F_0
  Eigen::Index n_features_ = 0;

  ModelFamily family() const noexcept override { return ModelFamily::gbrt; }
  Eigen::Index n_features() const noexcept override { return n_features_; }
  Eigen::VectorXd eval(const Eigen::MatrixXd& x) const override;
};

std::shared_ptr<GbrtModel> train_gbrt(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                      const GbrtParams& params, TrainingInfo* info = nullptr);

}  // namespace stlf
