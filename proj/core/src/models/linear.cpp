#include "stlf/models/linear.hpp"

#include "stlf/error.hpp"

namespace stlf {

Eigen::VectorXd LinearModel::eval(const Eigen::MatrixXd& x) const {
  return (x * w).array() + b;
}

std::shared_ptr<LinearModel> train_linear(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                          double ridge_lambda, TrainingInfo* info) {
  if (x.rows() < 1 || x.rows() != y.size())
    fail(errc::shape_mismatch, "linear fit needs matching non-empty x, y");
  if (ridge_lambda < 0.0) fail(errc::invalid_params, "ridge lambda must be >= 0");

  // centering keeps the intercept out of the penalty
  const Eigen::RowVectorXd x_mean = x.colwise().mean();
  const double y_mean = y.mean();
  const Eigen::MatrixXd xc = x.rowwise() - x_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;

  auto model = std::make_shared<LinearModel>();
  model->ridge_lambda = ridge_lambda;

  if (ridge_lambda > 0.0) {
    Eigen::MatrixXd gram = xc.transpose() * xc;
    gram.diagonal().array() += ridge_lambda;
    model->w = gram.ldlt().solve(xc.transpose() * yc);
  } else {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(xc);
    model->w = cod.solve(yc);  // minimum-norm solution when rank-deficient
    model->rank_deficient = cod.rank() < std::min(xc.rows(), xc.cols());
  }
  model->b = y_mean - x_mean.dot(model->w);

  if (info) {
    info->epochs_run = 1;
    const Eigen::VectorXd res = model->eval(x) - y;
    info->final_train_loss = res.squaredNorm() / static_cast<double>(x.rows());
    info->converged = true;
  }
  return model;
}

}  // namespace stlf
