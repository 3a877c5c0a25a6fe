#include "stlf/models/svr.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "stlf/error.hpp"

namespace stlf {

Eigen::VectorXd SvrModel::eval(const Eigen::MatrixXd& x) const {
  Eigen::VectorXd out = Eigen::VectorXd::Constant(x.rows(), bias);
  if (support.rows() == 0) return out;
  const Eigen::VectorXd sv_sqn = support.rowwise().squaredNorm();
  const Eigen::VectorXd x_sqn = x.rowwise().squaredNorm();
  // |a-b|^2 = |a|^2 + |b|^2 - 2 a.b, row-batched
  Eigen::MatrixXd d2 = -2.0 * (x * support.transpose());
  d2.colwise() += x_sqn;
  d2.rowwise() += sv_sqn.transpose();
  out += (-params.gamma * d2.array()).exp().matrix() * beta;
  return out;
}

namespace {

// Dual in a = (alpha, alpha*) with signs s = (+1.., -1..):
//   min 1/2 a'Qa + p'a,  Q_tu = s_t s_u K(t%n, u%n),
//   p_t = eps - y_t (t<n), eps + y_{t-n} (t>=n),
//   s'a = 0, a in [0, C]^{2n};  beta_i = a_i - a_{n+i}.
class SmoSolver {
 public:
  SmoSolver(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const SvrParams& params)
      : x_(x), y_(y), params_(params), n_(x.rows()) {
    sqn_ = x_.rowwise().squaredNorm();
    if (n_ <= kFullKernelLimit) {
      kernel_.resize(n_, n_);
      Eigen::MatrixXd d2 = -2.0 * (x_ * x_.transpose());
      d2.colwise() += sqn_;
      d2.rowwise() += sqn_.transpose();
      kernel_ = (-params_.gamma * d2.array()).exp();
    }
  }

  Eigen::VectorXd kernel_col(Eigen::Index i) const {
    if (kernel_.size() > 0) return kernel_.col(i);
    Eigen::VectorXd d2 = sqn_.array() + sqn_(i) - 2.0 * (x_ * x_.row(i).transpose()).array();
    return (-params_.gamma * d2.array()).exp();
  }

  void solve(SvrModel& model) {
    const Eigen::Index n2 = 2 * n_;
    const double c = params_.c_penalty;
    a_ = Eigen::VectorXd::Zero(n2);
    grad_.resize(n2);
    for (Eigen::Index t = 0; t < n2; ++t)
      grad_(t) = t < n_ ? params_.epsilon - y_(t) : params_.epsilon + y_(t - n_);

    const long max_iters = static_cast<long>(params_.max_passes) * std::max<long>(n_, 1);
    long iter = 0;
    double violation = std::numeric_limits<double>::infinity();
    for (; iter < max_iters; ++iter) {
      auto [i, j, m_up, m_low] = select_pair();
      violation = m_up - m_low;
      if (i < 0 || violation <= params_.kkt_tol) break;

      const double si = sign(i), sj = sign(j);
      const Eigen::VectorXd ki = kernel_col(i % n_);
      const Eigen::VectorXd kj = kernel_col(j % n_);
      double eta = ki(i % n_) + kj(j % n_) - 2.0 * ki(j % n_);
      if (eta <= 1e-12) eta = 1e-12;

      const double room_i = si > 0 ? c - a_(i) : a_(i);
      const double room_j = sj > 0 ? a_(j) : c - a_(j);
      const double mag = std::min(violation / eta, std::min(room_i, room_j));

      a_(i) += si * mag;
      a_(j) -= sj * mag;
      for (Eigen::Index t = 0; t < n2; ++t)
        grad_(t) += sign(t) * mag * (ki(t % n_) - kj(t % n_));
    }

    // recompute the final gap and bias from the free/bound structure
    auto [i, j, m_up, m_low] = select_pair();
    (void)i;
    (void)j;
    model.kkt_violation = std::max(0.0, m_up - m_low);
    model.bias = (m_up + m_low) / 2.0;
    if (!std::isfinite(model.bias)) model.bias = 0.0;  // I_up or I_low drained
    if (!std::isfinite(model.kkt_violation)) model.kkt_violation = 0.0;
    model.iterations = iter;
    model.converged_flag = model.kkt_violation <= params_.kkt_tol;

    Eigen::VectorXd beta_full = a_.head(n_) - a_.tail(n_);
    model.beta_sum = beta_full.sum();
    Eigen::Index n_sv = (beta_full.array() != 0.0).count();
    model.support.resize(n_sv, x_.cols());
    model.beta.resize(n_sv);
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < n_; ++r) {
      if (beta_full(r) != 0.0) {
        model.support.row(k) = x_.row(r);
        model.beta(k) = beta_full(r);
        ++k;
      }
    }
  }

 private:
  static constexpr Eigen::Index kFullKernelLimit = 3000;

  double sign(Eigen::Index t) const { return t < n_ ? 1.0 : -1.0; }

  // first-order maximal-violating pair over I_up / I_low
  std::tuple<Eigen::Index, Eigen::Index, double, double> select_pair() const {
    const double c = params_.c_penalty;
    double m_up = -std::numeric_limits<double>::infinity();
    double m_low = std::numeric_limits<double>::infinity();
    Eigen::Index i = -1, j = -1;
    for (Eigen::Index t = 0; t < 2 * n_; ++t) {
      const double s = sign(t);
      const double v = -s * grad_(t);
      const bool in_up = s > 0 ? a_(t) < c : a_(t) > 0;
      const bool in_low = s > 0 ? a_(t) > 0 : a_(t) < c;
      if (in_up && v > m_up) {
        m_up = v;
        i = t;
      }
      if (in_low && v < m_low) {
        m_low = v;
        j = t;
      }
    }
    return {i, j, m_up, m_low};
  }

  const Eigen::MatrixXd& x_;
  const Eigen::VectorXd& y_;
  SvrParams params_;
  Eigen::Index n_;
  Eigen::VectorXd sqn_;
  Eigen::MatrixXd kernel_;
  Eigen::VectorXd a_;
  Eigen::VectorXd grad_;
};

}  // namespace

std::shared_ptr<SvrModel> train_svr(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                    const SvrParams& params, TrainingInfo* info) {
  if (x.rows() < 1 || x.rows() != y.size())
    fail(errc::shape_mismatch, "svr fit needs matching non-empty x, y");
  if (params.c_penalty <= 0.0 || params.epsilon < 0.0 || params.gamma <= 0.0 ||
      params.max_passes < 1 || params.kkt_tol <= 0.0)
    fail(errc::invalid_params, "svr requires C > 0, epsilon >= 0, gamma > 0, passes >= 1, tol > 0");

  auto model = std::make_shared<SvrModel>();
  model->params = params;
  model->n_features_ = x.cols();
  SmoSolver solver(x, y, params);
  solver.solve(*model);

  if (info) {
    info->epochs_run = static_cast<int>(model->iterations);
    const Eigen::VectorXd res = model->eval(x) - y;
    info->final_train_loss = res.squaredNorm() / static_cast<double>(x.rows());
    info->converged = model->converged_flag;
  }
  return model;
}

}  // namespace stlf
