#include "stlf/models/mlp.hpp"

#include <cmath>
#include <numeric>

#include "stlf/error.hpp"
#include "stlf/rng.hpp"

namespace stlf {

namespace {

Eigen::MatrixXd activate(const Eigen::MatrixXd& z, Activation act) {
  if (act == Activation::relu) return z.cwiseMax(0.0);
  return z.unaryExpr([](double v) { return v > 0.0 ? v : std::expm1(v); });  // ELU, alpha = 1
}

Eigen::MatrixXd activate_deriv(const Eigen::MatrixXd& z, Activation act) {
  if (act == Activation::relu)
    return z.unaryExpr([](double v) { return v > 0.0 ? 1.0 : 0.0; });
  return z.unaryExpr([](double v) { return v > 0.0 ? 1.0 : std::exp(v); });
}

void check_mlp_params(const MlpParams& p) {
  if (p.hidden.empty()) fail(errc::invalid_params, "mlp needs at least one hidden layer");
  for (int h : p.hidden)
    if (h < 1) fail(errc::invalid_params, "mlp hidden sizes must be >= 1");
  if (p.epochs < 0 || p.batch_size < 1 || p.learning_rate <= 0.0)
    fail(errc::invalid_params, "mlp epochs >= 0, batch >= 1, lr > 0 required");
}

}  // namespace

Eigen::VectorXd MlpModel::eval(const Eigen::MatrixXd& x) const {
  Eigen::MatrixXd h = x;
  const std::size_t n_layers = weights.w.size();
  for (std::size_t l = 0; l + 1 < n_layers; ++l) {
    Eigen::MatrixXd z = (h * weights.w[l]).rowwise() + weights.b[l].transpose();
    h = activate(z, params.activation);
  }
  return (h * weights.w.back()).rowwise() + weights.b.back().transpose();
}

MlpWeights mlp_init(const MlpParams& params, Eigen::Index n_in, std::uint64_t seed) {
  check_mlp_params(params);
  std::vector<Eigen::Index> sizes;
  sizes.push_back(n_in);
  for (int h : params.hidden) sizes.push_back(h);
  sizes.push_back(1);

  SplitMix64 rng(seed);
  MlpWeights weights;
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const double span = 1.0 / std::sqrt(static_cast<double>(sizes[l]));
    Eigen::MatrixXd w(sizes[l], sizes[l + 1]);
    for (Eigen::Index r = 0; r < w.rows(); ++r)
      for (Eigen::Index c = 0; c < w.cols(); ++c) w(r, c) = rng.uniform(-span, span);
    weights.w.push_back(std::move(w));
    weights.b.push_back(Eigen::VectorXd::Zero(sizes[l + 1]));
  }
  return weights;
}

double mlp_loss_grad(const MlpParams& params, const MlpWeights& weights, const Eigen::MatrixXd& x,
                     const Eigen::VectorXd& y, MlpWeights* grad) {
  const std::size_t n_layers = weights.w.size();
  const double inv_n = 1.0 / static_cast<double>(x.rows());

  std::vector<Eigen::MatrixXd> acts;  // inputs to each layer
  std::vector<Eigen::MatrixXd> pre;   // pre-activations of hidden layers
  acts.reserve(n_layers);
  acts.push_back(x);
  for (std::size_t l = 0; l + 1 < n_layers; ++l) {
    Eigen::MatrixXd z = (acts.back() * weights.w[l]).rowwise() + weights.b[l].transpose();
    pre.push_back(z);
    acts.push_back(activate(z, params.activation));
  }
  Eigen::VectorXd yhat = (acts.back() * weights.w.back()).rowwise() + weights.b.back().transpose();
  const Eigen::VectorXd err = yhat - y;
  const double loss = err.squaredNorm() * inv_n;
  if (!grad) return loss;

  grad->w.assign(n_layers, Eigen::MatrixXd());
  grad->b.assign(n_layers, Eigen::VectorXd());

  Eigen::MatrixXd delta = 2.0 * inv_n * err;  // column vector as Bx1
  grad->w[n_layers - 1] = acts.back().transpose() * delta;
  grad->b[n_layers - 1] = delta.colwise().sum().transpose();
  Eigen::MatrixXd dh = delta * weights.w.back().transpose();

  for (std::size_t l = n_layers - 1; l-- > 0;) {
    Eigen::MatrixXd dz = dh.cwiseProduct(activate_deriv(pre[l], params.activation));
    grad->w[l] = acts[l].transpose() * dz;
    grad->b[l] = dz.colwise().sum().transpose();
    if (l > 0) dh = dz * weights.w[l].transpose();
  }
  return loss;
}

std::shared_ptr<MlpModel> train_mlp(const MlpParams& params, const Eigen::MatrixXd& x,
                                    const Eigen::VectorXd& y, std::uint64_t seed,
                                    TrainingInfo* info) {
  check_mlp_params(params);
  if (x.rows() < 1 || x.rows() != y.size())
    fail(errc::shape_mismatch, "mlp fit needs matching non-empty x, y");

  auto model = std::make_shared<MlpModel>();
  model->params = params;
  model->n_features_ = x.cols();
  model->weights = mlp_init(params, x.cols(), seed);

  MlpWeights velocity;
  for (std::size_t l = 0; l < model->weights.w.size(); ++l) {
    velocity.w.push_back(Eigen::MatrixXd::Zero(model->weights.w[l].rows(), model->weights.w[l].cols()));
    velocity.b.push_back(Eigen::VectorXd::Zero(model->weights.b[l].size()));
  }

  const Eigen::Index n = x.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 shuffle_rng(mix_seed(seed, 0x6d6c70));

  MlpWeights best = model->weights;
  double best_loss = mlp_loss_grad(params, model->weights, x, y, nullptr);
  if (!std::isfinite(best_loss)) fail(errc::diverged_loss, "mlp loss non-finite at initialization");

  MlpWeights grad;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[static_cast<std::size_t>(shuffle_rng.next_below(i))]);

    for (Eigen::Index begin = 0; begin < n; begin += params.batch_size) {
      const Eigen::Index bsz = std::min<Eigen::Index>(params.batch_size, n - begin);
      Eigen::MatrixXd xb(bsz, x.cols());
      Eigen::VectorXd yb(bsz);
      for (Eigen::Index r = 0; r < bsz; ++r) {
        xb.row(r) = x.row(perm[static_cast<std::size_t>(begin + r)]);
        yb(r) = y(perm[static_cast<std::size_t>(begin + r)]);
      }
      const double batch_loss = mlp_loss_grad(params, model->weights, xb, yb, &grad);
      if (!std::isfinite(batch_loss))
        fail(errc::diverged_loss, "mlp loss diverged at epoch " + std::to_string(epoch));
      for (std::size_t l = 0; l < grad.w.size(); ++l) {
        velocity.w[l] = params.momentum * velocity.w[l] - params.learning_rate * grad.w[l];
        velocity.b[l] = params.momentum * velocity.b[l] - params.learning_rate * grad.b[l];
        model->weights.w[l] += velocity.w[l];
        model->weights.b[l] += velocity.b[l];
      }
    }

    const double train_loss = mlp_loss_grad(params, model->weights, x, y, nullptr);
    if (!std::isfinite(train_loss))
      fail(errc::diverged_loss, "mlp loss diverged after epoch " + std::to_string(epoch));
    if (train_loss < best_loss) {
      best_loss = train_loss;
      best = model->weights;
    }
  }

  model->weights = best;
  if (info) {
    info->epochs_run = params.epochs;
    info->final_train_loss = best_loss;
    info->converged = true;
  }
  return model;
}

}  // namespace stlf
