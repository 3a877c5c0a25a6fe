#include "stlf/models/lstm.hpp"

#include <cmath>
#include <numeric>

#include "stlf/error.hpp"
#include "stlf/rng.hpp"

namespace stlf {

namespace {

Eigen::ArrayXXd sigmoid(const Eigen::ArrayXXd& z) { return 1.0 / (1.0 + (-z).exp()); }

void check_lstm_params(const LstmParams& p) {
  if (p.n_blocks < 1) fail(errc::invalid_params, "lstm n_blocks must be >= 1");
  if (p.epochs < 0 || p.batch_size < 1 || p.learning_rate <= 0.0 || p.clip_norm <= 0.0)
    fail(errc::invalid_params, "lstm epochs >= 0, batch >= 1, lr > 0, clip > 0 required");
}

struct StepTrace {
  Eigen::ArrayXXd gi, gf, go, gc;  // gate activations
  Eigen::ArrayXXd c, tanh_c, h_prev, c_prev;
};

// forward over all steps; traces kept only when backprop will follow
Eigen::VectorXd forward(const LstmWeights& w, const std::vector<Eigen::MatrixXd>& steps,
                        std::vector<StepTrace>* traces) {
  const Eigen::Index b = steps.front().rows();
  const Eigen::Index hdim = w.wh.rows();
  Eigen::ArrayXXd h = Eigen::ArrayXXd::Zero(b, hdim);
  Eigen::ArrayXXd c = Eigen::ArrayXXd::Zero(b, hdim);

  for (const Eigen::MatrixXd& xt : steps) {
    Eigen::MatrixXd z = xt * w.wx + h.matrix() * w.wh;
    z.rowwise() += w.bias;
    StepTrace tr;
    tr.h_prev = h;
    tr.c_prev = c;
    tr.gi = sigmoid(z.leftCols(hdim).array());
    tr.gf = sigmoid(z.middleCols(hdim, hdim).array());
    tr.go = sigmoid(z.middleCols(2 * hdim, hdim).array());
    tr.gc = z.rightCols(hdim).array().tanh();
    c = tr.gf * c + tr.gi * tr.gc;
    tr.c = c;
    tr.tanh_c = c.tanh();
    h = tr.go * tr.tanh_c;
    if (traces) traces->push_back(std::move(tr));
  }
  return (h.matrix() * w.head_w).array() + w.head_b;
}

}  // namespace

std::pair<int, int> sequence_shape(SeqLayout layout, Eigen::Index n_lags) {
  if (layout == SeqLayout::flat_lags) return {static_cast<int>(n_lags), 1};
  if (n_lags % kSlotsPerDay != 0)
    fail(errc::invalid_params,
         "day_matrix layout needs n_lags divisible by " + std::to_string(kSlotsPerDay));
  return {static_cast<int>(n_lags / kSlotsPerDay), kSlotsPerDay};
}

std::vector<Eigen::MatrixXd> pack_steps(const Eigen::MatrixXd& x, SeqLayout layout) {
  const auto [seq_len, step_feat] = sequence_shape(layout, x.cols());
  std::vector<Eigen::MatrixXd> steps;
  steps.reserve(static_cast<std::size_t>(seq_len));
  // lag column j holds x(t-j); step s runs oldest -> newest, features within
  // a step in ascending time
  for (int s = 0; s < seq_len; ++s) {
    Eigen::MatrixXd xt(x.rows(), step_feat);
    for (int f = 0; f < step_feat; ++f) {
      const Eigen::Index lag = static_cast<Eigen::Index>(x.cols()) - 1 -
                               (static_cast<Eigen::Index>(s) * step_feat + f);
      xt.col(f) = x.col(lag);
    }
    steps.push_back(std::move(xt));
  }
  return steps;
}

Eigen::VectorXd LstmModel::eval(const Eigen::MatrixXd& x) const {
  return forward(weights, pack_steps(x, params.layout), nullptr);
}

LstmWeights lstm_init(const LstmParams& params, int step_features, std::uint64_t seed) {
  check_lstm_params(params);
  const int hdim = params.n_blocks;
  const double span = 1.0 / std::sqrt(static_cast<double>(step_features + hdim));
  SplitMix64 rng(seed);

  LstmWeights w;
  w.wx.resize(step_features, 4 * hdim);
  for (Eigen::Index r = 0; r < w.wx.rows(); ++r)
    for (Eigen::Index c = 0; c < w.wx.cols(); ++c) w.wx(r, c) = rng.uniform(-span, span);
  w.wh.resize(hdim, 4 * hdim);
  for (Eigen::Index r = 0; r < w.wh.rows(); ++r)
    for (Eigen::Index c = 0; c < w.wh.cols(); ++c) w.wh(r, c) = rng.uniform(-span, span);
  w.bias = Eigen::RowVectorXd::Zero(4 * hdim);
  w.bias.segment(hdim, hdim).setOnes();  // open forget gates at the start
  const double head_span = 1.0 / std::sqrt(static_cast<double>(hdim));
  w.head_w.resize(hdim);
  for (Eigen::Index r = 0; r < hdim; ++r) w.head_w(r) = rng.uniform(-head_span, head_span);
  w.head_b = 0.0;
  return w;
}

double lstm_loss_grad(const LstmParams& params, const LstmWeights& w,
                      const std::vector<Eigen::MatrixXd>& steps, const Eigen::VectorXd& y,
                      LstmWeights* grad) {
  (void)params;
  const Eigen::Index b = steps.front().rows();
  const Eigen::Index hdim = w.wh.rows();
  const double inv_n = 1.0 / static_cast<double>(b);

  std::vector<StepTrace> traces;
  traces.reserve(steps.size());
  Eigen::VectorXd yhat = forward(w, steps, &traces);
  const Eigen::VectorXd err = yhat - y;
  const double loss = err.squaredNorm() * inv_n;
  if (!grad) return loss;

  grad->wx = Eigen::MatrixXd::Zero(w.wx.rows(), w.wx.cols());
  grad->wh = Eigen::MatrixXd::Zero(w.wh.rows(), w.wh.cols());
  grad->bias = Eigen::RowVectorXd::Zero(w.bias.size());
  grad->head_w = Eigen::VectorXd::Zero(hdim);
  grad->head_b = 0.0;

  const Eigen::VectorXd dyhat = 2.0 * inv_n * err;
  const StepTrace& last = traces.back();
  const Eigen::ArrayXXd h_last = last.go * last.tanh_c;
  grad->head_w = h_last.matrix().transpose() * dyhat;
  grad->head_b = dyhat.sum();

  Eigen::ArrayXXd dh = (dyhat * w.head_w.transpose()).array();
  Eigen::ArrayXXd dc = Eigen::ArrayXXd::Zero(b, hdim);

  for (std::size_t t = traces.size(); t-- > 0;) {
    const StepTrace& tr = traces[t];
    const Eigen::ArrayXXd d_go = dh * tr.tanh_c;
    dc += dh * tr.go * (1.0 - tr.tanh_c.square());
    const Eigen::ArrayXXd d_gi = dc * tr.gc;
    const Eigen::ArrayXXd d_gc = dc * tr.gi;
    const Eigen::ArrayXXd d_gf = dc * tr.c_prev;

    Eigen::MatrixXd dz(b, 4 * hdim);
    dz.leftCols(hdim) = (d_gi * tr.gi * (1.0 - tr.gi)).matrix();
    dz.middleCols(hdim, hdim) = (d_gf * tr.gf * (1.0 - tr.gf)).matrix();
    dz.middleCols(2 * hdim, hdim) = (d_go * tr.go * (1.0 - tr.go)).matrix();
    dz.rightCols(hdim) = (d_gc * (1.0 - tr.gc.square())).matrix();

    grad->wx += steps[t].transpose() * dz;
    grad->wh += tr.h_prev.matrix().transpose() * dz;
    grad->bias += dz.colwise().sum();

    dh = (dz * w.wh.transpose()).array();
    dc = dc * tr.gf;
  }
  return loss;
}

std::shared_ptr<LstmModel> train_lstm(const LstmParams& params, const Eigen::MatrixXd& x,
                                      const Eigen::VectorXd& y, std::uint64_t seed,
                                      TrainingInfo* info) {
  check_lstm_params(params);
  if (x.rows() < 1 || x.rows() != y.size())
    fail(errc::shape_mismatch, "lstm fit needs matching non-empty x, y");

  auto model = std::make_shared<LstmModel>();
  model->params = params;
  model->n_features_ = x.cols();
  const auto [seq_len, step_feat] = sequence_shape(params.layout, x.cols());
  model->seq_len = seq_len;
  model->step_features = step_feat;
  model->weights = lstm_init(params, step_feat, seed);

  LstmWeights velocity;
  velocity.wx = Eigen::MatrixXd::Zero(step_feat, 4 * params.n_blocks);
  velocity.wh = Eigen::MatrixXd::Zero(params.n_blocks, 4 * params.n_blocks);
  velocity.bias = Eigen::RowVectorXd::Zero(4 * params.n_blocks);
  velocity.head_w = Eigen::VectorXd::Zero(params.n_blocks);
  velocity.head_b = 0.0;

  const std::vector<Eigen::MatrixXd> full_steps = pack_steps(x, params.layout);
  LstmWeights best = model->weights;
  double best_loss = lstm_loss_grad(params, model->weights, full_steps, y, nullptr);
  if (!std::isfinite(best_loss)) fail(errc::diverged_loss, "lstm loss non-finite at initialization");

  const Eigen::Index n = x.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 shuffle_rng(mix_seed(seed, 0x6c73746d));

  LstmWeights grad;
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
      const double batch_loss =
          lstm_loss_grad(params, model->weights, pack_steps(xb, params.layout), yb, &grad);
      if (!std::isfinite(batch_loss))
        fail(errc::diverged_loss, "lstm loss diverged at epoch " + std::to_string(epoch));

      const double norm =
          std::sqrt(grad.wx.squaredNorm() + grad.wh.squaredNorm() + grad.bias.squaredNorm() +
                    grad.head_w.squaredNorm() + grad.head_b * grad.head_b);
      const double scale = norm > params.clip_norm ? params.clip_norm / norm : 1.0;

      velocity.wx = params.momentum * velocity.wx - params.learning_rate * scale * grad.wx;
      velocity.wh = params.momentum * velocity.wh - params.learning_rate * scale * grad.wh;
      velocity.bias = params.momentum * velocity.bias - params.learning_rate * scale * grad.bias;
      velocity.head_w = params.momentum * velocity.head_w - params.learning_rate * scale * grad.head_w;
      velocity.head_b = params.momentum * velocity.head_b - params.learning_rate * scale * grad.head_b;
      model->weights.wx += velocity.wx;
      model->weights.wh += velocity.wh;
      model->weights.bias += velocity.bias;
      model->weights.head_w += velocity.head_w;
      model->weights.head_b += velocity.head_b;
    }

    const double train_loss = lstm_loss_grad(params, model->weights, full_steps, y, nullptr);
    if (!std::isfinite(train_loss))
      fail(errc::diverged_loss, "lstm loss diverged after epoch " + std::to_string(epoch));
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
