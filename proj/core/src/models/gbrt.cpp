#include "stlf/models/gbrt.hpp"

#include <algorithm>
#include <numeric>

#include "stlf/error.hpp"

namespace stlf {

double RegressionTree::eval_row(const Eigen::Ref<const Eigen::RowVectorXd>& row) const {
  int node = 0;
  while (!nodes[static_cast<std::size_t>(node)].is_leaf()) {
    const TreeNode& nd = nodes[static_cast<std::size_t>(node)];
    node = row(nd.feature) <= nd.threshold ? nd.left : nd.right;
  }
  return nodes[static_cast<std::size_t>(node)].value;
}

Eigen::VectorXd GbrtModel::eval(const Eigen::MatrixXd& x) const {
  Eigen::VectorXd out = Eigen::VectorXd::Constant(x.rows(), base);
  for (const RegressionTree& tree : trees)
    for (Eigen::Index i = 0; i < x.rows(); ++i) out(i) += params.learning_rate * tree.eval_row(x.row(i));
  return out;
}

namespace {

// scratch for growing one tree level-wise; reused across boosting rounds
struct TreeBuilder {
  const Eigen::MatrixXd& x;
  const std::vector<std::vector<int>>& order;  // per feature, sample indices sorted by value

  std::vector<int> node_of;  // sample -> open node id, -1 once settled in a leaf

  // per open node, indexed by node id
  struct NodeStats {
    double sum = 0.0;
    int count = 0;
    double best_metric = 0.0;
    int best_feature = -1;
    double best_threshold = 0.0;
    bool open = false;
    // per-feature scan state
    double left_sum = 0.0;
    int left_count = 0;
    double prev_value = 0.0;
    bool has_prev = false;
  };

  RegressionTree grow(const Eigen::VectorXd& residual, int max_depth) {
    const Eigen::Index n = x.rows();
    RegressionTree tree;
    tree.nodes.push_back(TreeNode{});
    node_of.assign(static_cast<std::size_t>(n), 0);

    std::vector<NodeStats> stats(1);
    stats[0].open = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      stats[0].sum += residual(i);
      stats[0].count += 1;
    }

    for (int depth = 0; depth < max_depth; ++depth) {
      bool any_open = false;
      for (const NodeStats& s : stats) any_open = any_open || s.open;
      if (!any_open) break;

      // one pass per feature over the presorted order, accumulating left
      // prefix stats for every open node simultaneously
      for (int j = 0; j < static_cast<int>(x.cols()); ++j) {
        for (NodeStats& s : stats) {
          s.left_sum = 0.0;
          s.left_count = 0;
          s.has_prev = false;
        }
        for (int i : order[static_cast<std::size_t>(j)]) {
          const int node = node_of[static_cast<std::size_t>(i)];
          if (node < 0 || !stats[static_cast<std::size_t>(node)].open) continue;
          NodeStats& s = stats[static_cast<std::size_t>(node)];
          const double v = x(i, j);
          if (s.has_prev && v != s.prev_value && s.left_count > 0 && s.left_count < s.count) {
            const double right_sum = s.sum - s.left_sum;
            const int right_count = s.count - s.left_count;
            const double metric = s.left_sum * s.left_sum / s.left_count +
                                  right_sum * right_sum / right_count;
            if (metric > s.best_metric) {
              s.best_metric = metric;
              s.best_feature = j;
              double thr = s.prev_value + (v - s.prev_value) / 2.0;
              if (!(thr < v)) thr = s.prev_value;  // keep threshold strictly below v
              s.best_threshold = thr;
            }
          }
          s.left_sum += residual(i);
          s.left_count += 1;
          s.prev_value = v;
          s.has_prev = true;
        }
      }

      // materialize the winning splits; nodes without a real gain become leaves
      std::vector<int> left_child(stats.size(), -1), right_child(stats.size(), -1);
      bool split_any = false;
      const std::size_t n_before = stats.size();
      for (std::size_t id = 0; id < n_before; ++id) {
        NodeStats& s = stats[id];
        if (!s.open) continue;
        const double parent_metric = s.sum * s.sum / s.count;
        if (s.best_feature >= 0 && s.best_metric > parent_metric + 1e-12 * (1.0 + parent_metric)) {
          TreeNode& nd = tree.nodes[id];
          nd.feature = s.best_feature;
          nd.threshold = s.best_threshold;
          nd.left = static_cast<int>(tree.nodes.size());
          nd.right = nd.left + 1;
          tree.nodes.push_back(TreeNode{});
          tree.nodes.push_back(TreeNode{});
          left_child[id] = nd.left;
          right_child[id] = nd.right;
          split_any = true;
        } else {
          tree.nodes[id].value = s.sum / s.count;
          s.open = false;
        }
        s.best_feature = -1;
        s.best_metric = 0.0;
      }
      if (!split_any) break;

      stats.resize(tree.nodes.size());
      for (Eigen::Index i = 0; i < n; ++i) {
        int& node = node_of[static_cast<std::size_t>(i)];
        if (node < 0) continue;
        const std::size_t id = static_cast<std::size_t>(node);
        if (id < n_before && left_child[id] >= 0) {
          const TreeNode& nd = tree.nodes[id];
          node = x(i, nd.feature) <= nd.threshold ? nd.left : nd.right;
          NodeStats& child = stats[static_cast<std::size_t>(node)];
          child.open = true;
          child.sum += residual(i);
          child.count += 1;
        } else {
          node = -1;  // settled in a leaf this level
        }
      }
    }

    // depth budget exhausted: any still-open node becomes a leaf
    for (std::size_t id = 0; id < stats.size(); ++id)
      if (stats[id].open) tree.nodes[id].value = stats[id].sum / stats[id].count;
    return tree;
  }
};

}  // namespace

std::shared_ptr<GbrtModel> train_gbrt(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                      const GbrtParams& params, TrainingInfo* info) {
  if (x.rows() < 1 || x.rows() != y.size())
    fail(errc::shape_mismatch, "gbrt fit needs matching non-empty x, y");
  if (params.learning_rate <= 0.0 || params.learning_rate > 1.0)
    fail(errc::invalid_params, "gbrt learning_rate must be in (0, 1]");
  if (params.n_estimators < 0) fail(errc::invalid_params, "gbrt n_estimators must be >= 0");
  if (params.max_depth < 1) fail(errc::invalid_params, "gbrt max_depth must be >= 1");

  const Eigen::Index n = x.rows();
  auto model = std::make_shared<GbrtModel>();
  model->params = params;
  model->n_features_ = x.cols();
  model->base = y.mean();

  std::vector<std::vector<int>> order(static_cast<std::size_t>(x.cols()));
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    auto& ord = order[static_cast<std::size_t>(j)];
    ord.resize(static_cast<std::size_t>(n));
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return x(a, j) < x(b, j); });
  }

  Eigen::VectorXd fitted = Eigen::VectorXd::Constant(n, model->base);
  auto mse = [&]() { return (y - fitted).squaredNorm() / static_cast<double>(n); };
  model->train_mse_per_round.push_back(mse());

  TreeBuilder builder{x, order, {}};
  for (int round = 0; round < params.n_estimators; ++round) {
    const Eigen::VectorXd residual = y - fitted;
    RegressionTree tree = builder.grow(residual, params.max_depth);
    for (Eigen::Index i = 0; i < n; ++i)
      fitted(i) += params.learning_rate * tree.eval_row(x.row(i));
    model->trees.push_back(std::move(tree));
    model->train_mse_per_round.push_back(mse());
  }

  if (info) {
    info->epochs_run = params.n_estimators;
    info->final_train_loss = model->train_mse_per_round.back();
    info->converged = true;
  }
  return model;
}

}  // namespace stlf
