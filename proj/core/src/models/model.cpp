#include "stlf/models/model.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "stlf/csvio.hpp"
#include "stlf/error.hpp"
#include "stlf/models/gbrt.hpp"
#include "stlf/models/linear.hpp"
#include "stlf/models/lstm.hpp"
#include "stlf/models/mlp.hpp"
#include "stlf/models/svr.hpp"

namespace stlf {

using nlohmann::json;

const char* to_string(ModelFamily family) noexcept {
  switch (family) {
    case ModelFamily::linear: return "linear";
    case ModelFamily::gbrt: return "gbrt";
    case ModelFamily::svr: return "svr";
    case ModelFamily::mlp: return "mlp";
    case ModelFamily::lstm: return "lstm";
  }
  return "linear";
}

ModelFamily family_from_string(const std::string& name) {
  if (name == "linear") return ModelFamily::linear;
  if (name == "gbrt") return ModelFamily::gbrt;
  if (name == "svr") return ModelFamily::svr;
  if (name == "mlp") return ModelFamily::mlp;
  if (name == "lstm") return ModelFamily::lstm;
  fail(errc::invalid_params, "unknown model family: " + name);
}

std::string hyper_to_string(const HyperValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return fmt_double(*d);
  if (const auto* i = std::get_if<int>(&v)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  const auto& list = std::get<std::vector<int>>(v);
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(list[i]);
  }
  return out;
}

const HyperValue* ModelSpec::find(const std::string& name) const {
  for (const auto& [key, value] : hyper)
    if (key == name) return &value;
  return nullptr;
}

void ModelSpec::set(const std::string& name, HyperValue v) {
  for (auto& [key, value] : hyper) {
    if (key == name) {
      value = std::move(v);
      return;
    }
  }
  hyper.emplace_back(name, std::move(v));
}

namespace {

void check_known_keys(const ModelSpec& spec, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : spec.hyper)
    if (!allowed.contains(key))
      fail(errc::invalid_params, std::string("unknown ") + to_string(spec.family) +
                                     " hyperparameter: " + key);
}

double want_double(const ModelSpec& spec, const std::string& name, double fallback) {
  const HyperValue* v = spec.find(name);
  if (!v) return fallback;
  if (const auto* d = std::get_if<double>(v)) return *d;
  if (const auto* i = std::get_if<int>(v)) return static_cast<double>(*i);
  fail(errc::invalid_params, name + " must be numeric");
}

int want_int(const ModelSpec& spec, const std::string& name, int fallback) {
  const HyperValue* v = spec.find(name);
  if (!v) return fallback;
  if (const auto* i = std::get_if<int>(v)) return *i;
  if (const auto* d = std::get_if<double>(v)) {
    if (*d == static_cast<int>(*d)) return static_cast<int>(*d);
  }
  fail(errc::invalid_params, name + " must be an integer");
}

std::string want_string(const ModelSpec& spec, const std::string& name, const std::string& fallback) {
  const HyperValue* v = spec.find(name);
  if (!v) return fallback;
  if (const auto* s = std::get_if<std::string>(v)) return *s;
  fail(errc::invalid_params, name + " must be a string");
}

std::vector<int> want_int_list(const ModelSpec& spec, const std::string& name,
                               const std::vector<int>& fallback) {
  const HyperValue* v = spec.find(name);
  if (!v) return fallback;
  if (const auto* l = std::get_if<std::vector<int>>(v)) return *l;
  if (const auto* i = std::get_if<int>(v)) return {*i};
  fail(errc::invalid_params, name + " must be an integer list");
}

Activation activation_from_string(const std::string& s) {
  if (s == "relu") return Activation::relu;
  if (s == "elu") return Activation::elu;
  fail(errc::invalid_params, "unknown activation: " + s);
}

SeqLayout layout_from_string(const std::string& s) {
  if (s == "flat_lags") return SeqLayout::flat_lags;
  if (s == "day_matrix") return SeqLayout::day_matrix;
  fail(errc::invalid_params, "unknown lstm layout: " + s);
}

}  // namespace

const char* to_string_activation(Activation a) noexcept {
  return a == Activation::relu ? "relu" : "elu";
}

const char* to_string_layout(SeqLayout l) noexcept {
  return l == SeqLayout::flat_lags ? "flat_lags" : "day_matrix";
}

LinearParams linear_params_from(const ModelSpec& spec) {
  check_known_keys(spec, {"lambda"});
  LinearParams p;
  p.ridge_lambda = want_double(spec, "lambda", p.ridge_lambda);
  if (p.ridge_lambda < 0.0) fail(errc::invalid_params, "lambda must be >= 0");
  return p;
}

GbrtParams gbrt_params_from(const ModelSpec& spec) {
  check_known_keys(spec, {"learning_rate", "n_estimators", "max_depth"});
  GbrtParams p;
  p.learning_rate = want_double(spec, "learning_rate", p.learning_rate);
  p.n_estimators = want_int(spec, "n_estimators", p.n_estimators);
  p.max_depth = want_int(spec, "max_depth", p.max_depth);
  if (p.learning_rate <= 0.0 || p.learning_rate > 1.0)
    fail(errc::invalid_params, "gbrt learning_rate must be in (0, 1]");
  if (p.n_estimators < 0) fail(errc::invalid_params, "gbrt n_estimators must be >= 0");
  if (p.max_depth < 1) fail(errc::invalid_params, "gbrt max_depth must be >= 1");
  return p;
}

SvrParams svr_params_from(const ModelSpec& spec) {
  check_known_keys(spec, {"c", "epsilon", "gamma", "max_passes", "kkt_tol"});
  SvrParams p;
  p.c_penalty = want_double(spec, "c", p.c_penalty);
  p.epsilon = want_double(spec, "epsilon", p.epsilon);
  p.gamma = want_double(spec, "gamma", p.gamma);
  p.max_passes = want_int(spec, "max_passes", p.max_passes);
  p.kkt_tol = want_double(spec, "kkt_tol", p.kkt_tol);
  if (p.c_penalty <= 0.0 || p.epsilon < 0.0 || p.gamma <= 0.0 || p.max_passes < 1 || p.kkt_tol <= 0.0)
    fail(errc::invalid_params, "svr requires C > 0, epsilon >= 0, gamma > 0, passes >= 1, tol > 0");
  return p;
}

MlpParams mlp_params_from(const ModelSpec& spec) {
  check_known_keys(spec, {"hidden", "activation", "epochs", "batch", "lr", "momentum"});
  MlpParams p;
  p.hidden = want_int_list(spec, "hidden", p.hidden);
  p.activation = activation_from_string(want_string(spec, "activation", "relu"));
  p.epochs = want_int(spec, "epochs", p.epochs);
  p.batch_size = want_int(spec, "batch", p.batch_size);
  p.learning_rate = want_double(spec, "lr", p.learning_rate);
  p.momentum = want_double(spec, "momentum", p.momentum);
  if (p.hidden.empty()) fail(errc::invalid_params, "mlp needs at least one hidden layer");
  for (int h : p.hidden)
    if (h < 1) fail(errc::invalid_params, "mlp hidden sizes must be >= 1");
  if (p.epochs < 0 || p.batch_size < 1 || p.learning_rate <= 0.0)
    fail(errc::invalid_params, "mlp epochs >= 0, batch >= 1, lr > 0 required");
  return p;
}

LstmParams lstm_params_from(const ModelSpec& spec) {
  check_known_keys(spec, {"blocks", "epochs", "batch", "lr", "momentum", "layout", "clip"});
  LstmParams p;
  p.n_blocks = want_int(spec, "blocks", p.n_blocks);
  p.epochs = want_int(spec, "epochs", p.epochs);
  p.batch_size = want_int(spec, "batch", p.batch_size);
  p.learning_rate = want_double(spec, "lr", p.learning_rate);
  p.momentum = want_double(spec, "momentum", p.momentum);
  p.layout = layout_from_string(want_string(spec, "layout", "day_matrix"));
  p.clip_norm = want_double(spec, "clip", p.clip_norm);
  if (p.n_blocks < 1) fail(errc::invalid_params, "lstm n_blocks must be >= 1");
  if (p.epochs < 0 || p.batch_size < 1 || p.learning_rate <= 0.0 || p.clip_norm <= 0.0)
    fail(errc::invalid_params, "lstm epochs >= 0, batch >= 1, lr > 0, clip > 0 required");
  return p;
}

ModelSpec make_spec(const LinearParams& p, std::uint64_t seed) {
  ModelSpec s;
  s.family = ModelFamily::linear;
  s.seed = seed;
  s.set("lambda", p.ridge_lambda);
  return s;
}

ModelSpec make_spec(const GbrtParams& p, std::uint64_t seed) {
  ModelSpec s;
  s.family = ModelFamily::gbrt;
  s.seed = seed;
  s.set("learning_rate", p.learning_rate);
  s.set("n_estimators", p.n_estimators);
  s.set("max_depth", p.max_depth);
  return s;
}

ModelSpec make_spec(const SvrParams& p, std::uint64_t seed) {
  ModelSpec s;
  s.family = ModelFamily::svr;
  s.seed = seed;
  s.set("c", p.c_penalty);
  s.set("epsilon", p.epsilon);
  s.set("gamma", p.gamma);
  s.set("max_passes", p.max_passes);
  s.set("kkt_tol", p.kkt_tol);
  return s;
}

ModelSpec make_spec(const MlpParams& p, std::uint64_t seed) {
  ModelSpec s;
  s.family = ModelFamily::mlp;
  s.seed = seed;
  s.set("hidden", p.hidden);
  s.set("activation", std::string(to_string_activation(p.activation)));
  s.set("epochs", p.epochs);
  s.set("batch", p.batch_size);
  s.set("lr", p.learning_rate);
  s.set("momentum", p.momentum);
  return s;
}

ModelSpec make_spec(const LstmParams& p, std::uint64_t seed) {
  ModelSpec s;
  s.family = ModelFamily::lstm;
  s.seed = seed;
  s.set("blocks", p.n_blocks);
  s.set("epochs", p.epochs);
  s.set("batch", p.batch_size);
  s.set("lr", p.learning_rate);
  s.set("momentum", p.momentum);
  s.set("layout", std::string(to_string_layout(p.layout)));
  s.set("clip", p.clip_norm);
  return s;
}

TrainedModel fit_model(const ModelSpec& spec, const SupervisedDataset& train) {
  TrainedModel model;
  model.spec = spec;
  model.target_mode = train.mode;

  switch (spec.family) {
    case ModelFamily::linear: {
      const LinearParams p = linear_params_from(spec);
      model.fn = train_linear(train.features, train.targets, p.ridge_lambda, &model.info);
      break;
    }
    case ModelFamily::gbrt: {
      const GbrtParams p = gbrt_params_from(spec);
      model.fn = train_gbrt(train.features, train.targets, p, &model.info);
      break;
    }
    case ModelFamily::svr: {
      const SvrParams p = svr_params_from(spec);
      model.scaler = fit_scaler(train);
      model.fn = train_svr(apply_feature_scaler(*model.scaler, train.features),
                           apply_target_scaler(*model.scaler, train.targets), p, &model.info);
      break;
    }
    case ModelFamily::mlp: {
      const MlpParams p = mlp_params_from(spec);
      model.scaler = fit_scaler(train);
      model.fn = train_mlp(apply_feature_scaler(*model.scaler, train.features),
                           apply_target_scaler(*model.scaler, train.targets), p, spec.seed,
                           &model.info);
      break;
    }
    case ModelFamily::lstm: {
      const LstmParams p = lstm_params_from(spec);
      model.scaler = fit_scaler(train);
      model.fn = train_lstm(apply_feature_scaler(*model.scaler, train.features),
                            apply_target_scaler(*model.scaler, train.targets), p, spec.seed,
                            &model.info);
      break;
    }
  }
  return model;
}

TrainedModel linear_fit(const SupervisedDataset& train, double ridge_lambda) {
  return fit_model(make_spec(LinearParams{ridge_lambda}), train);
}
TrainedModel gbrt_fit(const SupervisedDataset& train, const GbrtParams& params, std::uint64_t seed) {
  return fit_model(make_spec(params, seed), train);
}
TrainedModel svr_fit(const SupervisedDataset& train, const SvrParams& params, std::uint64_t seed) {
  return fit_model(make_spec(params, seed), train);
}
TrainedModel mlp_fit(const SupervisedDataset& train, const MlpParams& params, std::uint64_t seed) {
  return fit_model(make_spec(params, seed), train);
}
TrainedModel lstm_fit(const SupervisedDataset& train, const LstmParams& params, std::uint64_t seed) {
  return fit_model(make_spec(params, seed), train);
}

Eigen::VectorXd predict(const TrainedModel& model, const Eigen::MatrixXd& raw_features) {
  if (!model.fn) fail(errc::invalid_params, "predict on an untrained model");
  if (raw_features.cols() != model.fn->n_features())
    fail(errc::shape_mismatch, "expected " + std::to_string(model.fn->n_features()) +
                                   " feature columns, got " + std::to_string(raw_features.cols()));

  Eigen::VectorXd out;
  if (model.scaler) {
    out = model.fn->eval(apply_feature_scaler(*model.scaler, raw_features));
    out = invert_target_scaler(*model.scaler, out);
  } else {
    out = model.fn->eval(raw_features);
  }
  if (model.target_mode == TargetMode::horizon_diff && raw_features.cols() > 0)
    out += raw_features.col(0);  // add the anchor x(t) back
  return out;
}

// ---------------------------------------------------------------------------
// JSON persistence

namespace {

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j.at(r).at(c).get<double>();
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Eigen::VectorXd vector_from_json(const json& j) {
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j.at(i).get<double>();
  return v;
}

json hyper_to_json(const HyperValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* i = std::get_if<int>(&v)) return *i;
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return std::get<std::vector<int>>(v);
}

HyperValue hyper_from_json(const json& j) {
  if (j.is_number_float()) return j.get<double>();
  if (j.is_number_integer()) return static_cast<int>(j.get<std::int64_t>());
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) return j.get<std::vector<int>>();
  fail(errc::invalid_params, "bad hyperparameter value in model blob");
}

json regressor_to_json(const Regressor& fn) {
  json out;
  if (const auto* lin = dynamic_cast<const LinearModel*>(&fn)) {
    out["w"] = vector_to_json(lin->w);
    out["b"] = lin->b;
    out["lambda"] = lin->ridge_lambda;
    out["rank_deficient"] = lin->rank_deficient;
  } else if (const auto* gbrt = dynamic_cast<const GbrtModel*>(&fn)) {
    out["base"] = gbrt->base;
    out["n_features"] = gbrt->n_features_;
    out["learning_rate"] = gbrt->params.learning_rate;
    out["n_estimators"] = gbrt->params.n_estimators;
    out["max_depth"] = gbrt->params.max_depth;
    json trees = json::array();
    for (const RegressionTree& tree : gbrt->trees) {
      json nodes = json::array();
      for (const TreeNode& nd : tree.nodes)
        nodes.push_back({nd.feature, nd.threshold, nd.left, nd.right, nd.value});
      trees.push_back(std::move(nodes));
    }
    out["trees"] = std::move(trees);
    out["train_mse"] = gbrt->train_mse_per_round;
  } else if (const auto* svr = dynamic_cast<const SvrModel*>(&fn)) {
    out["c"] = svr->params.c_penalty;
    out["epsilon"] = svr->params.epsilon;
    out["gamma"] = svr->params.gamma;
    out["max_passes"] = svr->params.max_passes;
    out["kkt_tol"] = svr->params.kkt_tol;
    out["support"] = matrix_to_json(svr->support);
    out["beta"] = vector_to_json(svr->beta);
    out["bias"] = svr->bias;
    out["kkt_violation"] = svr->kkt_violation;
    out["beta_sum"] = svr->beta_sum;
    out["iterations"] = svr->iterations;
    out["converged"] = svr->converged_flag;
    out["n_features"] = svr->n_features_;
  } else if (const auto* mlp = dynamic_cast<const MlpModel*>(&fn)) {
    out["activation"] = to_string_activation(mlp->params.activation);
    json hidden = json::array();
    for (int h : mlp->params.hidden) hidden.push_back(h);
    out["hidden"] = std::move(hidden);
    json ws = json::array(), bs = json::array();
    for (const auto& w : mlp->weights.w) ws.push_back(matrix_to_json(w));
    for (const auto& b : mlp->weights.b) bs.push_back(vector_to_json(b));
    out["w"] = std::move(ws);
    out["b"] = std::move(bs);
    out["n_features"] = mlp->n_features_;
  } else if (const auto* lstm = dynamic_cast<const LstmModel*>(&fn)) {
    out["blocks"] = lstm->params.n_blocks;
    out["layout"] = to_string_layout(lstm->params.layout);
    out["wx"] = matrix_to_json(lstm->weights.wx);
    out["wh"] = matrix_to_json(lstm->weights.wh);
    out["bias"] = vector_to_json(lstm->weights.bias.transpose());
    out["head_w"] = vector_to_json(lstm->weights.head_w);
    out["head_b"] = lstm->weights.head_b;
    out["n_features"] = lstm->n_features_;
    out["seq_len"] = lstm->seq_len;
    out["step_features"] = lstm->step_features;
  } else {
    fail(errc::invalid_params, "unknown regressor type");
  }
  return out;
}

std::shared_ptr<const Regressor> regressor_from_json(ModelFamily family, const json& j,
                                                     const ModelSpec& spec) {
  switch (family) {
    case ModelFamily::linear: {
      auto m = std::make_shared<LinearModel>();
      m->w = vector_from_json(j.at("w"));
      m->b = j.at("b").get<double>();
      m->ridge_lambda = j.at("lambda").get<double>();
      m->rank_deficient = j.at("rank_deficient").get<bool>();
      return m;
    }
    case ModelFamily::gbrt: {
      auto m = std::make_shared<GbrtModel>();
      m->base = j.at("base").get<double>();
      m->n_features_ = j.at("n_features").get<Eigen::Index>();
      m->params.learning_rate = j.at("learning_rate").get<double>();
      m->params.n_estimators = j.at("n_estimators").get<int>();
      m->params.max_depth = j.at("max_depth").get<int>();
      for (const json& tj : j.at("trees")) {
        RegressionTree tree;
        for (const json& nj : tj) {
          TreeNode nd;
          nd.feature = nj.at(0).get<int>();
          nd.threshold = nj.at(1).get<double>();
          nd.left = nj.at(2).get<int>();
          nd.right = nj.at(3).get<int>();
          nd.value = nj.at(4).get<double>();
          tree.nodes.push_back(nd);
        }
        m->trees.push_back(std::move(tree));
      }
      m->train_mse_per_round = j.at("train_mse").get<std::vector<double>>();
      return m;
    }
    case ModelFamily::svr: {
      auto m = std::make_shared<SvrModel>();
      m->params.c_penalty = j.at("c").get<double>();
      m->params.epsilon = j.at("epsilon").get<double>();
      m->params.gamma = j.at("gamma").get<double>();
      m->params.max_passes = j.at("max_passes").get<int>();
      m->params.kkt_tol = j.at("kkt_tol").get<double>();
      m->support = matrix_from_json(j.at("support"));
      m->beta = vector_from_json(j.at("beta"));
      m->bias = j.at("bias").get<double>();
      m->kkt_violation = j.at("kkt_violation").get<double>();
      m->beta_sum = j.at("beta_sum").get<double>();
      m->iterations = j.at("iterations").get<long>();
      m->converged_flag = j.at("converged").get<bool>();
      m->n_features_ = j.at("n_features").get<Eigen::Index>();
      return m;
    }
    case ModelFamily::mlp: {
      auto m = std::make_shared<MlpModel>();
      m->params = mlp_params_from(spec);
      m->n_features_ = j.at("n_features").get<Eigen::Index>();
      for (const json& wj : j.at("w")) m->weights.w.push_back(matrix_from_json(wj));
      for (const json& bj : j.at("b")) m->weights.b.push_back(vector_from_json(bj));
      return m;
    }
    case ModelFamily::lstm: {
      auto m = std::make_shared<LstmModel>();
      m->params = lstm_params_from(spec);
      m->n_features_ = j.at("n_features").get<Eigen::Index>();
      m->seq_len = j.at("seq_len").get<int>();
      m->step_features = j.at("step_features").get<int>();
      m->weights.wx = matrix_from_json(j.at("wx"));
      m->weights.wh = matrix_from_json(j.at("wh"));
      m->weights.bias = vector_from_json(j.at("bias")).transpose();
      m->weights.head_w = vector_from_json(j.at("head_w"));
      m->weights.head_b = j.at("head_b").get<double>();
      return m;
    }
  }
  fail(errc::invalid_params, "unknown model family in blob");
}

}  // namespace

std::string model_to_json(const TrainedModel& model) {
  json doc;
  doc["format"] = "stlf-model";
  doc["version"] = 1;
  doc["family"] = to_string(model.spec.family);
  doc["seed"] = model.spec.seed;
  json hyper = json::array();
  for (const auto& [key, value] : model.spec.hyper) hyper.push_back({key, hyper_to_json(value)});
  doc["hyper"] = std::move(hyper);
  doc["target_mode"] = to_string(model.target_mode);
  if (model.scaler) {
    doc["scaler"] = {{"feat_mean", vector_to_json(model.scaler->feat_mean)},
                     {"feat_scale", vector_to_json(model.scaler->feat_scale)},
                     {"target_mean", model.scaler->target_mean},
                     {"target_scale", model.scaler->target_scale}};
  } else {
    doc["scaler"] = nullptr;
  }
  doc["info"] = {{"epochs_run", model.info.epochs_run},
                 {"final_train_loss", model.info.final_train_loss},
                 {"converged", model.info.converged}};
  doc["params"] = regressor_to_json(*model.fn);
  return doc.dump(2) + "\n";
}

TrainedModel model_from_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("format", "") != "stlf-model")
    fail(errc::invalid_params, "not an stlf model blob");
  if (doc.at("version").get<int>() != 1)
    fail(errc::invalid_params, "unsupported model blob version");

  TrainedModel model;
  model.spec.family = family_from_string(doc.at("family").get<std::string>());
  model.spec.seed = doc.at("seed").get<std::uint64_t>();
  for (const json& pair : doc.at("hyper"))
    model.spec.hyper.emplace_back(pair.at(0).get<std::string>(), hyper_from_json(pair.at(1)));
  model.target_mode =
      doc.at("target_mode").get<std::string>() == "raw" ? TargetMode::raw : TargetMode::horizon_diff;
  if (!doc.at("scaler").is_null()) {
    Scaler s;
    s.feat_mean = vector_from_json(doc.at("scaler").at("feat_mean"));
    s.feat_scale = vector_from_json(doc.at("scaler").at("feat_scale"));
    s.target_mean = doc.at("scaler").at("target_mean").get<double>();
    s.target_scale = doc.at("scaler").at("target_scale").get<double>();
    model.scaler = std::move(s);
  }
  model.info.epochs_run = doc.at("info").at("epochs_run").get<int>();
  model.info.final_train_loss = doc.at("info").at("final_train_loss").get<double>();
  model.info.converged = doc.at("info").at("converged").get<bool>();
  model.fn = regressor_from_json(model.spec.family, doc.at("params"), model.spec);
  return model;
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
  write_text_file(path, model_to_json(model));
}

TrainedModel load_model(const std::filesystem::path& path) {
  return model_from_json(read_text_file(path));
}

}  // namespace stlf
