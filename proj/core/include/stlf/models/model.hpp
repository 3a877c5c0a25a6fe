#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stlf/dataset.hpp"

namespace stlf {

enum class ModelFamily { linear, gbrt, svr, mlp, lstm };

const char* to_string(ModelFamily family) noexcept;
ModelFamily family_from_string(const std::string& name);

/// Hyperparameter value as it appears in grids and model metadata.
using HyperValue = std::variant<double, int, std::string, std::vector<int>>;

std::string hyper_to_string(const HyperValue& v);

struct ModelSpec {
  ModelFamily family = ModelFamily::linear;
  std::vector<std::pair<std::string, HyperValue>> hyper;  // declaration order preserved
  std::uint64_t seed = 0;

  const HyperValue* find(const std::string& name) const;
  void set(const std::string& name, HyperValue v);
};

struct LinearParams {
  double ridge_lambda = 0.0;
};

struct GbrtParams {
  double learning_rate = 0.1;
  int n_estimators = 100;
  int max_depth = 3;
};

struct SvrParams {
  double c_penalty = 1.0;
  double epsilon = 0.1;
  double gamma = 0.1;  // RBF width: k(a,b) = exp(-gamma |a-b|^2)
  int max_passes = 200;
  double kkt_tol = 1e-3;
};

enum class Activation { relu, elu };

struct MlpParams {
  std::vector<int> hidden = {64};
  Activation activation = Activation::relu;
  int epochs = 100;
  int batch_size = 32;
  double learning_rate = 1e-3;
  double momentum = 0.9;
};

enum class SeqLayout { flat_lags, day_matrix };

const char* to_string_activation(Activation a) noexcept;
const char* to_string_layout(SeqLayout l) noexcept;

struct LstmParams {
  int n_blocks = 32;
  int epochs = 50;
  int batch_size = 32;
  double learning_rate = 1e-2;
  double momentum = 0.9;
  SeqLayout layout = SeqLayout::day_matrix;
  double clip_norm = 5.0;
};

// hyper-map <-> struct conversions; the *_from parsers validate names and
// ranges and reject unknown keys
LinearParams linear_params_from(const ModelSpec& spec);
GbrtParams gbrt_params_from(const ModelSpec& spec);
SvrParams svr_params_from(const ModelSpec& spec);
MlpParams mlp_params_from(const ModelSpec& spec);
LstmParams lstm_params_from(const ModelSpec& spec);

ModelSpec make_spec(const LinearParams& p, std::uint64_t seed = 0);
ModelSpec make_spec(const GbrtParams& p, std::uint64_t seed = 0);
ModelSpec make_spec(const SvrParams& p, std::uint64_t seed = 0);
ModelSpec make_spec(const MlpParams& p, std::uint64_t seed = 0);
ModelSpec make_spec(const LstmParams& p, std::uint64_t seed = 0);

/// Learned regression function in the (possibly scaled) feature space it was
/// trained in. Concrete families expose their parameters for inspection.
class Regressor {
 public:
  virtual ~Regressor() = default;
  virtual ModelFamily family() const noexcept = 0;
  virtual Eigen::Index n_features() const noexcept = 0;
  virtual Eigen::VectorXd eval(const Eigen::MatrixXd& x) const = 0;
};

struct TrainingInfo {
  int epochs_run = 0;
  double final_train_loss = 0.0;
  bool converged = true;  // false = SVR hit its pass budget (best iterate kept)
};

/// A fitted model plus everything needed to predict in kWh: the spec it was
/// trained from, the training scaler (when the family needs one), and the
/// dataset's target mode. Immutable after fit.
struct TrainedModel {
  ModelSpec spec;
  std::shared_ptr<const Regressor> fn;
  std::optional<Scaler> scaler;
  TargetMode target_mode = TargetMode::raw;
  TrainingInfo info;
};

/// Trains spec.family on the dataset. SVR/MLP/LSTM inputs and targets are
/// standardized with training statistics; linear and GBRT train on raw
/// values.
TrainedModel fit_model(const ModelSpec& spec, const SupervisedDataset& train);

TrainedModel linear_fit(const SupervisedDataset& train, double ridge_lambda);
TrainedModel gbrt_fit(const SupervisedDataset& train, const GbrtParams& params, std::uint64_t seed);
TrainedModel svr_fit(const SupervisedDataset& train, const SvrParams& params, std::uint64_t seed);
TrainedModel mlp_fit(const SupervisedDataset& train, const MlpParams& params, std::uint64_t seed);
TrainedModel lstm_fit(const SupervisedDataset& train, const LstmParams& params, std::uint64_t seed);

/// Deterministic kWh-space prediction: scales features if a scaler is
/// attached, evaluates, unscales, and in HorizonDiff mode adds the anchor
/// column (feature 0) back. Throws ShapeMismatch on a column-count mismatch.
Eigen::VectorXd predict(const TrainedModel& model, const Eigen::MatrixXd& raw_features);

/// Versioned self-describing JSON blob with the full spec embedded;
/// load(save(m)) reproduces predictions bit-for-bit.
std::string model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const std::string& text);
void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace stlf
