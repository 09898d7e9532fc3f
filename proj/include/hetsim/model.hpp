#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hetsim/dataset.hpp"

namespace hetsim {

// Flat parameter vector with a monotone update counter.
struct ParamVector {
  std::vector<double> values;
  std::uint64_t version = 0;

  int size() const { return static_cast<int>(values.size()); }
};

struct MiniBatch {
  std::vector<double> features;  // row-major, size x feature_dim
  std::vector<int> labels;
  int size = 0;
  int feature_dim = 0;

  const double* row(int i) const {
    return features.data() + static_cast<std::size_t>(i) * feature_dim;
  }
};

// Mean gradient over one mini-batch, tagged with its provenance.
struct GradientUpdate {
  std::vector<double> grad;
  int worker_id = -1;
  int batch_size = 0;
  std::uint64_t model_version = 0;
};

enum class ModelKind { Softmax, Mlp };

struct ModelSpec {
  ModelKind kind = ModelKind::Softmax;
  int feature_dim = 0;
  int num_classes = 0;
  int hidden_dim = 16;           // MLP only
  std::uint64_t init_seed = 0;   // MLP weight init stream
};

// Softmax regression or a one-hidden-layer tanh MLP, cross-entropy loss
// with mean reduction, 64-bit floats throughout. All methods are pure
// functions of their inputs.
class Model {
 public:
  explicit Model(ModelSpec spec);

  const ModelSpec& spec() const { return spec_; }
  int param_count() const { return param_count_; }

  ParamVector initial_params() const;

  double loss(const ParamVector& params, const MiniBatch& batch) const;
  GradientUpdate gradient(const ParamVector& params, const MiniBatch& batch,
                          int worker_id = -1) const;

  int predict(const ParamVector& params, const double* x) const;
  double accuracy(const ParamVector& params, const Dataset& data,
                  const std::vector<int>& idx) const;
  double dataset_loss(const ParamVector& params, const Dataset& data,
                      const std::vector<int>& idx) const;

 private:
  void check_batch(const ParamVector& params, const MiniBatch& batch) const;
  void class_probs(const ParamVector& params, const double* x,
                   std::vector<double>& probs,
                   std::vector<double>* hidden) const;

  ModelSpec spec_;
  int param_count_ = 0;
};

// One SGD step: theta - lr * grad, version incremented. Rejects non-finite
// gradients before touching the parameters.
ParamVector apply_update(const ParamVector& params, std::span<const double> grad,
                         double lr);

MiniBatch make_batch(const Dataset& data, const std::vector<int>& indices);

}  // namespace hetsim
