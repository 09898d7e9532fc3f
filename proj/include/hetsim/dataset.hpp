#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hetsim {

// Synthetic Gaussian-cluster classification data. Same spec, same bits.
struct DatasetSpec {
  int num_classes = 2;
  int feature_dim = 2;
  int samples_per_class = 100;
  double cluster_spread = 0.1;  // per-coordinate sigma around the class mean
  std::uint64_t seed = 1;
};

struct Dataset {
  int feature_dim = 0;
  int num_classes = 0;
  std::vector<double> features;  // row-major, rows() x feature_dim
  std::vector<int> labels;

  int rows() const { return static_cast<int>(labels.size()); }
  const double* row(int i) const {
    return features.data() + static_cast<std::size_t>(i) * feature_dim;
  }
};

Dataset generate_dataset(const DatasetSpec& spec);

// Stratified split: the last `eval_fraction` of each class goes to eval.
struct DataSplit {
  std::vector<int> train_idx;
  std::vector<int> eval_idx;
};
DataSplit split_dataset(const Dataset& data, double eval_fraction);

// CSV with header f0..f{d-1},label.
void save_dataset_csv(const Dataset& data, const std::string& path);
Dataset load_dataset_csv(const std::string& path);

}  // namespace hetsim
