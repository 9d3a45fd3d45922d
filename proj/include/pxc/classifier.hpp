#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pxc/core.hpp"

// Multilingual text classifier over (name, description): hashed character
// n-gram features into multinomial logistic regression, trained by
// mini-batch gradient descent. The train/predict/save surface is what the
// rest of the pipeline depends on; heavier backbones can sit behind the
// same interface.
namespace pxc::classifier {

struct FeaturizerConfig {
  uint32_t hash_dims = 1u << 18;  // power of two, >= 2^10
  int char_ngram_min = 3;
  int char_ngram_max = 5;
  bool include_word_unigrams = true;
  bool lowercase = true;
  double name_weight = 2.0;  // multiplies name-derived feature counts

  void validate() const;  // throws InvalidArgument
};

// Sparse feature vector, sorted by index, indices unique and < hash_dims.
using SparseVec = std::vector<std::pair<uint32_t, float>>;

// Deterministic featurization. Text is canonically composed, lowercased
// (when configured), and split on whitespace; each token is padded as
// "^token$" and its character n-grams hashed. Feature strings are
// "c|<gram>" for n-grams and "w|<token>" for word unigrams; the index is
// 64-bit FNV-1a of that string reduced modulo hash_dims.
SparseVec featurize(std::string_view name, std::string_view description,
                    const FeaturizerConfig& config);

struct TrainConfig {
  int epochs = 10;
  double learning_rate = 0.1;  // epoch e uses learning_rate / sqrt(e)
  double l2 = 1e-6;
  uint64_t seed = 42;
  int batch_size = 32;
  FeaturizerConfig featurizer;
};

struct TrainMeta {
  uint64_t seed = 0;
  int epochs = 0;
  double learning_rate = 0;
  double l2 = 0;
  std::string dataset_fingerprint;
};

struct Model {
  FeaturizerConfig featurizer;
  std::vector<std::string> labels;  // distinct brick codes, sorted
  std::vector<std::vector<float>> weights;  // labels x hash_dims
  std::vector<float> biases;                // per label
  TrainMeta train_meta;

  int label_index(std::string_view label) const;  // -1 when absent
  std::string fingerprint() const;  // hex hash over labels + weights
};

struct Prediction {
  std::string label;
  double confidence = 0;               // max of distribution
  std::vector<double> distribution;    // aligned with Model::labels
};

struct EpochLoss {
  int epoch = 0;
  double loss = 0;  // full-dataset mean cross-entropy + (l2/2)*||W||^2
};

// Deterministic given seed: records are put in id-sorted order before the
// seeded shuffle, and accumulation order is fixed. Requires >= 2 distinct
// labels with >= 1 record each, all resolving in the taxonomy.
Model train(const Dataset& dataset, const Taxonomy& taxonomy,
            const TrainConfig& config,
            std::vector<EpochLoss>* epoch_losses = nullptr);

Prediction predict(const Model& model, std::string_view name,
                   std::string_view description);

// Full-batch objective and gradient in double precision, the same math the
// trainer steps on; exposed so finite-difference checks can probe it.
double dataset_loss(const std::vector<SparseVec>& features,
                    const std::vector<int>& label_ids,
                    const std::vector<std::vector<double>>& weights,
                    const std::vector<double>& biases, double l2);
void dataset_loss_grad(const std::vector<SparseVec>& features,
                       const std::vector<int>& label_ids,
                       const std::vector<std::vector<double>>& weights,
                       const std::vector<double>& biases, double l2,
                       std::vector<std::vector<double>>& grad_weights,
                       std::vector<double>& grad_biases);

struct CleanConfig {
  int folds = 5;
  TrainConfig train;
};

struct FlaggedRecord {
  std::string id;
  std::string given_label;
  std::string suspected_label;
  double probability = 0;  // out-of-fold probability of the suspected label
};

struct CleanReport {
  std::vector<FlaggedRecord> flagged;
  size_t kept_count = 0;
  size_t flagged_count = 0;
  std::vector<std::string> warnings;
};

// Simplified confident learning: stratified out-of-fold probabilities,
// per-class thresholds t_j = mean out-of-fold probability of class j over
// records labeled j; a record is flagged when some other class k has
// probability >= t_k and the out-of-fold argmax disagrees with the given
// label. Labels with fewer records than folds are never flagged (warning).
std::pair<Dataset, CleanReport> clean_labels(const Dataset& dataset,
                                             const Taxonomy& taxonomy,
                                             const CleanConfig& config);

// Model file: magic "PXCM", u16 version, length-prefixed metadata JSON,
// little-endian float32 weight rows in label order, trailing 64-bit FNV-1a
// checksum of all prior bytes.
inline constexpr uint16_t kModelFormatVersion = 1;

void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

}  // namespace pxc::classifier
