#ifndef LINCO_JUDGE_HPP
#define LINCO_JUDGE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linco/corpus.hpp"
#include "linco/matrix.hpp"

namespace linco {

struct FeaturizerConfig {
    std::vector<int> ngram_sizes{2, 3, 4};
    std::uint32_t dim = 1u << 16;
    std::uint64_t hash_seed = 0x5443414Eu;

    bool operator==(const FeaturizerConfig&) const = default;
};

// Sparse L2-normalized character n-gram counts. Indices are strictly
// increasing; for any non-empty fact the value vector has unit L2 norm.
struct FeatureVector {
    std::vector<std::uint32_t> indices;
    std::vector<double> values;

    std::size_t nnz() const { return indices.size(); }
};

// Hashes character n-grams of the configured sizes into [0, dim), counts
// them and L2-normalizes. Facts shorter than every n-gram size fall back to
// hashing the whole fact as one token so the unit-norm invariant holds.
FeatureVector featurize(std::string_view fact, const FeaturizerConfig& config);

// (log(1+y) - log(1+y_hat))^2. The +1 offset keeps the loss defined at
// zero-month terms.
double loss_logmse(double y, double y_hat);

struct TrainConfig {
    double learning_rate = 1e-3;
    int epochs = 20;
    int batch_size = 32;
    int hidden_size = 64;
    std::uint64_t seed = 0;
    double l2_penalty = 1e-5;
    FeaturizerConfig featurizer;
};

// A trained term-of-penalty regressor. The encoder maps hashed n-gram
// features to a hidden vector; the predictor maps that to a log-space term.
// Judges produced under a shared frozen encoder hold the same encoder
// buffer. Immutable after training; safe to share across threads.
struct VirtualJudge {
    FeaturizerConfig featurizer;
    std::shared_ptr<const Matrix> encoder; // dim x hidden
    std::vector<double> predictor;         // hidden
    double bias = 0.0;
    int group = -1;
    std::uint64_t train_seed = 0;

    // Log-space output u for a featurized fact.
    double forward_log(const FeatureVector& features) const;
};

// max{0, exp(u) - 1} months for the judge's featurization of `fact`.
double predict_term(const VirtualJudge& judge, std::string_view fact);

struct TrainDiagnostics {
    std::vector<double> epoch_loss; // mean data loss per epoch
};

// Mini-batch SGD on mean loss_logmse in log space, seeded and bit
// deterministic per (data, config). With `frozen_encoder` set, the encoder
// is shared read-only and only predictor parameters update. L2 decay is
// applied lazily: per batch it covers the predictor and the encoder rows
// active in that batch.
VirtualJudge train_judge(std::span<const Case> train, const TrainConfig& config,
                         std::shared_ptr<const Matrix> frozen_encoder = nullptr,
                         TrainDiagnostics* diagnostics = nullptr);

} // namespace linco

#endif
