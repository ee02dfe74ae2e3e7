#ifndef LINCO_MODEL_HPP
#define LINCO_MODEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "linco/judge.hpp"
#include "linco/matrix.hpp"

// Training internals: explicit gradient computation shared by the judge
// trainer, the adversarial pre-trainer and the finite-difference tests.
namespace linco::model {

// Encoder entries uniform in [-a, a] with a = sqrt(6 / (dim + hidden)).
// This fixed scheme makes the model-misspecification floor reproducible.
Matrix init_encoder(std::uint32_t dim, int hidden, std::uint64_t seed);

// h = E^T phi for one sparse feature vector; `hidden` must be zeroed or is
// overwritten.
void encode(const Matrix& encoder, const FeatureVector& features, std::span<double> hidden);

// Gradients of the batch objective
//   mean_i (u_i - t_i)^2
//   + l2 * (sum over active rows ||E[d]||^2 [encoder_trainable] + ||w||^2)
// where u_i = w . (E^T phi_i) + b and "active" means rows referenced by at
// least one case in the batch.
struct JudgeBatchGrads {
    double loss = 0.0;      // full objective including the l2 part
    double data_loss = 0.0; // mean squared log-space error only
    std::vector<std::uint32_t> encoder_rows; // active rows, ascending
    Matrix encoder_row_grads;                // encoder_rows.size() x hidden
    std::vector<double> predictor;           // hidden
    double bias = 0.0;
};

JudgeBatchGrads judge_batch_grads(const Matrix& encoder, std::span<const double> predictor,
                                  double bias, bool encoder_trainable,
                                  std::span<const FeatureVector> features,
                                  std::span<const std::size_t> batch,
                                  std::span<const double> targets, double l2);

// Loss only, same objective; used by finite-difference checks.
double judge_batch_loss(const Matrix& encoder, std::span<const double> predictor, double bias,
                        bool encoder_trainable, std::span<const FeatureVector> features,
                        std::span<const std::size_t> batch, std::span<const double> targets,
                        double l2);

// Linear K-way group classifier over the hidden vector; pi = softmax(logits).
struct DiscriminatorParams {
    Matrix weights;             // hidden x k
    std::vector<double> biases; // k

    int k() const { return static_cast<int>(biases.size()); }
};

DiscriminatorParams init_discriminator(int hidden, int k);

void disc_logits(const DiscriminatorParams& disc, std::span<const double> hidden,
                 std::span<double> logits);
void softmax(std::span<const double> logits, std::span<double> pi);

// d loss / d logits for one sample. adversarial=false gives the
// discriminator loss L_D, adversarial=true the confusion loss L_A.
void disc_loss_grad_logits(std::span<const double> pi, int label, bool adversarial,
                           std::span<double> grad_logits);

// Mean L_D (or L_A) over a batch of hidden vectors plus gradients.
struct DiscBatchGrads {
    double loss = 0.0;
    Matrix weights;              // hidden x k
    std::vector<double> biases;  // k
    Matrix hidden;               // batch x hidden: d loss / d h_i (for encoder backprop)
};

DiscBatchGrads disc_batch_grads(const DiscriminatorParams& disc,
                                std::span<const double> hidden_batch, std::size_t batch_size,
                                int hidden_size, std::span<const int> labels, bool adversarial);

double disc_batch_loss(const DiscriminatorParams& disc, std::span<const double> hidden_batch,
                       std::size_t batch_size, int hidden_size, std::span<const int> labels,
                       bool adversarial);

} // namespace linco::model

#endif
