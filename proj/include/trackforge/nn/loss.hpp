#pragma once

#include "trackforge/nn/types.hpp"

namespace trackforge::nn {

inline constexpr double kLogFloor = 1e-12;

// -sum_i t_i log(max(s_i, 1e-12)). scores must already be a probability
// vector (softmax output); target is one-hot.
double cross_entropy_loss(const Vec& scores, const Vec& target);

// Gradient of cross_entropy(softmax(logits)) w.r.t. the logits: s - t.
Vec cross_entropy_softmax_grad(const Vec& probs, const Vec& target);

// (1/n) sum (y_i - x_i)^2
double mse_loss(const Vec& pred, const Vec& truth);

// dLoss/dpred for mse_loss: 2/n (pred - truth).
Vec mse_grad(const Vec& pred, const Vec& truth);

}  // namespace trackforge::nn
