#pragma once

#include <cstdint>
#include <string>

#include "trackforge/nn/dense.hpp"
#include "trackforge/nn/lstm.hpp"

namespace trackforge::nn {

// Stacked LSTM with a dense head; the workhorse behind the prediction and
// filtering models and the uni-directional association variant.
struct LstmModel {
    std::vector<LstmLayerWeights> layers;
    DenseWeights head;
    std::string arch;  // "<role>-<layers>x<hidden>"

    int input_dim() const { return layers.front().input(); }
    int hidden() const { return layers.back().hidden(); }
    int output_dim() const { return head.out_dim(); }

    std::vector<ParamRef> params();

    static LstmModel make(const std::string& role, int input_dim, int num_layers, int hidden,
                          int out_dim, Activation act, std::uint64_t seed);
};

// Whole-sequence head outputs per step (O x B). `state` behaves as in
// lstm_forward; top_hidden (if non-null) receives the raw hidden sequence.
std::vector<Mat> model_forward(const LstmModel& m, const std::vector<Mat>& inputs,
                               LstmState* state, LstmTape* tape, std::vector<Mat>* top_hidden);

// One stateful step, batch of one.
Vec model_step(const LstmModel& m, LstmState& state, const Vec& x);

// Mean squared error over all steps, batch columns and output dims of a
// seq-to-seq batch, with full BPTT; gradients accumulate into `grads`
// (aligned with params()). Returns the loss.
double seq_mse_backward(LstmModel& m, const std::vector<Mat>& inputs,
                        const std::vector<Mat>& targets, GradVec& grads);

// Loss only (validation).
double seq_mse_loss(const LstmModel& m, const std::vector<Mat>& inputs,
                    const std::vector<Mat>& targets);

}  // namespace trackforge::nn
