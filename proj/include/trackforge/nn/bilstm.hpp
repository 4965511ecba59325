#pragma once

#include <cstdint>
#include <string>

#include "trackforge/nn/dense.hpp"
#include "trackforge/nn/lstm.hpp"

namespace trackforge::nn {

// Paired forward/backward stacks over a sequence; per-step hidden outputs
// are concatenated [fwd, bwd] (2H) and passed through the head.
struct BiLstmModel {
    std::vector<LstmLayerWeights> fwd;
    std::vector<LstmLayerWeights> bwd;
    DenseWeights head;
    std::string arch;

    int input_dim() const { return fwd.front().input(); }
    int hidden() const { return fwd.back().hidden(); }
    int output_dim() const { return head.out_dim(); }

    std::vector<ParamRef> params();

    static BiLstmModel make(const std::string& role, int input_dim, int num_layers, int hidden,
                            int out_dim, Activation act, std::uint64_t seed);
};

struct BiLstmTape {
    LstmTape fwd;
    LstmTape bwd;                // over the reversed sequence
    std::vector<Mat> concat;     // per original step, 2H x B
    std::vector<Mat> outputs;    // head outputs per step
};

// Per-step score vectors (O x B per step). No carried state: both passes
// consume the whole sequence.
std::vector<Mat> bilstm_forward(const BiLstmModel& m, const std::vector<Mat>& inputs,
                                BiLstmTape* tape);

// d_out[t] = dLoss/d(head output at original step t). Gradients accumulate
// into `grads` (aligned with params()); d_inputs (optional) receives
// dLoss/d(input at t), summed over both directions.
void bilstm_backward(BiLstmModel& m, const BiLstmTape& tape, const std::vector<Mat>& d_out,
                     GradVec& grads, std::vector<Mat>* d_inputs);

}  // namespace trackforge::nn
