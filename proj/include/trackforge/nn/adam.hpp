#pragma once

#include <cstdint>

#include "trackforge/nn/types.hpp"

namespace trackforge::nn {

struct AdamState {
    double lr = 0.001;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::int64_t t = 0;
    GradVec m;  // first moments, shaped like the parameters
    GradVec v;  // second moments

    static AdamState init(const std::vector<ParamRef>& params, double lr = 0.001);
};

// Bias-corrected Adam update in place; increments state.t.
void adam_step(const std::vector<ParamRef>& params, const GradVec& grads, AdamState& state);

}  // namespace trackforge::nn
