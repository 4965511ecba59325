#include "trackforge/nn/adam.hpp"

#include <cmath>

#include "trackforge/common/error.hpp"

namespace trackforge::nn {

AdamState AdamState::init(const std::vector<ParamRef>& params, double lr) {
    AdamState s;
    s.lr = lr;
    s.m = zero_grads_like(params);
    s.v = zero_grads_like(params);
    return s;
}

void adam_step(const std::vector<ParamRef>& params, const GradVec& grads, AdamState& state) {
    if (params.size() != grads.size() || params.size() != state.m.size()) {
        throw ShapeMismatch("adam_step: parameter/gradient/state counts differ");
    }
    state.t += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.t));
    for (std::size_t k = 0; k < params.size(); ++k) {
        Mat& theta = *params[k].value;
        const Mat& g = grads[k];
        if (theta.rows() != g.rows() || theta.cols() != g.cols()) {
            throw ShapeMismatch("adam_step: gradient shape mismatch for " + params[k].name);
        }
        Mat& m = state.m[k];
        Mat& v = state.v[k];
        m = state.beta1 * m + (1.0 - state.beta1) * g;
        v = (state.beta2 * v.array() + (1.0 - state.beta2) * g.array().square()).matrix();
        theta.array() -=
            state.lr * (m.array() / bc1) / ((v.array() / bc2).sqrt() + state.eps);
    }
}

}  // namespace trackforge::nn
