#pragma once

#include <functional>
#include <string>

#include "trackforge/nn/types.hpp"

namespace trackforge::nn {

struct GradCheckReport {
    double max_rel_err = 0.0;
    std::string worst;  // "name(i,j)" of the worst-agreeing entry
};

// Central finite differences against analytic gradients, every scalar
// parameter. loss_fn must recompute the scalar loss from the current
// parameter values (they are perturbed in place and restored).
// Relative error uses max(|analytic|, |numeric|, 1e-4) as denominator so
// near-zero gradients compare on an absolute scale.
GradCheckReport check_gradients(const std::vector<ParamRef>& params,
                                const std::function<double()>& loss_fn, const GradVec& analytic,
                                double eps = 1e-5);

}  // namespace trackforge::nn
