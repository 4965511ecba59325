#include "trackforge/nn/loss.hpp"

#include <cmath>

#include "trackforge/common/error.hpp"

namespace trackforge::nn {

double cross_entropy_loss(const Vec& scores, const Vec& target) {
    if (scores.size() != target.size()) {
        throw ShapeMismatch("cross_entropy_loss: scores and target lengths differ");
    }
    double loss = 0.0;
    for (Eigen::Index i = 0; i < scores.size(); ++i) {
        if (target[i] != 0.0) loss -= target[i] * std::log(std::max(scores[i], kLogFloor));
    }
    return loss;
}

Vec cross_entropy_softmax_grad(const Vec& probs, const Vec& target) {
    if (probs.size() != target.size()) {
        throw ShapeMismatch("cross_entropy_softmax_grad: lengths differ");
    }
    return probs - target;
}

double mse_loss(const Vec& pred, const Vec& truth) {
    if (pred.size() != truth.size() || pred.size() == 0) {
        throw ShapeMismatch("mse_loss: lengths differ or empty");
    }
    return (pred - truth).squaredNorm() / static_cast<double>(pred.size());
}

Vec mse_grad(const Vec& pred, const Vec& truth) {
    if (pred.size() != truth.size() || pred.size() == 0) {
        throw ShapeMismatch("mse_grad: lengths differ or empty");
    }
    return 2.0 / static_cast<double>(pred.size()) * (pred - truth);
}

}  // namespace trackforge::nn
