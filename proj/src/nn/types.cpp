#include "trackforge/nn/types.hpp"

#include <cmath>

namespace trackforge::nn {

GradVec zero_grads_like(const std::vector<ParamRef>& params) {
    GradVec out;
    out.reserve(params.size());
    for (const auto& p : params) out.push_back(Mat::Zero(p.value->rows(), p.value->cols()));
    return out;
}

void accumulate(GradVec& into, const GradVec& from) {
    for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

double global_norm(const GradVec& grads) {
    double sq = 0.0;
    for (const auto& g : grads) sq += g.squaredNorm();
    return std::sqrt(sq);
}

void clip_global_norm(GradVec& grads, double max_norm) {
    const double norm = global_norm(grads);
    if (norm > max_norm && norm > 0.0) {
        const double scale = max_norm / norm;
        for (auto& g : grads) g *= scale;
    }
}

Mat glorot_uniform(int rows, int cols, int fan_in, int fan_out, trackforge::Rng& rng) {
    const double limit = std::sqrt(6.0 / (fan_in + fan_out));
    Mat m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) m(i, j) = rng.uniform(-limit, limit);
    }
    return m;
}

LstmLayerWeights make_lstm_layer(int input_dim, int hidden, trackforge::Rng& rng) {
    LstmLayerWeights w;
    w.W = glorot_uniform(4 * hidden, input_dim, input_dim, 4 * hidden, rng);
    w.U = glorot_uniform(4 * hidden, hidden, hidden, 4 * hidden, rng);
    w.b = Mat::Zero(4 * hidden, 1);
    w.b.block(hidden, 0, hidden, 1).setConstant(1.0);  // forget-gate bias
    return w;
}

DenseWeights make_dense(int in_dim, int out_dim, Activation act, trackforge::Rng& rng) {
    DenseWeights d;
    d.W = glorot_uniform(out_dim, in_dim, in_dim, out_dim, rng);
    d.b = Mat::Zero(out_dim, 1);
    d.act = act;
    return d;
}

}  // namespace trackforge::nn
