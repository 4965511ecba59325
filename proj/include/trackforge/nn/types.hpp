#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "trackforge/common/rng.hpp"

namespace trackforge::nn {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

enum class Activation { Identity, Sigmoid, Softmax };

struct DenseWeights {
    Mat W;  // out x in
    Mat b;  // out x 1
    Activation act = Activation::Identity;

    int in_dim() const { return static_cast<int>(W.cols()); }
    int out_dim() const { return static_cast<int>(W.rows()); }
};

// One LSTM layer. Gate blocks are stacked in the row order [input, forget,
// cell-candidate, output], H rows each.
struct LstmLayerWeights {
    Mat W;  // 4H x D
    Mat U;  // 4H x H
    Mat b;  // 4H x 1

    int hidden() const { return static_cast<int>(U.cols()); }
    int input() const { return static_cast<int>(W.cols()); }
};

// Named view of a trainable tensor; the name keys serialization and the
// Adam/grad pairing.
struct ParamRef {
    std::string name;
    Mat* value;
};

using GradVec = std::vector<Mat>;

GradVec zero_grads_like(const std::vector<ParamRef>& params);
void accumulate(GradVec& into, const GradVec& from);
double global_norm(const GradVec& grads);
// Scales grads down when their global norm exceeds max_norm.
void clip_global_norm(GradVec& grads, double max_norm);

// Glorot-uniform matrix: limit sqrt(6 / (fan_in + fan_out)).
Mat glorot_uniform(int rows, int cols, int fan_in, int fan_out, trackforge::Rng& rng);

// Glorot W/U, zero biases except the forget-gate block at 1.0.
LstmLayerWeights make_lstm_layer(int input_dim, int hidden, trackforge::Rng& rng);
DenseWeights make_dense(int in_dim, int out_dim, Activation act, trackforge::Rng& rng);

}  // namespace trackforge::nn
