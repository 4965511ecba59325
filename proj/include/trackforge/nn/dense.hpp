#pragma once

#include "trackforge/nn/types.hpp"

namespace trackforge::nn {

// Y = act(W X + b), columns are batch elements. Softmax normalizes each
// column.
Mat dense_forward(const DenseWeights& w, const Mat& x);

struct DenseGrads {
    Mat dW, db;
};

// Backward through activation and affine map; x and y are the recorded
// forward input/output. Accumulates into grads and returns dLoss/dX.
Mat dense_backward(const DenseWeights& w, const Mat& x, const Mat& y, const Mat& dy,
                   DenseGrads& grads);

Vec softmax(const Vec& logits);

}  // namespace trackforge::nn
