#pragma once

#include <vector>

#include "trackforge/nn/types.hpp"

namespace trackforge::nn {

// Carried (h, c) per layer; columns are batch elements. Owned by whoever is
// streaming (tracks carry one of these across cycles).
struct LstmState {
    std::vector<Mat> h;
    std::vector<Mat> c;

    static LstmState zeros(const std::vector<LstmLayerWeights>& layers, int batch);
    bool empty() const { return h.empty(); }
};

// Per-layer gate caches recorded during the forward pass; everything the
// reverse sweep needs.
struct LstmLayerTape {
    std::vector<Mat> i, f, g, o, c, tanh_c, h;
};

struct LstmTape {
    std::vector<Mat> inputs;  // layer-0 inputs per step, D x B
    std::vector<LstmLayerTape> layers;
    LstmState initial;
    int steps = 0;
    int batch = 0;
};

// One cell step: gates over W x + U h + b, c' = f.c + i.g, h' = o.tanh(c').
void lstm_cell_forward(const LstmLayerWeights& w, const Mat& x, const Mat& h_prev,
                       const Mat& c_prev, Mat& h_out, Mat& c_out);

// Stacked forward over a sequence of D x B inputs. Returns the top layer's
// hidden output per step. `state` (if non-null) supplies the carried state
// and receives the final one, enabling stateful per-track stepping; null
// means zero initial state. `tape` (if non-null) records caches for BPTT.
std::vector<Mat> lstm_forward(const std::vector<LstmLayerWeights>& layers,
                              const std::vector<Mat>& inputs, LstmState* state, LstmTape* tape);

struct LstmLayerGrads {
    Mat dW, dU, db;
};

std::vector<LstmLayerGrads> zero_lstm_grads(const std::vector<LstmLayerWeights>& layers);

// Exact reverse-mode sweep. d_top[t] is dLoss/d(top hidden at t); gradients
// are accumulated (+=) into `grads`; when d_inputs is non-null it receives
// dLoss/d(layer-0 input) per step.
void lstm_backward(const std::vector<LstmLayerWeights>& layers, const LstmTape& tape,
                   const std::vector<Mat>& d_top, std::vector<LstmLayerGrads>& grads,
                   std::vector<Mat>* d_inputs);

}  // namespace trackforge::nn
