#include "trackforge/nn/model.hpp"

#include "trackforge/common/error.hpp"

namespace trackforge::nn {

std::vector<ParamRef> LstmModel::params() {
    std::vector<ParamRef> out;
    out.reserve(layers.size() * 3 + 2);
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const std::string prefix = "lstm" + std::to_string(l);
        out.push_back({prefix + ".W", &layers[l].W});
        out.push_back({prefix + ".U", &layers[l].U});
        out.push_back({prefix + ".b", &layers[l].b});
    }
    out.push_back({"head.W", &head.W});
    out.push_back({"head.b", &head.b});
    return out;
}

LstmModel LstmModel::make(const std::string& role, int input_dim, int num_layers, int hidden,
                          int out_dim, Activation act, std::uint64_t seed) {
    if (num_layers < 1 || hidden < 1) throw ConfigError("LstmModel: layers >= 1, hidden >= 1");
    trackforge::Rng rng(seed);
    LstmModel m;
    int d = input_dim;
    for (int l = 0; l < num_layers; ++l) {
        m.layers.push_back(make_lstm_layer(d, hidden, rng));
        d = hidden;
    }
    m.head = make_dense(hidden, out_dim, act, rng);
    m.arch = role + "-" + std::to_string(num_layers) + "x" + std::to_string(hidden);
    return m;
}

std::vector<Mat> model_forward(const LstmModel& m, const std::vector<Mat>& inputs,
                               LstmState* state, LstmTape* tape, std::vector<Mat>* top_hidden) {
    std::vector<Mat> top = lstm_forward(m.layers, inputs, state, tape);
    std::vector<Mat> out(top.size());
    for (std::size_t t = 0; t < top.size(); ++t) out[t] = dense_forward(m.head, top[t]);
    if (top_hidden != nullptr) *top_hidden = std::move(top);
    return out;
}

Vec model_step(const LstmModel& m, LstmState& state, const Vec& x) {
    if (state.empty()) state = LstmState::zeros(m.layers, 1);
    const std::vector<Mat> out = model_forward(m, {x}, &state, nullptr, nullptr);
    return out.front().col(0);
}

namespace {

// params() layout: 3 tensors per LSTM layer, then head W and b.
void add_model_grads(const LstmModel& m, const std::vector<LstmLayerGrads>& lstm_grads,
                     const DenseGrads& head_grads, GradVec& out) {
    const std::size_t L = m.layers.size();
    for (std::size_t l = 0; l < L; ++l) {
        out[3 * l] += lstm_grads[l].dW;
        out[3 * l + 1] += lstm_grads[l].dU;
        out[3 * l + 2] += lstm_grads[l].db;
    }
    out[3 * L] += head_grads.dW;
    out[3 * L + 1] += head_grads.db;
}

}  // namespace

double seq_mse_backward(LstmModel& m, const std::vector<Mat>& inputs,
                        const std::vector<Mat>& targets, GradVec& grads) {
    if (inputs.size() != targets.size() || inputs.empty()) {
        throw ShapeMismatch("seq_mse_backward: input/target step counts differ");
    }
    LstmTape tape;
    std::vector<Mat> top;
    const std::vector<Mat> preds = model_forward(m, inputs, nullptr, &tape, &top);

    const double count = static_cast<double>(preds.size()) *
                         static_cast<double>(preds.front().size());
    double loss = 0.0;
    DenseGrads head_grads{Mat::Zero(m.head.W.rows(), m.head.W.cols()),
                          Mat::Zero(m.head.b.rows(), 1)};
    std::vector<Mat> d_top(preds.size());
    for (std::size_t t = 0; t < preds.size(); ++t) {
        const Mat diff = preds[t] - targets[t];
        loss += diff.squaredNorm();
        const Mat dy = 2.0 / count * diff;
        d_top[t] = dense_backward(m.head, top[t], preds[t], dy, head_grads);
    }
    loss /= count;

    std::vector<LstmLayerGrads> lstm_grads = zero_lstm_grads(m.layers);
    lstm_backward(m.layers, tape, d_top, lstm_grads, nullptr);
    add_model_grads(m, lstm_grads, head_grads, grads);
    return loss;
}

double seq_mse_loss(const LstmModel& m, const std::vector<Mat>& inputs,
                    const std::vector<Mat>& targets) {
    if (inputs.size() != targets.size() || inputs.empty()) {
        throw ShapeMismatch("seq_mse_loss: input/target step counts differ");
    }
    const std::vector<Mat> preds = model_forward(m, inputs, nullptr, nullptr, nullptr);
    double loss = 0.0;
    double count = 0.0;
    for (std::size_t t = 0; t < preds.size(); ++t) {
        loss += (preds[t] - targets[t]).squaredNorm();
        count += static_cast<double>(preds[t].size());
    }
    return loss / count;
}

}  // namespace trackforge::nn
