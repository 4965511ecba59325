#include "trackforge/nn/bilstm.hpp"

#include <algorithm>

#include "trackforge/common/error.hpp"

namespace trackforge::nn {

std::vector<ParamRef> BiLstmModel::params() {
    std::vector<ParamRef> out;
    out.reserve((fwd.size() + bwd.size()) * 3 + 2);
    for (std::size_t l = 0; l < fwd.size(); ++l) {
        const std::string prefix = "fwd" + std::to_string(l);
        out.push_back({prefix + ".W", &fwd[l].W});
        out.push_back({prefix + ".U", &fwd[l].U});
        out.push_back({prefix + ".b", &fwd[l].b});
    }
    for (std::size_t l = 0; l < bwd.size(); ++l) {
        const std::string prefix = "bwd" + std::to_string(l);
        out.push_back({prefix + ".W", &bwd[l].W});
        out.push_back({prefix + ".U", &bwd[l].U});
        out.push_back({prefix + ".b", &bwd[l].b});
    }
    out.push_back({"head.W", &head.W});
    out.push_back({"head.b", &head.b});
    return out;
}

BiLstmModel BiLstmModel::make(const std::string& role, int input_dim, int num_layers, int hidden,
                              int out_dim, Activation act, std::uint64_t seed) {
    if (num_layers < 1 || hidden < 1) throw ConfigError("BiLstmModel: layers >= 1, hidden >= 1");
    trackforge::Rng rng(seed);
    BiLstmModel m;
    int d = input_dim;
    for (int l = 0; l < num_layers; ++l) {
        m.fwd.push_back(make_lstm_layer(d, hidden, rng));
        d = hidden;
    }
    d = input_dim;
    for (int l = 0; l < num_layers; ++l) {
        m.bwd.push_back(make_lstm_layer(d, hidden, rng));
        d = hidden;
    }
    m.head = make_dense(2 * hidden, out_dim, act, rng);
    m.arch = role + "-" + std::to_string(num_layers) + "x" + std::to_string(hidden);
    return m;
}

std::vector<Mat> bilstm_forward(const BiLstmModel& m, const std::vector<Mat>& inputs,
                                BiLstmTape* tape) {
    if (inputs.empty()) throw ShapeMismatch("bilstm_forward: empty sequence");
    const std::size_t T = inputs.size();
    std::vector<Mat> reversed(inputs.rbegin(), inputs.rend());

    LstmTape* fwd_tape = tape != nullptr ? &tape->fwd : nullptr;
    LstmTape* bwd_tape = tape != nullptr ? &tape->bwd : nullptr;
    const std::vector<Mat> hf = lstm_forward(m.fwd, inputs, nullptr, fwd_tape);
    const std::vector<Mat> hb = lstm_forward(m.bwd, reversed, nullptr, bwd_tape);

    const int H = m.hidden();
    std::vector<Mat> out(T);
    for (std::size_t t = 0; t < T; ++t) {
        Mat cat(2 * H, inputs[t].cols());
        cat.topRows(H) = hf[t];
        cat.bottomRows(H) = hb[T - 1 - t];
        out[t] = dense_forward(m.head, cat);
        if (tape != nullptr) {
            tape->concat.push_back(cat);
            tape->outputs.push_back(out[t]);
        }
    }
    return out;
}

void bilstm_backward(BiLstmModel& m, const BiLstmTape& tape, const std::vector<Mat>& d_out,
                     GradVec& grads, std::vector<Mat>* d_inputs) {
    const std::size_t T = tape.concat.size();
    if (d_out.size() != T) throw ShapeMismatch("bilstm_backward: d_out length mismatch");
    const int H = m.hidden();

    DenseGrads head_grads{Mat::Zero(m.head.W.rows(), m.head.W.cols()),
                          Mat::Zero(m.head.b.rows(), 1)};
    std::vector<Mat> d_fwd_top(T), d_bwd_top(T);
    for (std::size_t t = 0; t < T; ++t) {
        const Mat d_cat =
            dense_backward(m.head, tape.concat[t], tape.outputs[t], d_out[t], head_grads);
        d_fwd_top[t] = d_cat.topRows(H);
        d_bwd_top[T - 1 - t] = d_cat.bottomRows(H);
    }

    std::vector<LstmLayerGrads> fwd_grads = zero_lstm_grads(m.fwd);
    std::vector<LstmLayerGrads> bwd_grads = zero_lstm_grads(m.bwd);
    std::vector<Mat> d_in_fwd, d_in_bwd;
    lstm_backward(m.fwd, tape.fwd, d_fwd_top, fwd_grads,
                  d_inputs != nullptr ? &d_in_fwd : nullptr);
    lstm_backward(m.bwd, tape.bwd, d_bwd_top, bwd_grads,
                  d_inputs != nullptr ? &d_in_bwd : nullptr);

    // params() layout: fwd layers, bwd layers, head
    const std::size_t Lf = m.fwd.size();
    const std::size_t Lb = m.bwd.size();
    for (std::size_t l = 0; l < Lf; ++l) {
        grads[3 * l] += fwd_grads[l].dW;
        grads[3 * l + 1] += fwd_grads[l].dU;
        grads[3 * l + 2] += fwd_grads[l].db;
    }
    for (std::size_t l = 0; l < Lb; ++l) {
        grads[3 * (Lf + l)] += bwd_grads[l].dW;
        grads[3 * (Lf + l) + 1] += bwd_grads[l].dU;
        grads[3 * (Lf + l) + 2] += bwd_grads[l].db;
    }
    grads[3 * (Lf + Lb)] += head_grads.dW;
    grads[3 * (Lf + Lb) + 1] += head_grads.db;

    if (d_inputs != nullptr) {
        d_inputs->resize(T);
        for (std::size_t t = 0; t < T; ++t) {
            (*d_inputs)[t] = d_in_fwd[t] + d_in_bwd[T - 1 - t];
        }
    }
}

}  // namespace trackforge::nn
