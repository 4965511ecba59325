#include "trackforge/nn/lstm.hpp"

#include <string>

#include "trackforge/common/error.hpp"

namespace trackforge::nn {

namespace {

inline Mat sigmoid(const Mat& x) { return ((-x.array()).exp() + 1.0).inverse().matrix(); }

}  // namespace

LstmState LstmState::zeros(const std::vector<LstmLayerWeights>& layers, int batch) {
    LstmState s;
    s.h.reserve(layers.size());
    s.c.reserve(layers.size());
    for (const auto& layer : layers) {
        s.h.push_back(Mat::Zero(layer.hidden(), batch));
        s.c.push_back(Mat::Zero(layer.hidden(), batch));
    }
    return s;
}

void lstm_cell_forward(const LstmLayerWeights& w, const Mat& x, const Mat& h_prev,
                       const Mat& c_prev, Mat& h_out, Mat& c_out) {
    if (x.rows() != w.input() || h_prev.rows() != w.hidden() || c_prev.rows() != w.hidden()) {
        throw ShapeMismatch("lstm_cell_forward: input/state dims do not match the layer");
    }
    const int H = w.hidden();
    Mat a = w.W * x + w.U * h_prev;
    a.colwise() += Eigen::VectorXd(w.b.col(0));
    const Mat i = sigmoid(a.topRows(H));
    const Mat f = sigmoid(a.middleRows(H, H));
    const Mat g = a.middleRows(2 * H, H).array().tanh().matrix();
    const Mat o = sigmoid(a.bottomRows(H));
    c_out = (f.array() * c_prev.array() + i.array() * g.array()).matrix();
    h_out = (o.array() * c_out.array().tanh()).matrix();
}

std::vector<Mat> lstm_forward(const std::vector<LstmLayerWeights>& layers,
                              const std::vector<Mat>& inputs, LstmState* state, LstmTape* tape) {
    if (inputs.empty()) throw ShapeMismatch("lstm_forward: empty sequence");
    const int T = static_cast<int>(inputs.size());
    const int B = static_cast<int>(inputs.front().cols());
    const int L = static_cast<int>(layers.size());

    LstmState local = (state != nullptr && !state->empty()) ? *state
                                                            : LstmState::zeros(layers, B);
    if (tape != nullptr) {
        tape->inputs = inputs;
        tape->initial = local;
        tape->steps = T;
        tape->batch = B;
        tape->layers.assign(static_cast<std::size_t>(L), LstmLayerTape{});
        for (auto& lt : tape->layers) {
            lt.i.resize(static_cast<std::size_t>(T));
            lt.f.resize(static_cast<std::size_t>(T));
            lt.g.resize(static_cast<std::size_t>(T));
            lt.o.resize(static_cast<std::size_t>(T));
            lt.c.resize(static_cast<std::size_t>(T));
            lt.tanh_c.resize(static_cast<std::size_t>(T));
            lt.h.resize(static_cast<std::size_t>(T));
        }
    }

    std::vector<Mat> top(static_cast<std::size_t>(T));
    Mat x;
    for (int t = 0; t < T; ++t) {
        x = inputs[static_cast<std::size_t>(t)];
        for (int l = 0; l < L; ++l) {
            const auto& w = layers[static_cast<std::size_t>(l)];
            if (x.rows() != w.input()) {
                throw ShapeMismatch("lstm_forward: layer " + std::to_string(l) + " expects " +
                                    std::to_string(w.input()) + " inputs, got " +
                                    std::to_string(x.rows()));
            }
            const int H = w.hidden();
            Mat a = w.W * x + w.U * local.h[static_cast<std::size_t>(l)];
            a.colwise() += Eigen::VectorXd(w.b.col(0));
            Mat i = sigmoid(a.topRows(H));
            Mat f = sigmoid(a.middleRows(H, H));
            Mat g = a.middleRows(2 * H, H).array().tanh().matrix();
            Mat o = sigmoid(a.bottomRows(H));
            Mat c = (f.array() * local.c[static_cast<std::size_t>(l)].array() +
                     i.array() * g.array())
                        .matrix();
            Mat tc = c.array().tanh().matrix();
            Mat h = (o.array() * tc.array()).matrix();
            if (tape != nullptr) {
                auto& lt = tape->layers[static_cast<std::size_t>(l)];
                lt.i[static_cast<std::size_t>(t)] = i;
                lt.f[static_cast<std::size_t>(t)] = f;
                lt.g[static_cast<std::size_t>(t)] = g;
                lt.o[static_cast<std::size_t>(t)] = o;
                lt.c[static_cast<std::size_t>(t)] = c;
                lt.tanh_c[static_cast<std::size_t>(t)] = tc;
                lt.h[static_cast<std::size_t>(t)] = h;
            }
            local.h[static_cast<std::size_t>(l)] = h;
            local.c[static_cast<std::size_t>(l)] = std::move(c);
            x = local.h[static_cast<std::size_t>(l)];
        }
        top[static_cast<std::size_t>(t)] = x;
    }
    if (state != nullptr) *state = std::move(local);
    return top;
}

std::vector<LstmLayerGrads> zero_lstm_grads(const std::vector<LstmLayerWeights>& layers) {
    std::vector<LstmLayerGrads> out;
    out.reserve(layers.size());
    for (const auto& w : layers) {
        out.push_back({Mat::Zero(w.W.rows(), w.W.cols()), Mat::Zero(w.U.rows(), w.U.cols()),
                       Mat::Zero(w.b.rows(), 1)});
    }
    return out;
}

void lstm_backward(const std::vector<LstmLayerWeights>& layers, const LstmTape& tape,
                   const std::vector<Mat>& d_top, std::vector<LstmLayerGrads>& grads,
                   std::vector<Mat>* d_inputs) {
    const int T = tape.steps;
    const int L = static_cast<int>(layers.size());
    if (static_cast<int>(d_top.size()) != T) {
        throw ShapeMismatch("lstm_backward: d_top length != recorded steps");
    }

    // dLoss/d(hidden output of the layer currently being processed), per step
    std::vector<Mat> d_h_out = d_top;

    for (int l = L - 1; l >= 0; --l) {
        const auto& w = layers[static_cast<std::size_t>(l)];
        const auto& lt = tape.layers[static_cast<std::size_t>(l)];
        const int H = w.hidden();
        auto& g_acc = grads[static_cast<std::size_t>(l)];

        Mat d_h_next = Mat::Zero(H, tape.batch);
        Mat d_c_next = Mat::Zero(H, tape.batch);
        std::vector<Mat> dx(static_cast<std::size_t>(T));

        for (int t = T - 1; t >= 0; --t) {
            const auto ts = static_cast<std::size_t>(t);
            const Mat& i = lt.i[ts];
            const Mat& f = lt.f[ts];
            const Mat& g = lt.g[ts];
            const Mat& o = lt.o[ts];
            const Mat& tc = lt.tanh_c[ts];
            const Mat& c_prev = t > 0 ? lt.c[ts - 1] : tape.initial.c[static_cast<std::size_t>(l)];
            const Mat& h_prev = t > 0 ? lt.h[ts - 1] : tape.initial.h[static_cast<std::size_t>(l)];
            const Mat& x = l > 0 ? tape.layers[static_cast<std::size_t>(l - 1)].h[ts]
                                 : tape.inputs[ts];

            const Mat dh = d_h_out[ts] + d_h_next;
            Mat dc = d_c_next;
            const Mat do_ = (dh.array() * tc.array()).matrix();
            dc.array() += dh.array() * o.array() * (1.0 - tc.array().square());

            const Mat di = (dc.array() * g.array()).matrix();
            const Mat df = (dc.array() * c_prev.array()).matrix();
            const Mat dg = (dc.array() * i.array()).matrix();
            d_c_next = (dc.array() * f.array()).matrix();

            Mat da(4 * H, tape.batch);
            da.topRows(H) = (di.array() * i.array() * (1.0 - i.array())).matrix();
            da.middleRows(H, H) = (df.array() * f.array() * (1.0 - f.array())).matrix();
            da.middleRows(2 * H, H) = (dg.array() * (1.0 - g.array().square())).matrix();
            da.bottomRows(H) = (do_.array() * o.array() * (1.0 - o.array())).matrix();

            g_acc.dW.noalias() += da * x.transpose();
            g_acc.dU.noalias() += da * h_prev.transpose();
            g_acc.db.col(0).noalias() += da.rowwise().sum();

            d_h_next.noalias() = w.U.transpose() * da;
            dx[ts].noalias() = w.W.transpose() * da;
        }
        if (l > 0) {
            d_h_out = std::move(dx);
        } else if (d_inputs != nullptr) {
            *d_inputs = std::move(dx);
        }
    }
}

}  // namespace trackforge::nn
