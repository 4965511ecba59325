#include "trackforge/nn/dense.hpp"

#include "trackforge/common/error.hpp"

namespace trackforge::nn {

Mat dense_forward(const DenseWeights& w, const Mat& x) {
    if (x.rows() != w.in_dim()) {
        throw ShapeMismatch("dense_forward: expected " + std::to_string(w.in_dim()) +
                            " inputs, got " + std::to_string(x.rows()));
    }
    Mat z = w.W * x;
    z.colwise() += Eigen::VectorXd(w.b.col(0));
    switch (w.act) {
        case Activation::Identity:
            return z;
        case Activation::Sigmoid:
            return ((-z.array()).exp() + 1.0).inverse().matrix();
        case Activation::Softmax: {
            Mat out(z.rows(), z.cols());
            for (int j = 0; j < z.cols(); ++j) {
                Vec col = z.col(j);
                const double m = col.maxCoeff();
                Vec e = (col.array() - m).exp();
                out.col(j) = e / e.sum();
            }
            return out;
        }
    }
    return z;
}

Mat dense_backward(const DenseWeights& w, const Mat& x, const Mat& y, const Mat& dy,
                   DenseGrads& grads) {
    Mat dz;
    switch (w.act) {
        case Activation::Identity:
            dz = dy;
            break;
        case Activation::Sigmoid:
            dz = (dy.array() * y.array() * (1.0 - y.array())).matrix();
            break;
        case Activation::Softmax: {
            dz.resize(y.rows(), y.cols());
            for (int j = 0; j < y.cols(); ++j) {
                const double dot = dy.col(j).dot(y.col(j));
                dz.col(j) = (y.col(j).array() * (dy.col(j).array() - dot)).matrix();
            }
            break;
        }
    }
    grads.dW.noalias() += dz * x.transpose();
    grads.db.col(0).noalias() += dz.rowwise().sum();
    return w.W.transpose() * dz;
}

Vec softmax(const Vec& logits) {
    const double m = logits.maxCoeff();
    Vec e = (logits.array() - m).exp();
    return e / e.sum();
}

}  // namespace trackforge::nn
