#include "trackforge/nn/gradcheck.hpp"

#include <cmath>

#include "trackforge/common/error.hpp"

namespace trackforge::nn {

GradCheckReport check_gradients(const std::vector<ParamRef>& params,
                                const std::function<double()>& loss_fn, const GradVec& analytic,
                                double eps) {
    if (params.size() != analytic.size()) {
        throw ShapeMismatch("check_gradients: parameter/gradient counts differ");
    }
    GradCheckReport report;
    for (std::size_t k = 0; k < params.size(); ++k) {
        Mat& theta = *params[k].value;
        const Mat& a = analytic[k];
        for (Eigen::Index i = 0; i < theta.rows(); ++i) {
            for (Eigen::Index j = 0; j < theta.cols(); ++j) {
                const double saved = theta(i, j);
                theta(i, j) = saved + eps;
                const double plus = loss_fn();
                theta(i, j) = saved - eps;
                const double minus = loss_fn();
                theta(i, j) = saved;
                const double numeric = (plus - minus) / (2.0 * eps);
                const double denom =
                    std::max({std::abs(a(i, j)), std::abs(numeric), 1e-4});
                const double rel = std::abs(a(i, j) - numeric) / denom;
                if (rel > report.max_rel_err) {
                    report.max_rel_err = rel;
                    report.worst = params[k].name + "(" + std::to_string(i) + "," +
                                   std::to_string(j) + ")";
                }
            }
        }
    }
    return report;
}

}  // namespace trackforge::nn
