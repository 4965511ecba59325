#include "trackforge/metrics/mse.hpp"

#include <string>

#include "trackforge/common/error.hpp"

namespace trackforge::metrics {

std::vector<double> squared_error_curve(const std::vector<Eigen::Vector3d>& estimates,
                                        const std::vector<Eigen::Vector3d>& truths) {
    if (estimates.size() != truths.size()) {
        throw LengthMismatch("squared_error_curve: " + std::to_string(estimates.size()) +
                             " estimates vs " + std::to_string(truths.size()) + " truths");
    }
    std::vector<double> out(estimates.size());
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        out[i] = (estimates[i] - truths[i]).squaredNorm();
    }
    return out;
}

std::vector<double> mse_curve(const std::vector<std::vector<double>>& per_run_curves) {
    if (per_run_curves.empty()) return {};
    const std::size_t len = per_run_curves.front().size();
    std::vector<double> out(len, 0.0);
    for (const auto& run : per_run_curves) {
        if (run.size() != len) {
            throw LengthMismatch("mse_curve: run length " + std::to_string(run.size()) +
                                 " != " + std::to_string(len));
        }
        for (std::size_t i = 0; i < len; ++i) out[i] += run[i];
    }
    for (double& v : out) v /= static_cast<double>(per_run_curves.size());
    return out;
}

}  // namespace trackforge::metrics
