#pragma once

#include <Eigen/Dense>
#include <vector>

namespace trackforge::metrics {

// Per-step mean of squared position error over aligned estimate/truth
// sequences. Throws LengthMismatch when lengths disagree.
std::vector<double> squared_error_curve(const std::vector<Eigen::Vector3d>& estimates,
                                        const std::vector<Eigen::Vector3d>& truths);

// Per-step average over Monte Carlo runs; all runs must share a length.
std::vector<double> mse_curve(const std::vector<std::vector<double>>& per_run_curves);

}  // namespace trackforge::metrics
