#include "trackforge/metrics/gospa.hpp"

#include <cmath>

#include "trackforge/common/error.hpp"
#include "trackforge/metrics/assignment.hpp"

namespace trackforge::metrics {

GospaBreakdown gospa(const std::vector<LabelledPoint>& estimates,
                     const std::vector<LabelledPoint>& truths, const GospaParams& params,
                     const std::map<int, int>* prev_assignment) {
    if (params.c <= 0 || params.p < 1 || params.alpha <= 0 || params.alpha > 2 || params.s < 0) {
        throw InvalidParams("gospa: require c > 0, p >= 1, 0 < alpha <= 2, s >= 0");
    }

    const int n_est = static_cast<int>(estimates.size());
    const int n_tru = static_cast<int>(truths.size());
    const double cp = std::pow(params.c, params.p);

    GospaBreakdown out;

    double loc_p = 0.0;
    if (n_est > 0 && n_tru > 0) {
        // rows = smaller side so the optimal injection is a plain assignment
        const bool est_rows = n_est <= n_tru;
        const int rows = est_rows ? n_est : n_tru;
        const int cols = est_rows ? n_tru : n_est;
        Eigen::MatrixXd cost(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                const auto& a = est_rows ? estimates[static_cast<std::size_t>(i)]
                                         : truths[static_cast<std::size_t>(i)];
                const auto& b = est_rows ? truths[static_cast<std::size_t>(j)]
                                         : estimates[static_cast<std::size_t>(j)];
                const double d = std::min((a.pos - b.pos).norm(), params.c);
                cost(i, j) = std::pow(d, params.p);
            }
        }
        const Assignment assign = assignment_solve(cost);
        loc_p = assign.cost;
        for (int i = 0; i < rows; ++i) {
            const int j = assign.row_to_col[static_cast<std::size_t>(i)];
            if (j < 0) continue;
            // saturated pairs are effectively unmatched; only proper matches
            // carry identity for switch counting
            if (cost(i, j) >= cp - 1e-15) continue;
            const int truth_id = est_rows ? truths[static_cast<std::size_t>(j)].id
                                          : truths[static_cast<std::size_t>(i)].id;
            const int est_id = est_rows ? estimates[static_cast<std::size_t>(i)].id
                                        : estimates[static_cast<std::size_t>(j)].id;
            out.assignment[truth_id] = est_id;
        }
    }

    const double gap_p = cp / params.alpha * std::abs(n_tru - n_est);
    const double missed_p = n_tru > n_est ? gap_p : 0.0;
    const double false_p = n_est > n_tru ? gap_p : 0.0;

    if (prev_assignment != nullptr) {
        for (const auto& [truth_id, est_id] : out.assignment) {
            const auto it = prev_assignment->find(truth_id);
            if (it != prev_assignment->end() && it->second != est_id) ++out.num_switches;
        }
    }
    const double switch_p = params.s * out.num_switches;

    const double inv_p = 1.0 / params.p;
    out.localization = std::pow(loc_p, inv_p);
    out.missed = std::pow(missed_p, inv_p);
    out.false_tracks = std::pow(false_p, inv_p);
    out.switches = std::pow(switch_p, inv_p);
    out.total = std::pow(loc_p + missed_p + false_p + switch_p, inv_p);
    return out;
}

}  // namespace trackforge::metrics
