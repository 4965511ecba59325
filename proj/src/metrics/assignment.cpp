#include "trackforge/metrics/assignment.hpp"

#include <cmath>
#include <limits>

#include "trackforge/common/error.hpp"

namespace trackforge::metrics {

namespace {

// Hungarian algorithm, potentials formulation; requires rows <= cols.
// Returns row -> col.
std::vector<int> solve_rect(const Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    const int m = static_cast<int>(a.cols());
    constexpr double kInf = std::numeric_limits<double>::infinity();

    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(m) + 1, 0.0);
    std::vector<int> match(static_cast<std::size_t>(m) + 1, 0);  // col -> row (1-based, 0 = free)
    std::vector<int> way(static_cast<std::size_t>(m) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(m) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = match[static_cast<std::size_t>(j0)];
            double delta = kInf;
            int j1 = -1;
            for (int j = 1; j <= m; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = a(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                                   v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (match[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_to_col(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= m; ++j) {
        if (match[static_cast<std::size_t>(j)] > 0) {
            row_to_col[static_cast<std::size_t>(match[static_cast<std::size_t>(j)]) - 1] = j - 1;
        }
    }
    return row_to_col;
}

}  // namespace

Assignment assignment_solve(const Eigen::MatrixXd& cost) {
    if (!cost.allFinite()) throw InvalidParams("assignment_solve: costs must be finite");
    const int n = static_cast<int>(cost.rows());
    const int m = static_cast<int>(cost.cols());
    Assignment out;
    out.row_to_col.assign(static_cast<std::size_t>(n), -1);
    out.col_to_row.assign(static_cast<std::size_t>(m), -1);
    if (n == 0 || m == 0) return out;

    if (n <= m) {
        out.row_to_col = solve_rect(cost);
        for (int i = 0; i < n; ++i) {
            const int j = out.row_to_col[static_cast<std::size_t>(i)];
            out.col_to_row[static_cast<std::size_t>(j)] = i;
            out.cost += cost(i, j);
        }
    } else {
        const std::vector<int> col_to_row = solve_rect(cost.transpose());
        for (int j = 0; j < m; ++j) {
            const int i = col_to_row[static_cast<std::size_t>(j)];
            out.col_to_row[static_cast<std::size_t>(j)] = i;
            out.row_to_col[static_cast<std::size_t>(i)] = j;
            out.cost += cost(i, j);
        }
    }
    return out;
}

}  // namespace trackforge::metrics
