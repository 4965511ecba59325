#pragma once

#include <Eigen/Dense>
#include <vector>

namespace trackforge::metrics {

struct Assignment {
    std::vector<int> row_to_col;  // -1 when a row is left unassigned (rows > cols)
    std::vector<int> col_to_row;  // -1 when a column is left unassigned
    double cost = 0.0;            // sum over matched pairs, minimal
};

// Minimal-cost one-to-one assignment of the smaller side into the larger
// (Hungarian algorithm with potentials, O(n^2 m)). Costs must be finite.
Assignment assignment_solve(const Eigen::MatrixXd& cost);

}  // namespace trackforge::metrics
