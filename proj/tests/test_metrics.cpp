#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trackforge/common/error.hpp"
#include "trackforge/common/rng.hpp"
#include "trackforge/metrics/assignment.hpp"
#include "trackforge/metrics/gospa.hpp"
#include "trackforge/metrics/mse.hpp"

using namespace trackforge;
using namespace trackforge::metrics;

namespace {

// Oracle: minimum-cost injection of rows into columns by exhaustive search.
double brute_force_assignment(const Eigen::MatrixXd& cost) {
    const int n = static_cast<int>(cost.rows());
    const int m = static_cast<int>(cost.cols());
    if (n > m) return brute_force_assignment(cost.transpose());
    std::vector<int> cols(static_cast<std::size_t>(m));
    std::iota(cols.begin(), cols.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double c = 0.0;
        for (int i = 0; i < n; ++i) c += cost(i, cols[static_cast<std::size_t>(i)]);
        best = std::min(best, c);
    } while (std::next_permutation(cols.begin(), cols.end()));
    return best;
}

// Oracle: GOSPA by exhaustive enumeration of injections of the smaller set
// into the larger, all terms per the printed formula.
double brute_force_gospa(const std::vector<LabelledPoint>& est,
                         const std::vector<LabelledPoint>& tru, const GospaParams& prm) {
    const auto& small = est.size() <= tru.size() ? est : tru;
    const auto& large = est.size() <= tru.size() ? tru : est;
    const int n = static_cast<int>(small.size());
    const int m = static_cast<int>(large.size());
    const double cp = std::pow(prm.c, prm.p);
    double best = std::numeric_limits<double>::infinity();
    if (n == 0) {
        best = 0.0;
    } else {
        std::vector<int> idx(static_cast<std::size_t>(m));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                const double d = std::min(
                    (small[static_cast<std::size_t>(i)].pos -
                     large[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])].pos)
                        .norm(),
                    prm.c);
                sum += std::pow(d, prm.p);
            }
            best = std::min(best, sum);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    best += cp / prm.alpha * (m - n);
    return std::pow(best, 1.0 / prm.p);
}

}  // namespace

TEST_CASE("assignment_solve: two-by-two and permuted identity") {
    Eigen::MatrixXd c(2, 2);
    c << 1, 2, 2, 1;
    const Assignment a = assignment_solve(c);
    CHECK(a.cost == doctest::Approx(2.0));
    CHECK(a.row_to_col[0] == 0);
    CHECK(a.row_to_col[1] == 1);

    // cost 0 along a permutation, 1 elsewhere: recover the inverse map
    const std::vector<int> perm{2, 0, 3, 1};
    Eigen::MatrixXd pc = Eigen::MatrixXd::Ones(4, 4);
    for (int i = 0; i < 4; ++i) pc(i, perm[static_cast<std::size_t>(i)]) = 0.0;
    const Assignment pa = assignment_solve(pc);
    for (int i = 0; i < 4; ++i) CHECK(pa.row_to_col[static_cast<std::size_t>(i)] ==
                                       perm[static_cast<std::size_t>(i)]);
    CHECK(pa.cost == doctest::Approx(0.0));
}

TEST_CASE("assignment_solve: matches brute force on 1000 random matrices") {
    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = rng.uniform_int(1, 6);
        const int m = rng.uniform_int(1, 6);
        Eigen::MatrixXd c(n, m);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < m; ++j) c(i, j) = rng.uniform(-10.0, 10.0);
        }
        const Assignment a = assignment_solve(c);
        CHECK(std::abs(a.cost - brute_force_assignment(c)) <= 1e-12);

        // one-to-one: no column used twice
        std::vector<char> used(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < n; ++i) {
            const int j = a.row_to_col[static_cast<std::size_t>(i)];
            if (j >= 0) {
                CHECK(!used[static_cast<std::size_t>(j)]);
                used[static_cast<std::size_t>(j)] = 1;
            }
        }
    }
}

TEST_CASE("gospa: trivial and hand cases") {
    const GospaParams prm;
    CHECK(gospa({}, {}, prm).total == doctest::Approx(0.0));

    std::vector<LabelledPoint> x{{1, {0, 0, 0}}, {2, {100, 0, 0}}};
    std::vector<LabelledPoint> y{{10, {0, 0, 0}}, {20, {100, 0, 0}}};
    const GospaBreakdown perfect = gospa(x, y, prm);
    CHECK(perfect.total == doctest::Approx(0.0));
    CHECK(perfect.assignment.at(10) == 1);
    CHECK(perfect.assignment.at(20) == 2);

    // one missed target at defaults: sqrt(c^2 / alpha) = sqrt(24.5)
    const GospaBreakdown missed = gospa({}, {{1, {5, 5, 5}}}, prm);
    CHECK(missed.total == doctest::Approx(std::sqrt(24.5)).epsilon(1e-12));
    CHECK(missed.total == doctest::Approx(4.9497).epsilon(1e-4));
    CHECK(missed.missed == doctest::Approx(std::sqrt(24.5)));
    CHECK(missed.false_tracks == doctest::Approx(0.0));
    CHECK(missed.localization == doctest::Approx(0.0));
}

TEST_CASE("gospa: brute-force oracle on 500 random instances") {
    Rng rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        GospaParams prm;
        prm.c = rng.uniform(1.0, 10.0);
        prm.p = rng.uniform_int(1, 3);
        prm.alpha = rng.uniform(0.5, 2.0);
        prm.s = 0.0;
        const int nx = rng.uniform_int(0, 6);
        const int ny = rng.uniform_int(0, 6);
        std::vector<LabelledPoint> x, y;
        for (int i = 0; i < nx; ++i) {
            x.push_back({i, {rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)}});
        }
        for (int i = 0; i < ny; ++i) {
            y.push_back({i, {rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)}});
        }
        const GospaBreakdown got = gospa(x, y, prm);
        CHECK(std::abs(got.total - brute_force_gospa(x, y, prm)) <= 1e-12);

        // symmetric when s = 0
        const GospaBreakdown sym = gospa(
            [&] {
                std::vector<LabelledPoint> as_est;
                for (const auto& p : y) as_est.push_back(p);
                return as_est;
            }(),
            [&] {
                std::vector<LabelledPoint> as_tru;
                for (const auto& p : x) as_tru.push_back(p);
                return as_tru;
            }(),
            prm);
        CHECK(got.total == doctest::Approx(sym.total).epsilon(1e-12));

        // breakdown invariant: total^p equals the sum of component p-powers
        const double lhs = std::pow(got.total, prm.p);
        const double rhs = std::pow(got.localization, prm.p) + std::pow(got.missed, prm.p) +
                           std::pow(got.false_tracks, prm.p) + std::pow(got.switches, prm.p);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("gospa: cardinality monotonicity") {
    GospaParams prm;
    std::vector<LabelledPoint> x{{1, {0, 0, 0}}, {2, {10, 0, 0}}};
    std::vector<LabelledPoint> y{{1, {1, 0, 0}}, {2, {11, 0, 0}}};
    const double base = std::pow(gospa(x, y, prm).total, prm.p);
    y.push_back({3, {1000, 1000, 1000}});  // far beyond the cutoff
    const double grown = std::pow(gospa(x, y, prm).total, prm.p);
    CHECK(grown - base ==
          doctest::Approx(std::pow(prm.c, prm.p) / prm.alpha).epsilon(1e-12));
}

TEST_CASE("gospa: switch counting against the previous assignment") {
    GospaParams prm;
    std::vector<LabelledPoint> est{{100, {0, 0, 0}}, {200, {10, 0, 0}}};
    std::vector<LabelledPoint> tru{{1, {0, 0, 0}}, {2, {10, 0, 0}}};
    const GospaBreakdown first = gospa(est, tru, prm);
    CHECK(first.num_switches == 0);

    // swap the estimate ids: both truths change partners
    std::vector<LabelledPoint> swapped{{200, {0, 0, 0}}, {100, {10, 0, 0}}};
    const GospaBreakdown second = gospa(swapped, tru, prm, &first.assignment);
    CHECK(second.num_switches == 2);
    CHECK(second.total == doctest::Approx(std::sqrt(2.0 * prm.s)).epsilon(1e-12));

    // unassigned -> assigned is not a switch
    const std::map<int, int> empty_prev;
    const GospaBreakdown third = gospa(est, tru, prm, &empty_prev);
    CHECK(third.num_switches == 0);
}

TEST_CASE("gospa: invalid params rejected") {
    CHECK_THROWS_AS(gospa({}, {}, GospaParams{-1, 2, 2, 3}), InvalidParams);
    CHECK_THROWS_AS(gospa({}, {}, GospaParams{7, 0.5, 2, 3}), InvalidParams);
    CHECK_THROWS_AS(gospa({}, {}, GospaParams{7, 2, 3.0, 3}), InvalidParams);
}

TEST_CASE("mse curves") {
    std::vector<Eigen::Vector3d> est{{1, 2, 3}, {4, 5, 6}};
    std::vector<Eigen::Vector3d> tru = est;
    for (const double v : squared_error_curve(est, tru)) CHECK(v == 0.0);

    for (auto& e : est) e.x() += 3.0;
    for (const double v : squared_error_curve(est, tru)) CHECK(v == doctest::Approx(9.0));

    CHECK_THROWS_AS(squared_error_curve(est, {}), LengthMismatch);

    // averaging linearity
    Rng rng(4);
    std::vector<std::vector<double>> runs(5, std::vector<double>(7));
    for (auto& run : runs) {
        for (auto& v : run) v = rng.uniform(0, 10);
    }
    const auto avg = mse_curve(runs);
    for (std::size_t i = 0; i < 7; ++i) {
        double manual = 0.0;
        for (const auto& run : runs) manual += run[i];
        CHECK(avg[i] == doctest::Approx(manual / 5.0).epsilon(1e-12));
    }
}
