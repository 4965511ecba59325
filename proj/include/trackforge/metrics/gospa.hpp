#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

namespace trackforge::metrics {

struct GospaParams {
    double c = 7.0;    // cutoff distance
    double p = 2.0;    // metric order
    double alpha = 2.0;
    double s = 3.0;    // switching penalty
};

// Labelled point: id carries track/truth identity across steps for switch
// counting; GOSPA itself only uses the positions.
struct LabelledPoint {
    int id = 0;
    Eigen::Vector3d pos;
};

struct GospaBreakdown {
    double total = 0.0;
    double localization = 0.0;  // (sum of cutoff distances^p)^(1/p)
    double missed = 0.0;        // cardinality term when truths outnumber estimates
    double false_tracks = 0.0;  // cardinality term when estimates outnumber truths
    double switches = 0.0;      // (s * eta_s)^(1/p)
    int num_switches = 0;
    // truth id -> estimate id for pairs matched below the cutoff
    std::map<int, int> assignment;
};

// Distance of Eq-style GOSPA with a switching term: optimal injection of the
// smaller set into the larger over cutoff distances, a c^p/alpha penalty per
// cardinality-gap element, plus s per truth whose matched estimate id changed
// from prev_assignment. total^p = loc^p + missed^p + false^p + switches^p.
GospaBreakdown gospa(const std::vector<LabelledPoint>& estimates,
                     const std::vector<LabelledPoint>& truths, const GospaParams& params,
                     const std::map<int, int>* prev_assignment = nullptr);

}  // namespace trackforge::metrics
