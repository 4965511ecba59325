#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace trackforge::sim {

inline constexpr double kGravity = 9.8;  // m/s^2

inline constexpr double deg2rad(double d) { return d * M_PI / 180.0; }

// wrap to (-pi, pi]
inline double wrap_angle(double a) {
    a = std::fmod(a + M_PI, 2.0 * M_PI);
    if (a <= 0.0) a += 2.0 * M_PI;
    return a - M_PI;
}

// 3-DOF particle state: position (ground inertial frame), speed, pitch, azimuth.
struct TargetState {
    double x = 0.0;      // m
    double y = 0.0;      // m
    double z = 0.0;      // m
    double v = 0.0;      // m/s, > 0
    double phi_p = 0.0;  // rad, in (-pi/2, pi/2)
    double phi_a = 0.0;  // rad, wrapped to (-pi, pi]

    Eigen::Vector3d position() const { return {x, y, z}; }
    Eigen::Vector3d velocity() const {
        const double cp = std::cos(phi_p);
        return {v * cp * std::cos(phi_a), v * cp * std::sin(phi_a), v * std::sin(phi_p)};
    }
};

// Roll angle plus the two dimensionless overload factors multiplying g.
struct ControlInput {
    double phi_r = 0.0;  // rad
    double n_z = 1.0;    // drives the pitch/azimuth rates
    double n_x = 0.0;    // drives the speed rate
};

struct NoiseParams {
    double sigma_d = 30.0;                 // range std, m
    double sigma_phi_p = deg2rad(0.5);     // pitch std, rad
    double sigma_phi_a = deg2rad(0.5);     // azimuth std, rad
    double sigma_v = 5.0;                  // radial-velocity std, m/s

    bool valid() const {
        return sigma_d > 0 && sigma_phi_p > 0 && sigma_phi_a > 0 && sigma_v > 0;
    }
};

inline constexpr int kClutterTag = -1;  // origin_tag for false detections

// Radar return [r, phi_p, phi_a, v_r]. origin_tag is a simulation-only
// label (truth-track id or kClutterTag) that trackers never see.
struct Measurement {
    double r = 0.0;      // m, > 0
    double phi_p = 0.0;  // rad
    double phi_a = 0.0;  // rad
    double v_r = 0.0;    // m/s
    int origin_tag = kClutterTag;
};

// Cartesian form of a measurement: position plus the radial-velocity vector
// (v_r times the line-of-sight unit vector).
struct CartesianObs {
    Eigen::Vector3d pos;
    Eigen::Vector3d vel;

    Eigen::Matrix<double, 6, 1> vec() const {
        Eigen::Matrix<double, 6, 1> out;
        out << pos, vel;
        return out;
    }
};

struct ControlBounds {
    double nx_min = -2.0, nx_max = 2.0;   // linear overload, g units
    double nz_min = -2.0, nz_max = 9.0;   // normal overload, g units
    double roll_max = 1.2;                // |phi_r| bound, rad
    double v_min = 100.0, v_max = 600.0;  // speed envelope, m/s
    double pitch_max = 1.0;               // |phi_p| bound kept clear of the pi/2 singularity
};

struct InitStateConfig {
    double x_half = 50e3;     // position uniform in [-x_half, x_half]
    double y_half = 50e3;
    double z_min = 1e3, z_max = 12e3;
    double v_min = 100.0, v_max = 600.0;
    double pitch_half = 0.3;  // phi_p uniform in [-pitch_half, pitch_half]
};

struct Trajectory {
    int id = 0;
    double dt = 0.1;  // integration step, s
    std::vector<TargetState> states;     // size = controls.size() + 1
    std::vector<ControlInput> controls;  // control held over step i -> i+1
};

struct Box3 {
    Eigen::Vector3d lo;
    Eigen::Vector3d hi;

    bool contains(const Eigen::Vector3d& p, double tol = 1e-9) const {
        return (p.array() >= lo.array() - tol).all() && (p.array() <= hi.array() + tol).all();
    }
};

}  // namespace trackforge::sim
