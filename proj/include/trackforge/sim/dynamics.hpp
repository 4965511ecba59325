#pragma once

#include <cstdint>

#include "trackforge/common/rng.hpp"
#include "trackforge/sim/types.hpp"

namespace trackforge::sim {

// Time derivative of the six coupled state equations.
struct StateDeriv {
    double dx, dy, dz, dv, dphi_p, dphi_a;
};

StateDeriv state_derivative(const TargetState& s, const ControlInput& u);

// Advances the state dt seconds with fourth-order Runge-Kutta and re-wraps
// the azimuth. Throws SingularState when v <= 1 m/s or |phi_p| is within
// 1e-6 of pi/2 (the azimuth-rate equation divides by v*cos(phi_p)).
TargetState propagate_state(const TargetState& s, const ControlInput& u, double dt);

// Control held at the equilibrium of the dynamic equations: speed and both
// angles stay constant.
ControlInput equilibrium_control(const TargetState& s);

struct TruthConfig {
    double dt = 0.1;
    double control_mean_interval = 5.0;  // s, exponential resampling clock
    ControlBounds bounds;
    InitStateConfig init;
};

// Random trajectory: piecewise-constant controls resampled at exponential
// intervals, rejected and redrawn whenever the next state would leave the
// speed/pitch envelope. Pure function of the seed.
Trajectory generate_truth(std::uint64_t seed, int duration_steps, const TruthConfig& cfg);

// Same, but from a caller-supplied initial state (scenario builders).
Trajectory generate_truth_from(TargetState initial, Rng& rng, int duration_steps,
                               const TruthConfig& cfg);

TargetState sample_initial_state(Rng& rng, const InitStateConfig& cfg);

}  // namespace trackforge::sim
