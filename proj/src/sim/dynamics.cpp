#include "trackforge/sim/dynamics.hpp"

#include <cmath>
#include <string>

#include "trackforge/common/error.hpp"

namespace trackforge::sim {

namespace {

constexpr double kVMin = 1.0;            // m/s, below this the model is singular
constexpr double kPitchMargin = 1e-6;    // rad, distance from the pi/2 singularity

void check_regular(const TargetState& s) {
    if (s.v <= kVMin) {
        throw SingularState("propagate_state: speed " + std::to_string(s.v) + " m/s <= 1 m/s");
    }
    if (std::abs(s.phi_p) >= M_PI / 2.0 - kPitchMargin) {
        throw SingularState("propagate_state: |phi_p| at the azimuth-rate singularity");
    }
}

TargetState add_scaled(const TargetState& s, const StateDeriv& d, double h) {
    TargetState out = s;
    out.x += h * d.dx;
    out.y += h * d.dy;
    out.z += h * d.dz;
    out.v += h * d.dv;
    out.phi_p += h * d.dphi_p;
    out.phi_a += h * d.dphi_a;
    return out;
}

}  // namespace

StateDeriv state_derivative(const TargetState& s, const ControlInput& u) {
    const double cp = std::cos(s.phi_p);
    StateDeriv d;
    d.dx = s.v * cp * std::cos(s.phi_a);
    d.dy = s.v * cp * std::sin(s.phi_a);
    d.dz = s.v * std::sin(s.phi_p);
    d.dv = kGravity * (u.n_x - std::sin(s.phi_p));
    d.dphi_p = kGravity / s.v * (u.n_z * std::cos(u.phi_r) - cp);
    d.dphi_a = kGravity / (s.v * cp) * u.n_z * std::sin(u.phi_r);
    return d;
}

TargetState propagate_state(const TargetState& s, const ControlInput& u, double dt) {
    check_regular(s);
    const StateDeriv k1 = state_derivative(s, u);
    const StateDeriv k2 = state_derivative(add_scaled(s, k1, dt / 2.0), u);
    const StateDeriv k3 = state_derivative(add_scaled(s, k2, dt / 2.0), u);
    const StateDeriv k4 = state_derivative(add_scaled(s, k3, dt), u);

    TargetState out = s;
    out.x += dt / 6.0 * (k1.dx + 2 * k2.dx + 2 * k3.dx + k4.dx);
    out.y += dt / 6.0 * (k1.dy + 2 * k2.dy + 2 * k3.dy + k4.dy);
    out.z += dt / 6.0 * (k1.dz + 2 * k2.dz + 2 * k3.dz + k4.dz);
    out.v += dt / 6.0 * (k1.dv + 2 * k2.dv + 2 * k3.dv + k4.dv);
    out.phi_p += dt / 6.0 * (k1.dphi_p + 2 * k2.dphi_p + 2 * k3.dphi_p + k4.dphi_p);
    out.phi_a += dt / 6.0 * (k1.dphi_a + 2 * k2.dphi_a + 2 * k3.dphi_a + k4.dphi_a);
    out.phi_a = wrap_angle(out.phi_a);
    return out;
}

ControlInput equilibrium_control(const TargetState& s) {
    ControlInput u;
    u.phi_r = 0.0;
    u.n_z = std::cos(s.phi_p);
    u.n_x = std::sin(s.phi_p);
    return u;
}

TargetState sample_initial_state(Rng& rng, const InitStateConfig& cfg) {
    TargetState s;
    s.x = rng.uniform(-cfg.x_half, cfg.x_half);
    s.y = rng.uniform(-cfg.y_half, cfg.y_half);
    s.z = rng.uniform(cfg.z_min, cfg.z_max);
    s.v = rng.uniform(cfg.v_min, cfg.v_max);
    s.phi_p = rng.uniform(-cfg.pitch_half, cfg.pitch_half);
    s.phi_a = wrap_angle(rng.uniform(-M_PI, M_PI));
    return s;
}

namespace {

ControlInput sample_control(Rng& rng, const ControlBounds& b) {
    ControlInput u;
    u.phi_r = rng.uniform(-b.roll_max, b.roll_max);
    u.n_z = rng.uniform(b.nz_min, b.nz_max);
    u.n_x = rng.uniform(b.nx_min, b.nx_max);
    return u;
}

bool state_ok(const TargetState& s, const ControlBounds& b) {
    return s.v >= b.v_min && s.v <= b.v_max && std::abs(s.phi_p) <= b.pitch_max;
}

}  // namespace

Trajectory generate_truth_from(TargetState initial, Rng& rng, int duration_steps,
                               const TruthConfig& cfg) {
    Trajectory traj;
    traj.dt = cfg.dt;
    traj.states.reserve(static_cast<std::size_t>(duration_steps));
    traj.states.push_back(initial);

    ControlInput control = sample_control(rng, cfg.bounds);
    double control_time_left = rng.exponential(cfg.control_mean_interval);

    for (int step = 1; step < duration_steps; ++step) {
        if (control_time_left <= 0.0) {
            control = sample_control(rng, cfg.bounds);
            control_time_left = rng.exponential(cfg.control_mean_interval);
        }
        const TargetState& cur = traj.states.back();
        TargetState next = propagate_state(cur, control, cfg.dt);
        int tries = 0;
        while (!state_ok(next, cfg.bounds)) {
            if (++tries > 200) {
                control = equilibrium_control(cur);  // always keeps the state fixed-point valid
            } else {
                control = sample_control(rng, cfg.bounds);
            }
            control_time_left = rng.exponential(cfg.control_mean_interval);
            next = propagate_state(cur, control, cfg.dt);
        }
        traj.controls.push_back(control);
        traj.states.push_back(next);
        control_time_left -= cfg.dt;
    }
    return traj;
}

Trajectory generate_truth(std::uint64_t seed, int duration_steps, const TruthConfig& cfg) {
    Rng rng(seed);
    return generate_truth_from(sample_initial_state(rng, cfg.init), rng, duration_steps, cfg);
}

}  // namespace trackforge::sim
