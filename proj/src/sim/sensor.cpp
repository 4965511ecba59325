#include "trackforge/sim/sensor.hpp"

#include <algorithm>
#include <cmath>

#include "trackforge/common/error.hpp"

namespace trackforge::sim {

namespace {

Measurement from_geometry(const Eigen::Vector3d& pos, const Eigen::Vector3d& vel, int tag) {
    const double r = pos.norm();
    if (r < 1.0) throw DegenerateGeometry("measure: target within 1 m of the sensor origin");
    Measurement m;
    m.r = r;
    m.phi_p = std::atan2(pos.z(), std::hypot(pos.x(), pos.y()));
    m.phi_a = std::atan2(pos.y(), pos.x());
    m.v_r = vel.dot(pos) / r;
    m.origin_tag = tag;
    return m;
}

}  // namespace

Measurement measure_ideal(const TargetState& s) {
    return from_geometry(s.position(), s.velocity(), 0);
}

Measurement measure(const TargetState& s, const NoiseParams& noise, Rng& rng) {
    Measurement m = measure_ideal(s);
    m.r = std::max(1e-6, m.r + rng.normal(0.0, noise.sigma_d));
    m.phi_p = std::clamp(m.phi_p + rng.normal(0.0, noise.sigma_phi_p),
                         -M_PI / 2.0 + 1e-9, M_PI / 2.0 - 1e-9);
    m.phi_a = wrap_angle(m.phi_a + rng.normal(0.0, noise.sigma_phi_a));
    m.v_r += rng.normal(0.0, noise.sigma_v);
    return m;
}

CartesianObs spherical_to_cartesian(const Measurement& m) {
    const double cp = std::cos(m.phi_p);
    const double sp = std::sin(m.phi_p);
    const double ca = std::cos(m.phi_a);
    const double sa = std::sin(m.phi_a);
    CartesianObs obs;
    obs.pos = {m.r * cp * ca, m.r * cp * sa, m.r * sp};
    obs.vel = {m.v_r * cp * ca, m.v_r * cp * sa, m.v_r * sp};
    return obs;
}

std::vector<Measurement> generate_clutter(Rng& rng, int count, const Box3& volume) {
    std::vector<Measurement> out;
    out.reserve(static_cast<std::size_t>(std::max(0, count)));
    for (int i = 0; i < count; ++i) {
        Eigen::Vector3d pos;
        do {
            pos = {rng.uniform(volume.lo.x(), volume.hi.x()),
                   rng.uniform(volume.lo.y(), volume.hi.y()),
                   rng.uniform(volume.lo.z(), volume.hi.z())};
        } while (pos.norm() < 1.0);
        const double v_r = rng.uniform(-600.0, 600.0);
        // radial-velocity vector along the line of sight reproduces v_r exactly
        Measurement m = from_geometry(pos, v_r * pos.normalized(), kClutterTag);
        out.push_back(m);
    }
    return out;
}

}  // namespace trackforge::sim
