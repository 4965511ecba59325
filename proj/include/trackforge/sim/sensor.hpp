#pragma once

#include <vector>

#include "trackforge/common/rng.hpp"
#include "trackforge/sim/types.hpp"

namespace trackforge::sim {

// Noise-free radar geometry: r, pitch/azimuth of the line of sight, range
// rate. Throws DegenerateGeometry when the target is within 1 m of the
// sensor origin.
Measurement measure_ideal(const TargetState& s);

// measure_ideal plus componentwise Gaussian noise.
Measurement measure(const TargetState& s, const NoiseParams& noise, Rng& rng);

// [r,phi_p,phi_a,v_r] -> position plus radial-velocity vector.
CartesianObs spherical_to_cartesian(const Measurement& m);

// count false detections, positions uniform over the box, v_r uniform in
// [-600, 600] m/s, angles from the noise-free geometry of each position.
std::vector<Measurement> generate_clutter(Rng& rng, int count, const Box3& volume);

}  // namespace trackforge::sim
