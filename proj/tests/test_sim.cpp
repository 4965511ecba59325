#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "trackforge/common/error.hpp"
#include "trackforge/sim/dataset.hpp"
#include "trackforge/sim/dynamics.hpp"
#include "trackforge/sim/sensor.hpp"

using namespace trackforge;
using namespace trackforge::sim;

namespace {

TargetState make_state(double x, double y, double z, double v, double phi_p, double phi_a) {
    TargetState s;
    s.x = x;
    s.y = y;
    s.z = z;
    s.v = v;
    s.phi_p = phi_p;
    s.phi_a = phi_a;
    return s;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("propagate_state: level flight is an equilibrium") {
    const TargetState s = make_state(0, 0, 1000, 200, 0, 0);
    const TargetState out = propagate_state(s, {0.0, 1.0, 0.0}, 0.1);
    CHECK(out.x == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(out.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(out.z == doctest::Approx(1000.0).epsilon(1e-12));
    CHECK(out.v == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(out.phi_p == 0.0);
    CHECK(out.phi_a == 0.0);
}

TEST_CASE("propagate_state: level coordinated turn rate") {
    const TargetState s = make_state(0, 0, 1000, 200, 0, 0);
    const ControlInput turn{0.26, 1.0 / std::cos(0.26), 0.0};
    const TargetState out = propagate_state(s, turn, 0.1);
    const double expected_rate = kGravity / 200.0 * std::tan(0.26);
    CHECK(expected_rate == doctest::Approx(0.013035).epsilon(1e-4));
    CHECK(out.phi_a == doctest::Approx(expected_rate * 0.1).epsilon(1e-12));
    CHECK(out.phi_a == doctest::Approx(0.0013035).epsilon(1e-4));
    CHECK(out.v == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(out.phi_p == doctest::Approx(0.0));
}

TEST_CASE("propagate_state: tangential overload accelerates") {
    const TargetState s = make_state(0, 0, 1000, 200, 0, 0);
    const TargetState out = propagate_state(s, {0.0, 1.0, 1.0}, 0.1);
    CHECK(out.v == doctest::Approx(200.98).epsilon(1e-12));
}

TEST_CASE("propagate_state: singular states rejected") {
    CHECK_THROWS_AS(propagate_state(make_state(0, 0, 1000, 0.5, 0, 0), {}, 0.1), SingularState);
    CHECK_THROWS_AS(propagate_state(make_state(0, 0, 1000, 200, M_PI / 2 - 1e-9, 0), {}, 0.1),
                    SingularState);
}

TEST_CASE("dynamics invariant: generalized equilibrium holds angles and speed") {
    TargetState s = make_state(5e3, -2e3, 4e3, 250, 0.2, 1.0);
    const ControlInput u = equilibrium_control(s);
    for (int i = 0; i < 100; ++i) {
        const TargetState next = propagate_state(s, u, 0.1);
        CHECK(std::abs(next.v - s.v) < 1e-9);
        CHECK(std::abs(next.phi_p - s.phi_p) < 1e-9);
        CHECK(std::abs(next.phi_a - s.phi_a) < 1e-9);
        s = next;
    }
}

TEST_CASE("dynamics invariant: turn-rate law at dt=0.001") {
    for (const double roll : {0.1, 0.26, 0.5, -0.35}) {
        for (const double v : {120.0, 250.0, 550.0}) {
            const TargetState s = make_state(0, 0, 5000, v, 0, 0.3);
            const ControlInput u{roll, 1.0 / std::cos(roll), 0.0};
            const TargetState out = propagate_state(s, u, 0.001);
            const double rate = (out.phi_a - s.phi_a) / 0.001;
            CHECK(std::abs(rate - kGravity / v * std::tan(roll)) < 1e-6);
        }
    }
}

TEST_CASE("generate_truth: duration one, determinism, speed envelope") {
    TruthConfig cfg;

    const Trajectory single = generate_truth(42, 1, cfg);
    CHECK(single.states.size() == 1);
    CHECK(single.controls.empty());

    const Trajectory a = generate_truth(7, 500, cfg);
    const Trajectory b = generate_truth(7, 500, cfg);
    REQUIRE(a.states.size() == b.states.size());
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        CHECK(a.states[i].x == b.states[i].x);
        CHECK(a.states[i].v == b.states[i].v);
        CHECK(a.states[i].phi_a == b.states[i].phi_a);
    }
    CHECK(a.states.size() == a.controls.size() + 1);

    const Trajectory long_run = generate_truth(3, 10000, cfg);
    double v_min = 1e18, v_max = -1e18;
    for (const auto& s : long_run.states) {
        v_min = std::min(v_min, s.v);
        v_max = std::max(v_max, s.v);
    }
    CHECK(v_min >= 100.0);
    CHECK(v_max <= 600.0);
}

TEST_CASE("measure: on-axis and 3-4-5 geometry") {
    {
        const Measurement m = measure_ideal(make_state(1000, 0, 0, 100, 0, 0));
        CHECK(m.r == doctest::Approx(1000.0));
        CHECK(m.phi_p == doctest::Approx(0.0));
        CHECK(m.phi_a == doctest::Approx(0.0));
        CHECK(m.v_r == doctest::Approx(100.0));
    }
    {
        const Measurement m = measure_ideal(make_state(300, 400, 0, 200, 0, 0));
        CHECK(m.r == doctest::Approx(500.0).epsilon(1e-12));
        CHECK(m.phi_a == doctest::Approx(std::atan2(4.0, 3.0)).epsilon(1e-12));
        CHECK(m.phi_a == doctest::Approx(0.92730).epsilon(1e-4));
        CHECK(m.phi_p == doctest::Approx(0.0));
        CHECK(m.v_r == doctest::Approx(120.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(measure_ideal(make_state(0.1, 0, 0, 100, 0, 0)), DegenerateGeometry);
}

TEST_CASE("measure: noise calibration within 2%") {
    const TargetState s = make_state(20e3, 15e3, 5e3, 300, 0.1, 0.7);
    const NoiseParams noise;
    const Measurement base = measure_ideal(s);
    Rng rng(99);
    const int n = 100000;
    double sum[4] = {0, 0, 0, 0};
    double sum_sq[4] = {0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
        const Measurement m = measure(s, noise, rng);
        const double d[4] = {m.r - base.r, m.phi_p - base.phi_p, m.phi_a - base.phi_a,
                             m.v_r - base.v_r};
        for (int k = 0; k < 4; ++k) {
            sum[k] += d[k];
            sum_sq[k] += d[k] * d[k];
        }
    }
    const double expected[4] = {noise.sigma_d, noise.sigma_phi_p, noise.sigma_phi_a,
                                noise.sigma_v};
    for (int k = 0; k < 4; ++k) {
        const double mean = sum[k] / n;
        const double stdev = std::sqrt(sum_sq[k] / n - mean * mean);
        CHECK(stdev == doctest::Approx(expected[k]).epsilon(0.02));
    }
}

TEST_CASE("spherical_to_cartesian: known conversions and round-trip") {
    {
        Measurement m;
        m.r = 1000;
        m.phi_p = 0;
        m.phi_a = 0;
        m.v_r = 100;
        const CartesianObs obs = spherical_to_cartesian(m);
        CHECK(obs.pos.isApprox(Eigen::Vector3d(1000, 0, 0), 1e-12));
        CHECK(obs.vel.isApprox(Eigen::Vector3d(100, 0, 0), 1e-12));
    }
    {
        Measurement m;
        m.r = 500;
        m.phi_p = 0;
        m.phi_a = std::atan2(4.0, 3.0);
        m.v_r = 120;
        const CartesianObs obs = spherical_to_cartesian(m);
        CHECK(obs.pos.isApprox(Eigen::Vector3d(300, 400, 0), 1e-9));
        CHECK(obs.vel.isApprox(Eigen::Vector3d(72, 96, 0), 1e-9));
    }
    // position round-trip over random states
    Rng rng(5);
    InitStateConfig init;
    for (int i = 0; i < 10000; ++i) {
        const TargetState s = sample_initial_state(rng, init);
        const CartesianObs obs = spherical_to_cartesian(measure_ideal(s));
        CHECK((obs.pos - s.position()).norm() <= 1e-9 * s.position().norm());
    }
}

TEST_CASE("generate_clutter: count, region, reproducibility") {
    const Box3 region{{-10e3, -10e3, 1e3}, {10e3, 10e3, 5e3}};
    Rng rng(11);
    CHECK(generate_clutter(rng, 0, region).empty());

    Rng r1(12), r2(12);
    const auto a = generate_clutter(r1, 50, region);
    const auto b = generate_clutter(r2, 50, region);
    REQUIRE(a.size() == 50);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].r == b[i].r);
        CHECK(a[i].origin_tag == kClutterTag);
        const CartesianObs obs = spherical_to_cartesian(a[i]);
        CHECK(region.contains(obs.pos, 1e-6));
        CHECK(a[i].v_r >= -600.0);
        CHECK(a[i].v_r <= 600.0);
    }
}

TEST_CASE("generate_dataset: split, sample count, byte-identical regeneration") {
    DatasetConfig cfg;
    cfg.track_count = 10;
    cfg.samples_per_track = 100;

    const Dataset ds = generate_dataset(cfg, 1234);
    CHECK(ds.train_ids.size() == 8);
    CHECK(ds.val_ids.size() == 2);
    REQUIRE(ds.tracks.size() == 10);
    for (const auto& rec : ds.tracks) {
        CHECK(rec.truth.size() == 100);
        CHECK(rec.meas.size() == 100);
    }

    const auto tmp = std::filesystem::temp_directory_path() / "tf_ds_test";
    std::filesystem::remove_all(tmp);
    write_dataset(ds, tmp / "a");
    const Dataset again = generate_dataset(cfg, 1234);
    write_dataset(again, tmp / "b");
    CHECK(slurp(tmp / "a" / "data.ndjson") == slurp(tmp / "b" / "data.ndjson"));
    CHECK(slurp(tmp / "a" / "manifest.json") == slurp(tmp / "b" / "manifest.json"));

    const Dataset loaded = load_dataset(tmp / "a");
    REQUIRE(loaded.tracks.size() == 10);
    CHECK(loaded.tracks[3].meas[17].r == ds.tracks[3].meas[17].r);
    CHECK(loaded.train_ids == ds.train_ids);
    std::filesystem::remove_all(tmp);
}
