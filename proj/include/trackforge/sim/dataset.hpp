#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "trackforge/sim/dynamics.hpp"
#include "trackforge/sim/sensor.hpp"
#include "trackforge/sim/types.hpp"

namespace trackforge::sim {

struct DatasetConfig {
    int track_count = 50000;          // "50,0000" in the source material is malformed
    int samples_per_track = 100;
    double sample_interval = 5.0;     // s between radar samples
    double dt_sim = 0.1;              // s integration step
    double train_fraction = 0.8;
    NoiseParams noise;
    TruthConfig truth;

    std::string canonical_json() const;
};

// One radar-sampled track: truth [x,y,z,vx,vy,vz] per sample plus the
// matching noisy measurement.
struct TrackRecord {
    int id = 0;
    double dt_sample = 5.0;
    std::vector<Eigen::Matrix<double, 6, 1>> truth;
    std::vector<Measurement> meas;
};

struct Dataset {
    DatasetConfig config;
    std::uint64_t seed = 0;
    std::vector<TrackRecord> tracks;
    std::vector<int> train_ids;
    std::vector<int> val_ids;
};

// Deterministic in the seed; tracks are generated in parallel from
// per-track derived seeds, identical to sequential generation.
Dataset generate_dataset(const DatasetConfig& cfg, std::uint64_t seed);

// data.ndjson (header record + one JSON object per track) and manifest.json.
void write_dataset(const Dataset& ds, const std::filesystem::path& dir);

Dataset load_dataset(const std::filesystem::path& dir);

}  // namespace trackforge::sim
