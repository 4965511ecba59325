#pragma once

#include <Eigen/Dense>
#include <vector>

#include "trackforge/sim/types.hpp"

namespace trackforge::tm {

struct GateConfig {
    double birth_gate_radius = 5000.0;  // m
    int birth_threshold = 5;            // hits to promote a probable track
    int death_threshold = 3;            // consecutive misses beyond which a track dies
    int cluster_capacity = 10;          // association capacity N_max
    double cluster_gate_factor = 3.0;   // coarse gate = factor * birth_gate_radius
    int probable_patience = 3;          // unrefreshed steps before a probable is dropped
};

struct Cluster {
    std::vector<int> tracks;        // indices into the caller's live-track array
    std::vector<int> measurements;  // indices into this step's measurement array
};

struct GateResult {
    std::vector<Cluster> clusters;
    std::vector<int> unlinked_measurements;  // routed to birth logic
};

// Links each measurement to every track whose prediction is within the
// coarse gate, takes connected components, and splits components holding
// more than cluster_capacity measurements by position k-means (deterministic
// farthest-first seeding) into compliant sub-clusters.
GateResult gate_clusters(const std::vector<Eigen::Vector3d>& measurement_positions,
                         const std::vector<Eigen::Vector3d>& predicted_positions,
                         const GateConfig& cfg);

struct ProbableTrack {
    int id = 0;                   // allocated at seed time, becomes the confirmed id
    Eigen::Vector3d head;         // last associated Cartesian position
    int hits = 0;
    int steps_since_refresh = 0;
    std::vector<sim::Measurement> history;
};

struct PromotedTrack {
    int id = 0;
    sim::Measurement measurement;  // the promoting measurement
    Eigen::Vector3d position;
    std::vector<sim::Measurement> history;
};

enum class TrackEvent { Seed, Promote, Terminate };

struct TrackEventRecord {
    int step = 0;
    TrackEvent event = TrackEvent::Seed;
    int track_id = 0;
    Eigen::Vector3d position{0, 0, 0};
};

struct BirthResult {
    std::vector<PromotedTrack> promoted;
    std::vector<TrackEventRecord> events;
};

// Each unassociated measurement refreshes the nearest not-yet-refreshed
// probable track within the 5 km gate (one refresh per probable per step),
// otherwise seeds a new probable. Probables unrefreshed for
// probable_patience consecutive steps are dropped; reaching birth_threshold
// hits promotes. Ids come from next_id and are never reused.
BirthResult update_births(const std::vector<sim::Measurement>& unassociated,
                          std::vector<ProbableTrack>& probables, const GateConfig& cfg,
                          int& next_id, int step);

// Shared bookkeeping for one confirmed track.
struct TrackCore {
    int id = 0;
    bool terminated = false;
    int miss_count = 0;
};

// decisions[i] is the associated measurement index for tracks[i], -1 for
// NONE. A miss increments miss_count, an association resets it; exceeding
// death_threshold terminates. Returns ids terminated this step.
std::vector<int> update_deaths(std::vector<TrackCore>& tracks, const std::vector<int>& decisions,
                               const GateConfig& cfg);

}  // namespace trackforge::tm
