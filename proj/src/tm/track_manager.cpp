#include "trackforge/tm/track_manager.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "trackforge/common/error.hpp"
#include "trackforge/sim/sensor.hpp"

namespace trackforge::tm {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Deterministic k-means on measurement positions: farthest-first seeding
// from the lowest index, Lloyd iterations, then capacity repair moving the
// farthest member of any over-full cluster to the nearest one with room.
std::vector<std::vector<int>> split_by_kmeans(const std::vector<int>& members,
                                              const std::vector<Eigen::Vector3d>& positions,
                                              int capacity) {
    const int n = static_cast<int>(members.size());
    const int k = (n + capacity - 1) / capacity;

    std::vector<Eigen::Vector3d> centroids;
    centroids.push_back(positions[static_cast<std::size_t>(members.front())]);
    while (static_cast<int>(centroids.size()) < k) {
        double best_dist = -1.0;
        int best = members.front();
        for (const int idx : members) {
            double d = std::numeric_limits<double>::infinity();
            for (const auto& c : centroids) {
                d = std::min(d, (positions[static_cast<std::size_t>(idx)] - c).squaredNorm());
            }
            if (d > best_dist) {
                best_dist = d;
                best = idx;
            }
        }
        centroids.push_back(positions[static_cast<std::size_t>(best)]);
    }

    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    for (int iter = 0; iter < 32; ++iter) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            const auto& p = positions[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])];
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                const double d = (p - centroids[static_cast<std::size_t>(c)]).squaredNorm();
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (assign[static_cast<std::size_t>(i)] != best) {
                assign[static_cast<std::size_t>(i)] = best;
                changed = true;
            }
        }
        for (int c = 0; c < k; ++c) {
            Eigen::Vector3d sum = Eigen::Vector3d::Zero();
            int count = 0;
            for (int i = 0; i < n; ++i) {
                if (assign[static_cast<std::size_t>(i)] == c) {
                    sum += positions[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])];
                    ++count;
                }
            }
            if (count > 0) centroids[static_cast<std::size_t>(c)] = sum / count;
        }
        if (!changed) break;
    }

    std::vector<std::vector<int>> groups(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) {
        groups[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(
            members[static_cast<std::size_t>(i)]);
    }

    // capacity repair
    for (int c = 0; c < k; ++c) {
        auto& group = groups[static_cast<std::size_t>(c)];
        while (static_cast<int>(group.size()) > capacity) {
            // member farthest from its centroid moves out
            int worst_pos = 0;
            double worst_d = -1.0;
            for (std::size_t i = 0; i < group.size(); ++i) {
                const double d = (positions[static_cast<std::size_t>(group[i])] -
                                  centroids[static_cast<std::size_t>(c)])
                                     .squaredNorm();
                if (d > worst_d) {
                    worst_d = d;
                    worst_pos = static_cast<int>(i);
                }
            }
            const int moving = group[static_cast<std::size_t>(worst_pos)];
            group.erase(group.begin() + worst_pos);
            int dest = -1;
            double dest_d = std::numeric_limits<double>::infinity();
            for (int c2 = 0; c2 < k; ++c2) {
                if (c2 == c || static_cast<int>(groups[static_cast<std::size_t>(c2)].size()) >=
                                   capacity) {
                    continue;
                }
                const double d = (positions[static_cast<std::size_t>(moving)] -
                                  centroids[static_cast<std::size_t>(c2)])
                                     .squaredNorm();
                if (d < dest_d) {
                    dest_d = d;
                    dest = c2;
                }
            }
            groups[static_cast<std::size_t>(dest)].push_back(moving);
        }
    }
    return groups;
}

}  // namespace

GateResult gate_clusters(const std::vector<Eigen::Vector3d>& measurement_positions,
                         const std::vector<Eigen::Vector3d>& predicted_positions,
                         const GateConfig& cfg) {
    const int m = static_cast<int>(measurement_positions.size());
    const int t = static_cast<int>(predicted_positions.size());
    const double gate = cfg.cluster_gate_factor * cfg.birth_gate_radius;
    const double gate_sq = gate * gate;

    // nodes 0..t-1 are tracks, t..t+m-1 measurements
    UnionFind uf(t + m);
    std::vector<char> linked(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < t; ++i) {
            if ((measurement_positions[static_cast<std::size_t>(j)] -
                 predicted_positions[static_cast<std::size_t>(i)])
                    .squaredNorm() <= gate_sq) {
                uf.unite(i, t + j);
                linked[static_cast<std::size_t>(j)] = 1;
            }
        }
    }

    GateResult out;
    std::vector<int> component_of(static_cast<std::size_t>(t), -1);
    std::vector<Cluster> components;
    for (int i = 0; i < t; ++i) {
        const int root = uf.find(i);
        int comp = -1;
        for (int i2 = 0; i2 < i; ++i2) {
            if (uf.find(i2) == root) {
                comp = component_of[static_cast<std::size_t>(i2)];
                break;
            }
        }
        if (comp < 0) {
            comp = static_cast<int>(components.size());
            components.emplace_back();
        }
        component_of[static_cast<std::size_t>(i)] = comp;
        components[static_cast<std::size_t>(comp)].tracks.push_back(i);
    }
    for (int j = 0; j < m; ++j) {
        if (!linked[static_cast<std::size_t>(j)]) {
            out.unlinked_measurements.push_back(j);
            continue;
        }
        const int root = uf.find(t + j);
        for (int i = 0; i < t; ++i) {
            if (uf.find(i) == root) {
                components[static_cast<std::size_t>(component_of[static_cast<std::size_t>(i)])]
                    .measurements.push_back(j);
                break;
            }
        }
    }

    for (auto& comp : components) {
        if (static_cast<int>(comp.measurements.size()) <= cfg.cluster_capacity) {
            out.clusters.push_back(std::move(comp));
            continue;
        }
        const auto groups =
            split_by_kmeans(comp.measurements, measurement_positions, cfg.cluster_capacity);
        // tracks follow the nearest sub-cluster centroid
        std::vector<Eigen::Vector3d> centroids;
        for (const auto& g : groups) {
            Eigen::Vector3d c = Eigen::Vector3d::Zero();
            for (const int j : g) c += measurement_positions[static_cast<std::size_t>(j)];
            centroids.push_back(g.empty() ? Eigen::Vector3d::Zero()
                                          : Eigen::Vector3d(c / static_cast<double>(g.size())));
        }
        std::vector<Cluster> subs(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g) subs[g].measurements = groups[g];
        for (const int track : comp.tracks) {
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t g = 0; g < groups.size(); ++g) {
                if (groups[g].empty()) continue;
                const double d = (predicted_positions[static_cast<std::size_t>(track)] -
                                  centroids[g])
                                     .squaredNorm();
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(g);
                }
            }
            subs[static_cast<std::size_t>(best)].tracks.push_back(track);
        }
        for (auto& sub : subs) {
            if (!sub.tracks.empty() || !sub.measurements.empty()) {
                out.clusters.push_back(std::move(sub));
            }
        }
    }
    return out;
}

BirthResult update_births(const std::vector<sim::Measurement>& unassociated,
                          std::vector<ProbableTrack>& probables, const GateConfig& cfg,
                          int& next_id, int step) {
    BirthResult result;
    const double gate_sq = cfg.birth_gate_radius * cfg.birth_gate_radius;

    std::vector<char> refreshed(probables.size(), 0);
    for (const auto& meas : unassociated) {
        const Eigen::Vector3d pos = sim::spherical_to_cartesian(meas).pos;
        int best = -1;
        double best_d = gate_sq;
        for (std::size_t p = 0; p < probables.size(); ++p) {
            if (refreshed[p]) continue;
            const double d = (probables[p].head - pos).squaredNorm();
            if (d < best_d || (d == best_d && best >= 0 &&
                               probables[p].id < probables[static_cast<std::size_t>(best)].id)) {
                best_d = d;
                best = static_cast<int>(p);
            }
        }
        if (best >= 0) {
            auto& prob = probables[static_cast<std::size_t>(best)];
            refreshed[static_cast<std::size_t>(best)] = 1;
            prob.head = pos;
            prob.hits += 1;
            prob.steps_since_refresh = 0;
            prob.history.push_back(meas);
        } else {
            ProbableTrack fresh;
            fresh.id = next_id++;
            fresh.head = pos;
            fresh.hits = 1;
            fresh.history.push_back(meas);
            probables.push_back(fresh);
            refreshed.push_back(1);
            result.events.push_back({step, TrackEvent::Seed, fresh.id, pos});
        }
    }

    std::vector<ProbableTrack> kept;
    kept.reserve(probables.size());
    for (std::size_t p = 0; p < probables.size(); ++p) {
        auto& prob = probables[p];
        if (!refreshed[p]) {
            prob.steps_since_refresh += 1;
            if (prob.steps_since_refresh >= cfg.probable_patience) continue;  // dropped
        }
        if (prob.hits >= cfg.birth_threshold) {
            PromotedTrack promoted;
            promoted.id = prob.id;
            promoted.measurement = prob.history.back();
            promoted.position = prob.head;
            promoted.history = prob.history;
            result.events.push_back({step, TrackEvent::Promote, prob.id, prob.head});
            result.promoted.push_back(std::move(promoted));
            continue;
        }
        kept.push_back(std::move(prob));
    }
    probables = std::move(kept);
    return result;
}

std::vector<int> update_deaths(std::vector<TrackCore>& tracks, const std::vector<int>& decisions,
                               const GateConfig& cfg) {
    if (tracks.size() != decisions.size()) {
        throw ShapeMismatch("update_deaths: decisions must cover all confirmed tracks");
    }
    std::vector<int> terminated;
    for (std::size_t i = 0; i < tracks.size(); ++i) {
        auto& track = tracks[i];
        if (track.terminated) continue;
        if (decisions[i] < 0) {
            track.miss_count += 1;
            if (track.miss_count > cfg.death_threshold) {
                track.terminated = true;
                terminated.push_back(track.id);
            }
        } else {
            track.miss_count = 0;
        }
    }
    return terminated;
}

}  // namespace trackforge::tm
