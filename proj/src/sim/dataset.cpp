#include "trackforge/sim/dataset.hpp"

#include <fstream>

#include <json.hpp>

#include "trackforge/common/error.hpp"
#include "trackforge/common/threads.hpp"
#include "trackforge/common/version.hpp"

namespace trackforge::sim {

using nlohmann::json;

namespace {

json noise_to_json(const NoiseParams& n) {
    return {{"sigma_d", n.sigma_d},
            {"sigma_phi_p", n.sigma_phi_p},
            {"sigma_phi_a", n.sigma_phi_a},
            {"sigma_v", n.sigma_v}};
}

NoiseParams noise_from_json(const json& j) {
    NoiseParams n;
    n.sigma_d = j.at("sigma_d");
    n.sigma_phi_p = j.at("sigma_phi_p");
    n.sigma_phi_a = j.at("sigma_phi_a");
    n.sigma_v = j.at("sigma_v");
    return n;
}

json bounds_to_json(const ControlBounds& b) {
    return {{"nx_min", b.nx_min}, {"nx_max", b.nx_max}, {"nz_min", b.nz_min},
            {"nz_max", b.nz_max}, {"roll_max", b.roll_max}, {"v_min", b.v_min},
            {"v_max", b.v_max},   {"pitch_max", b.pitch_max}};
}

}  // namespace

std::string DatasetConfig::canonical_json() const {
    json j{{"track_count", track_count},
           {"samples_per_track", samples_per_track},
           {"sample_interval", sample_interval},
           {"dt_sim", dt_sim},
           {"train_fraction", train_fraction},
           {"noise", noise_to_json(noise)},
           {"bounds", bounds_to_json(truth.bounds)}};
    return j.dump();
}

Dataset generate_dataset(const DatasetConfig& cfg, std::uint64_t seed) {
    if (cfg.track_count < 1) throw ConfigError("generate_dataset: track count must be >= 1");
    if (cfg.samples_per_track < 2) {
        throw ConfigError("generate_dataset: need at least 2 samples per track");
    }

    Dataset ds;
    ds.config = cfg;
    ds.seed = seed;
    ds.tracks.resize(static_cast<std::size_t>(cfg.track_count));

    const int stride = static_cast<int>(std::llround(cfg.sample_interval / cfg.dt_sim));
    const int sim_steps = (cfg.samples_per_track - 1) * stride + 1;

    TruthConfig truth_cfg = cfg.truth;
    truth_cfg.dt = cfg.dt_sim;

    parallel_for(cfg.track_count, [&](int i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const Trajectory traj =
            generate_truth_from(sample_initial_state(rng, truth_cfg.init), rng, sim_steps, truth_cfg);
        TrackRecord rec;
        rec.id = i;
        rec.dt_sample = cfg.sample_interval;
        rec.truth.reserve(static_cast<std::size_t>(cfg.samples_per_track));
        rec.meas.reserve(static_cast<std::size_t>(cfg.samples_per_track));
        for (int k = 0; k < cfg.samples_per_track; ++k) {
            const TargetState& s = traj.states[static_cast<std::size_t>(k * stride)];
            Eigen::Matrix<double, 6, 1> t;
            t << s.position(), s.velocity();
            rec.truth.push_back(t);
            Measurement m = measure(s, cfg.noise, rng);
            m.origin_tag = i;
            rec.meas.push_back(m);
        }
        ds.tracks[static_cast<std::size_t>(i)] = std::move(rec);
    });

    const int n_train = static_cast<int>(std::llround(cfg.train_fraction * cfg.track_count));
    for (int i = 0; i < cfg.track_count; ++i) {
        (i < n_train ? ds.train_ids : ds.val_ids).push_back(i);
    }
    return ds;
}

void write_dataset(const Dataset& ds, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string cfg_hash = hash_hex(ds.config.canonical_json());

    std::ofstream data(dir / "data.ndjson", std::ios::binary);
    if (!data) throw IoError("write_dataset: cannot open " + (dir / "data.ndjson").string());

    json header{{"tool", "trackforge"}, {"version", kVersion}, {"config_hash", cfg_hash}};
    data << header.dump() << "\n";
    for (const auto& rec : ds.tracks) {
        json truth = json::array();
        for (const auto& t : rec.truth) {
            truth.push_back({t[0], t[1], t[2], t[3], t[4], t[5]});
        }
        json meas = json::array();
        for (const auto& m : rec.meas) {
            meas.push_back({m.r, m.phi_p, m.phi_a, m.v_r});
        }
        json line{{"id", rec.id},
                  {"dt_sample", rec.dt_sample},
                  {"truth", std::move(truth)},
                  {"meas", std::move(meas)}};
        data << line.dump() << "\n";
    }
    if (!data.good()) throw IoError("write_dataset: write failed for data.ndjson");

    json manifest{{"tool", "trackforge"},
                  {"version", kVersion},
                  {"config_hash", cfg_hash},
                  {"seed", ds.seed},
                  {"track_count", ds.config.track_count},
                  {"samples_per_track", ds.config.samples_per_track},
                  {"sample_interval", ds.config.sample_interval},
                  {"dt_sim", ds.config.dt_sim},
                  {"noise", noise_to_json(ds.config.noise)},
                  {"bounds", bounds_to_json(ds.config.truth.bounds)},
                  {"train_ids", ds.train_ids},
                  {"val_ids", ds.val_ids}};
    std::ofstream mf(dir / "manifest.json", std::ios::binary);
    if (!mf) throw IoError("write_dataset: cannot open " + (dir / "manifest.json").string());
    mf << manifest.dump(2) << "\n";
    if (!mf.good()) throw IoError("write_dataset: write failed for manifest.json");
}

Dataset load_dataset(const std::filesystem::path& dir) {
    std::ifstream mf(dir / "manifest.json");
    if (!mf) throw IoError("load_dataset: cannot open " + (dir / "manifest.json").string());
    json manifest = json::parse(mf, nullptr, /*allow_exceptions=*/true);

    Dataset ds;
    ds.seed = manifest.at("seed");
    ds.config.track_count = manifest.at("track_count");
    ds.config.samples_per_track = manifest.at("samples_per_track");
    ds.config.sample_interval = manifest.at("sample_interval");
    ds.config.dt_sim = manifest.at("dt_sim");
    ds.config.noise = noise_from_json(manifest.at("noise"));
    ds.train_ids = manifest.at("train_ids").get<std::vector<int>>();
    ds.val_ids = manifest.at("val_ids").get<std::vector<int>>();

    std::ifstream data(dir / "data.ndjson");
    if (!data) throw IoError("load_dataset: cannot open " + (dir / "data.ndjson").string());
    std::string line;
    while (std::getline(data, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        if (j.contains("tool")) continue;  // header record
        TrackRecord rec;
        rec.id = j.at("id");
        rec.dt_sample = j.at("dt_sample");
        for (const auto& t : j.at("truth")) {
            Eigen::Matrix<double, 6, 1> v;
            for (int k = 0; k < 6; ++k) v[k] = t.at(static_cast<std::size_t>(k));
            rec.truth.push_back(v);
        }
        for (const auto& m : j.at("meas")) {
            Measurement meas;
            meas.r = m.at(0);
            meas.phi_p = m.at(1);
            meas.phi_a = m.at(2);
            meas.v_r = m.at(3);
            meas.origin_tag = rec.id;
            rec.meas.push_back(meas);
        }
        ds.tracks.push_back(std::move(rec));
    }
    return ds;
}

}  // namespace trackforge::sim
