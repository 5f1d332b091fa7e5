#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "antsim/runner.hpp"
#include "antsim/version.hpp"

namespace antsim {

/// Field as CSV: ny lines of nx comma-separated values, bottom row (j=0)
/// first, shortest round-trip decimals, trailing newline. Lossless.
inline void write_field_csv(const Field2D& f, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    const Grid& g = f.grid();
    std::string line;
    for (int j = 0; j < g.ny; ++j) {
        line.clear();
        for (int i = 0; i < g.nx; ++i) {
            if (i) line += ',';
            line += format_double(f(i, j));
        }
        line += '\n';
        out << line;
    }
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

/// Reads a field written by write_field_csv back onto the given grid.
inline Field2D read_field_csv(const Grid& g, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    Field2D f(g);
    std::string line;
    for (int j = 0; j < g.ny; ++j) {
        if (!std::getline(in, line)) throw Error("'" + path.string() + "': too few rows");
        std::size_t pos = 0;
        for (int i = 0; i < g.nx; ++i) {
            auto comma = line.find(',', pos);
            const std::string cell =
                line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            double x;
            if (!parse_double(cell, x))
                throw Error("'" + path.string() + "': bad value '" + cell + "'");
            f(i, j) = x;
            pos = comma == std::string::npos ? line.size() : comma + 1;
        }
    }
    return f;
}

/// 16-bit binary PGM (P5, maxval 65535, big-endian samples). Values map
/// through round-half-up of 65535 * clamp((x - lo)/(hi - lo), 0, 1); the
/// top image row is the top of the domain (j = ny-1).
inline void write_field_pgm(const Field2D& f, const std::filesystem::path& path, double lo,
                            double hi) {
    if (!(hi > lo)) throw Error("write_field_pgm: need hi > lo");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    const Grid& g = f.grid();
    out << "P5\n" << g.nx << ' ' << g.ny << "\n65535\n";
    std::vector<unsigned char> row(std::size_t(g.nx) * 2);
    const double scale = 1.0 / (hi - lo);
    for (int j = g.ny - 1; j >= 0; --j) {
        for (int i = 0; i < g.nx; ++i) {
            const double t = std::clamp((f(i, j) - lo) * scale, 0.0, 1.0);
            const auto q = std::uint16_t(std::floor(65535.0 * t + 0.5));
            row[std::size_t(i) * 2] = (unsigned char)(q >> 8);
            row[std::size_t(i) * 2 + 1] = (unsigned char)(q & 0xff);
        }
        out.write(reinterpret_cast<const char*>(row.data()), std::streamsize(row.size()));
    }
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

/// Run manifest: scenario echo, tool version, snapshot files with their
/// gray scalings, event log, termination reason and wall time.
inline void write_manifest(const RunReport& rep, const Scenario& sc,
                           const std::filesystem::path& path) {
    nlohmann::json j;
    j["tool"] = {{"name", "antsim"}, {"version", version}};
    j["scenario_toml"] = serialize_config(sc);
    j["termination"] = to_string(rep.status);
    if (rep.status == RunStatus::Error) j["error"] = rep.error;
    j["steps_done"] = rep.steps_done;
    j["final_t"] = rep.final_t;
    j["wall_seconds"] = rep.wall_seconds;
    j["timeseries"] = "timeseries.csv";

    auto time_or_null = [](const std::optional<double>& t) {
        return t ? nlohmann::json(*t) : nlohmann::json(nullptr);
    };
    j["events"] = nlohmann::json::array();
    for (std::size_t s = 0; s < rep.events.sources.size(); ++s) {
        const SourceEvents& ev = rep.events.sources[s];
        j["events"].push_back({{"source", s},
                               {"formation_time", time_or_null(ev.formation_time)},
                               {"depletion_time", time_or_null(ev.depletion_time)},
                               {"fade_time", time_or_null(ev.fade_time)}});
    }

    // Group file records by snapshot step, preserving order.
    j["snapshots"] = nlohmann::json::array();
    for (std::size_t k = 0; k < rep.snapshot_files.size();) {
        const long step = rep.snapshot_files[k].step;
        nlohmann::json snap{{"step", step}, {"t", rep.snapshot_files[k].t}};
        snap["files"] = nlohmann::json::object();
        for (; k < rep.snapshot_files.size() && rep.snapshot_files[k].step == step; ++k) {
            const SnapshotFileRecord& r = rep.snapshot_files[k];
            snap["files"][r.field] = {
                {"csv", r.csv_path}, {"pgm", r.pgm_path}, {"lo", r.lo}, {"hi", r.hi}};
        }
        j["snapshots"].push_back(std::move(snap));
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

/// Writes everything a finished run produces under out_dir: the time
/// series CSV, per-field CSV + PGM snapshot pairs, and the manifest. PGM
/// scaling is fixed per field across the whole run (lo = 0, hi = the
/// run-wide maximum) so successive frames are directly comparable.
inline void write_run_outputs(RunReport& rep, const Scenario& sc,
                              const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    write_timeseries_csv(rep.series, sc.food.size(), out_dir / "timeseries.csv");

    static constexpr const char* field_names[4] = {"u", "w", "v", "c"};
    if (!rep.snapshots.empty()) {
        fs::create_directories(out_dir / "snapshots");
        double hi[4] = {0.0, 0.0, 0.0, 0.0};
        for (const SnapshotEntry& snap : rep.snapshots) {
            const Field2D* fields[4] = {&snap.u, &snap.w, &snap.v, &snap.c};
            for (int f = 0; f < 4; ++f)
                for (std::size_t k = 0; k < fields[f]->size(); ++k)
                    hi[f] = std::max(hi[f], (*fields[f])[k]);
        }
        for (int f = 0; f < 4; ++f)
            if (!(hi[f] > 0.0)) hi[f] = 1.0; // field never left zero

        rep.snapshot_files.clear();
        char tag[32];
        for (const SnapshotEntry& snap : rep.snapshots) {
            const Field2D* fields[4] = {&snap.u, &snap.w, &snap.v, &snap.c};
            std::snprintf(tag, sizeof tag, "%07ld", snap.step);
            for (int f = 0; f < 4; ++f) {
                SnapshotFileRecord rec;
                rec.step = snap.step;
                rec.t = snap.t;
                rec.field = field_names[f];
                rec.lo = 0.0;
                rec.hi = hi[f];
                const std::string base = std::string("snapshots/") + field_names[f] + "_" + tag;
                rec.csv_path = base + ".csv";
                rec.pgm_path = base + ".pgm";
                write_field_csv(*fields[f], out_dir / rec.csv_path);
                write_field_pgm(*fields[f], out_dir / rec.pgm_path, rec.lo, rec.hi);
                rep.snapshot_files.push_back(std::move(rec));
            }
        }
    }
    write_manifest(rep, sc, out_dir / "manifest.json");
}

} // namespace antsim
