#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "antsim/diagnostics.hpp"

namespace antsim {

enum class RunStatus { Completed, Error, EarlyStop };

inline const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::Completed: return "completed";
        case RunStatus::Error: return "error";
        case RunStatus::EarlyStop: return "early_stop";
    }
    return "unknown";
}

/// Deep copy of the evolving fields at one snapshot step.
struct SnapshotEntry {
    long step = 0;
    double t = 0.0;
    Field2D u, w, v, c;
};

/// One snapshot file on disk plus the gray scaling it was rendered with.
struct SnapshotFileRecord {
    long step = 0;
    double t = 0.0;
    std::string field;
    std::string csv_path;
    std::string pgm_path;
    double lo = 0.0;
    double hi = 1.0;
};

struct Observers {
    std::function<void(const TimeSeriesRow&)> on_row;
    std::function<void(const SimState&, long step)> on_snapshot;
};

struct RunOptions {
    /// Stop once every source is depleted and every trail sits below
    /// theta_fade. Off by default; the reference runs go the full horizon.
    bool early_stop = false;
};

struct RunReport {
    RunStatus status = RunStatus::Completed;
    std::string error; ///< set when status == Error
    long steps_done = 0;
    double final_t = 0.0;
    double wall_seconds = 0.0;
    std::vector<TimeSeriesRow> series;
    std::vector<SnapshotEntry> snapshots;
    std::vector<SnapshotFileRecord> snapshot_files; ///< filled by write_run_outputs
    EventLog events;
};

/// Drives the full experiment: builds the initial state, advances the
/// configured number of steps, records the time series and snapshots at
/// their cadences (step 0 included, plus a final row), and scans the
/// series for trail events. Step failures terminate the run and are
/// reported, with the step index, in the returned report.
inline RunReport run(const Scenario& sc, const Observers& obs = {}, const RunOptions& opt = {}) {
    const auto t_start = std::chrono::steady_clock::now();
    RunReport rep;
    SimState state = build_initial_state(sc);
    const double h2 = state.u.grid().h * state.u.grid().h;
    double unloaded = 0.0;

    auto take_row = [&](long step_idx) {
        rep.series.push_back(record(state, sc, step_idx, unloaded));
        if (obs.on_row) obs.on_row(rep.series.back());
    };
    auto take_snapshot = [&](long step_idx) {
        rep.snapshots.push_back(SnapshotEntry{step_idx, state.t, state.u, state.w, state.v, state.c});
        if (obs.on_snapshot) obs.on_snapshot(state, step_idx);
    };

    take_row(0);
    take_snapshot(0);

    long n = 0;
    while (n < sc.run.steps) {
        // Unloading ledger uses the pre-step state, matching the stepper's
        // left-endpoint source sampling.
        double nest_w = 0.0;
        for (std::size_t k = 0; k < state.w.size(); ++k)
            nest_w += state.w[k] * state.nest_mask()[k];
        unloaded += sc.run.dt * sc.params.alpha5 * nest_w * h2;

        try {
            state = step(state, sc.params, sc.run.dt);
        } catch (const Error& e) {
            rep.status = RunStatus::Error;
            rep.error = "step " + std::to_string(n + 1) + ": " + e.what();
            break;
        }
        ++n;
        // Pin t to n*dt: accumulated addition drifts by ~n ulps, enough to
        // smear the inflow cutoff across a step boundary.
        state.t = sc.run.dt * double(n);

        const bool rowed = n % sc.run.timeseries_every == 0;
        if (rowed) take_row(n);
        if (n % sc.run.snapshot_every == 0) take_snapshot(n);

        if (opt.early_stop && rowed && !sc.food.empty()) {
            const TimeSeriesRow& now = rep.series.back();
            const TimeSeriesRow& first = rep.series.front();
            bool done = true;
            for (std::size_t s = 0; s < sc.food.size(); ++s)
                done = done &&
                       now.food_remaining[s] <=
                           sc.events.depletion_fraction * first.food_remaining[s] &&
                       now.trail[s] <= sc.events.theta_fade;
            if (done) {
                rep.status = RunStatus::EarlyStop;
                break;
            }
        }
    }
    rep.steps_done = n;
    if (rep.status != RunStatus::Error && rep.series.back().step != rep.steps_done)
        take_row(rep.steps_done);

    rep.final_t = state.t;
    rep.events = detect_events(rep.series, sc.events.theta_form, sc.events.theta_fade,
                               sc.events.depletion_fraction);
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return rep;
}

} // namespace antsim
