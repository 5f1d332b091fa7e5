#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <vector>

#include "antsim/scenario.hpp"

namespace antsim {

/// One sampled line of the run's bookkeeping: field masses, per-source
/// remaining food and trail strength, and food mass delivered to the nest
/// so far (a diagnostic; it feeds nothing back into the dynamics).
struct TimeSeriesRow {
    long step = 0;
    double t = 0.0;
    double mass_u = 0.0, mass_w = 0.0, mass_v = 0.0, mass_c = 0.0;
    std::vector<double> food_remaining;
    std::vector<double> trail;
    double unloaded = 0.0;
};

struct SourceEvents {
    std::optional<double> formation_time;
    std::optional<double> depletion_time;
    std::optional<double> fade_time;
};

struct EventLog {
    std::vector<SourceEvents> sources;
};

/// Weakest-link trail statistic: the minimum pheromone value sampled at k
/// evenly spaced points strictly inside the segment from the nest-disk
/// boundary to the food-disk boundary. A trail only counts if it is
/// strong along the WHOLE corridor.
inline double trail_strength(const Field2D& v, Vec2 nest_center, double nest_radius,
                             Vec2 food_center, double food_radius, int k) {
    if (k < 2) throw Error("trail_strength: need at least 2 samples");
    Vec2 dir = food_center - nest_center;
    const double dist = norm(dir);
    if (dist > 0.0) dir = (1.0 / dist) * dir;
    const Vec2 a = nest_center + std::min(nest_radius, dist) * dir;
    const Vec2 b = food_center - std::min(food_radius, dist) * dir;
    double strength = std::numeric_limits<double>::infinity();
    for (int s = 0; s < k; ++s) {
        const double frac = double(s + 1) / double(k + 1);
        const Vec2 p = a + frac * (b - a);
        strength = std::min(strength, interp_bilinear(v, p));
    }
    return strength;
}

/// Samples every row field from the committed state. `unloaded` is the
/// run ledger's cumulative nest-unloading mass, owned by the run loop.
inline TimeSeriesRow record(const SimState& s, const Scenario& sc, long step = 0,
                            double unloaded = 0.0) {
    TimeSeriesRow row;
    row.step = step;
    row.t = s.t;
    row.mass_u = total_mass(s.u);
    row.mass_w = total_mass(s.w);
    row.mass_v = total_mass(s.v);
    row.mass_c = total_mass(s.c);
    row.unloaded = unloaded;
    const Grid& g = s.c.grid();
    const double h2 = g.h * g.h;
    for (const FoodSource& f : sc.food) {
        double remaining = 0.0;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                if (norm(g.center(i, j) - f.center) <= f.radius) remaining += s.c(i, j) * h2;
        row.food_remaining.push_back(remaining);
        row.trail.push_back(
            trail_strength(s.v, sc.nest_center, sc.nest_radius, f.center, f.radius, 64));
    }
    return row;
}

/// Scans a time series for the three per-source events. Formation is the
/// first crossing of theta_form; depletion the first drop of remaining
/// food below depletion_fraction of its initial value; fade the first
/// time after both depletion and formation at which the strength sits at
/// or below theta_fade. The theta_fade < theta_form hysteresis keeps a
/// flickering trail from fading and re-forming on noise.
inline EventLog detect_events(const std::vector<TimeSeriesRow>& series, double theta_form,
                              double theta_fade, double depletion_fraction) {
    if (theta_fade > theta_form) throw Error("detect_events: theta_fade must not exceed theta_form");
    if (!(depletion_fraction > 0.0 && depletion_fraction < 1.0))
        throw Error("detect_events: depletion_fraction must lie in (0, 1)");
    EventLog log;
    if (series.empty()) return log;
    const std::size_t n_sources = series.front().food_remaining.size();
    for (std::size_t src = 0; src < n_sources; ++src) {
        SourceEvents ev;
        const double initial = series.front().food_remaining[src];
        for (const TimeSeriesRow& row : series) {
            if (!ev.formation_time && row.trail[src] >= theta_form) ev.formation_time = row.t;
            if (!ev.depletion_time && row.food_remaining[src] <= depletion_fraction * initial)
                ev.depletion_time = row.t;
            if (!ev.fade_time && ev.formation_time && ev.depletion_time &&
                row.t > *ev.depletion_time && row.t >= *ev.formation_time &&
                row.trail[src] <= theta_fade)
                ev.fade_time = row.t;
        }
        log.sources.push_back(ev);
    }
    return log;
}

/// Time-series CSV: header plus one row per sample, shortest round-trip
/// decimals, '.' decimal point.
inline void write_timeseries_csv(const std::vector<TimeSeriesRow>& rows, std::size_t n_sources,
                                 const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out << "step,t,mass_u,mass_w,mass_v,mass_c";
    for (std::size_t s = 0; s < n_sources; ++s)
        out << ",food_" << s << ",trail_" << s;
    out << ",unloaded\n";
    for (const TimeSeriesRow& r : rows) {
        out << r.step << ',' << format_double(r.t) << ',' << format_double(r.mass_u) << ','
            << format_double(r.mass_w) << ',' << format_double(r.mass_v) << ','
            << format_double(r.mass_c);
        for (std::size_t s = 0; s < n_sources; ++s)
            out << ',' << format_double(r.food_remaining[s]) << ',' << format_double(r.trail[s]);
        out << ',' << format_double(r.unloaded) << '\n';
    }
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

} // namespace antsim
