// Acceptance suite: one self-contained check per shipped guarantee, each
// printed as a single [PASS]/[FAIL] line. Run with --full-scale to add the
// full-resolution two-source experiment (several hundred seconds; excluded
// from the default ctest run).

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "antsim/antsim.hpp"

using namespace antsim;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void record(const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %s (%s)\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

Field2D random_field(const Grid& g, std::mt19937& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    Field2D f(g);
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = dist(rng);
    return f;
}

// Bare state: centered nest disk, homing field, flat terrain.
SimState bare_state(const Grid& g, double nest_radius, double eps_nest) {
    auto statics = std::make_shared<StaticFields>();
    statics->z = Field2D(g);
    statics->nest_mask = Field2D(g);
    statics->nest_weight = Field2D(g);
    statics->vfield_x = Field2D(g);
    statics->vfield_y = Field2D(g);
    const Vec2 nest{g.lx() / 2.0, g.ly() / 2.0};
    long n = 0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const Vec2 pc = g.center(i, j);
            const Vec2 home = nest_field(pc, nest, eps_nest);
            statics->vfield_x(i, j) = home.x;
            statics->vfield_y(i, j) = home.y;
            if (norm(pc - nest) <= nest_radius) {
                statics->nest_mask(i, j) = 1.0;
                ++n;
            }
        }
    for (std::size_t k = 0; k < statics->nest_weight.size(); ++k)
        statics->nest_weight[k] = statics->nest_mask[k] / (double(n) * g.h * g.h);
    SimState s;
    s.statics = std::move(statics);
    s.u = Field2D(g);
    s.w = Field2D(g);
    s.v = Field2D(g);
    s.c = Field2D(g);
    return s;
}

// ---------------------------------------------------------------------------
// 1. Conservation suite: random nonnegative fields, 1000 steps at dt_max.
void criterion_conservation() {
    const auto t0 = std::chrono::steady_clock::now();
    const Grid g = make_grid(50, 50, 0.1);
    std::mt19937 rng(2024);
    SimState s = bare_state(g, 0.25, 0.2);
    s.u = random_field(g, rng, 0.0, 1.0);
    s.w = random_field(g, rng, 0.0, 1.0);
    s.v = random_field(g, rng, 0.0, 1.0);
    s.c = random_field(g, rng, 0.0, 1.0);

    ModelParams p;
    p.alpha1 = 1.0;
    p.alpha2 = 0.05;
    p.alpha3 = 1.0;
    p.alpha4 = 1.0;
    p.alpha5 = 0.5;
    p.gamma = 0.5;
    p.u_max = std::numeric_limits<double>::infinity();
    p.m0 = 1.5;

    const double dt = cfl_limits(s, p).dt_max;
    p.t_inflow = 500.0 * dt; // inflow cutoff lands mid-run

    const double ledger0 = total_mass(s.u) + total_mass(s.w);
    double inflow_cum = 0.0;
    double worst_ant_drift = 0.0, worst_pher_drift = 0.0;
    bool c_monotone = true, nonneg = true;
    double prev_mass_c = total_mass(s.c);

    for (int n = 0; n < 1000; ++n) {
        const double mv = total_mass(s.v);
        const double mw = total_mass(s.w);
        inflow_cum += dt * inflow_rate(s.t, p);
        s = step(s, p, dt);

        const double ant_drift =
            std::abs(total_mass(s.u) + total_mass(s.w) - inflow_cum - ledger0) /
            std::max(1.0, ledger0);
        worst_ant_drift = std::max(worst_ant_drift, ant_drift);

        const double pher_expect = mv + dt * (mw - mv);
        const double pher_drift =
            std::abs(total_mass(s.v) - pher_expect) / std::max(1.0, std::abs(pher_expect));
        worst_pher_drift = std::max(worst_pher_drift, pher_drift);

        const double mass_c = total_mass(s.c);
        c_monotone = c_monotone && mass_c <= prev_mass_c;
        prev_mass_c = mass_c;
        for (std::size_t k = 0; k < s.u.size() && nonneg; ++k)
            nonneg = s.u[k] >= 0.0 && s.w[k] >= 0.0 && s.v[k] >= 0.0 && s.c[k] >= 0.0;
    }
    const double wall = seconds_since(t0);
    record("criterion 1: conservation suite (50x50, 1000 steps at dt_max)",
           worst_ant_drift <= 1e-10 && worst_pher_drift <= 1e-12 && c_monotone && nonneg &&
               wall < 10.0,
           fmt("ant ledger drift %.2e <= 1e-10, pheromone ledger drift %.2e <= 1e-12, "
               "food monotone %s, fields nonnegative %s, %.1f s < 10 s",
               worst_ant_drift, worst_pher_drift, c_monotone ? "yes" : "NO",
               nonneg ? "yes" : "NO", wall));
}

// ---------------------------------------------------------------------------
// 2. Evaporation law: uniform pheromone decays as (1 - dt)^n ~ e^{-t}.
void criterion_evaporation() {
    const Grid g = make_grid(32, 32, 0.25);
    SimState s = bare_state(g, 0.5, 0.2);
    s.v = Field2D(g, 1.0);
    ModelParams p;
    p.m0 = 0.0;

    const double dt = 1e-3;
    const double mass0 = total_mass(s.v);
    for (int n = 0; n < 1000; ++n) s = step(s, p, dt);
    const double ratio = total_mass(s.v) / mass0;
    const double geometric = std::pow(1.0 - dt, 1000.0);
    const double vs_exp = std::abs(ratio - std::exp(-1.0));
    const double vs_geom = std::abs(ratio - geometric);
    record("criterion 2: evaporation law (v0=1, dt=1e-3, 1000 steps)",
           vs_exp < 2e-3 && vs_geom < 1e-12,
           fmt("mass ratio %.6f, |ratio - e^-1| = %.2e < 2e-3, |ratio - (1-dt)^1000| = %.1e",
               ratio, vs_exp, vs_geom));
}

// ---------------------------------------------------------------------------
// 3. Diffusion oracle: first order in dt, and the free-space Gaussian.
void criterion_diffusion() {
    const auto t0 = std::chrono::steady_clock::now();
    const Grid g = make_grid(64, 64, 10.0 / 64.0);
    ModelParams p;
    p.alpha1 = 0.5;
    p.alpha2 = 0.0;
    p.gamma = 0.0;
    p.m0 = 0.0;

    const Vec2 mid{5.0, 5.0};
    const double sigma0 = 1.0;
    auto gaussian_at = [&](double t_elapsed) {
        const double var = sigma0 * sigma0 + 2.0 * p.alpha1 * t_elapsed;
        Field2D f(g);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const Vec2 d = g.center(i, j) - mid;
                f(i, j) = (sigma0 * sigma0 / var) *
                          std::exp(-(d.x * d.x + d.y * d.y) / (2.0 * var));
            }
        return f;
    };

    const double horizon = 1.0;
    auto evolve = [&](long steps) {
        SimState s = bare_state(g, 0.5, 0.2);
        s.u = gaussian_at(0.0);
        const double dt = horizon / double(steps);
        for (long n = 0; n < steps; ++n) s = step(s, p, dt);
        return s.u;
    };
    auto l1 = [&](const Field2D& a, const Field2D& b) {
        double d = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) d += std::abs(a[k] - b[k]);
        return d * g.h * g.h;
    };

    const Field2D coarse = evolve(100);
    const Field2D coarse_ref = evolve(1000);
    const Field2D fine = evolve(200);
    const Field2D fine_ref = evolve(2000);
    const double ratio = l1(coarse, coarse_ref) / l1(fine, fine_ref);

    const Field2D exact = gaussian_at(horizon);
    double exact_mass = 0.0;
    for (std::size_t k = 0; k < exact.size(); ++k) exact_mass += exact[k];
    exact_mass *= g.h * g.h;
    const double analytic_err = l1(coarse_ref, exact) / exact_mass;
    const double wall = seconds_since(t0);

    record("criterion 3: diffusion oracle (64x64 Gaussian bump)",
           ratio >= 1.7 && ratio <= 2.3 && analytic_err < 0.02 && wall < 5.0,
           fmt("dt-halving error ratio %.3f in [1.7, 2.3], analytic L1 error %.3f%% < 2%%, "
               "%.1f s < 5 s",
               ratio, 100.0 * analytic_err, wall));
}

// ---------------------------------------------------------------------------
// 4. Upwind positivity: randomized two-cell and 16x16 advection problems.
void criterion_positivity() {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dens(0.0, 5.0), speed(1e-3, 4.0), unit(0.0, 1.0);
    ModelParams p;

    bool ok = true;
    double worst = 0.0;
    long violations = 0;

    // Two-cell problems: one active interior face on a 3x3 grid.
    const Grid g2 = make_grid(3, 3, 1.0);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        Field2D d(g2);
        d(1, 1) = dens(rng);
        d(2, 1) = dens(rng);
        p.u_max = unit(rng) < 0.5 ? std::numeric_limits<double>::infinity()
                                  : 0.5 + 9.5 * unit(rng);
        FaceFluxes vel(g2);
        vel.fx(2, 1) = (unit(rng) < 0.5 ? 1.0 : -1.0) * speed(rng);
        const double dt = 0.9 * g2.h / std::abs(vel.fx(2, 1));
        const Field2D div = divergence(upwind_fluxes(d, vel, p));
        for (std::size_t k = 0; k < div.size(); ++k) {
            const double after = d[k] - dt * div[k];
            worst = std::min(worst, after);
            if (after < 0.0) ++violations;
        }
    }

    // 16x16 problems: drift from smooth random potentials (the shape the
    // model itself produces), spiky random densities, dt at the advective
    // bound, five transport-only steps.
    const Grid g = make_grid(16, 16, 0.25);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        Field2D pot = random_field(g, rng, 0.0, 2.0 * unit(rng));
        for (int pass = 0; pass < 3; ++pass) { // smooth like diffusion would
            Field2D next = pot;
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    double acc = pot(i, j), cnt = 1.0;
                    if (i > 0) acc += pot(i - 1, j), cnt += 1.0;
                    if (i < g.nx - 1) acc += pot(i + 1, j), cnt += 1.0;
                    if (j > 0) acc += pot(i, j - 1), cnt += 1.0;
                    if (j < g.ny - 1) acc += pot(i, j + 1), cnt += 1.0;
                    next(i, j) = acc / cnt;
                }
            pot = next;
        }
        Field2D z(g);
        if (unit(rng) < 0.3) {
            Topography hill;
            hill.kind = Topography::Kind::GaussianHill;
            hill.center = {4.0 * unit(rng), 4.0 * unit(rng)};
            hill.amplitude = unit(rng);
            hill.sigma = 0.5 + unit(rng);
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) z(i, j) = topography_height(hill, g.center(i, j));
        }
        p.alpha2 = 0.2 + 1.8 * unit(rng);
        p.u_max = unit(rng) < 0.5 ? std::numeric_limits<double>::infinity()
                                  : 1.0 + 9.0 * unit(rng);
        const FaceFluxes vel = drift_velocity_u(pot, z, p);

        double max_out = 0.0;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double out = std::max(0.0, -vel.fx(i, j)) + std::max(0.0, vel.fx(i + 1, j)) +
                             std::max(0.0, -vel.fy(i, j)) + std::max(0.0, vel.fy(i, j + 1));
                max_out = std::max(max_out, out);
            }
        if (max_out == 0.0) continue;
        const double dt = 0.9 * g.h / max_out;

        Field2D d(g);
        for (std::size_t k = 0; k < d.size(); ++k)
            d[k] = unit(rng) < 0.3 ? 0.0 : dens(rng); // spiky, with dead zones
        for (int n = 0; n < 5; ++n) {
            const Field2D div = divergence(upwind_fluxes(d, vel, p));
            for (std::size_t k = 0; k < d.size(); ++k) {
                d[k] -= dt * div[k];
                worst = std::min(worst, d[k]);
                if (d[k] < 0.0) ++violations;
            }
        }
    }
    ok = violations == 0;
    record("criterion 4: upwind positivity (10000 two-cell + 10000 16x16 problems)", ok,
           fmt("violations %ld, minimum density seen %.1e", violations, worst));
}

// ---------------------------------------------------------------------------
// 5 & 6. The two-source experiment at desk scale, plus byte determinism.
Scenario desk_scenario() {
    Scenario sc = parse_config(reference_config_text());
    sc.nx = 100;
    sc.ny = 100;
    sc.h = 0.1;
    sc.run.dt = 2e-3;      // same simulated horizon as the reference:
    sc.run.steps = 75000;  // dt * steps = 150
    sc.run.snapshot_every = 7500;
    sc.run.timeseries_every = 75;
    return sc;
}

struct ExperimentCheck {
    bool pass = false;
    std::string detail;
};

ExperimentCheck check_two_source_events(const Scenario& sc, const RunReport& rep) {
    ExperimentCheck out;
    if (rep.status != RunStatus::Completed) {
        out.detail = "run did not complete: " + rep.error;
        return out;
    }
    bool ok = true;
    std::string detail;
    for (std::size_t s = 0; s < rep.events.sources.size(); ++s) {
        const SourceEvents& ev = rep.events.sources[s];
        const bool all = ev.formation_time && ev.depletion_time && ev.fade_time;
        bool ordered = false, quiet = false;
        if (all) {
            ordered = *ev.formation_time < *ev.depletion_time &&
                      *ev.depletion_time < *ev.fade_time;
            quiet = true;
            for (const TimeSeriesRow& r : rep.series)
                if (r.t > *ev.fade_time && r.trail[s] > sc.events.theta_fade) quiet = false;
            detail += fmt("%ssource %zu: formation %.1f < depletion %.1f < fade %.1f%s",
                          s ? "; " : "", s, *ev.formation_time, *ev.depletion_time,
                          *ev.fade_time, quiet ? ", quiet after fade" : ", RE-CROSSED after fade");
        } else {
            detail += fmt("%ssource %zu: missing events (formation %s, depletion %s, fade %s)",
                          s ? "; " : "", s, ev.formation_time ? "yes" : "never",
                          ev.depletion_time ? "yes" : "never", ev.fade_time ? "yes" : "never");
        }
        ok = ok && all && ordered && quiet;
    }
    out.pass = ok;
    out.detail = detail;
    return out;
}

void criteria_experiment_and_determinism(const fs::path& workdir) {
    const Scenario sc = desk_scenario();
    const auto t0 = std::chrono::steady_clock::now();
    RunReport first = run(sc);
    const double wall_first = seconds_since(t0);
    write_run_outputs(first, sc, workdir / "desk_a");

    ExperimentCheck check = check_two_source_events(sc, first);
    record("criterion 5: two-source experiment, desk scale (100x100, t = 0..150)",
           check.pass && wall_first < 300.0,
           check.detail + fmt("; %.0f s < 300 s", wall_first));

    RunReport second = run(sc);
    write_run_outputs(second, sc, workdir / "desk_b");

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool identical = slurp(workdir / "desk_a/timeseries.csv") ==
                     slurp(workdir / "desk_b/timeseries.csv");
    long files = 1;
    for (const auto& entry : fs::directory_iterator(workdir / "desk_a/snapshots")) {
        ++files;
        identical = identical && slurp(entry.path()) ==
                                     slurp(workdir / "desk_b/snapshots" / entry.path().filename());
    }
    record("criterion 6: determinism (two desk-scale runs, byte-compared outputs)", identical,
           fmt("%ld files compared, %s", files, identical ? "all byte-identical" : "MISMATCH"));
}

void criterion_full_scale() {
    const Scenario sc = parse_config(reference_config_text());
    const auto t0 = std::chrono::steady_clock::now();
    const RunReport rep = run(sc);
    const double wall = seconds_since(t0);
    const ExperimentCheck check = check_two_source_events(sc, rep);
    record("full-scale variant: two-source experiment (200x200, dt = 5e-4, 300000 steps)",
           check.pass, check.detail + fmt("; wall %.0f s", wall));
}

// ---------------------------------------------------------------------------
// 7. Simplified-model regression: an independent, straight-line, raw-array
// implementation of the reduced dynamics (gamma = 0, no crowding cap, flat
// terrain) must agree with the full solver to machine precision.
struct SimpleModel {
    int nx, ny;
    double h;
    std::vector<double> u, w, v, c, hx, hy, mask, weight;

    std::size_t at(int i, int j) const { return std::size_t(j) * nx + i; }

    void advance(const ModelParams& p, double t, double dt) {
        const std::size_t n = u.size();
        std::vector<double> nu(n), nw(n), nv(n), nc(n);
        const double inv_h = 1.0 / h, inv_h2 = inv_h * inv_h;
        const double m = t < p.t_inflow ? p.m0 : 0.0;

        // Donor-cell fluxes through the face between a left/lower cell kl
        // and its right/upper neighbor kr, positive toward kr.
        auto flux_u = [&](std::size_t kl, std::size_t kr) {
            const double a = p.alpha2 * (v[kr] - v[kl]) * inv_h;
            return a >= 0.0 ? a * u[kl] : a * u[kr];
        };
        auto flux_w = [&](std::size_t kl, std::size_t kr, const std::vector<double>& home) {
            const double a = p.alpha2 * 0.5 * (home[kl] + home[kr]);
            return a >= 0.0 ? a * w[kl] : a * w[kr];
        };

        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const std::size_t k = at(i, j);
                double lap_u = 0.0, lap_w = 0.0, lap_v = 0.0;
                double adv_u = 0.0, adv_w = 0.0;
                if (i > 0) {
                    const std::size_t kw = at(i - 1, j);
                    lap_u += u[kw] - u[k];
                    lap_w += w[kw] - w[k];
                    lap_v += v[kw] - v[k];
                    adv_u -= flux_u(kw, k); // inflow through the west face
                    adv_w -= flux_w(kw, k, hx);
                }
                if (i < nx - 1) {
                    const std::size_t ke = at(i + 1, j);
                    lap_u += u[ke] - u[k];
                    lap_w += w[ke] - w[k];
                    lap_v += v[ke] - v[k];
                    adv_u += flux_u(k, ke); // outflow through the east face
                    adv_w += flux_w(k, ke, hx);
                }
                if (j > 0) {
                    const std::size_t ks = at(i, j - 1);
                    lap_u += u[ks] - u[k];
                    lap_w += w[ks] - w[k];
                    lap_v += v[ks] - v[k];
                    adv_u -= flux_u(ks, k);
                    adv_w -= flux_w(ks, k, hy);
                }
                if (j < ny - 1) {
                    const std::size_t kn = at(i, j + 1);
                    lap_u += u[kn] - u[k];
                    lap_w += w[kn] - w[k];
                    lap_v += v[kn] - v[k];
                    adv_u += flux_u(k, kn);
                    adv_w += flux_w(k, kn, hy);
                }
                const double conv = u[k] * c[k];
                const double unload = p.alpha5 * w[k] * mask[k];
                nu[k] = u[k] + dt * (p.alpha1 * lap_u * inv_h2 - adv_u * inv_h - conv + unload +
                                     m * weight[k]);
                nw[k] = w[k] + dt * (p.alpha3 * lap_w * inv_h2 - adv_w * inv_h + conv - unload);
                nv[k] = v[k] + dt * (w[k] - v[k] + lap_v * inv_h2);
                nc[k] = c[k] * std::exp(-p.alpha4 * u[k] * dt);
            }
        }
        u = nu;
        w = nw;
        v = nv;
        c = nc;
    }
};

void criterion_simplified_regression() {
    const Grid g = make_grid(32, 32, 10.0 / 32.0);
    ModelParams p;
    p.alpha1 = 0.2;
    p.alpha2 = 0.8;
    p.alpha3 = 0.1;
    p.alpha4 = 1.0;
    p.alpha5 = 2.0;
    p.gamma = 0.0;                                       // reduced dynamics:
    p.u_max = std::numeric_limits<double>::infinity();   // no crowding cap,
    p.m0 = 3.0;                                          // flat terrain
    p.t_inflow = 1e9;
    p.eps_nest = 0.3;

    SimState s = bare_state(g, 0.6, p.eps_nest);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const Vec2 pc = g.center(i, j);
            auto bump = [&](Vec2 c0, double amp, double sig) {
                const Vec2 d = pc - c0;
                return amp * std::exp(-(d.x * d.x + d.y * d.y) / (2.0 * sig * sig));
            };
            s.u(i, j) = 0.3 + bump({4.0, 6.0}, 1.0, 1.0);
            s.w(i, j) = bump({6.0, 4.0}, 0.5, 0.8);
            s.v(i, j) = bump({5.0, 5.0}, 0.7, 1.2);
            s.c(i, j) = norm(pc - Vec2{5.0, 8.0}) <= 0.8 ? 2.0 : 0.0;
        }

    SimpleModel ref;
    ref.nx = g.nx;
    ref.ny = g.ny;
    ref.h = g.h;
    const std::size_t n = g.cell_count();
    ref.u.assign(s.u.data(), s.u.data() + n);
    ref.w.assign(s.w.data(), s.w.data() + n);
    ref.v.assign(s.v.data(), s.v.data() + n);
    ref.c.assign(s.c.data(), s.c.data() + n);
    ref.hx.assign(s.vfield_x().data(), s.vfield_x().data() + n);
    ref.hy.assign(s.vfield_y().data(), s.vfield_y().data() + n);
    ref.mask.assign(s.nest_mask().data(), s.nest_mask().data() + n);
    ref.weight.assign(s.nest_weight().data(), s.nest_weight().data() + n);

    const double dt = 2e-3;
    double linf = 0.0;
    for (int step_idx = 0; step_idx < 100; ++step_idx) {
        ref.advance(p, s.t, dt);
        s = step(s, p, dt);
    }
    for (std::size_t k = 0; k < n; ++k) {
        linf = std::max(linf, std::abs(s.u[k] - ref.u[k]));
        linf = std::max(linf, std::abs(s.w[k] - ref.w[k]));
        linf = std::max(linf, std::abs(s.v[k] - ref.v[k]));
        linf = std::max(linf, std::abs(s.c[k] - ref.c[k]));
    }
    record("criterion 7: reduced-model regression (independent 32x32 implementation)",
           linf <= 1e-12, fmt("L-inf difference %.2e <= 1e-12 after 100 steps", linf));
}

} // namespace

int main(int argc, char** argv) {
    bool full_scale = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--full-scale") == 0) full_scale = true;

    const fs::path workdir = fs::temp_directory_path() / "antsim_acceptance";
    fs::remove_all(workdir);
    fs::create_directories(workdir);

    criterion_conservation();
    criterion_evaporation();
    criterion_diffusion();
    criterion_positivity();
    criteria_experiment_and_determinism(workdir);
    criterion_simplified_regression();
    if (full_scale) criterion_full_scale();

    std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAILURE" : "SUCCESS", g_failures);
    fs::remove_all(workdir);
    return g_failures ? 1 : 0;
}
