#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "antsim/fluxes.hpp"
#include "antsim/reactions.hpp"

namespace antsim {

namespace detail {

/// Largest per-cell total outgoing speed of a face-velocity set. The
/// donor-cell positivity bound needs the sum of outflows, not the single
/// fastest face.
inline double max_outgoing_speed(const FaceFluxes& vel) {
    const Grid& g = vel.grid();
    double worst = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double out = 0.0;
            out += std::max(0.0, -vel.fx(i, j));
            out += std::max(0.0, vel.fx(i + 1, j));
            out += std::max(0.0, -vel.fy(i, j));
            out += std::max(0.0, vel.fy(i, j + 1));
            worst = std::max(worst, out);
        }
    return worst;
}

inline void check_field(const Field2D& f, const char* name, double t) {
    const Grid& g = f.grid();
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double x = f(i, j);
            if (!std::isfinite(x))
                throw StepError(name, i, j, x,
                                "nonfinite value in field '" + std::string(name) + "' at cell (" +
                                    std::to_string(i) + ", " + std::to_string(j) + "), t=" +
                                    format_double(t));
            if (x < -1e-14)
                throw StepError(name, i, j, x,
                                "negative density " + format_double(x) + " in field '" +
                                    std::string(name) + "' at cell (" + std::to_string(i) + ", " +
                                    std::to_string(j) + "), t=" + format_double(t) +
                                    " (time step too large)");
        }
}

} // namespace detail

/// Stability bounds for the explicit Euler step, evaluated on the current
/// state: diffusion (the unit pheromone diffusivity included), drift
/// outflow per cell, and the pointwise loss rates of u, w and v. dt_max
/// applies a 0.9 safety factor to the tightest bound.
inline StepLimits cfl_limits(const SimState& s, const ModelParams& p) {
    const Grid& g = s.u.grid();
    StepLimits lim;
    lim.dt_diffusion = g.h * g.h / (4.0 * std::max({p.alpha1, p.alpha3, 1.0}));

    const double speed = std::max(detail::max_outgoing_speed(drift_velocity_u(s.v, s.z(), p)),
                                  detail::max_outgoing_speed(drift_velocity_w(s, p)));
    lim.dt_advection = speed > 0.0 ? g.h / speed : std::numeric_limits<double>::infinity();

    double c_max = 0.0;
    for (std::size_t k = 0; k < s.c.size(); ++k) c_max = std::max(c_max, s.c[k]);
    lim.dt_reaction = 1.0 / std::max({c_max, p.alpha5, 1.0});

    lim.dt_max = 0.9 * std::min({lim.dt_diffusion, lim.dt_advection, lim.dt_reaction});
    return lim;
}

/// One explicit Euler step. Every right-hand side is evaluated from the
/// incoming state, then committed simultaneously; food uses its exact
/// exponential update. Negative densities are an error, never clamped --
/// silently repairing them would falsify the conservation ledgers.
inline SimState step(const SimState& s, const ModelParams& p, double dt) {
    if (!(dt > 0.0)) throw Error("step: dt must be positive");
    const Grid& g = s.u.grid();

    const Field2D div_diff_u = divergence(diffusive_fluxes_u(s.u, s.v, p));
    const Field2D div_adv_u = divergence(upwind_fluxes(s.u, drift_velocity_u(s.v, s.z(), p), p));
    const Field2D div_diff_w = divergence(diffusive_fluxes_w(s.w, p));
    const Field2D div_adv_w = divergence(upwind_fluxes(s.w, drift_velocity_w(s, p), p));
    const Field2D conv = conversion(s.u, s.c);
    const NestExchange nest = nest_exchange(s.w, s, p, s.t);
    const Field2D v_rhs = pheromone_rhs(s.v, s.w);

    SimState out;
    out.t = s.t + dt;
    out.statics = s.statics;
    out.u = Field2D(g);
    out.w = Field2D(g);
    out.v = Field2D(g);
    for (std::size_t k = 0; k < s.u.size(); ++k) {
        out.u[k] = s.u[k] + dt * (div_diff_u[k] - div_adv_u[k] - conv[k] + nest.du[k]);
        out.w[k] = s.w[k] + dt * (div_diff_w[k] - div_adv_w[k] + conv[k] + nest.dw[k]);
        out.v[k] = s.v[k] + dt * v_rhs[k];
    }
    out.c = deplete_food(s.c, s.u, p, dt);

    detail::check_field(out.u, "u", out.t);
    detail::check_field(out.w, "w", out.t);
    detail::check_field(out.v, "v", out.t);
    detail::check_field(out.c, "c", out.t);
    return out;
}

} // namespace antsim
