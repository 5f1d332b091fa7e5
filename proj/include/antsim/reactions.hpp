#pragma once

#include <cmath>

#include "antsim/model.hpp"

namespace antsim {

/// Pointwise u -> w conversion rate: foraging ants become returning ants
/// wherever they meet food, at rate u*c.
inline Field2D conversion(const Field2D& u, const Field2D& c) {
    Field2D out(u.grid());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = u[k] * c[k];
    return out;
}

struct NestExchange {
    Field2D du;
    Field2D dw;
};

/// Nest source terms: returning ants unload inside the nest at rate
/// alpha5 and re-emerge as foragers, and fresh foragers flow in at
/// inflow_rate(t) spread over the unit-mass nest weight. du + dw sums to
/// exactly the inflow, cell by cell.
inline NestExchange nest_exchange(const Field2D& w, const SimState& s, const ModelParams& p,
                                  double t) {
    const Field2D& mask = s.nest_mask();
    const Field2D& weight = s.nest_weight();
    NestExchange out{Field2D(w.grid()), Field2D(w.grid())};
    const double m = inflow_rate(t, p);
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double unload = p.alpha5 * w[k] * mask[k];
        out.du[k] = unload + m * weight[k];
        out.dw[k] = -unload;
    }
    return out;
}

/// Right-hand side of the pheromone equation: deposition by returning
/// ants, unit-rate evaporation, unit diffusion.
inline Field2D pheromone_rhs(const Field2D& v, const Field2D& w) {
    Field2D out = laplacian(v);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += w[k] - v[k];
    return out;
}

/// Food depletion over one step with u frozen: the exact exponential
/// update c * exp(-alpha4 * u * dt). Monotone and nonnegative for any dt.
inline Field2D deplete_food(const Field2D& c, const Field2D& u, const ModelParams& p, double dt) {
    Field2D out(c.grid());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = c[k] * std::exp(-p.alpha4 * u[k] * dt);
    return out;
}

} // namespace antsim
