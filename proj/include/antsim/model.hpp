#pragma once

#include <cmath>
#include <limits>
#include <memory>

#include "antsim/grid.hpp"

namespace antsim {

/// All model coefficients. u_max = inf disables the crowding limiter.
/// Defaults are the reference two-source scenario values.
struct ModelParams {
    double alpha1 = 0.1;  ///< foraging-ant diffusivity
    double alpha2 = 1.0;  ///< drift strength (pheromone taxis and homing transport)
    double alpha3 = 0.03; ///< returning-ant diffusivity
    double alpha4 = 0.25; ///< food depletion rate
    double alpha5 = 5.0;  ///< nest unloading rate
    double gamma = 2.0;   ///< pheromone suppression of foraging diffusion
    double u_max = 20.0;  ///< crowding cap (inf = unlimited)
    double m0 = 2.0;      ///< total nest outflow rate (ants per unit time)
    double t_inflow = 120.0; ///< inflow cutoff time
    double eps_nest = 0.2;   ///< homing-field regularization radius

    bool operator==(const ModelParams&) const = default;
};

/// Static per-run fields: terrain height, the nest indicator and its
/// unit-mass normalization, and the homing vector field sampled at cell
/// centers. Immutable once built; shared across simulation states.
struct StaticFields {
    Field2D z;
    Field2D nest_mask;   ///< 1 inside the nest disk, 0 elsewhere
    Field2D nest_weight; ///< nest_mask scaled so total_mass == 1
    Field2D vfield_x;    ///< homing field, |v| <= 1 cellwise
    Field2D vfield_y;
};

/// Time plus the four evolving fields. u: foraging ants, w: returning
/// ants, v: pheromone, c: food.
struct SimState {
    double t = 0.0;
    Field2D u, w, v, c;
    std::shared_ptr<const StaticFields> statics;

    const Field2D& z() const { return statics->z; }
    const Field2D& nest_mask() const { return statics->nest_mask; }
    const Field2D& nest_weight() const { return statics->nest_weight; }
    const Field2D& vfield_x() const { return statics->vfield_x; }
    const Field2D& vfield_y() const { return statics->vfield_y; }
};

/// Explicit-Euler step bounds; dt_max carries the 0.9 safety factor.
struct StepLimits {
    double dt_diffusion = 0.0;
    double dt_advection = 0.0;
    double dt_reaction = 0.0;
    double dt_max = 0.0;
};

/// Volume-filling crowding limiter: max(0, 1 - density/u_max), or 1 when
/// the cap is disabled. Multiplies the advective flux so transport stalls
/// in full cells.
inline double beta(double density, const ModelParams& p) {
    if (std::isinf(p.u_max)) return 1.0;
    return std::max(0.0, 1.0 - density / p.u_max);
}

/// Unit vector from p toward the nest center, ramped linearly to zero
/// inside radius eps so the field stays continuous at the nest.
inline Vec2 nest_field(Vec2 p, Vec2 nest_center, double eps) {
    const Vec2 d = nest_center - p;
    const double r = norm(d);
    if (r >= eps) return {d.x / r, d.y / r};
    return {d.x / eps, d.y / eps};
}

struct Topography {
    enum class Kind { Flat, GaussianHill };
    Kind kind = Kind::Flat;
    Vec2 center{};
    double amplitude = 0.0;
    double sigma = 1.0;

    bool operator==(const Topography&) const = default;
};

inline double topography_height(const Topography& topo, Vec2 p) {
    switch (topo.kind) {
        case Topography::Kind::Flat:
            return 0.0;
        case Topography::Kind::GaussianHill: {
            if (!(topo.sigma > 0.0)) throw Error("topography: sigma must be positive");
            const Vec2 d = p - topo.center;
            return topo.amplitude * std::exp(-(d.x * d.x + d.y * d.y) / (2.0 * topo.sigma * topo.sigma));
        }
    }
    return 0.0;
}

/// Nest outflow rate at time t: m0 on [0, t_inflow), 0 afterwards.
inline double inflow_rate(double t, const ModelParams& p) {
    return t < p.t_inflow ? p.m0 : 0.0;
}

} // namespace antsim
