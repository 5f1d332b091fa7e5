#pragma once

#include <cmath>

#include "antsim/model.hpp"

namespace antsim {

// Face-flux assembly for the two ant equations. Sign conventions:
//  - diffusive fluxes are D * (right - left)/h, i.e. the gradient form,
//    so the cell update is u += dt * divergence(F);
//  - drift velocities and upwind fluxes follow the physical direction
//    (positive = rightward/upward), so the update is u -= dt * divergence(F).
// Boundary faces stay exactly zero in every assembler.

/// Diffusive face fluxes alpha1 * exp(-gamma * v_face) * grad(u), with
/// v_face the arithmetic mean of the two adjacent cells. Pheromone
/// presence damps foraging dispersal.
inline FaceFluxes diffusive_fluxes_u(const Field2D& u, const Field2D& v, const ModelParams& p) {
    const Grid& g = u.grid();
    FaceFluxes F(g);
    const double inv_h = 1.0 / g.h;
    if (p.gamma == 0.0) {
        for (int j = 0; j < g.ny; ++j)
            for (int i = 1; i < g.nx; ++i)
                F.fx(i, j) = p.alpha1 * (u(i, j) - u(i - 1, j)) * inv_h;
        for (int j = 1; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                F.fy(i, j) = p.alpha1 * (u(i, j) - u(i, j - 1)) * inv_h;
        return F;
    }
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            const double diff = p.alpha1 * std::exp(-p.gamma * 0.5 * (v(i - 1, j) + v(i, j)));
            F.fx(i, j) = diff * (u(i, j) - u(i - 1, j)) * inv_h;
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double diff = p.alpha1 * std::exp(-p.gamma * 0.5 * (v(i, j - 1) + v(i, j)));
            F.fy(i, j) = diff * (u(i, j) - u(i, j - 1)) * inv_h;
        }
    return F;
}

/// Diffusive face fluxes alpha3 * grad(w) for the returning ants.
inline FaceFluxes diffusive_fluxes_w(const Field2D& w, const ModelParams& p) {
    const Grid& g = w.grid();
    FaceFluxes F(g);
    const double inv_h = 1.0 / g.h;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            F.fx(i, j) = p.alpha3 * (w(i, j) - w(i - 1, j)) * inv_h;
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            F.fy(i, j) = p.alpha3 * (w(i, j) - w(i, j - 1)) * inv_h;
    return F;
}

/// Face-normal drift velocity for foraging ants: alpha2 * grad(v) -
/// grad(z), assembled from cell differences across each face. Ants climb
/// pheromone gradients and avoid rising ground.
inline FaceFluxes drift_velocity_u(const Field2D& v, const Field2D& z, const ModelParams& p) {
    const Grid& g = v.grid();
    FaceFluxes vel(g);
    const double inv_h = 1.0 / g.h;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            vel.fx(i, j) = (p.alpha2 * (v(i, j) - v(i - 1, j)) - (z(i, j) - z(i - 1, j))) * inv_h;
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            vel.fy(i, j) = (p.alpha2 * (v(i, j) - v(i, j - 1)) - (z(i, j) - z(i, j - 1))) * inv_h;
    return vel;
}

/// Face-normal drift velocity for returning ants: alpha2 * (homing field
/// averaged onto the face) - grad(z).
inline FaceFluxes drift_velocity_w(const SimState& s, const ModelParams& p) {
    const Field2D& vx = s.vfield_x();
    const Field2D& vy = s.vfield_y();
    const Field2D& z = s.z();
    const Grid& g = z.grid();
    FaceFluxes vel(g);
    const double inv_h = 1.0 / g.h;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            vel.fx(i, j) =
                p.alpha2 * 0.5 * (vx(i - 1, j) + vx(i, j)) - (z(i, j) - z(i - 1, j)) * inv_h;
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            vel.fy(i, j) =
                p.alpha2 * 0.5 * (vy(i, j - 1) + vy(i, j)) - (z(i, j) - z(i, j - 1)) * inv_h;
    return vel;
}

/// Donor-cell upwind fluxes of the limited quantity d * beta(d): each face
/// transports the state of the cell the velocity flows out of. First
/// order, and positivity-preserving under the advective step bound.
inline FaceFluxes upwind_fluxes(const Field2D& density, const FaceFluxes& vel,
                                const ModelParams& p) {
    const Grid& g = density.grid();
    FaceFluxes F(g);
    auto limited = [&](double d) { return d * beta(d, p); };
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            const double a = vel.fx(i, j);
            F.fx(i, j) = a * limited(a >= 0.0 ? density(i - 1, j) : density(i, j));
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double a = vel.fy(i, j);
            F.fy(i, j) = a * limited(a >= 0.0 ? density(i, j - 1) : density(i, j));
        }
    return F;
}

} // namespace antsim
