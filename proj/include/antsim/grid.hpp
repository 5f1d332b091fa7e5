#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "antsim/common.hpp"

namespace antsim {

/// Uniform square-cell grid covering [origin.x, origin.x + nx*h] x
/// [origin.y, origin.y + ny*h]. Cell (i,j) is centered at
/// origin + ((i+1/2)h, (j+1/2)h).
struct Grid {
    int nx = 0;
    int ny = 0;
    double h = 0.0;
    Vec2 origin{0.0, 0.0};

    double lx() const { return nx * h; }
    double ly() const { return ny * h; }
    std::size_t cell_count() const { return std::size_t(nx) * std::size_t(ny); }
    Vec2 center(int i, int j) const {
        return {origin.x + (i + 0.5) * h, origin.y + (j + 0.5) * h};
    }
    bool operator==(const Grid&) const = default;
};

/// Builds a grid. Counts below 3 leave no interior for the stencils and are
/// rejected, as is a nonpositive cell size.
inline Grid make_grid(int nx, int ny, double h, Vec2 origin = {0.0, 0.0}) {
    if (nx < 3 || ny < 3)
        throw Error("make_grid: need at least 3x3 cells, got " + std::to_string(nx) + "x" +
                    std::to_string(ny));
    if (!(h > 0.0) || !std::isfinite(h)) throw Error("make_grid: cell size must be positive");
    return Grid{nx, ny, h, origin};
}

/// One cell-centered scalar field. Storage is row-major: (i,j) -> j*nx + i.
class Field2D {
  public:
    Field2D() = default;
    explicit Field2D(const Grid& g, double fill = 0.0) : grid_(g), v_(g.cell_count(), fill) {}

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return v_.size(); }

    double operator()(int i, int j) const { return v_[idx(i, j)]; }
    double& operator()(int i, int j) { return v_[idx(i, j)]; }
    double operator[](std::size_t k) const { return v_[k]; }
    double& operator[](std::size_t k) { return v_[k]; }

    const double* data() const { return v_.data(); }
    double* data() { return v_.data(); }

    bool operator==(const Field2D&) const = default;

  private:
    std::size_t idx(int i, int j) const { return std::size_t(j) * grid_.nx + i; }
    Grid grid_;
    std::vector<double> v_;
};

/// Face-centered values on the (nx+1)*ny vertical and nx*(ny+1) horizontal
/// faces. fx(i,j) sits between cells (i-1,j) and (i,j); positive means
/// rightward. fy(i,j) sits between cells (i,j-1) and (i,j); positive means
/// upward. Boundary faces (i=0, i=nx, j=0, j=ny) always carry exactly 0:
/// the domain is closed.
class FaceFluxes {
  public:
    FaceFluxes() = default;
    explicit FaceFluxes(const Grid& g)
        : grid_(g),
          x_(std::size_t(g.nx + 1) * g.ny, 0.0),
          y_(std::size_t(g.nx) * (g.ny + 1), 0.0) {}

    const Grid& grid() const { return grid_; }

    double fx(int i, int j) const { return x_[std::size_t(j) * (grid_.nx + 1) + i]; }
    double& fx(int i, int j) { return x_[std::size_t(j) * (grid_.nx + 1) + i]; }
    double fy(int i, int j) const { return y_[std::size_t(j) * grid_.nx + i]; }
    double& fy(int i, int j) { return y_[std::size_t(j) * grid_.nx + i]; }

    bool boundary_faces_zero() const {
        for (int j = 0; j < grid_.ny; ++j)
            if (fx(0, j) != 0.0 || fx(grid_.nx, j) != 0.0) return false;
        for (int i = 0; i < grid_.nx; ++i)
            if (fy(i, 0) != 0.0 || fy(i, grid_.ny) != 0.0) return false;
        return true;
    }

  private:
    Grid grid_;
    std::vector<double> x_, y_;
};

/// 5-point Laplacian with mirror ghost cells (homogeneous Neumann): an
/// out-of-domain neighbor is replaced by the center value, so its
/// contribution drops out and the discrete operator telescopes to zero
/// total mass.
inline Field2D laplacian(const Field2D& f) {
    const Grid& g = f.grid();
    Field2D out(g);
    const double inv_h2 = 1.0 / (g.h * g.h);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double c = f(i, j);
            double s = 0.0;
            if (i > 0) s += f(i - 1, j) - c;
            if (i < g.nx - 1) s += f(i + 1, j) - c;
            if (j > 0) s += f(i, j - 1) - c;
            if (j < g.ny - 1) s += f(i, j + 1) - c;
            out(i, j) = s * inv_h2;
        }
    }
    return out;
}

/// Discrete divergence of face values: (Fx(i+1,j) - Fx(i,j) + Fy(i,j+1)
/// - Fy(i,j)) / h per cell. Rejects nonzero boundary faces, which would
/// break the closed-domain conservation contract.
inline Field2D divergence(const FaceFluxes& F) {
    if (!F.boundary_faces_zero())
        throw Error("divergence: boundary faces must carry exactly zero flux");
    const Grid& g = F.grid();
    Field2D out(g);
    const double inv_h = 1.0 / g.h;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out(i, j) = (F.fx(i + 1, j) - F.fx(i, j) + F.fy(i, j + 1) - F.fy(i, j)) * inv_h;
    return out;
}

/// h^2 * sum of all cell values, accumulated in index order so repeated
/// runs produce bit-identical results.
inline double total_mass(const Field2D& f) {
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) s += f[k];
    return s * f.grid().h * f.grid().h;
}

/// Bilinear interpolation between the four surrounding cell centers.
/// Points outside the hull of cell centers are clamped to it.
inline double interp_bilinear(const Field2D& f, Vec2 p) {
    const Grid& g = f.grid();
    const double x0 = g.origin.x + 0.5 * g.h;
    const double y0 = g.origin.y + 0.5 * g.h;
    const double sx = std::clamp((p.x - x0) / g.h, 0.0, double(g.nx - 1));
    const double sy = std::clamp((p.y - y0) / g.h, 0.0, double(g.ny - 1));
    const int i0 = std::min(int(sx), g.nx - 2);
    const int j0 = std::min(int(sy), g.ny - 2);
    const double tx = sx - i0;
    const double ty = sy - j0;
    const double a = f(i0, j0) * (1.0 - tx) + f(i0 + 1, j0) * tx;
    const double b = f(i0, j0 + 1) * (1.0 - tx) + f(i0 + 1, j0 + 1) * tx;
    return a * (1.0 - ty) + b * ty;
}

} // namespace antsim
