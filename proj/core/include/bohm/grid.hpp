#pragma once

#include <cstddef>

#include "bohm/errors.hpp"

namespace bohm {

/// Uniform 1D spatial lattice plus the propagation time step.
/// Immutable after construction; shared freely between threads.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t n_points = 0;
    double dx = 0.0;
    double dt = 0.0;

    double x(std::size_t i) const { return x_min + static_cast<double>(i) * dx; }
    double length() const { return x_max - x_min; }

    /// Cell index and fractional offset for a position; clamps to the
    /// boundary and reports it through `clamped`.
    void locate(double pos, std::size_t& cell, double& frac, bool& clamped) const;

    bool same_as(const Grid1D& o) const {
        return x_min == o.x_min && x_max == o.x_max && n_points == o.n_points && dt == o.dt;
    }
};

Grid1D make_grid(double x_min, double x_max, std::size_t n_points, double dt);

/// Configuration-space lattice (x, X): system coordinate times meter
/// coordinate, sharing one time step.
struct Grid2D {
    Grid1D axis_x;  // system coordinate
    Grid1D axis_X;  // meter coordinate
    double dt = 0.0;

    std::size_t size() const { return axis_x.n_points * axis_X.n_points; }
    std::size_t index(std::size_t ix, std::size_t iX) const {
        return iX * axis_x.n_points + ix;
    }
    bool same_as(const Grid2D& o) const {
        return axis_x.same_as(o.axis_x) && axis_X.same_as(o.axis_X) && dt == o.dt;
    }
};

Grid2D make_grid_2d(const Grid1D& axis_x, const Grid1D& axis_X, double dt);

} // namespace bohm
