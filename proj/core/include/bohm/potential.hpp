#pragma once

#include <vector>

#include "bohm/grid.hpp"
#include "bohm/switching.hpp"
#include "bohm/units.hpp"

namespace bohm {

/// Grid-regularized Dirac delta centered at x0: a normalized Gaussian of
/// standard deviation sigma = sigma_factor * dx, truncated at +-6 sigma and
/// renormalized to unit trapezoidal integral. Throws GeometryError when x0
/// sits closer than 4 dx to a wall.
std::vector<double> regularized_delta(double x0, const Grid1D& grid, double sigma_factor = 2.0);

/// V(x, t) = base(x) + g(t) * coupling(x). The infinite well itself is not a
/// potential entry: propagators and the eigensolver pin Dirichlet walls.
struct Potential1D {
    std::vector<double> base;      // static part; empty means zero
    std::vector<double> coupling;  // spatial factor of the switched term; empty means none
    SwitchingProfile switching;

    bool has_coupling() const { return !coupling.empty(); }
    double value(std::size_t i, double t) const {
        double v = base.empty() ? 0.0 : base[i];
        if (!coupling.empty()) v += switching.g(t) * coupling[i];
        return v;
    }
    double max_abs(double t, std::size_t n) const;

    static Potential1D free_space() { return {}; }
    static Potential1D infinite_well() { return {}; }
    static Potential1D static_profile(std::vector<double> v) { return {std::move(v), {}, {}}; }
    /// Frozen short-range coupling -hbar * s * delta_sigma(x - x0) with
    /// s = epsilon * g * X held fixed (1D eigenproblem at a frozen meter).
    static Potential1D frozen_delta(const Grid1D& grid, const UnitSystem& units, double x0,
                                    double strength_s, double sigma_factor = 2.0);
    /// Switched short-range term g(t) * (-hbar * s) * delta_sigma(x - x0).
    static Potential1D switched_delta(const Grid1D& grid, const UnitSystem& units, double x0,
                                      double strength_s, SwitchingProfile g,
                                      double sigma_factor = 2.0);
    /// Switched linear meter potential g(t) * slope * x (used by the
    /// narrow-window von Neumann cross-check).
    static Potential1D switched_linear(const Grid1D& grid, double slope, SwitchingProfile g);
};

/// Configuration-space coupling V(x, X, t) = g(t) * W(x) * X with
/// W(x) = -hbar * epsilon * delta_sigma(x - x0). W integrates over x to
/// -hbar * epsilon by construction.
struct Potential2D {
    std::vector<double> coupling_x;  // W(x); empty means free (x, X) motion
    SwitchingProfile switching;

    bool has_coupling() const { return !coupling_x.empty(); }
    double value(std::size_t ix, std::size_t iX, const Grid2D& grid, double t) const {
        if (coupling_x.empty()) return 0.0;
        return switching.g(t) * coupling_x[ix] * grid.axis_X.x(iX);
    }
    double max_abs(double t, const Grid2D& grid) const;

    static Potential2D none() { return {}; }
    static Potential2D delta_coupling(const Grid2D& grid, const UnitSystem& units, double x0,
                                      double epsilon, SwitchingProfile g,
                                      double sigma_factor = 2.0);
};

} // namespace bohm
