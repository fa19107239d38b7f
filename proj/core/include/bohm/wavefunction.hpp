#pragma once

#include <complex>
#include <vector>

#include "bohm/grid.hpp"

namespace bohm {

using cplx = std::complex<double>;

struct WaveFunction1D {
    Grid1D grid;
    std::vector<cplx> values;  // one amplitude per node
    double time = 0.0;
};

struct WaveFunction2D {
    Grid2D grid;
    std::vector<cplx> values;  // [iX * nx + ix]
    double time = 0.0;

    cplx at(std::size_t ix, std::size_t iX) const { return values[grid.index(ix, iX)]; }
};

// --- trapezoidal quadrature -------------------------------------------------

double trapezoid(const Grid1D& grid, const std::vector<double>& f);
double norm_squared(const WaveFunction1D& psi);
double norm_squared(const WaveFunction2D& psi);

/// Conjugate-linear in the first argument.
cplx inner_product(const WaveFunction1D& a, const WaveFunction1D& b);
cplx inner_product(const WaveFunction2D& a, const WaveFunction2D& b);

/// Returns a unit-L2-norm copy. Throws DegenerateStateError on a zero field.
WaveFunction1D normalize(const WaveFunction1D& psi);
WaveFunction2D normalize(const WaveFunction2D& psi);
void normalize_in_place(WaveFunction1D& psi);
void normalize_in_place(WaveFunction2D& psi);

// --- interpolation ----------------------------------------------------------

/// Piecewise-linear interpolation; exact at nodes. Out-of-bounds positions
/// clamp to the boundary value and set `clamped`.
double interpolate(const Grid1D& grid, const std::vector<double>& field, double pos,
                   bool* clamped = nullptr);
cplx interpolate(const Grid1D& grid, const std::vector<cplx>& field, double pos,
                 bool* clamped = nullptr);

/// Bilinear interpolation on the (x, X) lattice.
double interpolate(const Grid2D& grid, const std::vector<double>& field, double x, double X,
                   bool* clamped = nullptr);
cplx interpolate(const Grid2D& grid, const std::vector<cplx>& field, double x, double X,
                 bool* clamped = nullptr);

} // namespace bohm
