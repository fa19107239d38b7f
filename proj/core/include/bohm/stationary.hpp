#pragma once

#include <utility>
#include <vector>

#include "bohm/potential.hpp"
#include "bohm/units.hpp"
#include "bohm/wavefunction.hpp"

namespace bohm {

/// Analytic infinite-well eigenstate sqrt(2/L) sin(n pi x / L) sampled on a
/// grid spanning [0, L], together with E_n = (hbar n pi / L)^2 / (2 m).
/// Throws ResolutionError when the grid has fewer than 8 points per
/// half-wavelength.
std::pair<WaveFunction1D, double> well_eigenstate(int n, const Grid1D& grid,
                                                  const UnitSystem& units);

struct EigenSolution {
    std::vector<double> energies;          // ascending
    std::vector<WaveFunction1D> states;    // trapezoid-orthonormal, walls pinned to zero
};

/// Lowest k eigenpairs of the second-order finite-difference Hamiltonian
/// H = -hbar^2/(2m) D2 + V with Dirichlet walls, V static (potential frozen
/// in time). Requires k <= n_points / 4.
EigenSolution solve_stationary(const Potential1D& potential, const Grid1D& grid, int k,
                               const UnitSystem& units);

/// Slope discontinuity of an eigenstate across a regularized delta coupling
/// at x0. Centered slopes are sampled on `window` nodes outside the kernel
/// support (half-width 6 sigma_delta) on each side, fitted linearly in x and
/// extrapolated to x0; returns right-slope minus left-slope.
double slope_jump(const WaveFunction1D& state, double x0, int window, double sigma_delta);

} // namespace bohm
