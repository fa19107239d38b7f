#pragma once

#include <vector>

#include "bohm/units.hpp"
#include "bohm/wavefunction.hpp"

namespace bohm {

/// Default node floor as a fraction of max rho.
inline constexpr double kRhoFloorRel = 1e-10;

// --- 1D ---------------------------------------------------------------------

std::vector<double> density(const WaveFunction1D& psi);

/// J = hbar (Psi* dPsi - Psi dPsi*) / (2 i m), centered differences,
/// one-sided at the walls.
std::vector<double> current(const WaveFunction1D& psi, const UnitSystem& units);

struct VelocityField1D {
    std::vector<double> v;
    std::vector<bool> mask;  // true where rho fell below the floor
};
VelocityField1D velocity_field(const WaveFunction1D& psi, const UnitSystem& units,
                               double rho_floor_rel = kRhoFloorRel);

/// Q = -hbar^2 (D2 a) / (2 m a) on the amplitude a = |Psi|, same second-order
/// stencil as the Hamiltonian; masked below the floor.
std::vector<double> quantum_potential(const WaveFunction1D& psi, const UnitSystem& units,
                                      double rho_floor_rel = kRhoFloorRel,
                                      std::vector<bool>* mask_out = nullptr);

struct DerivedFields1D {
    std::vector<double> rho, J, v, Q, U, F;
    std::vector<bool> node_mask;
};
DerivedFields1D total_potential_and_forces(const WaveFunction1D& psi,
                                           const std::vector<double>& V,
                                           const UnitSystem& units,
                                           double rho_floor_rel = kRhoFloorRel);

/// Phase S = hbar arg(Psi) unwrapped along the grid from the max-rho node.
/// Nodes beyond a masked region are flagged suspect.
struct UnwrappedPhase1D {
    std::vector<double> S;
    std::vector<bool> suspect;
};
UnwrappedPhase1D unwrap_phase(const WaveFunction1D& psi, double rho_floor_rel = kRhoFloorRel);

/// Residual of dS/dt + (dS/dx)^2/(2m) + V + Q over the middle snapshots of a
/// uniformly spaced series. dS/dt uses per-node principal phase differences,
/// so snapshot spacing must keep per-node phase advances below pi.
struct HamiltonJacobiResidual {
    std::vector<std::vector<double>> residual;   // one field per interior snapshot
    std::vector<std::vector<bool>> mask;
    double max_abs = 0.0;
    double l2 = 0.0;
    long masked_count = 0;
};
HamiltonJacobiResidual hamilton_jacobi_residual(const std::vector<WaveFunction1D>& series,
                                                const std::vector<double>& V,
                                                const UnitSystem& units,
                                                double rho_floor_rel = 1e-6);

/// L2 norm of d(rho)/dt + dJ/dx over the interior snapshot, centered in time.
double continuity_residual_l2(const WaveFunction1D& prev, const WaveFunction1D& mid,
                              const WaveFunction1D& next, const UnitSystem& units);

// --- 2D ---------------------------------------------------------------------

std::vector<double> density(const WaveFunction2D& psi);

struct Current2D {
    std::vector<double> Jx;  // mass m component
    std::vector<double> JX;  // mass M component
};
Current2D current(const WaveFunction2D& psi, const UnitSystem& units);

struct VelocityField2D {
    std::vector<double> vx, vX;
    std::vector<bool> mask;
};
VelocityField2D velocity_field(const WaveFunction2D& psi, const UnitSystem& units,
                               double rho_floor_rel = kRhoFloorRel);

/// Two-term quantum potential: x-curvature over mass m plus X-curvature
/// over mass M.
std::vector<double> quantum_potential(const WaveFunction2D& psi, const UnitSystem& units,
                                      double rho_floor_rel = kRhoFloorRel,
                                      std::vector<bool>* mask_out = nullptr);

struct DerivedFields2D {
    std::vector<double> rho, Jx, JX, vx, vX, Q, U, Fx, FX;
    std::vector<bool> node_mask;
};
DerivedFields2D total_potential_and_forces(const WaveFunction2D& psi,
                                           const std::vector<double>& V,
                                           const UnitSystem& units,
                                           double rho_floor_rel = kRhoFloorRel);

// --- meter observables --------------------------------------------------------

/// Projection coefficient c(X) = <phi | Psi(., X)> for a 1D mode phi on axis_x.
std::vector<cplx> project_mode(const WaveFunction2D& psi, const WaveFunction1D& phi);

/// Integral over X of |c(X)|^2 for the given mode.
double mode_population(const WaveFunction2D& psi, const WaveFunction1D& phi);

/// <P> of the meter: trapezoid of Psi* (-i hbar d/dX) Psi.
double pointer_mean_momentum(const WaveFunction2D& psi, const UnitSystem& units);

/// Expectation of the discrete Hamiltonian (kinetic + static V sampled on
/// the grid); exact invariant of the Cayley stepper for static V.
double energy_expectation(const WaveFunction1D& psi, const std::vector<double>& V,
                          const UnitSystem& units);

} // namespace bohm
