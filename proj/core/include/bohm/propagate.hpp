#pragma once

#include <functional>
#include <vector>

#include "bohm/potential.hpp"
#include "bohm/units.hpp"
#include "bohm/wavefunction.hpp"

namespace bohm {

/// Crank-Nicolson stepper for the 1D Schrodinger equation with Dirichlet
/// walls. The Cayley form (1 + i dt H / 2 hbar)^-1 (1 - i dt H / 2 hbar) is
/// unitary to round-off per step for Hermitian H; a switched coupling is
/// folded in through its exact envelope integral over each step.
class Propagator1D {
public:
    Propagator1D(WaveFunction1D psi, Potential1D potential, const UnitSystem& units);

    void step();
    const WaveFunction1D& state() const { return psi_; }
    double time() const { return psi_.time; }
    double norm_drift() const;   // |norm - 1| since construction
    long steps_taken() const { return steps_; }

private:
    WaveFunction1D psi_;
    Potential1D potential_;
    UnitSystem units_;
    long steps_ = 0;
    std::vector<cplx> diag_a_, rhs_tmp_, scratch_;
};

/// Propagates `steps` steps and returns snapshots every `snapshot_stride`
/// steps (the initial state included). Checks the dt * max|V| / hbar < 0.5
/// accuracy guard and the norm-drift contract (1e-6 per 1000 steps).
std::vector<WaveFunction1D> propagate_1d(const WaveFunction1D& psi, const Potential1D& potential,
                                         const UnitSystem& units, long steps,
                                         long snapshot_stride = 1);

/// Streaming variant: the observer sees the initial state and then every
/// snapshot_stride-th step.
void propagate_1d(const WaveFunction1D& psi, const Potential1D& potential,
                  const UnitSystem& units, long steps, long snapshot_stride,
                  const std::function<void(const WaveFunction1D&)>& observer);

/// Split-step propagator on the (x, X) configuration space:
/// per step, unitary Cayley half-steps of each kinetic direction wrap an
/// exact diagonal phase of the coupling (Strang composition). Kinetic terms
/// are -hbar^2/(2m) d^2/dx^2 and -hbar^2/(2M) d^2/dX^2, Dirichlet on both
/// axes; the X box must stay effectively unreachable (amplitude monitored).
class Propagator2D {
public:
    Propagator2D(WaveFunction2D psi, Potential2D potential, const UnitSystem& units);

    void step();
    const WaveFunction2D& state() const { return psi_; }
    double time() const { return psi_.time; }
    double norm_drift() const;
    /// max |psi| on the X-boundary rows, updated each step.
    double boundary_amplitude() const { return boundary_amp_; }

private:
    void half_step_x();
    void half_step_X();
    void coupling_phase(double t0, double t1);

    WaveFunction2D psi_;
    Potential2D potential_;
    UnitSystem units_;
    double boundary_amp_ = 0.0;
    long steps_ = 0;
    // Precomputed Thomas forward coefficients for the constant-coefficient
    // kinetic Cayley factors of each direction.
    std::vector<cplx> cprime_x_, cprime_X_;
    cplx offdiag_x_{}, offdiag_X_{}, diag_x_{}, diag_X_{};
    std::vector<cplx> row_tmp_, col_tmp_;
    std::vector<std::size_t> coupled_columns_;  // x-indices where W(x) != 0
};

std::vector<WaveFunction2D> propagate_2d(const WaveFunction2D& psi, const Potential2D& potential,
                                         const UnitSystem& units, long steps,
                                         long snapshot_stride = 1);

void propagate_2d(const WaveFunction2D& psi, const Potential2D& potential,
                  const UnitSystem& units, long steps, long snapshot_stride,
                  const std::function<void(const WaveFunction2D&)>& observer);

} // namespace bohm
