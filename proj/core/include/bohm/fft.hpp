#pragma once

#include <vector>

#include "bohm/units.hpp"
#include "bohm/wavefunction.hpp"

namespace bohm {

/// In-place iterative radix-2 FFT; n must be a power of two.
void fft_radix2(std::vector<cplx>& data, bool inverse = false);

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// Momentum-space probability density of a 1D state, normalized to unit
/// integral over the returned momentum grid. Zero-padding (default x4)
/// refines the bin spacing 2 pi hbar / (n_pad dx); bins are returned
/// centered on zero momentum.
struct MomentumDensity {
    std::vector<double> p;
    std::vector<double> density;
    double bin_width = 0.0;
};
MomentumDensity momentum_density(const WaveFunction1D& psi, const UnitSystem& units,
                                 int zero_pad_factor = 4);

/// Meter momentum density of a 2D state: x-integrated |FFT over X|^2.
MomentumDensity pointer_momentum_density(const WaveFunction2D& psi, const UnitSystem& units,
                                         int zero_pad_factor = 4);

} // namespace bohm
