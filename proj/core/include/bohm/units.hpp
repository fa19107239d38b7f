#pragma once

#include "bohm/errors.hpp"

namespace bohm {

/// Physical constants of a run. Natural units by default: hbar = m = L = 1,
/// meter mass M = 100 m. All formulas keep the symbols so unit sweeps work.
struct UnitSystem {
    double hbar = 1.0;
    double mass_m = 1.0;        // particle in the well
    double mass_M = 100.0;      // meter / pointer
    double box_length_L = 1.0;

    void validate() const {
        if (!(hbar > 0.0) || !(mass_m > 0.0) || !(mass_M > 0.0) || !(box_length_L > 0.0))
            throw InvalidConfigError("UnitSystem: hbar, masses and L must be strictly positive");
        if (mass_M < mass_m)
            throw InvalidConfigError("UnitSystem: meter mass M must be >= particle mass m");
    }
};

} // namespace bohm
