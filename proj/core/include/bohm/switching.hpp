#pragma once

#include <cmath>

#include "bohm/errors.hpp"

namespace bohm {

/// Time envelope g(t) of the system-meter coupling, normalized to
/// unit time integral. The adiabatic window is
///     g(t) = (2/T) sin^2(pi (t + T/2) / T)   on [-T/2, T/2],
/// zero outside. The impulsive case is not represented as a narrow
/// window; scenarios apply it as an exact unitary kick instead.
struct SwitchingProfile {
    enum class Kind { none, impulsive, adiabatic_window };

    Kind kind = Kind::none;
    double T = 0.0;

    static SwitchingProfile adiabatic(double T) {
        if (!(T > 0.0)) throw InvalidConfigError("SwitchingProfile: window duration T must be > 0");
        return {Kind::adiabatic_window, T};
    }
    static SwitchingProfile impulsive() { return {Kind::impulsive, 0.0}; }

    double g(double t) const {
        if (kind != Kind::adiabatic_window) return 0.0;
        const double s = t + 0.5 * T;
        if (s <= 0.0 || s >= T) return 0.0;
        const double u = std::sin(M_PI * s / T);
        return 2.0 / T * u * u;
    }

    /// Exact integral of g over [t0, t1]; primitive G(s) = s/T - sin(2 pi s/T)/(2 pi).
    double integral(double t0, double t1) const {
        if (kind != Kind::adiabatic_window) return 0.0;
        auto primitive = [this](double t) {
            double s = t + 0.5 * T;
            if (s <= 0.0) return 0.0;
            if (s >= T) return 1.0;
            return s / T - std::sin(2.0 * M_PI * s / T) / (2.0 * M_PI);
        };
        return primitive(t1) - primitive(t0);
    }
};

} // namespace bohm
