#pragma once

#include <cstdint>
#include <vector>

#include "bohm/grid.hpp"

namespace bohm {

/// Piecewise-linear CDF of a nonnegative density sampled on a grid
/// (trapezoid cumulative, normalized to 1). Supports exact inversion of the
/// per-cell quadratic segment.
class GridCdf {
public:
    GridCdf(const Grid1D& grid, const std::vector<double>& rho);

    double value(double x) const;        // CDF at position x
    double inverse(double u) const;      // position with CDF == u, u in [0, 1]

private:
    Grid1D grid_;
    std::vector<double> rho_;   // clipped to >= 0, normalized
    std::vector<double> cdf_;   // cdf_[i] at node i
};

/// Two-sided Kolmogorov-Smirnov distance between samples and a target CDF.
double ks_distance(std::vector<double> samples, const GridCdf& target);

/// Dvoretzky-Kiefer-Wolfowitz band half-width at confidence level alpha:
/// sup |F_emp - F| exceeds this with probability at most alpha.
double dkw_epsilon(std::size_t n, double alpha);

/// Nonnegative least squares on a small dense system via projected
/// Gauss-Seidel; used to recover mixture weights from a momentum density.
std::vector<double> mixture_weights_least_squares(const std::vector<std::vector<double>>& components,
                                                  const std::vector<double>& target);

/// CRC-32 (IEEE) of a byte string; manifests store one per output file.
std::uint32_t crc32(const void* data, std::size_t size);

} // namespace bohm
