#pragma once

// Buchstab's function omega(u) and the densities d(u), d_r(u) = d(u, u/r)
// on uniform grids u = i h, solved by explicit trapezoidal marching.

#include <cstdint>
#include <string>
#include <vector>

#include "ssz/enclosure.hpp"
#include "ssz/rational.hpp"
#include "ssz/sieve.hpp"

namespace ssz {

class PrimeCutoff;

enum class DensityKind { omega, d, d_r };

struct DensityGrid {
    DensityKind kind = DensityKind::omega;
    double h = 0;
    double u_max = 0;
    double r = 0; // d_r only
    std::uint64_t steps_per_unit = 0;
    std::vector<double> values; // values[i] at u = i h (right limits at jumps)

    // Linear interpolation between grid points; exact closed forms where
    // known (omega on [1, 2], d on [0, 1]). Throws OutOfRange beyond u_max.
    double at(double u) const;
    std::string name() const;
};

// (u omega(u))' = omega(u - 1) for u > 2, omega(u) = 1/u on [1, 2], 0 below 1.
DensityGrid solve_omega(double h, double u_max);
// d(u) = 1 - int_0^{(u-1)/2} d(t)/(t+1) omega((u-t)/(t+1)) dt.
DensityGrid solve_d(double h, double u_max, const DensityGrid& omega);
// d_r(u) = omega(u/r) - r omega(u) - int_0^u d_r(t)/(t+1) omega((u-t)/(t+1)) dt.
DensityGrid solve_dr(double r, double h, double u_max, const DensityGrid& omega);

// d(u, v) = d_{u/v}(u); v = +infinity gives d_0(u) = e^{-gamma} d(u).
double d_uv(double u, double v, const DensityGrid& omega, const DensityGrid& d);

struct PhiCrosscheck {
    std::uint64_t exact = 0;
    double approx = 0;
    double relative_gap = 0;
};

// Legendre-exact Phi(x, z) against 1 + x Pi(z) + x (omega(v) - e^{-gamma})/log z - z/log z.
PhiCrosscheck phi_crosscheck(const SieveCache& s, Rational x, Rational z, const DensityGrid& omega);

} // namespace ssz
