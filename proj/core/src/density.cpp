#include "ssz/density.hpp"

#include <cmath>

#include "ssz/arith.hpp"
#include "ssz/error.hpp"

namespace ssz {

namespace {

std::uint64_t steps_for(double h) {
    if (!(h > 0) || h > 1e-3) throw InvalidArgument("grid step must satisfy 0 < h <= 1e-3");
    const double m = std::round(1.0 / h);
    if (std::abs(m * h - 1.0) > 1e-9) throw InvalidArgument("grid step must divide 1");
    return static_cast<std::uint64_t>(m);
}

// Clamp arguments that rounding pushed just below 1 back onto the support.
double kernel_arg(double u, double t) {
    const double a = (u - t) / (t + 1.0);
    return (a < 1.0 && a > 1.0 - 1e-12) ? 1.0 : a;
}

// Trapezoidal integral over [0, T] of d(t)/(t+1) omega((u-t)/(t+1)) with d
// known on the grid below index `known`.
double kernel_integral(const std::vector<double>& d, double h, double u, double T, const DensityGrid& omega) {
    if (T <= 0) return 0.0;
    const auto k = static_cast<std::size_t>(std::floor(T / h + 1e-9));
    auto f = [&](std::size_t j, double dj) {
        const double t = static_cast<double>(j) * h;
        return dj / (t + 1.0) * omega.at(kernel_arg(u, t));
    };
    double sum = 0;
    double prev = f(0, d[0]);
    for (std::size_t j = 1; j <= k; ++j) {
        const double cur = f(j, d[j]);
        sum += 0.5 * h * (prev + cur);
        prev = cur;
    }
    const double tk = static_cast<double>(k) * h;
    const double rest = T - tk;
    if (rest > 1e-12 * h) {
        const double dT = d[k] + (d[k + 1 < d.size() ? k + 1 : k] - d[k]) * (rest / h);
        const double fT = dT / (T + 1.0) * omega.at(kernel_arg(u, T));
        sum += 0.5 * rest * (prev + fT);
    }
    return sum;
}

void check_cover(const DensityGrid& omega, double need) {
    if (omega.kind != DensityKind::omega) throw InvalidArgument("expected an omega grid");
    if (need > omega.u_max + 1e-12) throw OutOfRange("grid mismatch: omega grid ends at " + std::to_string(omega.u_max));
}

} // namespace

double DensityGrid::at(double u) const {
    if (u > u_max + 1e-12) throw OutOfRange(name() + " grid evaluated beyond u_max");
    switch (kind) {
    case DensityKind::omega:
        if (u < 1.0) return 0.0;
        if (u <= 2.0) return 1.0 / u;
        break;
    case DensityKind::d:
        if (u < 0.0) return 0.0;
        if (u <= 1.0) return 1.0;
        break;
    case DensityKind::d_r:
        if (u < 0.0) return 0.0;
        break;
    }
    const double x = u / h;
    auto i = static_cast<std::size_t>(std::floor(x));
    if (i + 1 >= values.size()) return values.back();
    const double w = x - static_cast<double>(i);
    return values[i] + (values[i + 1] - values[i]) * w;
}

std::string DensityGrid::name() const {
    switch (kind) {
    case DensityKind::omega: return "omega";
    case DensityKind::d: return "d";
    default: return "d_r";
    }
}

DensityGrid solve_omega(double h, double u_max) {
    const std::uint64_t M = steps_for(h);
    if (!(u_max >= 3)) throw InvalidArgument("omega grid needs u_max >= 3");
    DensityGrid g;
    g.kind = DensityKind::omega;
    g.h = 1.0 / static_cast<double>(M);
    g.steps_per_unit = M;
    const auto n = static_cast<std::size_t>(std::ceil(u_max * static_cast<double>(M) - 1e-9));
    g.u_max = static_cast<double>(n) * g.h;
    g.values.assign(n + 1, 0.0);
    for (std::size_t i = M; i <= std::min<std::size_t>(2 * M, n); ++i) g.values[i] = static_cast<double>(M) / static_cast<double>(i);
    // cum[j] = int_1^{j h} omega, trapezoid, for j >= M.
    std::vector<double> cum(n + 1, 0.0);
    for (std::size_t i = 2 * M + 1; i <= n; ++i) {
        const std::size_t j = i - M; // u - 1
        for (std::size_t k = (j == M + 1 ? M + 1 : j); k <= j; ++k) cum[k] = cum[k - 1] + 0.5 * g.h * (g.values[k - 1] + g.values[k]);
        g.values[i] = (1.0 + cum[j]) / (static_cast<double>(i) * g.h);
    }
    return g;
}

DensityGrid solve_d(double h, double u_max, const DensityGrid& omega) {
    const std::uint64_t M = steps_for(h);
    if (!(u_max > 0)) throw InvalidArgument("d grid needs u_max > 0");
    check_cover(omega, u_max);
    DensityGrid g;
    g.kind = DensityKind::d;
    g.h = 1.0 / static_cast<double>(M);
    g.steps_per_unit = M;
    const auto n = static_cast<std::size_t>(std::ceil(u_max * static_cast<double>(M) - 1e-9));
    g.u_max = static_cast<double>(n) * g.h;
    check_cover(omega, g.u_max);
    g.values.assign(n + 1, 1.0);
    for (std::size_t i = M + 1; i <= n; ++i) {
        const double u = static_cast<double>(i) * g.h;
        g.values[i] = 1.0 - kernel_integral(g.values, g.h, u, (u - 1.0) / 2.0, omega);
    }
    return g;
}

DensityGrid solve_dr(double r, double h, double u_max, const DensityGrid& omega) {
    if (!(r > 0) || r > 1) throw InvalidArgument("d_r needs 0 < r <= 1");
    const std::uint64_t M = steps_for(h);
    if (!(u_max > 0)) throw InvalidArgument("d_r grid needs u_max > 0");
    DensityGrid g;
    g.kind = DensityKind::d_r;
    g.r = r;
    g.h = 1.0 / static_cast<double>(M);
    g.steps_per_unit = M;
    const auto n = static_cast<std::size_t>(std::ceil(u_max * static_cast<double>(M) - 1e-9));
    g.u_max = static_cast<double>(n) * g.h;
    check_cover(omega, g.u_max / r);
    g.values.assign(n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
        const double u = static_cast<double>(i) * g.h;
        // Right limit of omega(u/r) at u = r.
        double ur = u / r;
        if (std::abs(ur - 1.0) < 1e-12) ur = 1.0;
        double v = omega.at(ur) - r * omega.at(u);
        if (u > 1.0) v -= kernel_integral(g.values, g.h, u, (u - 1.0) / 2.0, omega);
        g.values[i] = v;
    }
    return g;
}

double d_uv(double u, double v, const DensityGrid& omega, const DensityGrid& d) {
    if (!(u >= 0)) throw InvalidArgument("d(u, v) needs u >= 0");
    if (v < u) throw InvalidArgument("d(u, v) needs v >= u");
    if (d.kind != DensityKind::d) throw InvalidArgument("expected a d grid");
    if (std::isinf(v) || u == 0) return exp_minus_gamma().mid() * d.at(u);
    const double r = u / v;
    const DensityGrid dr = solve_dr(r, omega.h, u, omega);
    return dr.at(u);
}

PhiCrosscheck phi_crosscheck(const SieveCache& s, Rational x, Rational z, const DensityGrid& omega) {
    if (z < Rational(3, 2)) throw InvalidArgument("Phi cross-check needs z >= 3/2");
    if (x < Rational(1)) throw InvalidArgument("Phi cross-check needs x >= 1");
    PhiCrosscheck out;
    out.exact = phi_count(s, x, PrimeCutoff::real(z));
    const double xd = x.approx();
    const double lz = std::log(z.approx());
    const double v = std::log(xd) / lz;
    const double pi = mertens_product_at(s, static_cast<std::uint64_t>(z.floor())).mid();
    const double om = v < 1 ? 0.0 : omega.at(v);
    out.approx = 1.0 + xd * pi + xd * (om - exp_minus_gamma().mid()) / lz - (x >= z ? z.approx() / lz : 0.0);
    out.relative_gap = std::abs(static_cast<double>(out.exact) - out.approx) / static_cast<double>(out.exact);
    return out;
}

} // namespace ssz
