#pragma once

// Interval enclosures over binary64 with outward rounding.
//
// Every arithmetic result is computed in round-to-nearest and then widened
// by one ulp on each side, which is a superset of the correctly rounded
// directed result. Transcendental functions are widened by kLibmSlackUlps
// to cover the documented libm error (<= 1 ulp for log/exp/log1p on glibc).

#include <bit>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

#include "ssz/error.hpp"

namespace ssz {

inline constexpr int kLibmSlackUlps = 4;

inline double next_up(double x) {
    if (std::isnan(x) || x == std::numeric_limits<double>::infinity()) return x;
    if (x == 0.0) return std::numeric_limits<double>::denorm_min();
    auto bits = std::bit_cast<std::uint64_t>(x);
    bits = x > 0 ? bits + 1 : bits - 1;
    return std::bit_cast<double>(bits);
}

inline double next_down(double x) { return -next_up(-x); }

inline double widen_down(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = next_down(x);
    return x;
}

inline double widen_up(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = next_up(x);
    return x;
}

class Enclosure {
  public:
    constexpr Enclosure() = default;

    // Point enclosure of a double that is known to be exact.
    static constexpr Enclosure exact(double v) { return Enclosure(v, v); }

    static Enclosure from_bounds(double lo, double hi) {
        if (!(lo <= hi)) throw NumericalConsistencyError("enclosure with lo > hi");
        return Enclosure(lo, hi);
    }

    // Exact when |n| < 2^53, otherwise widened to the neighbouring doubles.
    static Enclosure of_integer(std::int64_t n) {
        const auto d = static_cast<double>(n);
        if (n > -(std::int64_t{1} << 53) && n < (std::int64_t{1} << 53)) return exact(d);
        return Enclosure(next_down(d), next_up(d));
    }

    static Enclosure ratio(std::int64_t num, std::int64_t den) {
        return of_integer(num) / of_integer(den);
    }

    // Enclosure of a decimal literal: nearest double widened by one ulp.
    static Enclosure of_decimal(const std::string& literal);

    // The constant is only known to lie somewhere in [lo, hi].
    static Enclosure hull(Enclosure a, Enclosure b) {
        return Enclosure(std::fmin(a.lo_, b.lo_), std::fmax(a.hi_, b.hi_));
    }

    constexpr double lo() const { return lo_; }
    constexpr double hi() const { return hi_; }
    double mid() const { return 0.5 * lo_ + 0.5 * hi_; }
    double width() const { return next_up(hi_ - lo_); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(double v) const { return lo_ <= v && v <= hi_; }
    bool contains(Enclosure o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool overlaps(Enclosure o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool certainly_positive() const { return lo_ > 0; }
    bool certainly_negative() const { return hi_ < 0; }

    friend Enclosure operator+(Enclosure a, Enclosure b) {
        return Enclosure(rd(a.lo_ + b.lo_), ru(a.hi_ + b.hi_));
    }
    friend Enclosure operator-(Enclosure a, Enclosure b) {
        return Enclosure(rd(a.lo_ - b.hi_), ru(a.hi_ - b.lo_));
    }
    friend Enclosure operator-(Enclosure a) { return Enclosure(-a.hi_, -a.lo_); }
    friend Enclosure operator*(Enclosure a, Enclosure b);
    friend Enclosure operator/(Enclosure a, Enclosure b);

    Enclosure& operator+=(Enclosure o) { return *this = *this + o; }
    Enclosure& operator-=(Enclosure o) { return *this = *this - o; }
    Enclosure& operator*=(Enclosure o) { return *this = *this * o; }
    Enclosure& operator/=(Enclosure o) { return *this = *this / o; }

    // Bit-level identity, used by determinism checks.
    friend bool identical(Enclosure a, Enclosure b) {
        return std::bit_cast<std::uint64_t>(a.lo_) == std::bit_cast<std::uint64_t>(b.lo_) &&
               std::bit_cast<std::uint64_t>(a.hi_) == std::bit_cast<std::uint64_t>(b.hi_);
    }

  private:
    constexpr Enclosure(double lo, double hi) : lo_(lo), hi_(hi) {}

    static double rd(double v) { return next_down(v); }
    static double ru(double v) { return next_up(v); }

    double lo_ = 0.0;
    double hi_ = 0.0;
};

Enclosure log(Enclosure x);
Enclosure log1p(Enclosure x);
Enclosure exp(Enclosure x);
Enclosure sqr(Enclosure x);
Enclosure max(Enclosure a, Enclosure b);
Enclosure min(Enclosure a, Enclosure b);

// log(n) for an integer n >= 1; log(1) is exactly 0.
Enclosure log_of(std::uint64_t n);

// Outward decimal rendering: lo rounded down, hi rounded up, `digits`
// significant digits.
std::string format_lower(double v, int digits = 17);
std::string format_upper(double v, int digits = 17);

std::ostream& operator<<(std::ostream& os, Enclosure e);

} // namespace ssz
