#include "ssz/enclosure.hpp"

#include <algorithm>
#include <cfenv>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace ssz {

Enclosure Enclosure::of_decimal(const std::string& literal) {
    char* end = nullptr;
    const double v = std::strtod(literal.c_str(), &end);
    if (end == literal.c_str() || *end != '\0') throw InvalidArgument("not a decimal literal: " + literal);
    return Enclosure(next_down(v), next_up(v));
}

Enclosure operator*(Enclosure a, Enclosure b) {
    const double p1 = a.lo_ * b.lo_;
    const double p2 = a.lo_ * b.hi_;
    const double p3 = a.hi_ * b.lo_;
    const double p4 = a.hi_ * b.hi_;
    const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Enclosure(Enclosure::rd(lo), Enclosure::ru(hi));
}

Enclosure operator/(Enclosure a, Enclosure b) {
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) throw NumericalConsistencyError("division by an enclosure containing zero");
    const double q1 = a.lo_ / b.lo_;
    const double q2 = a.lo_ / b.hi_;
    const double q3 = a.hi_ / b.lo_;
    const double q4 = a.hi_ / b.hi_;
    const double lo = std::min(std::min(q1, q2), std::min(q3, q4));
    const double hi = std::max(std::max(q1, q2), std::max(q3, q4));
    return Enclosure(Enclosure::rd(lo), Enclosure::ru(hi));
}

Enclosure log(Enclosure x) {
    if (!(x.lo() > 0.0)) throw NumericalConsistencyError("log of a non-positive enclosure");
    return Enclosure::from_bounds(widen_down(std::log(x.lo()), kLibmSlackUlps),
                                  widen_up(std::log(x.hi()), kLibmSlackUlps));
}

Enclosure log1p(Enclosure x) {
    if (!(x.lo() > -1.0)) throw NumericalConsistencyError("log1p argument <= -1");
    return Enclosure::from_bounds(widen_down(std::log1p(x.lo()), kLibmSlackUlps),
                                  widen_up(std::log1p(x.hi()), kLibmSlackUlps));
}

Enclosure exp(Enclosure x) {
    const double lo = std::max(0.0, widen_down(std::exp(x.lo()), kLibmSlackUlps));
    return Enclosure::from_bounds(lo, widen_up(std::exp(x.hi()), kLibmSlackUlps));
}

Enclosure sqr(Enclosure x) {
    if (x.lo() >= 0) return x * x;
    if (x.hi() <= 0) return (-x) * (-x);
    const double m = std::max(-x.lo(), x.hi());
    return Enclosure::from_bounds(0.0, next_up(m * m));
}

Enclosure max(Enclosure a, Enclosure b) {
    return Enclosure::from_bounds(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Enclosure min(Enclosure a, Enclosure b) {
    return Enclosure::from_bounds(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Enclosure log_of(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("log_of(0)");
    if (n == 1) return Enclosure::exact(0.0);
    return log(Enclosure::of_integer(static_cast<std::int64_t>(n)));
}

namespace {

// glibc printf honours the dynamic rounding mode.
std::string format_directed(double v, int digits, int mode) {
    const int saved = std::fegetround();
    std::fesetround(mode);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", std::max(0, digits - 1), v);
    std::fesetround(saved);
    return buf;
}

} // namespace

std::string format_lower(double v, int digits) { return format_directed(v, digits, FE_DOWNWARD); }

std::string format_upper(double v, int digits) { return format_directed(v, digits, FE_UPWARD); }

std::ostream& operator<<(std::ostream& os, Enclosure e) {
    return os << '[' << format_lower(e.lo()) << ", " << format_upper(e.hi()) << ']';
}

} // namespace ssz
