#include "ssz/rational.hpp"

#include <cctype>
#include <limits>

namespace ssz {

namespace {

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(const std::string& s) {
    if (s.empty()) throw InvalidArgument("empty integer");
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: " + s);
    }
    if (pos != s.size()) throw InvalidArgument("not an integer: " + s);
    return v;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    *this = make(num, den);
}

Rational Rational::make(i128 num, i128 den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits64(num) || !fits64(den)) throw OutOfRange("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text));
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 17) throw InvalidArgument("too many decimals: " + text);
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidArgument("bad decimal: " + text);
    std::string whole = text.substr(0, dot);
    const bool neg = !whole.empty() && whole[0] == '-';
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = (whole.empty() || whole == "-") ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    const i128 num = static_cast<i128>(w < 0 ? -w : w) * scale + f;
    return make(neg ? -num : num, scale);
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ < 0)) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ > 0)) ++q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) {
    return Rational::make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                          static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(Rational a, Rational b) {
    return Rational::make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                          static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(Rational a, Rational b) {
    return Rational::make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw InvalidArgument("division by zero rational");
    return Rational::make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

} // namespace ssz
