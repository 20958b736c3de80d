#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "ssz/enclosure.hpp"
#include "ssz/error.hpp"

namespace ssz {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

// Small exact rational with 64-bit numerator/denominator. Intermediate
// products use 128 bits; results that do not fit throw OutOfRange.
class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "n", "p/q", or a finite decimal such as "2.5".
    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    std::int64_t floor() const;
    std::int64_t ceil() const;
    Enclosure enclosure() const { return Enclosure::ratio(num_, den_); }
    double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);

    friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(Rational a, Rational b) {
        const i128 l = static_cast<i128>(a.num_) * b.den_;
        const i128 r = static_cast<i128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // Exact comparison of this rational against m / k with 64-bit m, k > 0.
    bool le_ratio(std::int64_t m, std::int64_t k) const { return static_cast<i128>(num_) * k <= static_cast<i128>(m) * den_; }

  private:
    static Rational make(i128 num, i128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace ssz
