#pragma once

// Prefix integrals of g(t) = eta(t) Pi(t) and of Pi(t):
//   G1(t) = int_1^t g(u) du/u,  G2(t) = int_1^t g(u) du/u^2,  P2(t) = int_1^t Pi(u) du/u^2.
// Sigma and Pi are constant on each [j, j+1), so every unit interval has a
// closed form; tables hold the values at integers and evaluation at a
// rational point adds one partial interval.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "ssz/enclosure.hpp"
#include "ssz/rational.hpp"
#include "ssz/sieve.hpp"

namespace ssz {

struct UnitConstants {
    Enclosure pi;    // Pi(j)
    Enclosure shift; // Sigma(j) + gamma
};

// Closed forms on [a, b] inside one interval where Sigma, Pi are constant and
// log a, log(b/a) are given.
//   int_a^b (S - log u) Pi du/u   = Pi * l * (S - (log a + log b)/2)
//   int_a^b (S - log u) Pi du/u^2 = Pi * ((S - log a - 1)(1/a - 1/b) + l/b)
//   int_a^b Pi du/u^2             = Pi * (1/a - 1/b)
Enclosure piece_g_over_t(const UnitConstants& c, Enclosure log_a, Enclosure l);
Enclosure piece_g_over_t2(const UnitConstants& c, Enclosure log_a, Enclosure l, Enclosure inv_a, Enclosure inv_b);
Enclosure piece_pi_over_t2(const UnitConstants& c, Enclosure inv_a, Enclosure inv_b);

class GTable {
  public:
    // Tables on [1, limit]; limit <= sieve limit - 1. A cache directory, if
    // given, is used to load or store CSV copies.
    static std::shared_ptr<const GTable> build(SievePtr sieve, std::uint64_t limit,
                                               std::optional<std::filesystem::path> cache_dir = std::nullopt);

    std::uint64_t limit() const { return limit_; }
    bool loaded_from_cache() const { return from_cache_; }

    Enclosure g1_at(std::uint64_t n) const { return at(g1_, n); }
    Enclosure g2_at(std::uint64_t n) const { return at(g2_, n); }
    Enclosure p2_at(std::uint64_t n) const { return at(p2_, n); }

    // Values at a rational t in [1, limit].
    Enclosure g1(Rational t) const;
    Enclosure g2(Rational t) const;
    Enclosure p2(Rational t) const;

    UnitConstants unit(std::uint64_t j) const;

  private:
    GTable() = default;
    Enclosure at(const std::vector<Enclosure>& v, std::uint64_t n) const;
    void compute();
    bool load(const std::filesystem::path& dir);
    void store(const std::filesystem::path& dir) const;

    struct Partial {
        std::uint64_t j;
        UnitConstants c;
        Enclosure log_j, l, inv_j, inv_t;
    };
    Partial partial(Rational t) const;

    SievePtr sieve_;
    std::uint64_t limit_ = 0;
    bool from_cache_ = false;
    std::vector<Enclosure> g1_, g2_, p2_;
};

using GTablePtr = std::shared_ptr<const GTable>;

} // namespace ssz
