#pragma once

// Mertens-type products and sums, the remainder eta(t) = Sigma(t) + gamma - log t
// and its tail bounds, Legendre's Phi, and related prime-indexed quantities.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ssz/enclosure.hpp"
#include "ssz/rational.hpp"
#include "ssz/sieve.hpp"

namespace ssz {

// Euler's constant and the first Stieltjes constant from 30+ digit literals.
Enclosure euler_gamma();
Enclosure stieltjes_gamma1();
Enclosure exp_minus_gamma();
// C = 1 / (1 - e^{-gamma}).
Enclosure density_constant_c();

// The threshold "P^-(n) > cutoff". In just-below-prime mode the cutoff is p - 0,
// i.e. P^-(n) >= p.
class PrimeCutoff {
  public:
    enum class Mode { real, just_below_prime };

    static PrimeCutoff real(Rational z);
    static PrimeCutoff below_prime(std::uint64_t p);
    // "5" or "5/2" for real mode, "7-0" for just-below-prime.
    static PrimeCutoff parse(const std::string& text);

    Mode mode() const { return mode_; }
    Rational value() const { return value_; }
    std::uint64_t effective_min_prime() const { return min_prime_; }
    bool admits_smallest_prime(std::uint64_t p) const { return p >= min_prime_; }
    std::string str() const;

    friend bool operator==(const PrimeCutoff&, const PrimeCutoff&) = default;

  private:
    PrimeCutoff(Mode m, Rational v, std::uint64_t q) : mode_(m), value_(v), min_prime_(q) {}

    Mode mode_;
    Rational value_;
    std::uint64_t min_prime_;
};

// Trial-division primality, independent of any sieve.
bool is_prime_slow(std::uint64_t n);
std::uint64_t next_prime_above(std::uint64_t n);

// Number of primes below the cutoff's effective minimal prime.
std::size_t primes_below(const SieveCache& s, const PrimeCutoff& c);

Enclosure mertens_product(const SieveCache& s, const PrimeCutoff& c);
Enclosure mertens_logsum(const SieveCache& s, const PrimeCutoff& c);
// Pi(t), Sigma(t) with the usual "p <= t" convention.
Enclosure mertens_product_at(const SieveCache& s, std::uint64_t t);
Enclosure mertens_logsum_at(const SieveCache& s, std::uint64_t t);

Enclosure log_of(Rational r);

Enclosure eta(const SieveCache& s, Rational t);
// eta(p - 0) = Sigma(p - 1) + gamma - log p.
Enclosure eta_left(const SieveCache& s, std::uint64_t p);

struct EtaAnchor {
    double from;  // T
    double bound; // sup_{t >= T} |eta(t)| <= bound
};

struct EtaBoundConfig {
    std::vector<EtaAnchor> anchors{{2097152.0, 0.00105}, {274877906944.0, 0.00000305}};
    double global_lower = -0.00000305;
    // Largest t at which eta may be evaluated exactly; 0 means the sieve limit.
    std::uint64_t sieve_horizon = 0;

    std::string describe() const;
};

struct EtaExtrema {
    Enclosure sup;
    Enclosure inf;
};

// Exact sup and inf of eta on [x, T) from event points: values right after
// each prime jump and left limits before the next prime.
EtaExtrema eta_extrema(const SieveCache& s, Rational x, std::uint64_t T);

struct EtaTailBounds {
    Enclosure minus; // lo() is a rigorous lower bound on inf_{t >= x} eta(t)
    Enclosure plus;  // hi() is a rigorous upper bound on sup_{t >= x} eta(t)
    Enclosure abs;   // hi() is a rigorous upper bound on sup_{t >= x} |eta(t)|
    std::vector<EtaAnchor> anchors_used;
};

EtaTailBounds eta_tail_bounds(const SieveCache& s, Rational x, const EtaBoundConfig& cfg);

// Phi(x, c) = #{n <= x : P^-(n) > c}, with n = 1 always counted.
std::uint64_t phi_count(const SieveCache& s, Rational x, const PrimeCutoff& c);

// Lambda(y, z) = Pi(z) - Pi(y) for y >= z >= 1; exactly zero without a prime in (z, y].
Enclosure lambda_density(const SieveCache& s, Rational y, Rational z);

// #{primes p : z < p <= y}.
std::uint64_t prime_count_between(const SieveCache& s, Rational y, Rational z);

// g(t) = eta(t) Pi(t).
Enclosure g_eval(const SieveCache& s, Rational t);

} // namespace ssz
