#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ssz/enclosure.hpp"

namespace ssz {

// n = p_1^{e_1} ... p_r^{e_r} with p_1 < ... < p_r.
struct Factorization {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;

    // p_1 <= p_2 <= ... <= p_k with multiplicity.
    std::vector<std::uint64_t> flattened() const;
    std::uint64_t value() const;
};

struct SieveOptions {
    // Upper end of the per-integer H(m) and L(m) tables; 0 picks
    // min(limit, 2^20).
    std::uint64_t harmonic_limit = 0;
};

// Immutable smallest-prime-factor and prime tables with cumulative
// Mertens-type prefix enclosures. Shared read-only by every module.
class SieveCache {
  public:
    static std::shared_ptr<const SieveCache> build(std::uint64_t limit, SieveOptions options = {});

    std::uint64_t limit() const { return limit_; }
    std::uint64_t harmonic_limit() const { return harmonic_.size() - 1; }

    std::uint32_t spf(std::uint64_t n) const;
    bool is_prime(std::uint64_t n) const { return n >= 2 && spf(n) == n; }
    std::span<const std::uint32_t> primes() const { return primes_; }

    // Number of primes <= n, for 0 <= n <= limit.
    std::size_t prime_count_upto(std::uint64_t n) const;

    // Product of (1 - 1/p) and sum of log(p)/(p - 1) over the first k primes.
    Enclosure pi_prefix(std::size_t k) const { return pi_prefix_.at(k); }
    Enclosure sigma_prefix(std::size_t k) const { return sigma_prefix_.at(k); }

    // H(m) = sum_{k=2}^m 1/k and L(m) = sum_{k=2}^m log(k)/k.
    Enclosure harmonic_prefix(std::uint64_t m) const;
    Enclosure loglike_prefix(std::uint64_t m) const;

    Factorization factorize(std::uint64_t n) const;

  private:
    SieveCache() = default;

    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
    std::vector<Enclosure> pi_prefix_;
    std::vector<Enclosure> sigma_prefix_;
    std::vector<Enclosure> harmonic_;
    std::vector<Enclosure> loglike_;
};

using SievePtr = std::shared_ptr<const SieveCache>;

inline SievePtr build_sieve(std::uint64_t limit, SieveOptions options = {}) {
    return SieveCache::build(limit, options);
}

} // namespace ssz
