#include "ssz/sieve.hpp"

#include <algorithm>
#include <limits>
#include <new>
#include <string>

#include "ssz/error.hpp"

namespace ssz {

std::vector<std::uint64_t> Factorization::flattened() const {
    std::vector<std::uint64_t> out;
    for (auto [p, e] : factors)
        for (std::uint32_t i = 0; i < e; ++i) out.push_back(p);
    return out;
}

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (auto [p, e] : factors)
        for (std::uint32_t i = 0; i < e; ++i) v *= p;
    return v;
}

std::shared_ptr<const SieveCache> SieveCache::build(std::uint64_t limit, SieveOptions options) {
    if (limit < 2) throw InvalidArgument("sieve limit must be >= 2");
    if (limit >= std::numeric_limits<std::uint32_t>::max()) throw ResourceError("sieve limit too large");

    std::shared_ptr<SieveCache> cache(new SieveCache());
    auto& c = *cache;
    c.limit_ = limit;
    try {
        c.spf_.assign(limit + 1, 0);
        c.primes_.reserve(static_cast<std::size_t>(1.3 * static_cast<double>(limit) / std::log(static_cast<double>(limit))) + 16);

        // Linear sieve: each composite is written once, by its smallest prime.
        for (std::uint64_t n = 2; n <= limit; ++n) {
            if (c.spf_[n] == 0) {
                c.spf_[n] = static_cast<std::uint32_t>(n);
                c.primes_.push_back(static_cast<std::uint32_t>(n));
            }
            const std::uint32_t s = c.spf_[n];
            for (std::uint32_t p : c.primes_) {
                const std::uint64_t m = n * p;
                if (p > s || m > limit) break;
                c.spf_[m] = p;
            }
        }

        c.pi_prefix_.resize(c.primes_.size() + 1);
        c.sigma_prefix_.resize(c.primes_.size() + 1);
        c.pi_prefix_[0] = Enclosure::exact(1.0);
        c.sigma_prefix_[0] = Enclosure::exact(0.0);
        for (std::size_t i = 0; i < c.primes_.size(); ++i) {
            const auto p = static_cast<std::int64_t>(c.primes_[i]);
            c.pi_prefix_[i + 1] = c.pi_prefix_[i] * Enclosure::ratio(p - 1, p);
            c.sigma_prefix_[i + 1] = c.sigma_prefix_[i] + log_of(static_cast<std::uint64_t>(p)) / Enclosure::of_integer(p - 1);
        }

        const std::uint64_t hl = options.harmonic_limit == 0 ? std::min<std::uint64_t>(limit, 1u << 20)
                                                             : std::min(limit, options.harmonic_limit);
        c.harmonic_.resize(hl + 1);
        c.loglike_.resize(hl + 1);
        c.harmonic_[0] = c.harmonic_[1] = Enclosure::exact(0.0);
        c.loglike_[0] = c.loglike_[1] = Enclosure::exact(0.0);
        for (std::uint64_t m = 2; m <= hl; ++m) {
            const auto k = Enclosure::of_integer(static_cast<std::int64_t>(m));
            c.harmonic_[m] = c.harmonic_[m - 1] + Enclosure::exact(1.0) / k;
            c.loglike_[m] = c.loglike_[m - 1] + log_of(m) / k;
        }
    } catch (const std::bad_alloc&) {
        throw ResourceError("out of memory building sieve to " + std::to_string(limit));
    }
    return cache;
}

std::uint32_t SieveCache::spf(std::uint64_t n) const {
    if (n < 2 || n > limit_) throw OutOfRange("spf query " + std::to_string(n) + " outside [2, " + std::to_string(limit_) + "]");
    return spf_[n];
}

std::size_t SieveCache::prime_count_upto(std::uint64_t n) const {
    if (n > limit_) throw OutOfRange("prime count query " + std::to_string(n) + " beyond sieve limit " + std::to_string(limit_));
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

Enclosure SieveCache::harmonic_prefix(std::uint64_t m) const {
    if (m >= harmonic_.size()) throw OutOfRange("harmonic prefix beyond table: " + std::to_string(m));
    return harmonic_[m];
}

Enclosure SieveCache::loglike_prefix(std::uint64_t m) const {
    if (m >= loglike_.size()) throw OutOfRange("loglike prefix beyond table: " + std::to_string(m));
    return loglike_[m];
}

Factorization SieveCache::factorize(std::uint64_t n) const {
    if (n == 0) throw InvalidArgument("factorize(0)");
    if (n > limit_) throw OutOfRange("factorize beyond sieve limit: " + std::to_string(n));
    Factorization f;
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    return f;
}

} // namespace ssz
