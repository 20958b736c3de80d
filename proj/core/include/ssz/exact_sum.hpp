#pragma once

// Exact rational sums via binary splitting over GMP integers.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "ssz/enclosure.hpp"
#include "ssz/rational.hpp"
#include "ssz/sieve.hpp"

namespace ssz {

using Term = std::pair<std::uint64_t, std::uint64_t>; // numerator, denominator

mpq_class sum_fractions(std::span<const Term> terms);
mpq_class sum_reciprocals(std::span<const std::uint64_t> ns);

// Tight enclosure of an exact rational (at most one ulp wide).
Enclosure enclose(const mpq_class& q);

// Enclosure of sum a_i / b_i accumulated in index order.
Enclosure sum_fractions_enclosure(std::span<const Term> terms);

// "p/q", or "p" for integers.
std::string rational_string(const mpq_class& q);
mpq_class to_mpq(Rational r);

// Sum over primes p <= x of {x/p}.
mpq_class frac_sum_over_primes(const SieveCache& s, Rational x);
Enclosure frac_sum_over_primes_enclosure(const SieveCache& s, Rational x);

} // namespace ssz
