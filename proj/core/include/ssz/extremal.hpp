#pragma once

// Reciprocal sums over B(x) and B'(x), the maximum R(x) under the lcm
// property, the sieve minima H(x), H*(x), and longest paths f(n) in the
// divisor graph.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ssz/rational.hpp"
#include "ssz/sieve.hpp"

namespace ssz {

inline constexpr std::uint64_t kExactLimitDefault = 40;
inline constexpr std::uint64_t kPathLimitDefault = 20;

mpq_class sum_recip_B(const SieveCache& s, Rational x);
// sum over B(x) of {x/n}.
mpq_class frac_sum_B(const SieveCache& s, Rational x);
// sum of 1/n over n in B(x) with x/(q+1) < n <= x/q.
mpq_class sum_recip_B_interval(const SieveCache& s, Rational x, std::uint64_t q);
mpq_class sum_recip_B_prime(const SieveCache& s, Rational x);

struct RResult {
    mpq_class value;
    std::vector<std::uint64_t> witness; // ascending
    bool exact = true;
};

// Maximum of sum 1/n over S in {2..x} with lcm(m,n) > x for distinct m, n.
// Refuses x beyond exact_limit with ResourceError.
RResult r_exact(Rational x, std::uint64_t exact_limit = kExactLimitDefault);
// Best of B(x), B'(x) and a greedy pass; a lower bound on R(x), flagged non-exact.
RResult r_heuristic(const SieveCache& s, Rational x);

struct HResult {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> witness; // the removers, ascending
    bool exact = true;
};

// min over S in {2..x} with sum 1/s <= budget of #{n <= x : s does not divide n for all s in S}.
HResult h_exact(Rational x, Rational budget = Rational(1), std::uint64_t exact_limit = kExactLimitDefault);

struct HStarResult {
    bool feasible = false;
    std::uint64_t count = 0; // A(tau x)
    Rational tau{0};
    mpq_class recip_sum;     // sum over B_tau(x)
};

// min over tau = k/x, k = 1..floor(x), of A(tau x) subject to
// sum_{n in B(tau x) or prime in (tau x, x]} 1/n <= budget. A(k) is
// nondecreasing, so the answer sits at the smallest feasible k.
HStarResult h_star(const SieveCache& s, Rational x, Rational budget = Rational(1));

// B(k) together with the primes in (k, X]; for k = 1 only the primes.
std::vector<std::uint64_t> b_tau_set(const SieveCache& s, std::uint64_t k, std::uint64_t X);

// n in [1, X] not divisible by any member of the set.
std::vector<std::uint64_t> unsieved(const std::vector<std::uint64_t>& set, std::uint64_t X);

// Most vertices on a simple path in the graph on {1..n} with edges a | b.
std::uint64_t f_exact(std::uint64_t n, std::uint64_t limit = kPathLimitDefault);
// A(n/2).
std::uint64_t f_lower(const SieveCache& s, std::uint64_t n);

} // namespace ssz
