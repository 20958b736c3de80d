#pragma once

// The Schinzel-Szekeres function F(n), dense-divisor sets D_{y,z}, the
// counting functions D(x,y,z) and A(x,y,z), and the extremal sets B(x), B'(x).

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <vector>

#include "ssz/arith.hpp"
#include "ssz/enclosure.hpp"
#include "ssz/error.hpp"
#include "ssz/rational.hpp"
#include "ssz/sieve.hpp"

namespace ssz {

struct Member {
    std::uint64_t n;
    std::uint64_t F;

    friend bool operator==(const Member&, const Member&) = default;
};

// Sieve factorization when n <= limit, trial division otherwise.
Factorization factorize_any(const SieveCache& s, std::uint64_t n);

// max_j p_j * prod_{i >= j} p_i over the ascending factorization; F(1) = 1.
std::uint64_t schinzel_szekeres(const Factorization& f);
std::uint64_t schinzel_szekeres(const SieveCache& s, std::uint64_t n);

// F(n q) for a prime q >= P^+(n), given F(n).
inline std::uint64_t extend_F(std::uint64_t F, std::uint64_t q) {
    const u128 v = static_cast<u128>(q) * std::max(F, q);
    if (v > UINT64_MAX) throw OutOfRange("F overflows 64 bits");
    return static_cast<std::uint64_t>(v);
}

// max_{1 <= i < k} d_{i+1}/d_i over the sorted divisors of n >= 2.
Rational divisor_ratio_max(std::uint64_t n);

// chi_{y,z}(n): F(n)/n <= y and P^-(n) > z. n = 1 is always a member.
bool is_member(const SieveCache& s, std::uint64_t n, Rational y, const PrimeCutoff& z);

// F(n) <= y n with exact integer arithmetic.
inline bool ratio_le(std::uint64_t F, std::uint64_t n, Rational y) {
    return static_cast<u128>(F) * static_cast<std::uint64_t>(y.den()) <=
           static_cast<u128>(n) * static_cast<std::uint64_t>(y.num());
}

// Depth-first walk over prime chains 1 -> p_1 -> p_1 p_2 -> ... with
// p_1 <= p_2 <= ..., p_1 >= min_prime and every node <= bound.
// accept(n, F, q, F(nq)) must be monotone in q: the walk stops at the first
// rejected q. visit(n, F, largest_prime) is called for every accepted node,
// including the root n = 1.
template <class Accept, class Visit>
void walk_chains(const SieveCache& s, std::uint64_t min_prime, std::uint64_t bound, Accept&& accept, Visit&& visit) {
    if (bound == 0) return;
    const auto primes = s.primes();
    struct Rec {
        const SieveCache& s;
        std::span<const std::uint32_t> primes;
        std::uint64_t bound;
        Accept& accept;
        Visit& visit;

        void go(std::uint64_t n, std::uint64_t F, std::size_t first) {
            const std::uint64_t qmax = bound / n;
            std::size_t i = first;
            bool last_accepted = true;
            for (; i < primes.size(); ++i) {
                const std::uint64_t q = primes[i];
                if (q > qmax) return;
                const u128 fc = static_cast<u128>(q) * std::max(F, q);
                if (fc > UINT64_MAX) return;
                const auto Fq = static_cast<std::uint64_t>(fc);
                if (!accept(n, F, q, Fq)) {
                    last_accepted = false;
                    return;
                }
                visit(n * q, Fq, q);
                go(n * q, Fq, i);
            }
            if (last_accepted && qmax > s.limit())
                throw OutOfRange("chain enumeration needs primes beyond the sieve limit " + std::to_string(s.limit()));
        }
    };
    visit(std::uint64_t{1}, std::uint64_t{1}, std::uint64_t{0});
    const auto start = static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), min_prime) - primes.begin());
    Rec r{s, primes, bound, accept, visit};
    r.go(1, 1, start);
}

// Ascending stream of D_{y,z} members up to `bound`, produced lazily by a
// min-ordered frontier over the chain tree.
class MemberStream {
  public:
    MemberStream(const SieveCache& s, Rational y, const PrimeCutoff& z, std::uint64_t bound);

    bool next(Member& out);

  private:
    struct Item {
        std::uint64_t value;  // parent * primes[index]
        std::uint64_t parent;
        std::uint64_t parent_F;
        std::size_t index;
        bool operator>(const Item& o) const { return value > o.value; }
    };
    void push_candidate(std::uint64_t parent, std::uint64_t parent_F, std::size_t index);

    const SieveCache& s_;
    Rational y_;
    std::uint64_t bound_;
    std::size_t min_index_;
    bool root_pending_ = true;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap_;
};

std::vector<Member> enumerate_members(const SieveCache& s, Rational y, const PrimeCutoff& z, std::uint64_t bound);

// D(x,y,z) = #{n <= x : F(n)/n <= y, P^-(n) > z}.
std::uint64_t count_D(const SieveCache& s, Rational x, Rational y, const PrimeCutoff& z);
// A(x,y,z) = #{n <= x : F(n) <= x y, P^-(n) > z}.
std::uint64_t count_A(const SieveCache& s, Rational x, Rational y, const PrimeCutoff& z);

// Members of {n <= bound : F(n) <= F_cap, P^-(n) > z} in chain-walk order.
std::vector<Member> enumerate_A(const SieveCache& s, std::uint64_t bound, std::uint64_t F_cap, const PrimeCutoff& z);

struct BSet {
    std::uint64_t x = 0; // B(x) depends on floor(x) only
    std::vector<std::uint64_t> members; // ascending
    std::vector<std::pair<std::uint64_t, std::size_t>> slices; // (p, #members with P^- = p), ascending p

    std::size_t slice_size(std::uint64_t p) const;
};

// B(x) from per-prime slices p * {m <= x/p : P^-(m) >= p, F(m) <= x, m > x/p^2}.
BSet enumerate_B(const SieveCache& s, Rational x, unsigned jobs = 0);
// B(x) from the definition: n <= x, F(n) > x, F(n/q) <= x for every prime q | n.
BSet enumerate_B_direct(const SieveCache& s, Rational x);

bool in_B(const SieveCache& s, std::uint64_t n, std::uint64_t x);

// Every pair of distinct members has lcm > x.
bool lcm_property(const std::vector<std::uint64_t>& set, std::uint64_t x);

// B'(x): members of B(x) in (x/6, x/5] are replaced by n{2,3,5}, members in
// (x/12, x/11] by n{3,4,5,7,11}. Ascending.
std::vector<std::uint64_t> build_B_prime(const SieveCache& s, Rational x);

struct IntegralIdentity {
    Enclosure lhs; // int_1^x A(t,y,z) dt/t
    Enclosure rhs; // int_1^x D(x/t, yt, z) dt/t
    // Exact comparison of the two sides, each a Z-linear combination of log p.
    bool exact_equal = false;
    std::map<std::uint64_t, std::int64_t> lhs_log_coefficients;
    std::map<std::uint64_t, std::int64_t> rhs_log_coefficients;
};

IntegralIdentity integral_identity_check(const SieveCache& s, Rational x, Rational y, const PrimeCutoff& z);

} // namespace ssz
