#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssz/exact_sum.hpp"
#include "ssz/ssf.hpp"

using namespace ssz;

namespace {

const SievePtr& sieve() {
    static const SievePtr s = build_sieve(1 << 21);
    return s;
}

const std::vector<std::uint64_t>& Ftab() {
    static const auto t = oracle::F_table(100000);
    return t;
}

std::int64_t i(std::uint64_t v) { return static_cast<std::int64_t>(v); }

} // namespace

TEST_CASE("F examples") {
    const auto& s = *sieve();
    CHECK(schinzel_szekeres(s, 1) == 1);
    CHECK(schinzel_szekeres(s, 6) == 12);
    CHECK(schinzel_szekeres(s, 12) == 24);
    CHECK(schinzel_szekeres(s, 14) == 49);
    CHECK_THROWS_AS(schinzel_szekeres(s, 0), InvalidArgument);
    // Beyond the sieve: 2 * 4194319 (prime).
    CHECK(schinzel_szekeres(s, 2ull * 4194319ull) == 4194319ull * 4194319ull);
}

TEST_CASE("suffix-product F equals the divisor definition up to 10^5") {
    const auto& s = *sieve();
    for (std::uint64_t n = 1; n <= 100000; ++n) REQUIRE(schinzel_szekeres(s, n) == Ftab()[n]);
    for (std::uint64_t n = 1; n <= 300; ++n) REQUIRE(oracle::F(n) == Ftab()[n]);
}

TEST_CASE("n P^-(n) <= F(n) <= n^2") {
    const auto& s = *sieve();
    for (std::uint64_t n = 2; n <= 100000; ++n) {
        const auto F = Ftab()[n];
        REQUIRE(n * s.spf(n) <= F);
        REQUIRE(F <= n * n);
    }
}

TEST_CASE("Tenenbaum identity: F(n)/n is the largest consecutive divisor ratio") {
    CHECK(divisor_ratio_max(6) == Rational(2));
    CHECK(divisor_ratio_max(13) == Rational(13));
    CHECK_THROWS_AS(divisor_ratio_max(1), InvalidArgument);
    for (std::uint64_t n = 2; n <= 10000; ++n) REQUIRE(divisor_ratio_max(n) == Rational(i(Ftab()[n]), i(n)));
}

TEST_CASE("membership") {
    const auto& s = *sieve();
    CHECK(is_member(s, 1, 1, PrimeCutoff::real(100)));
    CHECK(is_member(s, 6, 2, PrimeCutoff::real(1)));
    CHECK_FALSE(is_member(s, 6, 2, PrimeCutoff::real(2)));
    for (std::uint64_t n = 2; n <= 1000; ++n) REQUIRE_FALSE(is_member(s, n, 1, PrimeCutoff::real(1)));
}

TEST_CASE("member stream") {
    const auto& s = *sieve();
    auto ns = [](const std::vector<Member>& v) {
        std::vector<std::uint64_t> out;
        for (auto m : v) out.push_back(m.n);
        return out;
    };
    CHECK(ns(enumerate_members(s, 1, PrimeCutoff::real(1), 100)) == std::vector<std::uint64_t>{1});
    CHECK(ns(enumerate_members(s, 2, PrimeCutoff::real(1), 12)) == std::vector<std::uint64_t>{1, 2, 4, 6, 8, 12});

    for (auto [y, z] : {std::pair{Rational(3), Rational(2)}, std::pair{Rational(5, 2), Rational(1)}, std::pair{Rational(7), Rational(3)}}) {
        const auto c = PrimeCutoff::real(z);
        const auto v = enumerate_members(s, y, c, 100000);
        std::vector<std::uint64_t> scan;
        for (std::uint64_t n = 1; n <= 100000; ++n) {
            const bool ok = n == 1 || (s.spf(n) >= c.effective_min_prime() && ratio_le(Ftab()[n], n, y));
            if (ok) scan.push_back(n);
        }
        REQUIRE(ns(v) == scan);
        for (auto m : v) REQUIRE(m.F == Ftab()[m.n]);
        CHECK(count_D(s, 100000, y, c) == scan.size());
    }
}

TEST_CASE("counting examples") {
    const auto& s = *sieve();
    for (std::int64_t x = 1; x <= 200; ++x) CHECK(count_D(s, x, 1, PrimeCutoff::real(1)) == 1);
    CHECK(count_A(s, 10, 1, PrimeCutoff::real(1)) == 4);
    CHECK(count_A(s, Rational(1, 2), 1, PrimeCutoff::real(1)) == 0);
    const auto D = [&](Rational x, Rational y, PrimeCutoff z) { return count_D(s, x, y, z); };
    CHECK(D(100, 5, PrimeCutoff::real(2)) == 1 + D(Rational(100, 3), 15, PrimeCutoff::below_prime(3)) +
                                                  D(20, 25, PrimeCutoff::below_prime(5)));
}

TEST_CASE("A(x,y,z) agrees with a scan and is monotone") {
    const auto& s = *sieve();
    for (auto [y, z] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(3, 2), Rational(2)}, std::pair{Rational(4), Rational(3)}}) {
        const auto c = PrimeCutoff::real(z);
        std::uint64_t prev = 0;
        for (std::int64_t x = 1; x <= 3000; x += 7) {
            std::uint64_t scan = 0;
            for (std::uint64_t n = 1; n <= static_cast<std::uint64_t>(x); ++n)
                if ((n == 1 || s.spf(n) >= c.effective_min_prime()) && Rational(i(Ftab()[n])) <= Rational(x) * y) ++scan;
            const auto a = count_A(s, x, y, c);
            REQUIRE(a == scan);
            REQUIRE(a >= prev);
            prev = a;
        }
    }
    CHECK(count_A(s, 5000, 2, PrimeCutoff::real(1)) >= count_A(s, 5000, Rational(3, 2), PrimeCutoff::real(1)));
    CHECK(count_A(s, 5000, 2, PrimeCutoff::real(3)) <= count_A(s, 5000, 2, PrimeCutoff::real(2)));
}

TEST_CASE("Buchstab identity over the p - 0 cutoff") {
    const auto& s = *sieve();
    for (auto [y, z] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{7, 3}}) {
        for (std::int64_t x = 1; x <= 3000; ++x) {
            std::uint64_t rhs = 1;
            for (std::uint64_t p : s.primes()) {
                if (i(p) > y) break;
                if (i(p) <= z) continue;
                rhs += count_D(s, Rational(x, i(p)), Rational(y * i(p)), PrimeCutoff::below_prime(p));
            }
            REQUIRE(count_D(s, x, y, PrimeCutoff::real(z)) == rhs);
        }
    }
}

TEST_CASE("Phi decomposition over D_{y,z} and its truncated form") {
    const auto& s = *sieve();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> X(1, 10000), Y(1, 10), Z(1, 5);
    for (int t = 0; t < 30; ++t) {
        const std::int64_t x = X(rng);
        std::int64_t y = Y(rng), z = Z(rng);
        if (y < z) std::swap(y, z);
        const auto cz = PrimeCutoff::real(z);
        const auto members = enumerate_members(s, y, cz, static_cast<std::uint64_t>(x));
        std::uint64_t sum = 0;
        for (auto m : members) sum += phi_count(s, Rational(x, i(m.n)), PrimeCutoff::real(y * i(m.n)));
        REQUIRE(phi_count(s, x, cz) == sum);

        // D - 1 = Phi(x,z) - Phi(x,y) - sum_{z < n <= sqrt(x/y)} chi (Phi(x/n, yn) - 1)
        std::int64_t rhs = static_cast<std::int64_t>(phi_count(s, x, cz)) - static_cast<std::int64_t>(phi_count(s, x, PrimeCutoff::real(y)));
        for (auto m : members) {
            const auto n = i(m.n);
            if (n <= z || n * n * y > x) continue;
            rhs -= static_cast<std::int64_t>(phi_count(s, Rational(x, n), PrimeCutoff::real(y * n))) - 1;
        }
        REQUIRE(static_cast<std::int64_t>(count_D(s, x, y, cz)) - 1 == rhs);
    }
}

TEST_CASE("B(x) examples and slices") {
    const auto& s = *sieve();
    CHECK(enumerate_B(s, 4).members == std::vector<std::uint64_t>{3, 4});
    CHECK(enumerate_B_direct(s, 4).members == std::vector<std::uint64_t>{3, 4});
    for (std::int64_t x = 2; x <= 2000; ++x) {
        const auto b = enumerate_B(s, x);
        const auto d = enumerate_B_direct(s, x);
        REQUIRE(b.members == d.members);
        REQUIRE(b.slices == d.slices);
        for (auto [p, c] : b.slices) REQUIRE(c == count_A(s, Rational(x, i(p)), i(p), PrimeCutoff::real(i(p))));
    }
    CHECK(lcm_property(enumerate_B(s, 100).members, 100));
    CHECK_FALSE(lcm_property({2, 4}, 100));
}

TEST_CASE("partition of [1, x] by B(x)") {
    const auto& s = *sieve();
    for (std::int64_t x = 2; x <= 3000; ++x) {
        std::uint64_t total = count_A(s, x, 1, PrimeCutoff::real(1));
        for (auto n : enumerate_B(s, x).members) total += static_cast<std::uint64_t>(x) / n;
        REQUIRE(total == static_cast<std::uint64_t>(x));
    }
}

TEST_CASE("reciprocal sums over B(x) stay below one") {
    const auto& s = *sieve();
    for (std::int64_t x : {100, 1000, 10000, 100000}) {
        const auto b = enumerate_B(s, x);
        CHECK(sum_reciprocals(b.members) < 1);
    }
}

TEST_CASE("B'(x)") {
    const auto& s = *sieve();
    for (std::int64_t x : {50, 1000, 100000}) {
        const auto bp = build_B_prime(s, x);
        for (auto n : bp) REQUIRE(n <= static_cast<std::uint64_t>(x));
        if (x == 50) CHECK(lcm_property(bp, 50));
    }
    CHECK(lcm_property(build_B_prime(s, 1000), 1000));
    // x = 4: nothing in (4/6, 4/5] or (4/12, 4/11].
    CHECK(build_B_prime(s, 4) == enumerate_B(s, 4).members);
}

TEST_CASE("integral identity between A and D") {
    const auto& s = *sieve();
    const auto one = integral_identity_check(s, 1, 1, PrimeCutoff::real(1));
    CHECK(one.exact_equal);
    CHECK(one.lhs.lo() == 0.0);
    for (auto [x, y, z] : {std::tuple{50, 2, 1}, std::tuple{200, 3, 2}, std::tuple{120, 5, 3}}) {
        const auto r = integral_identity_check(s, x, y, PrimeCutoff::real(z));
        CHECK(r.exact_equal);
        CHECK(r.lhs.overlaps(r.rhs));
        CHECK(r.lhs.lo() > 0);
    }
    const auto half = integral_identity_check(s, Rational(301, 2), Rational(5, 2), PrimeCutoff::below_prime(3));
    CHECK(half.exact_equal);
}
