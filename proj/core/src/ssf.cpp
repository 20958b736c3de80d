#include "ssz/ssf.hpp"

#include <set>

#include "ssz/parallel.hpp"

namespace ssz {

Factorization factorize_any(const SieveCache& s, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("factorize(0)");
    if (n <= s.limit()) return s.factorize(n);
    Factorization f;
    for (std::uint64_t p : s.primes()) {
        if (p * p > n) break;
        if (n % p) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) {
        const std::uint64_t L = s.limit();
        if (L * L < n && !is_prime_slow(n)) throw OutOfRange("cannot factor beyond sieve limit squared");
        f.factors.emplace_back(n, 1);
    }
    return f;
}

std::uint64_t schinzel_szekeres(const Factorization& f) {
    // Walk the flattened factorization from the top: suffix product times its first prime.
    const auto flat = f.flattened();
    if (flat.empty()) return 1;
    u128 suffix = 1, best = 0;
    for (std::size_t j = flat.size(); j-- > 0;) {
        suffix *= flat[j];
        const u128 v = suffix * flat[j];
        if (v > best) best = v;
    }
    if (best > UINT64_MAX) throw OutOfRange("F(n) overflows 64 bits");
    return static_cast<std::uint64_t>(best);
}

std::uint64_t schinzel_szekeres(const SieveCache& s, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("F(n) needs n >= 1");
    return schinzel_szekeres(factorize_any(s, n));
}

Rational divisor_ratio_max(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("divisor_ratio_max needs n >= 2");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    std::uint64_t bn = small[1], bd = small[0];
    for (std::size_t i = 1; i + 1 < small.size(); ++i) {
        const std::uint64_t a = small[i + 1], b = small[i];
        if (static_cast<u128>(a) * bd > static_cast<u128>(bn) * b) {
            bn = a;
            bd = b;
        }
    }
    return Rational(static_cast<std::int64_t>(bn), static_cast<std::int64_t>(bd));
}

bool is_member(const SieveCache& s, std::uint64_t n, Rational y, const PrimeCutoff& z) {
    if (n == 0) throw InvalidArgument("is_member needs n >= 1");
    if (n == 1) return true;
    const auto f = factorize_any(s, n);
    if (!z.admits_smallest_prime(f.factors.front().first)) return false;
    return ratio_le(schinzel_szekeres(f), n, y);
}

MemberStream::MemberStream(const SieveCache& s, Rational y, const PrimeCutoff& z, std::uint64_t bound)
    : s_(s), y_(y), bound_(bound) {
    if (y < Rational(0)) throw InvalidArgument("member stream needs y >= 0");
    const auto primes = s.primes();
    min_index_ = static_cast<std::size_t>(
        std::lower_bound(primes.begin(), primes.end(), z.effective_min_prime()) - primes.begin());
    if (bound_ == 0) root_pending_ = false;
}

void MemberStream::push_candidate(std::uint64_t parent, std::uint64_t parent_F, std::size_t index) {
    const auto primes = s_.primes();
    const std::uint64_t qmax = bound_ / parent;
    if (index >= primes.size()) {
        if (qmax > s_.limit() && ratio_le(s_.limit() + 1, parent, y_))
            throw OutOfRange("member stream needs primes beyond the sieve limit");
        return;
    }
    const std::uint64_t q = primes[index];
    if (q > qmax || !ratio_le(q, parent, y_)) return;
    heap_.push(Item{parent * q, parent, parent_F, index});
}

bool MemberStream::next(Member& out) {
    if (root_pending_) {
        root_pending_ = false;
        out = {1, 1};
        push_candidate(1, 1, min_index_);
        return true;
    }
    if (heap_.empty()) return false;
    const Item it = heap_.top();
    heap_.pop();
    const std::uint64_t q = s_.primes()[it.index];
    const std::uint64_t F = extend_F(it.parent_F, q);
    push_candidate(it.parent, it.parent_F, it.index + 1);
    push_candidate(it.value, F, it.index);
    out = {it.value, F};
    return true;
}

std::vector<Member> enumerate_members(const SieveCache& s, Rational y, const PrimeCutoff& z, std::uint64_t bound) {
    MemberStream st(s, y, z, bound);
    std::vector<Member> out;
    Member m;
    while (st.next(m)) out.push_back(m);
    return out;
}

std::uint64_t count_D(const SieveCache& s, Rational x, Rational y, const PrimeCutoff& z) {
    if (x < Rational(1)) return 0;
    const auto bound = static_cast<std::uint64_t>(x.floor());
    std::uint64_t count = 0;
    walk_chains(
        s, z.effective_min_prime(), bound,
        [&](std::uint64_t n, std::uint64_t, std::uint64_t q, std::uint64_t Fq) { return ratio_le(Fq, n * q, y); },
        [&](std::uint64_t, std::uint64_t, std::uint64_t) { ++count; });
    return count;
}

std::uint64_t count_A(const SieveCache& s, Rational x, Rational y, const PrimeCutoff& z) {
    if (x < Rational(1)) return 0;
    const auto bound = static_cast<std::uint64_t>(x.floor());
    const auto cap = static_cast<std::uint64_t>((x * y).floor());
    if (cap < 1) return 0;
    std::uint64_t count = 0;
    walk_chains(
        s, z.effective_min_prime(), bound,
        [&](std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t Fq) { return Fq <= cap; },
        [&](std::uint64_t, std::uint64_t, std::uint64_t) { ++count; });
    return count;
}

std::vector<Member> enumerate_A(const SieveCache& s, std::uint64_t bound, std::uint64_t F_cap, const PrimeCutoff& z) {
    std::vector<Member> out;
    if (F_cap < 1) return out;
    walk_chains(
        s, z.effective_min_prime(), bound,
        [&](std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t Fq) { return Fq <= F_cap; },
        [&](std::uint64_t n, std::uint64_t F, std::uint64_t) { out.push_back({n, F}); });
    return out;
}

std::size_t BSet::slice_size(std::uint64_t p) const {
    const auto it = std::lower_bound(slices.begin(), slices.end(), std::pair<std::uint64_t, std::size_t>{p, 0});
    return (it != slices.end() && it->first == p) ? it->second : 0;
}

BSet enumerate_B(const SieveCache& s, Rational x, unsigned jobs) {
    if (x < Rational(2)) throw InvalidArgument("B(x) needs x >= 2");
    const auto X = static_cast<std::uint64_t>(x.floor());
    if (X > s.limit()) throw OutOfRange("B(x) needs x within the sieve limit");
    const auto primes = s.primes();
    const std::size_t np = s.prime_count_upto(X);
    std::size_t nsmall = 0;
    while (nsmall < np && static_cast<std::uint64_t>(primes[nsmall]) * primes[nsmall] <= X) ++nsmall;

    auto slices = parallel_map<std::vector<std::uint64_t>>(
        nsmall,
        [&](std::size_t i) {
            const std::uint64_t p = primes[i];
            std::vector<std::uint64_t> out;
            walk_chains(
                s, p, X / p,
                [&](std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t Fq) { return Fq <= X; },
                [&](std::uint64_t m, std::uint64_t, std::uint64_t) {
                    if (m * p * p > X) out.push_back(p * m);
                });
            return out;
        },
        jobs);

    BSet b;
    b.x = X;
    for (std::size_t i = 0; i < nsmall; ++i) {
        b.slices.emplace_back(primes[i], slices[i].size());
        b.members.insert(b.members.end(), slices[i].begin(), slices[i].end());
    }
    for (std::size_t i = nsmall; i < np; ++i) {
        b.slices.emplace_back(primes[i], 1);
        b.members.push_back(primes[i]);
    }
    std::sort(b.members.begin(), b.members.end());
    return b;
}

bool in_B(const SieveCache& s, std::uint64_t n, std::uint64_t x) {
    if (n < 2 || n > x) return false;
    const auto f = factorize_any(s, n);
    if (schinzel_szekeres(f) <= x) return false;
    for (auto [q, e] : f.factors)
        if (schinzel_szekeres(s, n / q) > x) return false;
    return true;
}

BSet enumerate_B_direct(const SieveCache& s, Rational x) {
    if (x < Rational(2)) throw InvalidArgument("B(x) needs x >= 2");
    const auto X = static_cast<std::uint64_t>(x.floor());
    BSet b;
    b.x = X;
    std::map<std::uint64_t, std::size_t> counts;
    for (std::uint64_t n = 2; n <= X; ++n) {
        if (!in_B(s, n, X)) continue;
        b.members.push_back(n);
        ++counts[factorize_any(s, n).factors.front().first];
    }
    for (std::uint64_t p : s.primes()) {
        if (p > X) break;
        b.slices.emplace_back(p, counts.count(p) ? counts[p] : 0);
    }
    return b;
}

bool lcm_property(const std::vector<std::uint64_t>& set, std::uint64_t x) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            const std::uint64_t a = set[i], b = set[j];
            if (a == b) return false;
            const u128 l = static_cast<u128>(a / std::gcd(a, b)) * b;
            if (l <= x) return false;
        }
    return true;
}

std::vector<std::uint64_t> build_B_prime(const SieveCache& s, Rational x) {
    const BSet b = enumerate_B(s, x);
    std::vector<std::uint64_t> out;
    out.reserve(b.members.size());
    auto in_slice = [&](std::uint64_t n, std::int64_t q) {
        // x/(q+1) < n <= x/q
        return Rational(static_cast<std::int64_t>(n) * (q + 1)) > x && Rational(static_cast<std::int64_t>(n) * q) <= x;
    };
    for (std::uint64_t n : b.members) {
        if (in_slice(n, 5)) {
            for (std::uint64_t k : {2, 3, 5}) out.push_back(k * n);
        } else if (in_slice(n, 11)) {
            for (std::uint64_t k : {3, 4, 5, 7, 11}) out.push_back(k * n);
        } else {
            out.push_back(n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Rational rat(std::uint64_t num, std::uint64_t den = 1) {
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

struct StepIntegral {
    std::map<Rational, std::int64_t> log_weights; // sum w * log r
};

// Integrates a right-constant step function given a superset of its
// breakpoints and its value at each piece midpoint.
template <class Value>
StepIntegral integrate_steps(std::set<Rational> cuts, Value&& value) {
    StepIntegral out;
    Rational prev;
    bool first = true;
    for (const Rational& c : cuts) {
        if (!first) {
            const auto v = static_cast<std::int64_t>(value((prev + c) / Rational(2)));
            if (v != 0) {
                out.log_weights[c] += v;
                out.log_weights[prev] -= v;
            }
        }
        prev = c;
        first = false;
    }
    return out;
}

void add_log(std::map<std::uint64_t, std::int64_t>& coef, const SieveCache& s, std::uint64_t n, std::int64_t w) {
    if (n == 1) return;
    for (auto [p, e] : factorize_any(s, n).factors) coef[p] += w * static_cast<std::int64_t>(e);
}

void finish(const SieveCache& s, const StepIntegral& st, Enclosure& value, std::map<std::uint64_t, std::int64_t>& coef) {
    value = Enclosure::exact(0.0);
    for (const auto& [r, w] : st.log_weights) {
        if (w == 0) continue;
        add_log(coef, s, static_cast<std::uint64_t>(r.num()), w);
        add_log(coef, s, static_cast<std::uint64_t>(r.den()), -w);
    }
    for (auto it = coef.begin(); it != coef.end();) {
        if (it->second == 0) {
            it = coef.erase(it);
        } else {
            value += Enclosure::of_integer(it->second) * log_of(it->first);
            ++it;
        }
    }
}

} // namespace

IntegralIdentity integral_identity_check(const SieveCache& s, Rational x, Rational y, const PrimeCutoff& z) {
    if (x < Rational(1)) throw InvalidArgument("integral identity needs x >= 1");
    if (y < Rational(1)) throw InvalidArgument("integral identity needs y >= 1");
    IntegralIdentity out;
    const auto X = static_cast<std::uint64_t>(x.floor());
    const Rational one(1);

    std::vector<std::uint64_t> F(X + 1, 1);
    for (std::uint64_t n = 2; n <= X; ++n) F[n] = schinzel_szekeres(s, n);

    // A(t,y,z) jumps only where t crosses an integer or some F(n)/y.
    std::set<Rational> cuts_a{one, x};
    for (std::uint64_t n = 2; n <= X; ++n) {
        cuts_a.insert(rat(n));
        const Rational t = rat(F[n]) / y;
        if (t > one && t < x) cuts_a.insert(t);
    }
    for (auto it = cuts_a.begin(); it != cuts_a.end();) it = (*it > x) ? cuts_a.erase(it) : std::next(it);
    const auto lhs = integrate_steps(cuts_a, [&](Rational t) { return count_A(s, t, y, z); });

    // D(x/t, yt, z) jumps where x/t crosses an integer n or yt crosses F(n)/n.
    std::set<Rational> cuts_d{one, x};
    for (std::uint64_t n = 1; n <= X; ++n) {
        const Rational t1 = x / rat(n);
        if (t1 > one && t1 < x) cuts_d.insert(t1);
        const Rational t2 = rat(F[n], n) / y;
        if (t2 > one && t2 < x) cuts_d.insert(t2);
    }
    const auto rhs = integrate_steps(cuts_d, [&](Rational t) { return count_D(s, x / t, y * t, z); });

    finish(s, lhs, out.lhs, out.lhs_log_coefficients);
    finish(s, rhs, out.rhs, out.rhs_log_coefficients);
    out.exact_equal = out.lhs_log_coefficients == out.rhs_log_coefficients;
    return out;
}

} // namespace ssz
