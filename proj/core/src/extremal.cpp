#include "ssz/extremal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "ssz/arith.hpp"
#include "ssz/error.hpp"
#include "ssz/exact_sum.hpp"
#include "ssz/ssf.hpp"

namespace ssz {

namespace {

std::uint64_t floor_of(Rational x) { return x < Rational(0) ? 0 : static_cast<std::uint64_t>(x.floor()); }

u128 lcm_upto(std::uint64_t X) {
    u128 l = 1;
    for (std::uint64_t n = 2; n <= X; ++n) {
        u128 a = l, b = n;
        while (b != 0) {
            const u128 t = a % b;
            a = b;
            b = t;
        }
        l = l / a * n;
    }
    return l;
}

mpq_class from_units(u128 k, u128 L) {
    auto to_mpz = [](u128 v) {
        mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
        hi <<= 64;
        return mpz_class(hi + static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
    };
    mpq_class q(to_mpz(k), to_mpz(L));
    q.canonicalize();
    return q;
}

// Maximum-weight independent set over a conflict graph of at most 64 vertices,
// memoised on the vertex mask and split into connected components.
class Mwis {
  public:
    Mwis(std::vector<std::uint64_t> adj, std::vector<u128> w) : adj_(std::move(adj)), w_(std::move(w)) {}

    u128 solve(std::uint64_t mask) {
        if (mask == 0) return 0;
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        u128 best;
        const std::uint64_t comp = component(mask);
        if (comp != mask) {
            best = solve(comp) + solve(mask & ~comp);
        } else {
            const int v = pivot(mask);
            const std::uint64_t bit = std::uint64_t{1} << v;
            if ((adj_[v] & mask) == 0) {
                best = w_[v] + solve(mask & ~bit);
            } else {
                const u128 out = solve(mask & ~bit);
                const u128 in = w_[v] + solve(mask & ~bit & ~adj_[v]);
                best = std::max(out, in);
            }
        }
        memo_.emplace(mask, best);
        return best;
    }

    void witness(std::uint64_t mask, std::uint64_t& chosen) {
        if (mask == 0) return;
        const std::uint64_t comp = component(mask);
        if (comp != mask) {
            witness(comp, chosen);
            witness(mask & ~comp, chosen);
            return;
        }
        const int v = pivot(mask);
        const std::uint64_t bit = std::uint64_t{1} << v;
        const std::uint64_t rest = mask & ~bit & ~adj_[v];
        if (w_[v] + solve(rest) >= solve(mask & ~bit)) {
            chosen |= bit;
            witness(rest, chosen);
        } else {
            witness(mask & ~bit, chosen);
        }
    }

  private:
    std::uint64_t component(std::uint64_t mask) const {
        std::uint64_t comp = mask & (~mask + 1), frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
            next &= mask & ~comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    int pivot(std::uint64_t mask) const {
        int best = -1, deg = -1;
        for (std::uint64_t m = mask; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const int d = std::popcount(adj_[v] & mask);
            if (d > deg) {
                deg = d;
                best = v;
            }
        }
        return best;
    }

    std::vector<std::uint64_t> adj_;
    std::vector<u128> w_;
    std::unordered_map<std::uint64_t, u128> memo_;
};

} // namespace

mpq_class sum_recip_B(const SieveCache& s, Rational x) {
    const BSet b = enumerate_B(s, x);
    return sum_reciprocals(b.members);
}

mpq_class frac_sum_B(const SieveCache& s, Rational x) {
    const BSet b = enumerate_B(s, x);
    const auto a = static_cast<u128>(x.num());
    const auto d = static_cast<u128>(x.den());
    std::vector<Term> terms;
    terms.reserve(b.members.size());
    for (auto n : b.members) {
        const u128 den = d * n;
        if (den > UINT64_MAX) throw OutOfRange("frac_sum_B denominator overflow");
        terms.emplace_back(static_cast<std::uint64_t>(a % den), static_cast<std::uint64_t>(den));
    }
    return sum_fractions(terms);
}

mpq_class sum_recip_B_interval(const SieveCache& s, Rational x, std::uint64_t q) {
    if (q < 1) throw InvalidArgument("slice needs q >= 1");
    if (Rational(static_cast<std::int64_t>(q)) >= x) return mpq_class(0);
    const BSet b = enumerate_B(s, x);
    const auto a = static_cast<u128>(x.num());
    const auto d = static_cast<u128>(x.den());
    std::vector<std::uint64_t> slice;
    for (auto n : b.members)
        if (d * n * (q + 1) > a && d * n * q <= a) slice.push_back(n);
    return sum_reciprocals(slice);
}

mpq_class sum_recip_B_prime(const SieveCache& s, Rational x) {
    const auto members = build_B_prime(s, x);
    return sum_reciprocals(members);
}

RResult r_exact(Rational x, std::uint64_t exact_limit) {
    const std::uint64_t X = floor_of(x);
    if (exact_limit > 63) throw InvalidArgument("exact limit above 63 is not supported");
    if (X > exact_limit)
        throw ResourceError("R(x) exact search refused for x = " + x.str() + " above the exact limit " +
                            std::to_string(exact_limit));
    RResult r;
    r.value = 0;
    if (X < 2) return r;
    const std::size_t n = X - 1; // vertices 2..X
    const u128 L = lcm_upto(X);
    std::vector<std::uint64_t> adj(n, 0);
    std::vector<u128> w(n);
    for (std::uint64_t a = 2; a <= X; ++a) {
        w[a - 2] = L / a;
        for (std::uint64_t b = a + 1; b <= X; ++b)
            if (std::lcm(a, b) <= X) { // lcm ≤ x: incompatible
                adj[a - 2] |= std::uint64_t{1} << (b - 2);
                adj[b - 2] |= std::uint64_t{1} << (a - 2);
            }
    }
    Mwis solver(adj, w);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const u128 best = solver.solve(all);
    std::uint64_t chosen = 0;
    solver.witness(all, chosen);
    for (std::uint64_t m = chosen; m; m &= m - 1) r.witness.push_back(static_cast<std::uint64_t>(std::countr_zero(m)) + 2);
    r.value = from_units(best, L);
    if (!lcm_property(r.witness, X)) throw NumericalConsistencyError("R(x) witness violates the lcm property");
    if (sum_reciprocals(r.witness) != r.value) throw NumericalConsistencyError("R(x) witness weight mismatch");
    return r;
}

RResult r_heuristic(const SieveCache& s, Rational x) {
    const std::uint64_t X = floor_of(x);
    RResult best;
    best.exact = false;
    best.value = 0;
    if (X < 2) return best;
    // Greedy by weight: smallest n first, kept if compatible with all chosen.
    std::vector<std::uint64_t> greedy;
    for (std::uint64_t a = 2; a <= X; ++a) {
        const bool ok = std::all_of(greedy.begin(), greedy.end(), [&](std::uint64_t b) {
            return static_cast<u128>(a / std::gcd(a, b)) * b > X;
        });
        if (ok) greedy.push_back(a);
    }
    best.value = sum_reciprocals(greedy);
    best.witness = greedy;
    auto consider = [&](std::vector<std::uint64_t> set) {
        const mpq_class v = sum_reciprocals(set);
        if (v > best.value) {
            best.value = v;
            best.witness = std::move(set);
        }
    };
    consider(enumerate_B(s, x).members);
    consider(build_B_prime(s, x));
    return best;
}

namespace {

struct HSearch {
    std::uint64_t X;
    u128 L;
    u128 cap; // budget in units of 1/L
    std::vector<std::uint64_t> mult; // multiples of s within [1, X]
    std::uint64_t best_count;
    std::vector<std::uint64_t> best_set, chosen;

    std::uint64_t removal_bound(std::uint64_t U, std::uint64_t start, u128 room) const {
        struct Item {
            std::uint64_t value, s;
        };
        std::vector<Item> items;
        for (std::uint64_t s = start; s <= X; ++s) {
            if (!(U >> s & 1)) continue;
            const auto v = static_cast<std::uint64_t>(std::popcount(U & mult[s]));
            if (v) items.push_back({v, s});
        }
        // value per unit weight is v * s / L
        std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
            return a.value * a.s > b.value * b.s || (a.value * a.s == b.value * b.s && a.s < b.s);
        });
        std::uint64_t total = 0;
        for (const auto& it : items) {
            const u128 wgt = L / it.s;
            if (wgt <= room) {
                total += it.value;
                room -= wgt;
            } else {
                total += static_cast<std::uint64_t>((static_cast<u128>(it.value) * room + wgt - 1) / wgt);
                break;
            }
        }
        return total;
    }

    void go(std::uint64_t start, std::uint64_t U, u128 used) {
        const auto count = static_cast<std::uint64_t>(std::popcount(U));
        if (count < best_count) {
            best_count = count;
            best_set = chosen;
        }
        if (start > X) return;
        if (count - std::min(count, removal_bound(U, start, cap - used)) >= best_count) return;
        for (std::uint64_t s = start; s <= X; ++s) {
            if (!(U >> s & 1)) continue; // a multiple of a chosen remover
            const u128 wgt = L / s;
            if (used + wgt > cap) continue;
            chosen.push_back(s);
            go(s + 1, U & ~mult[s], used + wgt);
            chosen.pop_back();
        }
    }
};

} // namespace

HResult h_exact(Rational x, Rational budget, std::uint64_t exact_limit) {
    const std::uint64_t X = floor_of(x);
    if (exact_limit > 62) throw InvalidArgument("exact limit above 62 is not supported");
    if (X > exact_limit)
        throw ResourceError("H(x) exact search refused for x = " + x.str() + " above the exact limit " +
                            std::to_string(exact_limit));
    if (budget < Rational(0)) throw InvalidArgument("negative budget");
    HResult r;
    if (X < 1) return r;
    HSearch h;
    h.X = X;
    h.L = lcm_upto(std::max<std::uint64_t>(X, 2));
    h.cap = h.L * static_cast<u128>(budget.num()) / static_cast<u128>(budget.den());
    h.mult.assign(X + 1, 0);
    for (std::uint64_t s = 2; s <= X; ++s)
        for (std::uint64_t m = s; m <= X; m += s) h.mult[s] |= std::uint64_t{1} << m;
    std::uint64_t U = 0;
    for (std::uint64_t n = 1; n <= X; ++n) U |= std::uint64_t{1} << n;
    h.best_count = X + 1;
    h.go(2, U, 0);
    r.count = h.best_count;
    r.witness = h.best_set;
    if (sum_reciprocals(r.witness) > to_mpq(budget)) throw NumericalConsistencyError("H(x) witness exceeds the budget");
    return r;
}

std::vector<std::uint64_t> b_tau_set(const SieveCache& s, std::uint64_t k, std::uint64_t X) {
    if (k < 1 || k > X) throw InvalidArgument("b_tau_set needs 1 <= k <= X");
    std::vector<std::uint64_t> out;
    if (k >= 2) out = enumerate_B(s, Rational(static_cast<std::int64_t>(k))).members;
    for (auto p : s.primes()) {
        if (p > X) break;
        if (p > k) out.push_back(p);
    }
    return out;
}

std::vector<std::uint64_t> unsieved(const std::vector<std::uint64_t>& set, std::uint64_t X) {
    std::vector<char> hit(X + 1, 0);
    for (auto d : set)
        for (std::uint64_t m = d; m <= X; m += d) hit[m] = 1;
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= X; ++n)
        if (!hit[n]) out.push_back(n);
    return out;
}

HStarResult h_star(const SieveCache& s, Rational x, Rational budget) {
    const std::uint64_t X = floor_of(x);
    if (X < 2) throw InvalidArgument("H* needs x >= 2");
    if (X > s.limit()) throw OutOfRange("H* needs x within the sieve limit");
    if (!(budget > Rational(0))) throw InvalidArgument("H* needs a positive budget");

    // F and M(n) = max_{q | n} F(n/q) for n <= X.
    std::vector<std::uint64_t> F(X + 1, 1), P(X + 1, 1);
    for (std::uint64_t n = 2; n <= X; ++n) {
        const std::uint64_t p = s.spf(n);
        P[n] = std::max<std::uint64_t>(p, P[n / p]);
        const std::uint64_t q = P[n];
        F[n] = q * std::max(F[n / q], q);
    }
    // Reciprocal mass of B_tau(x) for tau x = k via a difference array:
    // a prime p belongs for 1 <= k < p^2, a composite n for max(n, M(n)) <= k < F(n).
    std::vector<Enclosure> delta(X + 2, Enclosure::exact(0.0));
    for (std::uint64_t n = 2; n <= X; ++n) {
        std::uint64_t lo, hi;
        if (s.is_prime(n)) {
            lo = 1;
            hi = n * n - 1;
        } else {
            std::uint64_t M = 0;
            for (std::uint64_t m = n; m > 1;) {
                const std::uint64_t p = s.spf(m);
                while (m % p == 0) m /= p;
                M = std::max(M, F[n / p]);
            }
            lo = std::max(n, M);
            hi = F[n] - 1;
        }
        if (lo > hi || lo > X) continue;
        const Enclosure w = Enclosure::exact(1.0) / Enclosure::of_integer(static_cast<std::int64_t>(n));
        delta[lo] += w;
        if (hi + 1 <= X) delta[hi + 1] -= w;
    }
    const Enclosure b = Enclosure::ratio(budget.num(), budget.den());
    const mpq_class bq = to_mpq(budget);
    HStarResult r;
    Enclosure S = Enclosure::exact(0.0);
    for (std::uint64_t k = 1; k <= X; ++k) {
        S += delta[k];
        bool feasible;
        if (S.hi() <= b.lo()) feasible = true;
        else if (S.lo() > b.hi()) feasible = false;
        else feasible = sum_reciprocals(b_tau_set(s, k, X)) <= bq;
        if (!feasible) continue;
        r.feasible = true;
        r.tau = Rational(static_cast<std::int64_t>(k)) / x;
        r.count = count_A(s, Rational(static_cast<std::int64_t>(k)), Rational(1), PrimeCutoff::real(Rational(1)));
        r.recip_sum = sum_reciprocals(b_tau_set(s, k, X));
        if (r.recip_sum > bq) throw NumericalConsistencyError("H* candidate exceeds the budget");
        return r;
    }
    return r;
}

std::uint64_t f_exact(std::uint64_t n, std::uint64_t limit) {
    if (limit > 24) throw InvalidArgument("path limit above 24 is not supported");
    if (n > limit) throw ResourceError("f(n) exact search refused for n = " + std::to_string(n) + " above " + std::to_string(limit));
    if (n == 0) return 0;
    std::vector<std::uint32_t> adj(n, 0);
    for (std::uint64_t a = 1; a <= n; ++a)
        for (std::uint64_t b = 2 * a; b <= n; b += a) {
            adj[a - 1] |= 1u << (b - 1);
            adj[b - 1] |= 1u << (a - 1);
        }
    // ends[mask] = vertices v such that some path covers exactly mask and ends at v.
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (std::uint64_t v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
    std::uint64_t best = 1;
    for (std::size_t mask = 1; mask < ends.size(); ++mask) {
        const std::uint32_t e = ends[mask];
        if (!e) continue;
        best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(std::popcount(mask)));
        for (std::uint32_t v = e; v; v &= v - 1) {
            const std::uint32_t next = adj[std::countr_zero(v)] & ~static_cast<std::uint32_t>(mask);
            for (std::uint32_t u = next; u; u &= u - 1) {
                const std::uint32_t ub = u & (~u + 1);
                ends[mask | ub] |= ub;
            }
        }
    }
    return best;
}

std::uint64_t f_lower(const SieveCache& s, std::uint64_t n) {
    if (n == 0) return 0;
    return count_A(s, Rational(static_cast<std::int64_t>(n), 2), Rational(1), PrimeCutoff::real(Rational(1)));
}

} // namespace ssz
