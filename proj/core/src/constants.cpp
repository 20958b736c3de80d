#include "ssz/constants.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "ssz/error.hpp"
#include "ssz/parallel.hpp"
#include "ssz/ssf.hpp"

namespace ssz {

namespace {

const Enclosure kZero = Enclosure::exact(0.0);
const Enclosure kOne = Enclosure::exact(1.0);
const Enclosure kUnit = Enclosure::from_bounds(0.0, 1.0);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Enclosure of_u64(std::uint64_t n) { return Enclosure::of_integer(static_cast<std::int64_t>(n)); }

Enclosure of_rational(Rational r) { return Enclosure::ratio(r.num(), r.den()); }

// floor(y n) for y = a/b.
std::uint64_t floor_mul(Rational y, std::uint64_t n) {
    const u128 v = static_cast<u128>(n) * static_cast<std::uint64_t>(y.num()) / static_cast<std::uint64_t>(y.den());
    if (v > UINT64_MAX) throw OutOfRange("y n overflows");
    return static_cast<std::uint64_t>(v);
}

// eta(t) in [lo, hi] for every t >= x.
Enclosure eta_range(const EtaTailBounds& b) { return Enclosure::from_bounds(b.minus.lo(), b.plus.hi()); }

void merge_anchors(std::vector<EtaAnchor>& into, const std::vector<EtaAnchor>& from) {
    for (const auto& a : from) {
        const bool seen = std::any_of(into.begin(), into.end(), [&](const EtaAnchor& b) { return b.from == a.from; });
        if (!seen) into.push_back(a);
    }
}

unsigned jobs_of(const TruncationParams& p) { return p.jobs == 0 ? default_jobs() : p.jobs; }

void require_nonnegative(Enclosure e, const std::string& what) {
    if (e.hi() < 0) throw NumericalConsistencyError(what + " is negative: " + format_upper(e.hi()));
}

// Events of A(t, y, z) in units s = y t, scaled by den(y): every member
// contributes max(num(y) n, den(y) F(n)).
struct AEvents {
    std::vector<std::uint64_t> thresholds; // ascending
    std::uint64_t start = 0;               // num(y): t = 1
    std::uint64_t end = 0;                 // num(y) N: t = N
    std::uint64_t den = 1;
};

AEvents a_events(const SieveCache& s, Rational y, const PrimeCutoff& z, std::uint64_t N) {
    AEvents ev;
    ev.den = static_cast<std::uint64_t>(y.den());
    const auto yn = static_cast<std::uint64_t>(y.num());
    ev.start = yn;
    const u128 end = static_cast<u128>(yn) * N;
    if (end >= (u128{1} << 53)) throw OutOfRange("y N too large for exact event arithmetic");
    ev.end = static_cast<std::uint64_t>(end);
    const std::uint64_t F_cap = floor_mul(y, N);
    if (F_cap > s.limit()) throw OutOfRange("y N = " + std::to_string(F_cap) + " beyond sieve limit");
    const auto members = enumerate_A(s, N, F_cap, z);
    ev.thresholds.reserve(members.size());
    for (const auto& m : members) ev.thresholds.push_back(std::max(yn * m.n, ev.den * m.F));
    std::sort(ev.thresholds.begin(), ev.thresholds.end());
    return ev;
}

struct AIntegrals {
    Enclosure J;   // int_1^N A(t) g(yt) dt/t^2
    Enclosure P;   // int_1^N A(t) Pi(yt) dt/t^2
    std::size_t pieces = 0;
    std::size_t members = 0;
};

AIntegrals a_integrals(const SieveCache& s, Rational y, const PrimeCutoff& z, std::uint64_t N) {
    AIntegrals out{kZero, kZero};
    if (N <= 1) return out;
    const AEvents ev = a_events(s, y, z, N);
    out.members = ev.thresholds.size();
    const auto primes = s.primes();
    const Enclosure gamma = euler_gamma();
    const Enclosure log_den = log_of(ev.den);
    const Enclosure den = of_u64(ev.den);

    std::uint64_t cur = ev.start;
    std::size_t ti = 0;
    std::size_t k = s.prime_count_upto(cur / ev.den);
    Enclosure J = kZero, P = kZero;
    while (cur < ev.end) {
        while (ti < ev.thresholds.size() && ev.thresholds[ti] <= cur) ++ti;
        std::uint64_t next = ev.end;
        if (ti < ev.thresholds.size()) next = std::min(next, ev.thresholds[ti]);
        if (k < primes.size()) next = std::min(next, static_cast<std::uint64_t>(primes[k]) * ev.den);
        if (ti == 0) { // A = 0 before the first member
            cur = next;
            while (k < primes.size() && static_cast<std::uint64_t>(primes[k]) * ev.den <= cur) ++k;
            continue;
        }
        const UnitConstants c{s.pi_prefix(k), s.sigma_prefix(k) + gamma};
        const Enclosure inv_a = den / of_u64(cur);
        const Enclosure inv_b = den / of_u64(next);
        const Enclosure log_a = log_of(cur) - log_den;
        const Enclosure l = log1p(of_u64(next - cur) / of_u64(cur));
        const Enclosure count = of_u64(ti);
        J += count * piece_g_over_t2(c, log_a, l, inv_a, inv_b);
        P += count * piece_pi_over_t2(c, inv_a, inv_b);
        ++out.pieces;
        cur = next;
        while (k < primes.size() && static_cast<std::uint64_t>(primes[k]) * ev.den <= cur) ++k;
    }
    // Back from s = y t to t.
    const Enclosure yy = of_rational(y);
    out.J = yy * J;
    out.P = yy * P;
    return out;
}

bool has_prime_in(const PrimeCutoff& z, Rational y) {
    return y >= Rational(1) && z.effective_min_prime() <= static_cast<std::uint64_t>(y.floor());
}

} // namespace

Enclosure ConstantReport::sub(const std::string& key) const {
    for (const auto& [k, v] : sub_terms)
        if (k == key) return v;
    throw InvalidArgument("report " + name + " has no sub-term " + key);
}

ConstantReport compute_c(const SieveCache& s, Rational y, const PrimeCutoff& z, const TruncationParams& p) {
    const auto t0 = Clock::now();
    ConstantReport r;
    r.name = "c_{" + y.str() + "," + z.str() + "}";
    r.params = p;
    if (!has_prime_in(z, y)) {
        r.value = kZero;
        r.sub_terms = {{"S1", kZero}, {"eps", kZero}, {"S2", kZero}};
        r.seconds = seconds_since(t0);
        return r;
    }
    const std::uint64_t N = p.N_main;
    if (N < 1) throw InvalidArgument("c needs N >= 1");
    const Enclosure sigma_z = mertens_logsum(s, z);
    const Enclosure pi_z = mertens_product(s, z);
    MemberStream stream(s, y, z, N);
    Member m{};
    Enclosure S1 = kZero, weight = kZero;
    std::size_t count = 0;
    while (stream.next(m)) {
        const std::uint64_t yn = floor_mul(y, m.n);
        const std::size_t k = s.prime_count_upto(yn);
        const Enclosure pi = s.pi_prefix(k);
        const Enclosure inv_n = kOne / of_u64(m.n);
        S1 += (s.sigma_prefix(k) - sigma_z - log_of(m.n)) * pi * inv_n;
        weight += pi * inv_n;
        ++count;
    }
    const Enclosure eps = pi_z - weight;
    require_nonnegative(eps, "c tail weight eps(N)");
    const Enclosure epsp = Enclosure::from_bounds(std::max(0.0, eps.lo()), eps.hi());
    const Rational yN = y * Rational(static_cast<std::int64_t>(N));
    const auto tail = eta_tail_bounds(s, yN, p.eta);
    const Enclosure S2 = (log_of(y) - euler_gamma() - sigma_z + eta_range(tail)) * epsp;
    r.value = density_constant_c() * (S1 + S2);
    r.sub_terms = {{"S1", S1}, {"eps", epsp}, {"S2", S2}, {"members", of_u64(count)}};
    r.anchors_used = tail.anchors_used;
    r.seconds = seconds_since(t0);
    return r;
}

Enclosure acor1_residual(const SieveCache& s, Rational y, const PrimeCutoff& z, std::uint64_t N) {
    const Enclosure pi_z = mertens_product(s, z);
    if (N <= 1) return pi_z;
    const auto I = a_integrals(s, y, z, N);
    const Enclosure eps = pi_z - I.P;
    require_nonnegative(eps, "Acor1 residual");
    return eps;
}

ConstantReport compute_a(const SieveCache& s, Rational y, const PrimeCutoff& z, const TruncationParams& p) {
    const auto t0 = Clock::now();
    const Rational zv = z.value();
    if (zv < Rational(1)) throw InvalidArgument("a needs z >= 1");
    if (y < zv) {
        // a_{y,z} = (y/z) a_{z,z}
        ConstantReport base = compute_a(s, zv, z, p);
        ConstantReport r = base;
        r.name = "a_{" + y.str() + "," + z.str() + "}";
        r.value = of_rational(y / zv) * base.value;
        r.sub_terms.insert(r.sub_terms.begin(), {"a_{z,z}", base.value});
        r.seconds = seconds_since(t0);
        return r;
    }
    return compute_a_direct(s, y, z, p);
}

ConstantReport compute_a_direct(const SieveCache& s, Rational y, const PrimeCutoff& z, const TruncationParams& p) {
    const auto t0 = Clock::now();
    if (z.value() < Rational(1)) throw InvalidArgument("a needs z >= 1");
    if (y < z.value()) throw InvalidArgument("the a_{y,z} series needs y >= z; use compute_a");
    ConstantReport r;
    r.name = "a_{" + y.str() + "," + z.str() + "}";
    r.params = p;
    const std::uint64_t N = p.N_main;
    if (N < 2) throw InvalidArgument("a needs N >= 2");
    const Enclosure C = density_constant_c();
    const Enclosure pi_z = mertens_product(s, z);
    const Enclosure sigma_z = mertens_logsum(s, z);
    const Enclosure head = pi_z * (kOne - euler_gamma() + log_of(y) - sigma_z);
    const auto I = a_integrals(s, y, z, N);
    const Enclosure eps = pi_z - I.P;
    require_nonnegative(eps, "a tail weight eps(N)");
    const Enclosure epsp = Enclosure::from_bounds(std::max(0.0, eps.lo()), eps.hi());
    const auto tail = eta_tail_bounds(s, y * Rational(static_cast<std::int64_t>(N)), p.eta);
    const Enclosure Q = eta_range(tail) * epsp;
    r.value = C * (head + I.J + Q);
    r.sub_terms = {{"head", C * head}, {"J", I.J}, {"eps", epsp}, {"Q", Q},
                   {"members", of_u64(I.members)}, {"pieces", of_u64(I.pieces)}};
    r.anchors_used = tail.anchors_used;
    r.seconds = seconds_since(t0);
    return r;
}

Enclosure beta_Qp_exact(const SieveCache& s, std::uint64_t p) {
    if (!s.is_prime(p)) throw InvalidArgument("Q_p needs a prime");
    const std::size_t k = s.prime_count_upto(p - 1);
    const Enclosure lp = log_of(p);
    const Enclosure lead = kOne - euler_gamma() + lp - s.sigma_prefix(k);
    return lead * (lp - s.harmonic_prefix(p)) + Enclosure::exact(0.5) * sqr(lp) - s.loglike_prefix(p);
}

Enclosure beta_Qp_asymptotic(const SieveCache& s, std::uint64_t p) {
    const Enclosure ep = Enclosure::from_bounds(0.0, 1.0) / Enclosure::of_integer(2 * static_cast<std::int64_t>(p));
    const Enclosure xi = kUnit * (log_of(p) / of_u64(p));
    return (kOne - eta_left(s, p)) * (kOne - euler_gamma() - ep) - stieltjes_gamma1() - xi;
}

ConstantReport compute_beta(const SieveCache& s, const GTable& g, const TruncationParams& p) {
    const auto t0 = Clock::now();
    ConstantReport r;
    r.name = "beta";
    r.params = p;
    const std::uint64_t NQ = p.N_main;
    const std::uint64_t NR = p.N_secondary == 0 ? (std::uint64_t{1} << 16) : p.N_secondary;
    r.params.N_secondary = NR;
    if (NQ < 2 || NR < 2) throw InvalidArgument("beta needs N_Q, N_R >= 2");
    if (NQ > s.harmonic_limit()) throw OutOfRange("N_Q beyond the harmonic prefix table");
    if (NR > g.limit()) throw OutOfRange("N_R beyond the G table");
    const Enclosure C = density_constant_c();
    const auto primes = s.primes();

    // Q part.
    const auto tailQ = eta_tail_bounds(s, Rational(static_cast<std::int64_t>(NQ)), p.eta);
    Enclosure Qhead = kZero;
    const std::size_t nq = s.prime_count_upto(NQ);
    std::vector<Enclosure> Qp(nq);
    for (std::size_t i = 0; i < nq; ++i) {
        const std::uint64_t q = primes[i];
        Qp[i] = beta_Qp_exact(s, q);
        Qhead += Qp[i] * s.pi_prefix(i) / of_u64(q);
    }
    const Enclosure eps_star = kUnit / of_u64(2 * NQ);
    const Enclosure xi_star = kUnit * (log_of(NQ) / of_u64(NQ));
    const Enclosure Qtail = mertens_product_at(s, NQ) *
                            ((kOne - eta_range(tailQ)) * (kOne - euler_gamma() - eps_star) - stieltjes_gamma1() - xi_star);
    const Enclosure Q = C * (Qhead + Qtail);

    // R part, one block per prime p <= N_R.
    const auto tailR = eta_tail_bounds(s, Rational(static_cast<std::int64_t>(NR)), p.eta);
    const Enclosure deltaR = eta_range(tailR);
    const std::size_t nr = s.prime_count_upto(NR);
    struct Block {
        Enclosure Rt = kZero;  // R~_p / p
        Enclosure eps = kZero; // eps(N, p)
    };
    auto block = [&](std::size_t i) {
        const std::uint64_t q = primes[i];
        Block b;
        Enclosure P2sum = kZero;
        walk_chains(
            s, q, NR / q, [&](std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t Fq) { return Fq < NR; },
            [&](std::uint64_t n, std::uint64_t F, std::uint64_t) {
                const std::uint64_t M = n * q; // n p
                const u128 top = static_cast<u128>(M) * q;
                const std::uint64_t hi = top >= NR ? NR : static_cast<std::uint64_t>(top);
                const std::uint64_t lo = std::max(F, M);
                if (lo >= hi) return;
                P2sum += g.p2_at(hi) - g.p2_at(lo);
                const Enclosure invM = kOne / of_u64(M);
                for (std::uint64_t k = lo / M; k * M < hi; ++k) {
                    const std::uint64_t a = std::max(lo, k * M);
                    const std::uint64_t e = std::min(hi, (k + 1) * M);
                    if (a >= e) continue;
                    b.Rt += (g.g1_at(e) - g.g1_at(a)) * invM - of_u64(k) * (g.g2_at(e) - g.g2_at(a));
                }
            });
        const Enclosure pp = of_u64(q);
        b.eps = (kOne - kOne / pp) * s.pi_prefix(i) - pp * P2sum;
        require_nonnegative(b.eps, "eps(N, p)");
        b.eps = Enclosure::from_bounds(std::max(0.0, b.eps.lo()), b.eps.hi());
        return b;
    };
    const auto blocks = parallel_map<Block>(nr, block, jobs_of(p));

    Enclosure Rmain = kZero, Reps = kZero;
    for (std::size_t i = 0; i < nr; ++i) {
        const std::uint64_t q = primes[i];
        Rmain += blocks[i].Rt;
        Reps += blocks[i].eps / of_u64(q);
        // beta_p = C Pi(p-1) Q_p / p + C (R~_p + delta eps(N,p)) / p
        if (i < nq) {
            const Enclosure bp = C * (s.pi_prefix(i) * Qp[i] / of_u64(q) + blocks[i].Rt +
                                      deltaR * kUnit * blocks[i].eps / of_u64(q));
            r.ledger.emplace_back(q, bp);
        }
    }
    const Enclosure Rtail_eps = C * (deltaR * kUnit) * Reps;
    const Enclosure Rtail_large = C * deltaR * (kUnit * mertens_product_at(s, NR));
    const Enclosure R = C * Rmain + Rtail_eps + Rtail_large;

    r.value = Q + R;
    r.sub_terms = {{"Q", Q},           {"Q_head", C * Qhead}, {"Q_tail", C * Qtail},       {"R", R},
                   {"R_main", C * Rmain}, {"R_tail_eps", Rtail_eps}, {"R_tail_large_p", Rtail_large}};
    r.anchors_used = tailQ.anchors_used;
    merge_anchors(r.anchors_used, tailR.anchors_used);
    r.seconds = seconds_since(t0);
    return r;
}

ConstantReport compute_mu(const SieveCache& s, const GTable& g, std::uint64_t q, const TruncationParams& p) {
    const auto t0 = Clock::now();
    if (q < 1) throw InvalidArgument("mu_q needs q >= 1");
    ConstantReport r;
    r.name = "mu_" + std::to_string(q);
    r.params = p;
    const std::uint64_t NS = p.N_main;
    const std::uint64_t NR = p.N_secondary == 0 ? (std::uint64_t{1} << 21) : p.N_secondary;
    r.params.N_secondary = NR;
    if (NS <= q || NR <= q) throw InvalidArgument("mu_q needs N > q");
    if (NS > s.limit()) throw OutOfRange("N_S beyond the sieve limit");
    if (NR > g.limit()) throw OutOfRange("N_R beyond the G table");
    const Enclosure C = density_constant_c();
    const auto primes = s.primes();
    const Enclosure lq = log_of(q), lq1 = log_of(q + 1);
    const Enclosure log_ratio = lq1 - lq;

    const Enclosure lead = Enclosure::exact(0.5) * C * (sqr(lq1) - sqr(lq)) * mertens_product_at(s, q);

    // S_q
    const auto tailS = eta_tail_bounds(s, Rational(static_cast<std::int64_t>(NS)), p.eta);
    Enclosure Ssum = kZero;
    const std::size_t k0 = s.prime_count_upto(q);
    const std::size_t kS = s.prime_count_upto(NS);
    for (std::size_t i = k0; i < kS; ++i) {
        const std::uint64_t pr = primes[i];
        Ssum -= s.pi_prefix(i) / of_u64(pr) * eta_left(s, pr);
    }
    const Enclosure piNS = mertens_product_at(s, NS);
    const Enclosure E = -(piNS * eta_range(tailS));
    const Enclosure Sq = Ssum + E;
    const Enclosure S_block = C * log_ratio * Sq;

    // R*_{q,p} and eps_{q,p}(N) for q < p <= N/q.
    const auto tailR = eta_tail_bounds(s, Rational(static_cast<std::int64_t>(NR)), p.eta);
    const Enclosure etaR = eta_range(tailR);
    const std::uint64_t pmax = NR / q;
    const std::size_t kR = s.prime_count_upto(pmax);
    struct Block {
        Enclosure R = kZero;   // R*_{q,p}
        Enclosure eps = kZero; // eps_{q,p}(N)
    };
    auto block = [&](std::size_t idx) {
        const std::size_t i = k0 + idx;
        const std::uint64_t pr = primes[i];
        const std::uint64_t lo_mul = q * pr, hi_mul = (q + 1) * pr;
        Block b;
        Enclosure P2sum = kZero;
        walk_chains(
            s, pr, NR / lo_mul, [&](std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t Fq) { return Fq < NR; },
            [&](std::uint64_t m, std::uint64_t F, std::uint64_t) {
                const std::uint64_t a = std::max(m * lo_mul, F);
                const u128 top = static_cast<u128>(m) * hi_mul;
                const std::uint64_t e = top >= NR ? NR : static_cast<std::uint64_t>(top);
                if (a >= e) return;
                b.R += (g.g1_at(e) - g.g1_at(a)) / of_u64(m);
                P2sum += g.p2_at(e) - g.p2_at(a);
            });
        const Enclosure pi = s.pi_prefix(i);
        b.eps = pi / of_u64(pr * q) - pi / of_u64(pr * (q + 1)) - P2sum;
        require_nonnegative(b.eps, "eps_{q,p}(N)");
        b.eps = Enclosure::from_bounds(std::max(0.0, b.eps.lo()), b.eps.hi());
        return b;
    };
    const std::size_t nblocks = kR > k0 ? kR - k0 : 0;
    const auto blocks = parallel_map<Block>(nblocks, block, jobs_of(p));
    Enclosure Rsum = kZero, epssum = kZero;
    for (std::size_t idx = 0; idx < nblocks; ++idx) {
        Rsum += blocks[idx].R / of_u64(primes[k0 + idx]);
        epssum += blocks[idx].eps;
    }
    const Enclosure R_block = C * Rsum;
    const Enclosure qq = Enclosure::from_bounds(static_cast<double>(q), static_cast<double>(q + 1));
    const Enclosure E_tail = C * (qq * etaR) * epssum;
    const Enclosure E_large = C * mertens_product_at(s, pmax) * etaR / of_u64(q);

    r.value = log_ratio + lead + S_block + R_block + E_tail + E_large;
    r.sub_terms = {{"log(1+1/q)", log_ratio}, {"lead", lead},     {"S_q", Sq},          {"S_block", S_block},
                   {"R_main", R_block},       {"E_tail", E_tail}, {"E_large_p", E_large}};
    r.anchors_used = tailS.anchors_used;
    merge_anchors(r.anchors_used, tailR.anchors_used);
    r.seconds = seconds_since(t0);
    return r;
}

DerivedConstants derived_constants(const ConstantReport& a, const ConstantReport& beta, const ConstantReport& mu5,
                                   const ConstantReport& mu11) {
    DerivedConstants d;
    auto provenance = [](ConstantReport& r, std::initializer_list<const ConstantReport*> parts) {
        for (const auto* q : parts) {
            r.sub_terms.emplace_back(q->name, q->value);
            merge_anchors(r.anchors_used, q->anchors_used);
            r.seconds += q->seconds;
        }
    };
    d.delta.name = "delta";
    d.delta.value = a.value + euler_gamma() - kOne - beta.value;
    d.delta.params = beta.params;
    provenance(d.delta, {&a, &beta});

    d.kappa.name = "kappa";
    d.kappa.value = d.delta.value - mu5.value / Enclosure::of_integer(30) -
                    Enclosure::of_integer(79) * mu11.value / Enclosure::of_integer(4620);
    d.kappa.params = beta.params;
    d.kappa.sub_terms.emplace_back("delta", d.delta.value);
    provenance(d.kappa, {&mu5, &mu11});

    d.a_exp_minus_delta.name = "a*exp(-delta)";
    d.a_exp_minus_delta.value = a.value * exp(-d.delta.value);
    d.a_exp_minus_delta.params = a.params;
    d.a_exp_minus_delta.sub_terms.emplace_back("delta", d.delta.value);
    provenance(d.a_exp_minus_delta, {&a});
    return d;
}

std::string certified_prefix(Enclosure e, int max_decimals) {
    if (e.lo() == 0 && e.hi() == 0) return "0";
    // Truncate toward zero at increasing precision until lo and hi disagree.
    auto trunc_str = [](double v, int d) {
        const double scale = std::pow(10.0, d);
        const double t = std::trunc(v * scale);
        std::ostringstream os;
        os << std::fixed << std::setprecision(d) << t / scale;
        return os.str();
    };
    if ((e.lo() < 0) != (e.hi() < 0)) return "...";
    int best = -1;
    for (int d = 0; d <= max_decimals; ++d) {
        if (trunc_str(e.lo(), d) == trunc_str(e.hi(), d)) best = d;
        else break;
    }
    if (best < 0) return "...";
    return trunc_str(e.lo(), best) + (best == 0 ? "." : "") + "...";
}

namespace {

const std::vector<std::int64_t> kColumns{1, 2, 3, 5};

} // namespace

std::vector<TableCell> table_c(const SieveCache& s, const TruncationParams& p) {
    std::vector<TableCell> cells;
    for (std::int64_t y = 2; y <= 7; ++y)
        for (std::int64_t z : kColumns)
            cells.push_back({Rational(y), Rational(z), compute_c(s, Rational(y), PrimeCutoff::real(Rational(z)), p)});
    return cells;
}

std::vector<TableCell> table_a(const SieveCache& s, const TruncationParams& p) {
    std::vector<TableCell> cells;
    for (std::int64_t y = 1; y <= 6; ++y)
        for (std::int64_t z : kColumns)
            cells.push_back({Rational(y), Rational(z), compute_a(s, Rational(y), PrimeCutoff::real(Rational(z)), p)});
    return cells;
}

std::string render_table(const std::string& title, const std::vector<TableCell>& cells) {
    std::ostringstream os;
    os << title << '\n' << std::left << std::setw(6) << "y\\z";
    std::vector<Rational> cols;
    for (const auto& c : cells)
        if (std::find(cols.begin(), cols.end(), c.z) == cols.end()) cols.push_back(c.z);
    for (const auto& z : cols) os << std::setw(12) << z.str();
    os << '\n';
    Rational row(-1);
    for (const auto& c : cells) {
        if (!(c.y == row)) {
            if (row >= Rational(0)) os << '\n';
            row = c.y;
            os << std::setw(6) << c.y.str();
        }
        os << std::setw(12) << certified_prefix(c.report.value);
    }
    os << '\n';
    return os.str();
}

} // namespace ssz
