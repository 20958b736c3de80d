// Acceptance gate: one PASS/FAIL line per criterion.
//
//   ssz_acceptance [--only N]... [--expect-fail N]... [--report FILE]
//
// Exit status is 0 when every failing criterion was listed with
// --expect-fail, 1 otherwise.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ssz/arith.hpp"
#include "ssz/constants.hpp"
#include "ssz/density.hpp"
#include "ssz/exact_sum.hpp"
#include "ssz/extremal.hpp"
#include "ssz/gtable.hpp"
#include "ssz/sieve.hpp"
#include "ssz/ssf.hpp"

using namespace ssz;

namespace {

// Pinned parameters and tolerances.
constexpr std::uint64_t kSieve = std::uint64_t{1} << 25;
constexpr std::uint64_t kTableN = std::uint64_t{1} << 22;
constexpr std::uint64_t kA11N = std::uint64_t{1} << 24;
constexpr std::uint64_t kBetaNQ = std::uint64_t{1} << 18;
constexpr std::uint64_t kBetaNR = std::uint64_t{1} << 16;
constexpr std::uint64_t kMuNS = std::uint64_t{1} << 22;
constexpr std::uint64_t kMuNR = std::uint64_t{1} << 21;
constexpr double kTableWidth = 2e-3;
constexpr double kTableDigit = 1e-4;
constexpr double kA11Width = 1e-3;
constexpr double kBetaWidth = 0.02;
constexpr double kMuWidth = 0.01;
constexpr double kDensityD20 = 0.02;
constexpr double kDensityOmega10 = 1e-3;
constexpr double kDensityDr = 0.05;
constexpr double kDensityHalving = 4e-3;
constexpr double kPhiGap = 0.02;
constexpr unsigned kJobsA = 4, kJobsB = 1;
constexpr double kLimitC1 = 120, kLimitC2 = 900, kLimitC4 = 600, kLimitC5 = 600;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, auto... a) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

std::string iv(Enclosure e) { return fmt("[%.9f, %.9f]", e.lo(), e.hi()); }

Enclosure open_iv(double lo, double hi) { return Enclosure::from_bounds(lo, hi); }

PrimeCutoff zc(std::int64_t z) { return PrimeCutoff::real(Rational(z)); }

TruncationParams params(std::uint64_t N, std::uint64_t N2, unsigned jobs) {
    TruncationParams p;
    p.N_main = N;
    p.N_secondary = N2;
    p.jobs = jobs;
    return p;
}

const SievePtr& sieve() {
    static const SievePtr s = build_sieve(kSieve, SieveOptions{kBetaNQ});
    return s;
}

const GTablePtr& gtable() {
    static const GTablePtr g = GTable::build(sieve(), kMuNR);
    return g;
}

struct Computed {
    std::vector<TableCell> t1, t2;
    ConstantReport a11, beta, mu5, mu11;
    double t1_s = 0, t2_s = 0, beta_s = 0, mu_s = 0;
};

Computed compute_all(unsigned jobs) {
    const auto& s = *sieve();
    Computed c;
    auto t = Clock::now();
    c.t1 = table_c(s, params(kTableN, 0, jobs));
    c.t1_s = since(t);
    t = Clock::now();
    c.t2 = table_a(s, params(kTableN, 0, jobs));
    c.a11 = compute_a(s, Rational(1), zc(1), params(kA11N, 0, jobs));
    c.t2_s = since(t);
    t = Clock::now();
    c.beta = compute_beta(s, *gtable(), params(kBetaNQ, kBetaNR, jobs));
    c.beta_s = since(t);
    t = Clock::now();
    c.mu5 = compute_mu(s, *gtable(), 5, params(kMuNS, kMuNR, jobs));
    c.mu11 = compute_mu(s, *gtable(), 11, params(kMuNS, kMuNR, jobs));
    c.mu_s = since(t);
    return c;
}

const Computed& primary() {
    static const Computed c = compute_all(kJobsA);
    return c;
}

// Truncated 4-decimal values; "0" entries are exact zeros.
const std::map<std::pair<int, int>, double> kTable1 = {
    {{2, 1}, 1.2248}, {{2, 2}, 0}, {{2, 3}, 0}, {{2, 5}, 0},
    {{3, 1}, 2.0554}, {{3, 2}, 0.4315}, {{3, 3}, 0}, {{3, 5}, 0},
    {{4, 1}, 2.4496}, {{4, 2}, 0.5242}, {{4, 3}, 0}, {{4, 5}, 0},
    {{5, 1}, 2.9541}, {{5, 2}, 0.8402}, {{5, 3}, 0.2351}, {{5, 5}, 0},
    {{6, 1}, 3.2477}, {{6, 2}, 0.9263}, {{6, 3}, 0.2574}, {{6, 5}, 0},
    {{7, 1}, 3.6441}, {{7, 2}, 1.1573}, {{7, 3}, 0.4321}, {{7, 5}, 0.1544},
};

const std::map<std::pair<int, int>, double> kTable2 = {
    {{1, 1}, 1.5379}, {{1, 2}, 0.4178}, {{1, 3}, 0.1583}, {{1, 5}, 0.0831},
    {{2, 1}, 3.0759}, {{2, 2}, 0.8357}, {{2, 3}, 0.3167}, {{2, 5}, 0.1662},
    {{3, 1}, 3.9184}, {{3, 2}, 1.2535}, {{3, 3}, 0.4751}, {{3, 5}, 0.2493},
    {{4, 1}, 4.4804}, {{4, 2}, 1.5153}, {{4, 3}, 0.6335}, {{4, 5}, 0.3325},
    {{5, 1}, 4.9557}, {{5, 2}, 1.7525}, {{5, 3}, 0.7918}, {{5, 5}, 0.4156},
    {{6, 1}, 5.3297}, {{6, 2}, 1.9280}, {{6, 3}, 0.9015}, {{6, 5}, 0.4987},
};

std::pair<int, int> key(const TableCell& c) { return {static_cast<int>(c.y.num()), static_cast<int>(c.z.num())}; }

struct TableCheck {
    int populated = 0, zeros = 0, bad = 0;
    double max_width = 0;
    std::string first_bad;
};

TableCheck check_table(const std::vector<TableCell>& cells, const std::map<std::pair<int, int>, double>& want) {
    TableCheck t;
    for (const auto& c : cells) {
        const auto it = want.find(key(c));
        const Enclosure v = c.report.value;
        bool ok;
        if (it == want.end()) {
            ok = false;
        } else if (it->second == 0) {
            ++t.zeros;
            ok = v.lo() == 0 && v.hi() == 0;
        } else {
            ++t.populated;
            t.max_width = std::max(t.max_width, v.width());
            ok = v.width() <= kTableWidth && v.overlaps(open_iv(it->second, it->second + kTableDigit));
        }
        if (!ok && t.bad++ == 0) t.first_bad = c.report.name + " = " + iv(v);
    }
    return t;
}

// 1. Exact identities up to 10^4.
Outcome criterion1() {
    const auto t0 = Clock::now();
    const auto& s = *sieve();
    const std::int64_t X = 10000;
    std::vector<std::string> bad;

    for (std::uint64_t n = 2; n <= static_cast<std::uint64_t>(X); ++n)
        if (Rational(static_cast<std::int64_t>(schinzel_szekeres(s, n)), static_cast<std::int64_t>(n)) != divisor_ratio_max(n)) {
            bad.push_back(fmt("ratio identity at n=%llu", static_cast<unsigned long long>(n)));
            break;
        }

    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::int64_t> dx(1, X), dy(1, 10), dz(1, 5);
    int triples = 0;
    for (; triples < 40; ++triples) {
        const std::int64_t x = dx(rng);
        std::int64_t y = dy(rng), z = dz(rng);
        if (y < z) std::swap(y, z);
        const auto cz = zc(z);
        const auto members = enumerate_members(s, Rational(y), cz, static_cast<std::uint64_t>(x));
        std::uint64_t sum = 0;
        for (const auto& m : members) {
            const auto n = static_cast<std::int64_t>(m.n);
            sum += phi_count(s, Rational(x, n), zc(y * n));
        }
        if (phi_count(s, Rational(x), cz) != sum) bad.push_back(fmt("Phi decomposition at (%lld,%lld,%lld)", (long long)x, (long long)y, (long long)z));
        std::int64_t rhs = static_cast<std::int64_t>(phi_count(s, Rational(x), cz)) - static_cast<std::int64_t>(phi_count(s, Rational(x), zc(y)));
        for (const auto& m : members) {
            const auto n = static_cast<std::int64_t>(m.n);
            if (n <= z || n * n * y > x) continue;
            rhs -= static_cast<std::int64_t>(phi_count(s, Rational(x, n), zc(y * n))) - 1;
        }
        if (static_cast<std::int64_t>(count_D(s, Rational(x), Rational(y), cz)) - 1 != rhs)
            bad.push_back(fmt("truncated Phi identity at (%lld,%lld,%lld)", (long long)x, (long long)y, (long long)z));
    }

    for (auto [y, z] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {5, 2}, {7, 3}})
        for (std::int64_t x = 1; x <= X; ++x) {
            std::uint64_t rhs = 1;
            for (std::uint64_t p : s.primes()) {
                const auto pi = static_cast<std::int64_t>(p);
                if (pi > y) break;
                if (pi <= z) continue;
                rhs += count_D(s, Rational(x, pi), Rational(y * pi), PrimeCutoff::below_prime(p));
            }
            if (count_D(s, Rational(x), Rational(y), zc(z)) != rhs) {
                bad.push_back(fmt("Buchstab identity at x=%lld (y=%lld,z=%lld)", (long long)x, (long long)y, (long long)z));
                break;
            }
        }

    std::uint64_t slice_checks = 0;
    for (std::int64_t x = 2; x <= X; ++x) {
        const BSet b = enumerate_B(s, Rational(x));
        std::uint64_t total = count_A(s, Rational(x), Rational(1), zc(1));
        for (auto n : b.members) total += static_cast<std::uint64_t>(x) / n;
        if (total != static_cast<std::uint64_t>(x)) {
            bad.push_back(fmt("partition at x=%lld", (long long)x));
            break;
        }
        bool ok = true;
        for (std::uint64_t p : s.primes()) {
            if (p > static_cast<std::uint64_t>(x)) break;
            const auto pi = static_cast<std::int64_t>(p);
            ++slice_checks;
            if (b.slice_size(p) != count_A(s, Rational(x, pi), Rational(pi), zc(pi))) ok = false;
        }
        if (!ok) {
            bad.push_back(fmt("slice sizes at x=%lld", (long long)x));
            break;
        }
    }

    const double secs = since(t0);
    const bool pass = bad.empty() && secs <= kLimitC1;
    std::string d = fmt("ratio identity n<=10^4, %d Phi triples, Buchstab x<=10^4 x3, partition and %llu slice sizes x<=10^4",
                        triples, static_cast<unsigned long long>(slice_checks));
    if (!bad.empty()) d += "; first failure: " + bad.front();
    if (secs > kLimitC1) d += fmt("; over the %.0f s budget", kLimitC1);
    return {pass, d};
}

// 2. Table of c_{y,z}.
Outcome criterion2() {
    const auto& c = primary();
    const auto t = check_table(c.t1, kTable1);
    const bool pass = t.bad == 0 && t.populated == 15 && t.zeros == 9 && c.t1_s <= kLimitC2;
    std::string d = fmt("%d populated cells overlap [t, t+1e-4] with width <= %.0e (max %.2e), %d exact zeros, N=2^22, %.1f s",
                        t.populated, kTableWidth, t.max_width, t.zeros, c.t1_s);
    if (t.bad) d += fmt("; %d bad cells, first %s", t.bad, t.first_bad.c_str());
    return {pass, d};
}

// 3. Table of a_{y,z}, a_{1,1} and the scaling law.
Outcome criterion3() {
    const auto& c = primary();
    const auto& s = *sieve();
    const auto t = check_table(c.t2, kTable2);
    // "1.53796..." carries truncated digits, like the table cells: the
    // constant lies in [1.53796, 1.53797].
    const Enclosure a_digits = open_iv(1.53796, 1.53797);
    const bool a11_ok = c.a11.value.overlaps(a_digits) && c.a11.value.width() <= kA11Width;

    Enclosure a12, a22;
    for (const auto& cell : c.t2) {
        if (key(cell) == std::pair{1, 2}) a12 = cell.report.value;
        if (key(cell) == std::pair{2, 2}) a22 = cell.report.value;
    }
    const bool scale_ok = a12.overlaps(a22 / Enclosure::exact(2.0));
    // The law rests on A(x, y, z) = A(xy/z, z, z) for y < z and xy >= z.
    bool counts_ok = true;
    for (auto [y, z] : {std::pair<std::int64_t, std::int64_t>{1, 2}, {1, 3}, {2, 3}, {1, 5}, {3, 5}})
        for (std::int64_t x = (z + y - 1) / y; x <= 5000 && counts_ok; ++x)
            counts_ok = count_A(s, Rational(x), Rational(y), zc(z)) == count_A(s, Rational(x * y, z), Rational(z), zc(z));

    const bool pass = t.bad == 0 && t.populated == 24 && a11_ok && scale_ok && counts_ok;
    std::string d = fmt("%d cells overlap [t, t+1e-4], max width %.2e; a_{1,1}(N=2^24) = %s width %.2e %s [1.53796, 1.53797] "
                        "(point 1.53796 %s); "
                        "a_{1,2} vs a_{2,2}/2 %s; count identity %s; %.1f s",
                        t.populated, t.max_width, iv(c.a11.value).c_str(), c.a11.value.width(),
                        c.a11.value.overlaps(a_digits) ? "overlaps" : "misses",
                        c.a11.value.contains(1.53796) ? "inside" : "below the enclosure", scale_ok ? "overlap" : "disjoint",
                        counts_ok ? "exact" : "broken", c.t2_s);
    if (t.bad) d += fmt("; %d bad cells, first %s", t.bad, t.first_bad.c_str());
    return {pass, d};
}

// 4. beta.
Outcome criterion4() {
    const auto& c = primary();
    const Enclosure Q = c.beta.sub("Q");
    const bool q_ok = Q.overlaps(open_iv(0.4232907784, 0.4232910253));
    const bool b_ok = c.beta.value.overlaps(open_iv(0.554604, 0.554806));
    const bool w_ok = c.beta.value.width() <= kBetaWidth;
    const bool pass = q_ok && b_ok && w_ok && c.beta_s <= kLimitC4;
    return {pass, fmt("Q = %s %s (0.4232907784, 0.4232910253); beta = %s width %.2e %s (0.554604, 0.554806); %.2f s",
                      iv(Q).c_str(), q_ok ? "overlaps" : "misses", iv(c.beta.value).c_str(), c.beta.value.width(),
                      b_ok ? "overlaps" : "misses", c.beta_s)};
}

// 5. mu_5 and mu_11.
Outcome criterion5() {
    const auto& c = primary();
    const bool m5 = c.mu5.value.overlaps(open_iv(0.401720, 0.401815));
    const bool m11 = c.mu11.value.overlaps(open_iv(0.197932, 0.197989));
    const bool w = c.mu5.value.width() <= kMuWidth && c.mu11.value.width() <= kMuWidth;
    const bool pass = m5 && m11 && w && c.mu_s <= kLimitC5;
    return {pass, fmt("mu_5 = %s %s (0.401720, 0.401815); mu_11 = %s %s (0.197932, 0.197989); widths %.1e, %.1e; %.2f s",
                      iv(c.mu5.value).c_str(), m5 ? "overlaps" : "misses", iv(c.mu11.value).c_str(),
                      m11 ? "overlaps" : "misses", c.mu5.value.width(), c.mu11.value.width(), c.mu_s)};
}

// 6. delta, kappa, a e^{-delta}.
Outcome criterion6() {
    const auto& c = primary();
    const auto d = derived_constants(c.a11, c.beta, c.mu5, c.mu11);
    const bool dl = d.delta.value.overlaps(open_iv(0.560374, 0.560579));
    const bool ka = d.kappa.value.overlaps(open_iv(0.543595, 0.543804));
    const bool ae = d.a_exp_minus_delta.value.overlaps(open_iv(0.877992, 0.878171));
    return {dl && ka && ae, fmt("delta = %s %s; kappa = %s %s; a e^-delta = %s %s", iv(d.delta.value).c_str(),
                                dl ? "overlaps" : "misses", iv(d.kappa.value).c_str(), ka ? "overlaps" : "misses",
                                iv(d.a_exp_minus_delta.value).c_str(), ae ? "overlaps" : "misses")};
}

// 7. Extremal values.
Outcome criterion7() {
    const auto& s = *sieve();
    const auto r5 = r_exact(Rational(5));
    const auto r11 = r_exact(Rational(11));
    const bool r_ok = r5.value == mpq_class(31, 30) && r11.value == mpq_class(4699, 4620) && lcm_property(r5.witness, 5) &&
                      lcm_property(r11.witness, 11) && sum_reciprocals(r5.witness) == r5.value &&
                      sum_reciprocals(r11.witness) == r11.value;
    bool gap_ok = true;
    std::string gaps, stretch;
    for (std::int64_t x = 2; x <= 40; ++x) {
        const auto h = h_exact(Rational(x));
        const auto hs = h_star(s, Rational(x));
        const long long g = hs.feasible ? static_cast<long long>(hs.count) - static_cast<long long>(h.count) : -99;
        if (x <= 30) {
            if (g != 0 && g != 1) gap_ok = false;
            if (g == 1) gaps += (gaps.empty() ? "" : ",") + std::to_string(x);
        } else if (g == 1) {
            stretch += (stretch.empty() ? "" : ",") + std::to_string(x);
        } else if (g != 0) {
            stretch += (stretch.empty() ? "" : ",") + std::to_string(x) + "(gap " + std::to_string(g) + ")";
        }
    }
    return {r_ok && gap_ok, fmt("R(5) = %s %s, R(11) = %s %s; H*-H in {0,1} for 2<=x<=30 %s (gap 1 at x=%s); "
                                "stretch 31..40 gap 1 at x=%s (reported, not asserted)",
                                r5.value.get_str().c_str(), "{2,3,5}", r11.value.get_str().c_str(), "{3,4,5,7,11}",
                                gap_ok ? "holds" : "fails", gaps.c_str(), stretch.c_str())};
}

// 8. Density solvers.
Outcome criterion8() {
    const double eg = exp_minus_gamma().mid();
    const double C = density_constant_c().mid();
    const auto w = solve_omega(1e-3, 40);
    const auto d = solve_d(1e-3, 25, w);
    const auto dr = solve_dr(0.5, 1e-3, 12, w);
    bool unit = true;
    for (std::size_t i = 0; i <= 1000; ++i) unit = unit && d.values[i] == 1.0;
    const double e20 = std::abs(d.at(20) * 21 / C - 1);
    const double e10 = std::abs(w.at(10) - eg);
    const double expect = eg * 0.5 * d.at(10);
    const double er = std::abs(dr.at(10) - expect) / expect;
    const auto w2 = solve_omega(5e-4, 40);
    const auto d2 = solve_d(5e-4, 25, w2);
    const auto dr2 = solve_dr(0.5, 5e-4, 12, w2);
    double halv = 0;
    for (double u = 0; u <= 25; u += 0.125) {
        halv = std::max(halv, std::abs(w2.at(u) - w.at(u)));
        halv = std::max(halv, std::abs(d2.at(u) - d.at(u)));
        if (u <= 12) halv = std::max(halv, std::abs(dr2.at(u) - dr.at(u)));
    }
    const bool pass = unit && e20 <= kDensityD20 && e10 <= kDensityOmega10 && er <= kDensityDr && halv <= kDensityHalving;
    return {pass, fmt("d = 1 on [0,1] %s; |d(20) 21/C - 1| = %.2e; |omega(10) - e^-gamma| = %.2e; d_0.5(10) rel gap %.2e; "
                      "grid halving max change %.2e",
                      unit ? "exactly" : "violated", e20, e10, er, halv)};
}

// 9. Trend checks.
Outcome criterion9() {
    const auto& s = *sieve();
    bool ok = true;
    std::string d;
    for (std::int64_t x : {10000, 100000, 1000000}) {
        const mpq_class b = sum_recip_B(s, Rational(x));
        const double v = (1 - b.get_d()) * std::log(static_cast<double>(x));
        const bool cell = b < 1 && v > 0.2 && v < 1.2;
        ok = ok && cell;
        d += fmt("x=%lld: sum %.6f, (1-sum) log x = %.4f; ", (long long)x, b.get_d(), v);
    }
    const double x7 = 1e7;
    const double fr = frac_sum_over_primes(s, Rational(10000000)).get_d() * std::log(x7) / x7;
    const bool fr_ok = fr > 0.34 && fr < 0.50;
    const auto w = solve_omega(1e-3, 40);
    const auto pc = phi_crosscheck(s, Rational(1000000), Rational(100), w);
    const bool pc_ok = pc.relative_gap <= kPhiGap;
    d += fmt("prime fractional sum ratio at 10^7 = %.4f; Phi(10^6,100) gap %.2e", fr, pc.relative_gap);
    return {ok && fr_ok && pc_ok, d};
}

// 10. Determinism across worker counts.
Outcome criterion10() {
    const auto& a = primary();
    const Computed b = compute_all(kJobsB);
    int compared = 0, differ = 0;
    auto same = [&](const ConstantReport& x, const ConstantReport& y) {
        ++compared;
        bool eq = identical(x.value, y.value) && x.sub_terms.size() == y.sub_terms.size() && x.ledger.size() == y.ledger.size();
        for (std::size_t i = 0; eq && i < x.sub_terms.size(); ++i) eq = identical(x.sub_terms[i].second, y.sub_terms[i].second);
        for (std::size_t i = 0; eq && i < x.ledger.size(); ++i) eq = identical(x.ledger[i].second, y.ledger[i].second);
        if (!eq) ++differ;
    };
    for (std::size_t i = 0; i < a.t1.size(); ++i) same(a.t1[i].report, b.t1[i].report);
    for (std::size_t i = 0; i < a.t2.size(); ++i) same(a.t2[i].report, b.t2[i].report);
    same(a.a11, b.a11);
    same(a.beta, b.beta);
    same(a.mu5, b.mu5);
    same(a.mu11, b.mu11);
    return {differ == 0, fmt("%d reports (value, sub-terms, ledgers) with jobs=%u vs jobs=%u: %d differ", compared, kJobsA, kJobsB, differ)};
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria = {
    {"exact identities", criterion1},   {"c_{y,z} table", criterion2}, {"a_{y,z} table", criterion3},
    {"beta", criterion4},               {"mu_5, mu_11", criterion5},   {"derived constants", criterion6},
    {"extremal values", criterion7},    {"density solvers", criterion8}, {"trend checks", criterion9},
    {"determinism", criterion10},
};

} // namespace

int main(int argc, char** argv) {
    std::set<int> only, expect_fail;
    std::string report;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if ((a == "--only" || a == "--expect-fail" || a == "--report") && i + 1 < argc) {
            const std::string v = argv[++i];
            if (a == "--report") report = v;
            else (a == "--only" ? only : expect_fail).insert(std::stoi(v));
        } else {
            std::fprintf(stderr, "usage: %s [--only N]... [--expect-fail N]... [--report FILE]\n", argv[0]);
            return 2;
        }
    }
    std::ostringstream lines;
    int unexpected = 0;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id)) continue;
        const auto t0 = Clock::now();
        Outcome o{false, ""};
        try {
            o = kCriteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const std::string line = fmt("%s %2d %s: ", o.pass ? "PASS" : "FAIL", id, kCriteria[i].first) + o.detail +
                                 fmt(" [%.1f s]", since(t0));
        std::printf("%s\n", line.c_str());
        std::fflush(stdout);
        lines << line << '\n';
        if (!o.pass && !expect_fail.count(id)) ++unexpected;
        if (!o.pass && expect_fail.count(id)) std::printf("     %d is a known failure\n", id);
    }
    if (!report.empty()) std::ofstream(report) << lines.str();
    return unexpected == 0 ? 0 : 1;
}
