#include "ssz/arith.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ssz/error.hpp"

namespace ssz {

Enclosure euler_gamma() {
    static const Enclosure g = Enclosure::of_decimal("0.577215664901532860606512090082");
    return g;
}

Enclosure stieltjes_gamma1() {
    static const Enclosure g = Enclosure::of_decimal("-0.072815845483676724860586375874901");
    return g;
}

Enclosure exp_minus_gamma() {
    static const Enclosure e = exp(-euler_gamma());
    return e;
}

Enclosure density_constant_c() {
    static const Enclosure c = Enclosure::exact(1.0) / (Enclosure::exact(1.0) - exp_minus_gamma());
    return c;
}

bool is_prime_slow(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
    std::uint64_t q = n + 1;
    while (!is_prime_slow(q)) ++q;
    return q;
}

PrimeCutoff PrimeCutoff::real(Rational z) {
    if (z < Rational(0)) throw InvalidArgument("negative cutoff " + z.str());
    return PrimeCutoff(Mode::real, z, next_prime_above(static_cast<std::uint64_t>(z.floor())));
}

PrimeCutoff PrimeCutoff::below_prime(std::uint64_t p) {
    if (!is_prime_slow(p)) throw InvalidArgument("p-0 cutoff needs a prime, got " + std::to_string(p));
    return PrimeCutoff(Mode::just_below_prime, Rational(static_cast<std::int64_t>(p)), p);
}

PrimeCutoff PrimeCutoff::parse(const std::string& text) {
    if (text.size() > 2 && text.compare(text.size() - 2, 2, "-0") == 0) {
        const Rational p = Rational::parse(text.substr(0, text.size() - 2));
        if (!p.is_integer() || p.num() < 2) throw InvalidArgument("bad p-0 cutoff: " + text);
        return below_prime(static_cast<std::uint64_t>(p.num()));
    }
    return real(Rational::parse(text));
}

std::string PrimeCutoff::str() const {
    return mode_ == Mode::real ? value_.str() : value_.str() + "-0";
}

std::size_t primes_below(const SieveCache& s, const PrimeCutoff& c) {
    const std::uint64_t q = c.effective_min_prime();
    if (q - 1 > s.limit()) throw OutOfRange("cutoff " + c.str() + " beyond sieve limit");
    return s.prime_count_upto(q - 1);
}

Enclosure mertens_product(const SieveCache& s, const PrimeCutoff& c) { return s.pi_prefix(primes_below(s, c)); }

Enclosure mertens_logsum(const SieveCache& s, const PrimeCutoff& c) { return s.sigma_prefix(primes_below(s, c)); }

Enclosure mertens_product_at(const SieveCache& s, std::uint64_t t) { return s.pi_prefix(s.prime_count_upto(t)); }

Enclosure mertens_logsum_at(const SieveCache& s, std::uint64_t t) { return s.sigma_prefix(s.prime_count_upto(t)); }

Enclosure log_of(Rational r) {
    if (r <= Rational(0)) throw InvalidArgument("log of nonpositive " + r.str());
    return log_of(static_cast<std::uint64_t>(r.num())) - log_of(static_cast<std::uint64_t>(r.den()));
}

Enclosure eta(const SieveCache& s, Rational t) {
    if (t < Rational(1)) throw InvalidArgument("eta needs t >= 1");
    const auto ft = static_cast<std::uint64_t>(t.floor());
    if (ft > s.limit()) throw OutOfRange("eta beyond sieve horizon at " + t.str());
    return mertens_logsum_at(s, ft) + euler_gamma() - log_of(t);
}

Enclosure eta_left(const SieveCache& s, std::uint64_t p) {
    if (p < 2 || p > s.limit()) throw OutOfRange("eta_left outside sieve: " + std::to_string(p));
    return mertens_logsum_at(s, p - 1) + euler_gamma() - log_of(p);
}

std::string EtaBoundConfig::describe() const {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        if (i) os << ';';
        os << anchors[i].from << ':' << anchors[i].bound;
    }
    os << " lower=" << global_lower;
    return os.str();
}

EtaExtrema eta_extrema(const SieveCache& s, Rational x, std::uint64_t T) {
    if (x < Rational(1)) throw InvalidArgument("eta_extrema needs x >= 1");
    if (!(x < Rational(static_cast<std::int64_t>(T)))) throw InvalidArgument("eta_extrema needs x < T");
    if (T > s.limit()) throw OutOfRange("eta_extrema beyond sieve horizon");
    const auto primes = s.primes();
    const auto fx = static_cast<std::uint64_t>(x.floor());
    std::size_t k = s.prime_count_upto(fx); // primes <= x
    const Enclosure g = euler_gamma();

    Enclosure sup = eta(s, x);
    Enclosure inf = sup;
    bool first = true;
    // Each prime p in (x, T): left limit at p, then the value after the jump.
    for (; k < primes.size() && primes[k] < T; ++k) {
        const std::uint64_t p = primes[k];
        const Enclosure lp = log_of(p);
        const Enclosure left = s.sigma_prefix(k) + g - lp;
        const Enclosure right = s.sigma_prefix(k + 1) + g - lp;
        inf = first ? left : min(inf, left);
        first = false;
        sup = max(sup, right);
    }
    // Left limit at T.
    const Enclosure end = s.sigma_prefix(k) + g - log_of(T);
    inf = first ? end : min(inf, end);
    return {sup, inf};
}

EtaTailBounds eta_tail_bounds(const SieveCache& s, Rational x, const EtaBoundConfig& cfg) {
    if (x < Rational(1)) throw InvalidArgument("eta tail bounds need x >= 1");
    const std::uint64_t horizon = cfg.sieve_horizon == 0 ? s.limit() : std::min(cfg.sieve_horizon, s.limit());

    bool have_plus = false, have_minus = false;
    double best_plus = 0, best_minus = 0; // upper bound on sup, lower bound on inf
    double plus_lo = cfg.global_lower, minus_hi = 0;
    bool have_minus_hi = false;
    EtaAnchor used_plus{}, used_minus{};

    for (const auto& a : cfg.anchors) {
        double up = 0, low = 0;
        if (a.from != std::floor(a.from) || a.from < 1 || a.from > 9.0e15)
            throw ConfigError("eta anchor height must be a positive integer");
        const auto Ti = static_cast<std::int64_t>(a.from);
        if (x >= Rational(Ti)) {
            up = a.bound;
            low = -a.bound;
        } else if (static_cast<std::uint64_t>(Ti) <= horizon) {
            const auto T = static_cast<std::uint64_t>(Ti);
            const auto ex = eta_extrema(s, x, T);
            up = std::max(ex.sup.hi(), a.bound);
            low = std::min(ex.inf.lo(), -a.bound);
            plus_lo = std::max(plus_lo, ex.sup.lo());
            minus_hi = have_minus_hi ? std::min(minus_hi, ex.inf.hi()) : ex.inf.hi();
            have_minus_hi = true;
        } else {
            continue;
        }
        if (!have_plus || up < best_plus) {
            best_plus = up;
            used_plus = a;
            have_plus = true;
        }
        if (!have_minus || low > best_minus) {
            best_minus = low;
            used_minus = a;
            have_minus = true;
        }
    }
    if (!have_plus)
        throw ConfigError("no eta anchor applies at x = " + x.str() + " (horizon " + std::to_string(horizon) + ")");

    best_minus = std::max(best_minus, cfg.global_lower);
    if (!have_minus_hi) minus_hi = best_plus;
    minus_hi = std::max(minus_hi, best_minus);
    plus_lo = std::min(plus_lo, best_plus);

    EtaTailBounds out;
    out.plus = Enclosure::from_bounds(plus_lo, best_plus);
    out.minus = Enclosure::from_bounds(best_minus, minus_hi);
    const double abs_hi = std::max(best_plus, -best_minus);
    out.abs = Enclosure::from_bounds(std::min(0.0, abs_hi), abs_hi);
    out.anchors_used.push_back(used_plus);
    if (used_minus.from != used_plus.from) out.anchors_used.push_back(used_minus);
    return out;
}

namespace {

std::uint64_t legendre(const SieveCache& s, std::uint64_t x, std::size_t a) {
    if (x == 0) return 0;
    if (a == 0) return x;
    const auto primes = s.primes();
    const std::uint64_t pa = primes[a - 1];
    if (x <= pa) return 1;
    if (x <= s.limit() && a < primes.size()) {
        const std::uint64_t next = primes[a];
        if (x < next * next) return 1 + (s.prime_count_upto(x) - a);
    }
    return legendre(s, x, a - 1) - legendre(s, x / pa, a - 1);
}

} // namespace

std::uint64_t phi_count(const SieveCache& s, Rational x, const PrimeCutoff& c) {
    if (x < Rational(0)) throw InvalidArgument("phi_count needs x >= 0");
    const auto fx = static_cast<std::uint64_t>(x.floor());
    if (fx == 0) return 0;
    // Every prime <= x is excluded: only n = 1 survives.
    if (c.effective_min_prime() > fx) return 1;
    return legendre(s, fx, primes_below(s, c));
}

std::uint64_t prime_count_between(const SieveCache& s, Rational y, Rational z) {
    if (!(z < y)) return 0;
    const auto fy = static_cast<std::uint64_t>(std::max<std::int64_t>(0, y.floor()));
    const auto fz = static_cast<std::uint64_t>(std::max<std::int64_t>(0, z.floor()));
    return s.prime_count_upto(fy) - s.prime_count_upto(fz);
}

Enclosure lambda_density(const SieveCache& s, Rational y, Rational z) {
    if (y < z) throw InvalidArgument("lambda_density needs y >= z");
    if (z < Rational(1)) throw InvalidArgument("lambda_density needs z >= 1");
    if (prime_count_between(s, y, z) == 0) return Enclosure::exact(0.0);
    const auto fy = static_cast<std::uint64_t>(y.floor());
    const auto fz = static_cast<std::uint64_t>(z.floor());
    const Enclosure d = mertens_product_at(s, fz) - mertens_product_at(s, fy);
    return Enclosure::from_bounds(std::max(0.0, d.lo()), d.hi());
}

Enclosure g_eval(const SieveCache& s, Rational t) {
    return eta(s, t) * mertens_product_at(s, static_cast<std::uint64_t>(t.floor()));
}

} // namespace ssz
