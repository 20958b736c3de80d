#include "ssz/gtable.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "ssz/arith.hpp"
#include "ssz/error.hpp"

namespace ssz {

namespace {

const Enclosure kOne = Enclosure::exact(1.0);
const Enclosure kHalf = Enclosure::exact(0.5);

constexpr int kPrecisionBits = 53;

std::string header_line(std::uint64_t sieve_limit, std::uint64_t limit, const char* name) {
    return "# sieve_limit=" + std::to_string(sieve_limit) + " limit=" + std::to_string(limit) +
           " precision_bits=" + std::to_string(kPrecisionBits) + " table=" + name;
}

} // namespace

Enclosure piece_g_over_t(const UnitConstants& c, Enclosure log_a, Enclosure l) {
    // log a + log b = 2 log a + l
    return c.pi * l * (c.shift - log_a - kHalf * l);
}

Enclosure piece_g_over_t2(const UnitConstants& c, Enclosure log_a, Enclosure l, Enclosure inv_a, Enclosure inv_b) {
    return c.pi * ((c.shift - log_a - kOne) * (inv_a - inv_b) + l * inv_b);
}

Enclosure piece_pi_over_t2(const UnitConstants& c, Enclosure inv_a, Enclosure inv_b) { return c.pi * (inv_a - inv_b); }

std::shared_ptr<const GTable> GTable::build(SievePtr sieve, std::uint64_t limit,
                                            std::optional<std::filesystem::path> cache_dir) {
    if (!sieve) throw InvalidArgument("GTable needs a sieve");
    if (limit < 1) throw InvalidArgument("GTable limit must be >= 1");
    if (limit >= sieve->limit()) throw OutOfRange("GTable limit must be below the sieve limit");
    std::shared_ptr<GTable> t(new GTable());
    t->sieve_ = std::move(sieve);
    t->limit_ = limit;
    if (cache_dir && t->load(*cache_dir)) {
        t->from_cache_ = true;
        return t;
    }
    t->compute();
    if (cache_dir) t->store(*cache_dir);
    return t;
}

UnitConstants GTable::unit(std::uint64_t j) const {
    return {mertens_product_at(*sieve_, j), mertens_logsum_at(*sieve_, j) + euler_gamma()};
}

void GTable::compute() {
    const auto& s = *sieve_;
    const auto primes = s.primes();
    g1_.assign(limit_ + 1, Enclosure::exact(0.0));
    g2_ = g1_;
    p2_ = g1_;
    std::size_t k = 0;
    Enclosure log_j = Enclosure::exact(0.0);
    for (std::uint64_t j = 1; j < limit_; ++j) {
        while (k < primes.size() && primes[k] <= j) ++k;
        const UnitConstants c{s.pi_prefix(k), s.sigma_prefix(k) + euler_gamma()};
        const auto sj = static_cast<std::int64_t>(j);
        const Enclosure l = log1p(Enclosure::ratio(1, sj));
        const Enclosure inv_a = Enclosure::ratio(1, sj);
        const Enclosure inv_b = Enclosure::ratio(1, sj + 1);
        g1_[j + 1] = g1_[j] + piece_g_over_t(c, log_j, l);
        g2_[j + 1] = g2_[j] + piece_g_over_t2(c, log_j, l, inv_a, inv_b);
        p2_[j + 1] = p2_[j] + piece_pi_over_t2(c, inv_a, inv_b);
        log_j = log_of(j + 1);
    }
}

Enclosure GTable::at(const std::vector<Enclosure>& v, std::uint64_t n) const {
    if (n < 1 || n > limit_) throw OutOfRange("G table index " + std::to_string(n) + " outside [1, " + std::to_string(limit_) + "]");
    return v[n];
}

GTable::Partial GTable::partial(Rational t) const {
    if (t < Rational(1)) throw InvalidArgument("G table evaluation needs t >= 1");
    const auto j = static_cast<std::uint64_t>(t.floor());
    if (j > limit_ || (j == limit_ && !t.is_integer())) throw OutOfRange("G table evaluation beyond limit at " + t.str());
    Partial p;
    p.j = j;
    p.c = unit(j);
    p.log_j = log_of(j);
    const Rational frac = t - Rational(static_cast<std::int64_t>(j));
    p.l = frac == Rational(0) ? Enclosure::exact(0.0)
                              : log1p(frac.enclosure() / Enclosure::of_integer(static_cast<std::int64_t>(j)));
    p.inv_j = Enclosure::ratio(1, static_cast<std::int64_t>(j));
    p.inv_t = Enclosure::ratio(t.den(), t.num());
    return p;
}

Enclosure GTable::g1(Rational t) const {
    const auto p = partial(t);
    if (p.l.is_point() && p.l.lo() == 0.0) return g1_[p.j];
    return g1_[p.j] + piece_g_over_t(p.c, p.log_j, p.l);
}

Enclosure GTable::g2(Rational t) const {
    const auto p = partial(t);
    if (p.l.is_point() && p.l.lo() == 0.0) return g2_[p.j];
    return g2_[p.j] + piece_g_over_t2(p.c, p.log_j, p.l, p.inv_j, p.inv_t);
}

Enclosure GTable::p2(Rational t) const {
    const auto p = partial(t);
    if (p.l.is_point() && p.l.lo() == 0.0) return p2_[p.j];
    return p2_[p.j] + piece_pi_over_t2(p.c, p.inv_j, p.inv_t);
}

bool GTable::load(const std::filesystem::path& dir) {
    const std::filesystem::path sub = dir / "gtable";
    const std::pair<const char*, std::vector<Enclosure>*> tables[] = {{"G1", &g1_}, {"G2", &g2_}, {"P2", &p2_}};
    for (auto [name, vec] : tables) {
        std::ifstream in(sub / (std::string(name) + "_" + std::to_string(limit_) + ".csv"));
        if (!in) return false;
        std::string line;
        if (!std::getline(in, line) || line != header_line(sieve_->limit(), limit_, name)) return false;
        if (!std::getline(in, line) || line != "n,lo,hi") return false;
        vec->assign(limit_ + 1, Enclosure::exact(0.0));
        std::uint64_t expect = 1;
        while (std::getline(in, line)) {
            const char* s = line.c_str();
            char* end = nullptr;
            const auto n = std::strtoull(s, &end, 10);
            if (*end != ',' || n != expect) return false;
            const double lo = std::strtod(end + 1, &end);
            if (*end != ',') return false;
            const double hi = std::strtod(end + 1, &end);
            if (*end != '\0' || !(lo <= hi)) return false;
            (*vec)[n] = Enclosure::from_bounds(lo, hi);
            ++expect;
        }
        if (expect != limit_ + 1) return false;
    }
    return true;
}

void GTable::store(const std::filesystem::path& dir) const {
    const std::filesystem::path sub = dir / "gtable";
    std::error_code ec;
    std::filesystem::create_directories(sub, ec);
    if (ec) throw ResourceError("cannot create cache directory " + sub.string());
    const std::pair<const char*, const std::vector<Enclosure>*> tables[] = {{"G1", &g1_}, {"G2", &g2_}, {"P2", &p2_}};
    for (auto [name, vec] : tables) {
        const auto final_path = sub / (std::string(name) + "_" + std::to_string(limit_) + ".csv");
        const auto tmp_path = final_path.string() + ".tmp";
        std::FILE* f = std::fopen(tmp_path.c_str(), "w");
        if (!f) throw ResourceError("cannot write " + tmp_path);
        std::fprintf(f, "%s\nn,lo,hi\n", header_line(sieve_->limit(), limit_, name).c_str());
        for (std::uint64_t n = 1; n <= limit_; ++n)
            std::fprintf(f, "%llu,%.17g,%.17g\n", static_cast<unsigned long long>(n), (*vec)[n].lo(), (*vec)[n].hi());
        if (std::fclose(f) != 0) throw ResourceError("cannot write " + tmp_path);
        std::filesystem::rename(tmp_path, final_path, ec);
        if (ec) throw ResourceError("cannot rename " + tmp_path);
    }
}

} // namespace ssz
