#include "ssz/exact_sum.hpp"

#include <vector>

#include "ssz/error.hpp"

namespace ssz {

namespace {

struct Partial {
    mpz_class num;
    mpz_class den;
};

template <class Get>
Partial split(std::size_t lo, std::size_t hi, const Get& get) {
    if (hi - lo == 1) {
        const auto [a, b] = get(lo);
        Partial r;
        mpz_set_ui(r.num.get_mpz_t(), a);
        mpz_set_ui(r.den.get_mpz_t(), b);
        return r;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    Partial l = split(lo, mid, get);
    Partial r = split(mid, hi, get);
    Partial out;
    out.num = l.num * r.den + r.num * l.den;
    out.den = l.den * r.den;
    return out;
}

template <class Get>
mpq_class split_sum(std::size_t n, const Get& get) {
    if (n == 0) return mpq_class(0);
    Partial p = split(0, n, get);
    mpq_class q(p.num, p.den);
    q.canonicalize();
    return q;
}

std::vector<Term> prime_fraction_terms(const SieveCache& s, Rational x) {
    if (x < Rational(0)) throw InvalidArgument("frac sum needs x >= 0");
    const auto fx = static_cast<std::uint64_t>(x.floor());
    const auto a = static_cast<std::uint64_t>(x.num());
    const auto b = static_cast<std::uint64_t>(x.den());
    std::vector<Term> terms;
    const std::size_t k = s.prime_count_upto(fx);
    terms.reserve(k);
    const auto primes = s.primes();
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t d = b * primes[i];
        const std::uint64_t r = a % d;
        if (r != 0) terms.emplace_back(r, d);
    }
    return terms;
}

} // namespace

mpq_class sum_fractions(std::span<const Term> terms) {
    for (const auto& [a, b] : terms)
        if (b == 0) throw InvalidArgument("zero denominator in sum");
    return split_sum(terms.size(), [&](std::size_t i) { return terms[i]; });
}

mpq_class sum_reciprocals(std::span<const std::uint64_t> ns) {
    for (auto n : ns)
        if (n == 0) throw InvalidArgument("reciprocal of zero");
    return split_sum(ns.size(), [&](std::size_t i) { return Term{1, ns[i]}; });
}

Enclosure enclose(const mpq_class& q) {
    const double d = q.get_d(); // truncates toward zero
    const int c = cmp(q, mpq_class(d));
    if (c == 0) return Enclosure::exact(d);
    if (c > 0) return Enclosure::from_bounds(d, next_up(d));
    return Enclosure::from_bounds(next_down(d), d);
}

Enclosure sum_fractions_enclosure(std::span<const Term> terms) {
    Enclosure acc = Enclosure::exact(0.0);
    for (const auto& [a, b] : terms)
        acc += Enclosure::ratio(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
    return acc;
}

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class to_mpq(Rational r) {
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), r.num());
    mpz_set_si(q.get_den_mpz_t(), r.den());
    q.canonicalize();
    return q;
}

mpq_class frac_sum_over_primes(const SieveCache& s, Rational x) {
    const auto terms = prime_fraction_terms(s, x);
    return sum_fractions(terms);
}

Enclosure frac_sum_over_primes_enclosure(const SieveCache& s, Rational x) {
    const auto terms = prime_fraction_terms(s, x);
    return sum_fractions_enclosure(terms);
}

} // namespace ssz
