#pragma once

// Enclosures of the density constants c_{y,z}, a_{y,z}, beta, mu_q and the
// constants derived from them. Every report carries the truncation points,
// the eta anchors it relied on, and its intermediate enclosures.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ssz/arith.hpp"
#include "ssz/enclosure.hpp"
#include "ssz/gtable.hpp"
#include "ssz/rational.hpp"
#include "ssz/sieve.hpp"

namespace ssz {

struct TruncationParams {
    std::uint64_t N_main = std::uint64_t{1} << 22;
    std::uint64_t N_secondary = 0; // second cutoff where an algorithm uses two
    EtaBoundConfig eta{};
    unsigned jobs = 0; // 0 uses default_jobs()
};

struct ConstantReport {
    std::string name;
    Enclosure value;
    std::vector<std::pair<std::string, Enclosure>> sub_terms;
    TruncationParams params;
    std::vector<EtaAnchor> anchors_used;
    double seconds = 0;
    // Optional per-prime ledger, e.g. beta_p.
    std::vector<std::pair<std::uint64_t, Enclosure>> ledger;

    Enclosure sub(const std::string& key) const;
};

// c_{y,z} = C sum_n chi_{y,z}(n)/n (Sigma(yn) - Sigma(z) - log n) Pi(yn), truncated at n <= N_main.
ConstantReport compute_c(const SieveCache& s, Rational y, const PrimeCutoff& z, const TruncationParams& p);

// a_{y,z} = C Pi(z)(1 - gamma + log y - Sigma(z)) + C int_1^inf A(t,y,z) g(yt) dt/t^2, truncated at t <= N_main.
ConstantReport compute_a(const SieveCache& s, Rational y, const PrimeCutoff& z, const TruncationParams& p);
// The series itself, valid for y >= z only.
ConstantReport compute_a_direct(const SieveCache& s, Rational y, const PrimeCutoff& z, const TruncationParams& p);

// eps(N) = Pi(z) - int_1^N A(t,y,z) Pi(yt) dt/t^2.
Enclosure acor1_residual(const SieveCache& s, Rational y, const PrimeCutoff& z, std::uint64_t N);

// Q_p from harmonic prefix sums, and its large-p interval form.
Enclosure beta_Qp_exact(const SieveCache& s, std::uint64_t p);
Enclosure beta_Qp_asymptotic(const SieveCache& s, std::uint64_t p);

// beta with N_main = N_Q (Q part) and N_secondary = N_R (R part).
ConstantReport compute_beta(const SieveCache& s, const GTable& g, const TruncationParams& p);

// mu_q with N_main = N_S (the S_q sum) and N_secondary = N_R (R* and tails).
ConstantReport compute_mu(const SieveCache& s, const GTable& g, std::uint64_t q, const TruncationParams& p);

struct DerivedConstants {
    ConstantReport delta; // a + gamma - 1 - beta
    ConstantReport kappa; // delta - mu_5/30 - 79 mu_11/4620
    ConstantReport a_exp_minus_delta;
};

DerivedConstants derived_constants(const ConstantReport& a, const ConstantReport& beta, const ConstantReport& mu5,
                                   const ConstantReport& mu11);

// Digits of an enclosure that are certified after truncation: the longest
// prefix (up to max_decimals) shared by lo and hi, followed by "...".
// An exact zero prints as "0".
std::string certified_prefix(Enclosure e, int max_decimals = 4);

struct TableCell {
    Rational y;
    Rational z;
    ConstantReport report;
};

// Grid layouts: rows y = 2..7 (c) or y = 1..6 (a); columns z = 1, 2, 3, 5.
std::vector<TableCell> table_c(const SieveCache& s, const TruncationParams& p);
std::vector<TableCell> table_a(const SieveCache& s, const TruncationParams& p);
std::string render_table(const std::string& title, const std::vector<TableCell>& cells);

} // namespace ssz
