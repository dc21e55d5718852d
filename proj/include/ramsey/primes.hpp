// Prime-sequence numbers: integers whose factorisation uses only the first k
// primes, with bounded distinct-prime count and exponents. Membership,
// enumeration, candidate selection, persistence scans and growth ratios.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ramsey::primes {

struct PrimeSignature {
    /// (prime, exponent), primes ascending, exponents >= 1.
    std::vector<std::pair<std::uint64_t, int>> factors;

    std::uint64_t value() const;
    int distinct() const { return static_cast<int>(factors.size()); }
    int max_exponent() const;
    /// e.g. "2^2*11"; "1" for the empty product.
    std::string to_string() const;
};

/// Trial division. q >= 1.
PrimeSignature factorize(std::uint64_t q);

/// p_1 = 2, p_2 = 3, ...
std::uint64_t nth_prime(int k);

struct PSQuery {
    int k = 5;
    int max_distinct = 3;
    int max_exponent = 3;

    void validate() const;
};

bool is_prime_sequence(std::uint64_t q, const PSQuery& query);

/// Members of the half-open range (lo, hi], ascending.
std::vector<std::uint64_t> enumerate_ps(std::uint64_t lo, std::uint64_t hi, const PSQuery& query);

enum class Criterion { fewest_distinct, smallest_max_exponent, smallest_value };

std::string to_string(Criterion c);

struct SelectionRule {
    std::vector<Criterion> criteria;

    void validate() const;
    /// (smallest-max-exponent, fewest-distinct, smallest-value).
    static SelectionRule standard();
    /// (fewest-distinct, smallest-max-exponent, smallest-value).
    static SelectionRule distinct_first();
};

struct Selection {
    std::optional<std::uint64_t> value;
    /// Whole admissible set, best first.
    std::vector<std::uint64_t> ranking;
};

/// Ranks the admissible members of the closed window [lo, hi].
Selection select_candidate(std::uint64_t lo, std::uint64_t hi, const PSQuery& query,
                           const SelectionRule& rule = SelectionRule::standard());

struct PersistenceStep {
    int k = 0;
    std::optional<std::uint64_t> value;
};

struct PersistenceResult {
    std::uint64_t value = 0;
    int plateau_first_k = 0;
    int plateau_last_k = 0;
    int k_max = 0;
    std::optional<std::uint64_t> value_at_k_max;
    std::vector<PersistenceStep> steps;
};

/// Scans k from the first basis with any candidate up to 2*n_diag - 1 and
/// returns the longest run of one selected value (ties go to the later run).
/// Throws std::domain_error when no k admits a candidate.
PersistenceResult persistence_scan(int n_diag, std::uint64_t lo, std::uint64_t hi,
                                   const PSQuery& query_template,
                                   const SelectionRule& rule = SelectionRule::standard());

struct GrowthRatio {
    double rho = 0.0;
    bool in_corridor = false;
};

/// rho_i = diag[i] / offdiag[i], flagged rho <= 2.
std::vector<GrowthRatio> growth_ratio(std::span<const double> diag, std::span<const double> offdiag);

struct RatioInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool in_corridor = false;
};

/// [diag_lo / offdiag, diag_hi / offdiag].
RatioInterval growth_ratio_bounds(double diag_lo, double diag_hi, double offdiag);

}  // namespace ramsey::primes
