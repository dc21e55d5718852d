#include "ramsey/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey::primes {

std::uint64_t PrimeSignature::value() const {
    std::uint64_t q = 1;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i)
            q *= p;
    return q;
}

int PrimeSignature::max_exponent() const {
    int best = 0;
    for (const auto& f : factors)
        best = std::max(best, f.second);
    return best;
}

std::string PrimeSignature::to_string() const {
    if (factors.empty())
        return "1";
    std::string out;
    for (const auto& [p, e] : factors) {
        if (!out.empty())
            out += '*';
        out += std::to_string(p);
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

PrimeSignature factorize(std::uint64_t q) {
    if (q == 0)
        throw std::invalid_argument("factorize: q must be >= 1");
    PrimeSignature sig;
    for (std::uint64_t p = 2; p * p <= q; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        if (e > 0)
            sig.factors.emplace_back(p, e);
    }
    if (q > 1)
        sig.factors.emplace_back(q, 1);
    return sig;
}

std::uint64_t nth_prime(int k) {
    if (k < 1)
        throw std::invalid_argument("nth_prime: k must be >= 1");
    int found = 0;
    for (std::uint64_t c = 2;; ++c) {
        bool prime = true;
        for (std::uint64_t p = 2; p * p <= c; ++p)
            if (c % p == 0) {
                prime = false;
                break;
            }
        if (prime && ++found == k)
            return c;
    }
}

void PSQuery::validate() const {
    if (k < 1 || max_distinct < 1 || max_exponent < 1)
        throw std::invalid_argument("PSQuery: k and limits must be >= 1");
}

bool is_prime_sequence(std::uint64_t q, const PSQuery& query) {
    query.validate();
    const PrimeSignature sig = factorize(q);
    if (sig.distinct() > query.max_distinct || sig.max_exponent() > query.max_exponent)
        return false;
    const std::uint64_t largest = nth_prime(query.k);
    return std::all_of(sig.factors.begin(), sig.factors.end(),
                       [&](const auto& f) { return f.first <= largest; });
}

std::vector<std::uint64_t> enumerate_ps(std::uint64_t lo, std::uint64_t hi, const PSQuery& query) {
    if (lo > hi)
        throw std::invalid_argument("enumerate_ps: lo must not exceed hi");
    query.validate();
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = lo + 1; q <= hi && q > lo; ++q)
        if (is_prime_sequence(q, query))
            out.push_back(q);
    return out;
}

std::string to_string(Criterion c) {
    switch (c) {
    case Criterion::fewest_distinct:
        return "fewest-distinct";
    case Criterion::smallest_max_exponent:
        return "smallest-max-exponent";
    case Criterion::smallest_value:
        return "smallest-value";
    }
    return "?";
}

void SelectionRule::validate() const {
    if (criteria.empty())
        throw std::invalid_argument("SelectionRule: empty criteria list");
    for (std::size_t i = 0; i < criteria.size(); ++i)
        for (std::size_t j = i + 1; j < criteria.size(); ++j)
            if (criteria[i] == criteria[j])
                throw std::invalid_argument("SelectionRule: repeated criterion");
}

SelectionRule SelectionRule::standard() {
    return {{Criterion::smallest_max_exponent, Criterion::fewest_distinct, Criterion::smallest_value}};
}

SelectionRule SelectionRule::distinct_first() {
    return {{Criterion::fewest_distinct, Criterion::smallest_max_exponent, Criterion::smallest_value}};
}

Selection select_candidate(std::uint64_t lo, std::uint64_t hi, const PSQuery& query,
                           const SelectionRule& rule) {
    rule.validate();
    if (lo == 0)
        lo = 1;
    Selection out;
    out.ranking = enumerate_ps(lo - 1, hi, query);
    auto key = [&](std::uint64_t q) {
        const PrimeSignature sig = factorize(q);
        std::vector<std::uint64_t> k;
        for (Criterion c : rule.criteria) {
            switch (c) {
            case Criterion::fewest_distinct:
                k.push_back(static_cast<std::uint64_t>(sig.distinct()));
                break;
            case Criterion::smallest_max_exponent:
                k.push_back(static_cast<std::uint64_t>(sig.max_exponent()));
                break;
            case Criterion::smallest_value:
                k.push_back(q);
                break;
            }
        }
        return k;
    };
    // Stable on ascending input, so values tie-break low when the rule omits them.
    std::stable_sort(out.ranking.begin(), out.ranking.end(),
                     [&](std::uint64_t a, std::uint64_t b) { return key(a) < key(b); });
    if (!out.ranking.empty())
        out.value = out.ranking.front();
    return out;
}

PersistenceResult persistence_scan(int n_diag, std::uint64_t lo, std::uint64_t hi,
                                   const PSQuery& query_template, const SelectionRule& rule) {
    if (n_diag < 2)
        throw std::invalid_argument("persistence_scan: n_diag must be >= 2");
    PersistenceResult out;
    out.k_max = 2 * n_diag - 1;
    PSQuery q = query_template;
    bool started = false;
    for (int k = 1; k <= out.k_max; ++k) {
        q.k = k;
        const Selection s = select_candidate(lo, hi, q, rule);
        if (!s.value && !started)
            continue;
        started = true;
        out.steps.push_back({k, s.value});
    }
    if (out.steps.empty())
        throw std::domain_error("persistence_scan: no candidate at any k <= 2n-1");
    out.value_at_k_max = out.steps.back().value;

    int best_len = 0;
    std::size_t i = 0;
    while (i < out.steps.size()) {
        std::size_t j = i;
        while (j + 1 < out.steps.size() && out.steps[j + 1].value == out.steps[i].value)
            ++j;
        const int len = static_cast<int>(j - i + 1);
        if (out.steps[i].value && len >= best_len) {
            best_len = len;
            out.value = *out.steps[i].value;
            out.plateau_first_k = out.steps[i].k;
            out.plateau_last_k = out.steps[j].k;
        }
        i = j + 1;
    }
    return out;
}

std::vector<GrowthRatio> growth_ratio(std::span<const double> diag, std::span<const double> offdiag) {
    if (diag.size() != offdiag.size())
        throw std::invalid_argument("growth_ratio: sequences must be aligned");
    std::vector<GrowthRatio> out;
    out.reserve(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (offdiag[i] == 0.0)
            throw std::domain_error("growth_ratio: zero denominator");
        const double rho = diag[i] / offdiag[i];
        out.push_back({rho, rho <= 2.0});
    }
    return out;
}

RatioInterval growth_ratio_bounds(double diag_lo, double diag_hi, double offdiag) {
    if (offdiag == 0.0)
        throw std::domain_error("growth_ratio_bounds: zero denominator");
    if (diag_lo > diag_hi)
        throw std::invalid_argument("growth_ratio_bounds: empty interval");
    RatioInterval r{diag_lo / offdiag, diag_hi / offdiag, false};
    if (r.lo > r.hi)
        std::swap(r.lo, r.hi);
    r.in_corridor = r.hi <= 2.0;
    return r;
}

}  // namespace ramsey::primes
