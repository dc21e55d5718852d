#include "ramsey/primes.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

using namespace ramsey::primes;

namespace {

PSQuery query(int k, int distinct = 3, int exponent = 3) {
    PSQuery q;
    q.k = k;
    q.max_distinct = distinct;
    q.max_exponent = exponent;
    return q;
}

// Membership by trial division over the first k primes.
bool naive_member(std::uint64_t q, int k, int distinct, int exponent) {
    std::vector<std::uint64_t> basis;
    for (std::uint64_t p = 2; static_cast<int>(basis.size()) < k; ++p) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            prime = prime && p % d != 0;
        if (prime)
            basis.push_back(p);
    }
    int used = 0;
    for (auto p : basis) {
        int e = 0;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        if (e > exponent)
            return false;
        used += e > 0 ? 1 : 0;
    }
    return q == 1 && used <= distinct;
}

}  // namespace

TEST_CASE("factorisation and primes") {
    CHECK(factorize(44).to_string() == "2^2*11");
    CHECK(factorize(1).to_string() == "1");
    CHECK(factorize(360).max_exponent() == 3);
    CHECK(factorize(360).distinct() == 3);
    CHECK(factorize(9699690).value() == 9699690);
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(9) == 23);
    CHECK(nth_prime(13) == 41);
}

TEST_CASE("membership agrees with the definition") {
    for (int k : {3, 5, 9})
        for (std::uint64_t q = 1; q <= 600; ++q)
            CHECK(is_prime_sequence(q, query(k)) == naive_member(q, k, 3, 3));
    CHECK(is_prime_sequence(45, query(5)));
    CHECK(!is_prime_sequence(46, query(8)));
    CHECK(is_prime_sequence(46, query(9)));
    CHECK(!is_prime_sequence(112, query(30)));
}

TEST_CASE("enumeration uses a half-open range") {
    CHECK(enumerate_ps(43, 46, query(3)) == std::vector<std::uint64_t>{45});
    CHECK(enumerate_ps(44, 46, query(9)) == std::vector<std::uint64_t>{45, 46});
    CHECK(enumerate_ps(46, 46, query(9)).empty());
}

TEST_CASE("selection rules rank differently") {
    // 121 = 11^2 has one prime, 115 = 5*23 has exponent 1.
    const auto std_rule = select_candidate(102, 160, query(9));
    const auto df_rule = select_candidate(102, 160, query(9), SelectionRule::distinct_first());
    CHECK(std_rule.value == 115);
    CHECK(df_rule.value == 121);
    CHECK(std_rule.ranking.size() == df_rule.ranking.size());
    CHECK(std::is_permutation(std_rule.ranking.begin(), std_rule.ranking.end(), df_rule.ranking.begin()));
    // Closed window: both ends are eligible.
    CHECK(select_candidate(45, 45, query(3)).value == 45);
    CHECK(!select_candidate(47, 47, query(3)).value.has_value());
    SelectionRule bad{{Criterion::smallest_value, Criterion::smallest_value}};
    CHECK_THROWS(bad.validate());
}

TEST_CASE("persistence scan plateaus") {
    const auto r6 = persistence_scan(6, 102, 160, PSQuery{});
    CHECK(r6.value == 115);
    CHECK(r6.plateau_first_k == 9);
    CHECK(r6.plateau_last_k == 11);
    CHECK(r6.k_max == 11);
    const auto r7 = persistence_scan(7, 205, 492, PSQuery{});
    CHECK(r7.value == 209);
    CHECK(r7.value_at_k_max == 205);
    CHECK_THROWS_AS(persistence_scan(6, 1000003, 1000003, PSQuery{}), std::domain_error);
}

TEST_CASE("growth ratios") {
    const std::vector<double> diag{6, 18};
    const std::vector<double> off{3, 8};
    const auto g = growth_ratio(diag, off);
    CHECK(g[0].rho == 2.0);
    CHECK(g[0].in_corridor);
    CHECK(!g[1].in_corridor);
    const auto b = growth_ratio_bounds(43, 48, 25);
    CHECK(b.lo == doctest::Approx(1.72));
    CHECK(b.hi == doctest::Approx(1.92));
    CHECK(b.in_corridor);
}

TEST_CASE("table of selections per basis") {
    // Columns: n, window lo, hi, basis k, tabulated value, reproduced (1/0).
    std::ifstream in(FIXTURE_DIR "/selections_by_basis.csv");
    REQUIRE(in);
    std::string line;
    std::getline(in, line);
    int rows = 0, reproduced = 0;
    while (std::getline(in, line)) {
        std::stringstream s(line);
        std::string f[6];
        for (auto& x : f)
            std::getline(s, x, ',');
        const auto sel = select_candidate(std::stoull(f[1]), std::stoull(f[2]), query(std::stoi(f[3])));
        const bool match = sel.value == std::stoull(f[4]);
        INFO("n=" << f[0] << " k=" << f[3]);
        CHECK(match == (f[5] == "1"));
        ++rows;
        reproduced += match ? 1 : 0;
    }
    CHECK(rows == 18);
    CHECK(reproduced == 12);
}
