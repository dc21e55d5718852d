#include "ramsey/cnf.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

using namespace ramsey::cnf;

namespace {

std::uint64_t choose(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

TEST_CASE("edge numbering is a bijection onto 1..C(N,2)") {
    for (int N : {2, 5, 12, 46}) {
        std::uint64_t expect = 1;
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                CHECK(edge_var(i, j, N) == expect);
                CHECK(var_edge(expect, N) == std::pair{i, j});
                ++expect;
            }
    }
    CHECK_THROWS(edge_var(2, 2, 5));
    CHECK_THROWS(var_edge(11, 5));
}

TEST_CASE("summary counts") {
    const auto s = cnf_summary(12, 5, 5);
    CHECK(s.var_count == 66);
    CHECK(s.clause_count == 1584);
    CHECK(cnf_summary(9, 3, 4).clause_count == choose(9, 3) + choose(9, 4));
}

TEST_CASE("streamed CNF parses back with matching header and clause widths") {
    std::stringstream s;
    const auto summary = stream_cnf(7, 3, 4, s);
    CHECK(summary.clauses_written == summary.clause_count);
    const Dimacs d = parse_dimacs(s);
    CHECK(d.declared_vars == 21);
    CHECK(d.declared_clauses == d.clauses.size());
    CHECK(d.clauses.size() == choose(7, 3) + choose(7, 4));
    // Negative m-subset clauses first, lexicographic: {1,2,3} -> edges 1,2,7.
    CHECK(d.clauses.front() == std::vector<std::int64_t>{-1, -2, -7});
    CHECK(d.clauses.back().size() == 6);
    CHECK(d.clauses.back().front() > 0);
}

TEST_CASE("map lines") {
    std::stringstream s;
    write_map(4, s);
    CHECK(s.str() == "1 1 2\n2 1 3\n3 1 4\n4 2 3\n5 2 4\n6 3 4\n");
}

TEST_CASE("satisfiability on tiny instances") {
    CHECK(check_small(5, 3, 3));
    CHECK(!check_small(6, 3, 3));
    CHECK_THROWS_AS(check_small(9, 3, 3), std::invalid_argument);

    std::stringstream s;
    stream_cnf(5, 3, 3, s);
    const Dimacs d = parse_dimacs(s);
    // Pentagon 1-2-3-4-5-1 red.
    std::uint64_t x = 0;
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})
        x |= std::uint64_t{1} << (edge_var(i, j, 5) - 1);
    CHECK(d.satisfied_by(x));
    CHECK(!d.satisfied_by(0));
}

TEST_CASE("parser keeps the header separate from the clauses it saw") {
    std::stringstream short_file("c comment\np cnf 2 2\n1 -2 0\n");
    const Dimacs d = parse_dimacs(short_file);
    CHECK(d.declared_clauses == 2);
    CHECK(d.clauses.size() == 1);
    std::stringstream open_clause("p cnf 2 1\n1 -2\n");
    CHECK_THROWS(parse_dimacs(open_clause));
    std::stringstream no_header("1 2 0\n");
    CHECK_THROWS(parse_dimacs(no_header));
}

TEST_CASE("cliques larger than the vertex count contribute no clauses") {
    const auto s = cnf_summary(3, 3, 4);
    CHECK(s.clause_count == 1);
    CHECK(check_small(3, 3, 4));
    CHECK(check_small(2, 3, 3));
    CHECK_THROWS_AS(cnf_summary(1, 3, 3), std::invalid_argument);
}
