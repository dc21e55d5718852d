// DIMACS CNF for "K_N has a two-colouring with no red K_m and no blue K_n".
// Variable true = red edge. Clauses are streamed, never held in memory.

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

namespace ramsey::cnf {

/// 1-based vertices, i < j; edge {1,2} -> 1, edge {N-1,N} -> C(N,2).
std::uint64_t edge_var(int i, int j, int N);

/// Inverse of edge_var.
std::pair<int, int> var_edge(std::uint64_t var, int N);

struct CnfSummary {
    int N = 0;
    int m = 0;
    int n = 0;
    std::uint64_t var_count = 0;
    std::uint64_t clause_count = 0;
    /// Clause lines actually written; equals clause_count on success.
    std::uint64_t clauses_written = 0;
};

/// Header and clause counts without emitting anything.
CnfSummary cnf_summary(int N, int m, int n);

/// "p cnf V C", then one negative clause per m-subset and one positive
/// clause per n-subset, subsets in lexicographic order. Throws
/// std::runtime_error if the sink fails.
CnfSummary stream_cnf(int N, int m, int n, std::ostream& sink);

/// One "var i j" line per variable.
void write_map(int N, std::ostream& sink);

struct Dimacs {
    std::uint64_t declared_vars = 0;
    std::uint64_t declared_clauses = 0;
    std::vector<std::vector<std::int64_t>> clauses;

    /// Bit (v-1) of assignment is variable v.
    bool satisfied_by(std::uint64_t assignment) const;
};

/// Minimal DIMACS reader (comments, header, zero-terminated clauses).
Dimacs parse_dimacs(std::istream& in);

/// Exhausts all 2^C(N,2) assignments (C(N,2) <= 28) against the clause set.
bool check_small(int N, int m, int n);

}  // namespace ramsey::cnf
