// Two-colourings of K_v and the exact small-scale oracles built on them:
// clique predicate, canonical labelling, glue-and-prune, brute-force Ramsey
// thresholds, the Klein-graded recursion and the Grover qubit count.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey::comb {

inline constexpr int max_vertices = 64;
inline constexpr int max_canonical_vertices = 12;

/// Red clique size m, blue clique size n.
struct CliqueConstraint {
    int m = 3;
    int n = 3;

    void validate() const;
};

/// Vertices are 0-based in the API; file formats and messages use 1..v.
/// Red edges are stored as one adjacency bitmask per vertex.
class EdgeColoring {
public:
    EdgeColoring() = default;
    /// All edges blue.
    explicit EdgeColoring(int v);

    /// bits in row-major upper-triangle order: {0,1}, {0,2}, ..., {v-2,v-1}.
    static EdgeColoring from_bits(int v, const std::vector<bool>& bits);
    /// Bit e of mask is edge e in the same order (needs C(v,2) <= 64).
    static EdgeColoring from_mask(int v, std::uint64_t mask);

    int vertices() const noexcept { return v_; }
    std::size_t edge_count() const noexcept {
        return static_cast<std::size_t>(v_) * static_cast<std::size_t>(v_ - 1) / 2;
    }

    bool is_red(int i, int j) const;
    void set(int i, int j, bool red);

    std::uint64_t red_neighbors(int i) const { return red_[static_cast<std::size_t>(i)]; }
    std::uint64_t blue_neighbors(int i) const;

    std::vector<bool> bits() const;

    /// Colouring on v+1 vertices; new vertex v joined in red to the set bits of mask.
    EdgeColoring extended(std::uint64_t red_mask) const;

    bool operator==(const EdgeColoring&) const = default;

private:
    int v_ = 0;
    std::vector<std::uint64_t> red_;
};

/// Vertex set with bit i for vertex i < v.
std::uint64_t all_vertices(int v);

/// Cycle 0-1-2-3-4-0 red, chords blue.
EdgeColoring pentagon();

/// True iff the colouring has a red K_m or a blue K_n. Vacuous for cliques
/// of size 1 whenever v >= 1.
bool has_forbidden_clique(const EdgeColoring& c, CliqueConstraint k);

/// True iff the graph given by adjacency masks has a clique of the given size
/// inside candidates.
bool has_clique(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int size);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CanonicalKey {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;
    auto operator<=>(const CanonicalKey&) const = default;
};

/// Individualisation-refinement over the red graph, keeping the smallest
/// upper-triangle bit string over all leaves. Throws BudgetExceeded when
/// more than leaf_budget leaves are needed, invalid_argument for v > 12.
CanonicalKey canonical_key(const EdgeColoring& c, std::size_t leaf_budget = 2'000'000);

/// Good colourings on v+1 vertices extending c, one per isomorphism class
/// (first in ascending red-mask order). Throws invalid_argument if c is not good.
std::vector<EdgeColoring> glue_extensions(const EdgeColoring& c, CliqueConstraint k);

/// Number of incident-edge masks (out of 2^v) that keep c good, without dedup.
std::size_t count_good_extensions(const EdgeColoring& c, CliqueConstraint k);

/// One level of glue-and-prune: all classes at v+1 reachable from the frontier.
std::vector<EdgeColoring> glue_frontier(const std::vector<EdgeColoring>& frontier,
                                        CliqueConstraint k);

struct SearchOptions {
    /// Frontier size above which glue-prune gives up.
    std::size_t max_frontier = 500'000;
    std::size_t leaf_budget = 2'000'000;
};

struct LevelReport {
    int v = 0;
    /// "enumeration" or "glue-prune".
    std::string method;
    bool good_exists = false;
    /// Good classes at v (glue-prune levels only).
    std::optional<std::size_t> classes;
};

struct RamseySearchResult {
    /// Smallest v with no good colouring; empty if none up to v_max or aborted.
    std::optional<int> threshold;
    /// False when a budget stopped the search before v_max.
    bool complete = true;
    std::vector<LevelReport> levels;
    std::string note;
};

/// Exhaustive bitmask enumeration for C(v,2) <= 28 (edge {1,2} pinned red,
/// the all-blue colouring checked separately), glue-prune frontier beyond.
RamseySearchResult brute_force_ramsey(CliqueConstraint k, int v_max, const SearchOptions& opt = {});

/// Does some colouring of K_v avoid the constraint? Enumeration only, v <= 8.
bool good_coloring_exists_enumeration(CliqueConstraint k, int v);

/// Canonical classes of good colourings on v vertices, via glue-prune from v=1.
/// Empty optional when a budget is exceeded.
std::optional<std::vector<EdgeColoring>> good_classes(CliqueConstraint k, int v,
                                                      const SearchOptions& opt = {});

/// 0 if K_v has no good colouring, else min(d-1, number of good classes).
/// Empty optional when the search budget is exceeded.
std::optional<int> survivor_rank(CliqueConstraint k, int v, int d, const SearchOptions& opt = {});

/// R_V4(m,n) = R_V4(m-1,n) + R_V4(m,n-1), R_V4(1,n) = R_V4(m,1) = 1.
std::uint64_t graded_ramsey(int m, int n);

std::uint64_t binomial(int n, int k);

struct QubitCost {
    std::uint64_t edges = 0;
    std::uint64_t total = 0;
};

/// (C(n,2), C(n,2) + 16).
QubitCost qubit_cost(int n);

struct KnownRamsey {
    int m;
    int n;
    int value;
};

/// Classical values used for the domination check R(m,n) <= R_V4(m,n).
const std::vector<KnownRamsey>& known_ramsey_values();

}  // namespace ramsey::comb
