#include "ramsey/combinatorics.hpp"

#include <set>

namespace ramsey::comb {
namespace {

bool extension_is_good(const EdgeColoring& c, const std::vector<std::uint64_t>& red,
                       const std::vector<std::uint64_t>& blue, std::uint64_t red_mask,
                       CliqueConstraint k) {
    const std::uint64_t all = all_vertices(c.vertices());
    // Any new clique must contain the new vertex.
    if (has_clique(red, red_mask & all, k.m - 1))
        return false;
    return !has_clique(blue, ~red_mask & all, k.n - 1);
}

void adjacency(const EdgeColoring& c, std::vector<std::uint64_t>& red,
               std::vector<std::uint64_t>& blue) {
    const auto v = static_cast<std::size_t>(c.vertices());
    red.resize(v);
    blue.resize(v);
    for (std::size_t i = 0; i < v; ++i) {
        red[i] = c.red_neighbors(static_cast<int>(i));
        blue[i] = c.blue_neighbors(static_cast<int>(i));
    }
}

// Edge masks of every s-subset of [v], edges numbered in upper-triangle order.
std::vector<std::uint64_t> subset_edge_masks(int v, int s) {
    std::vector<std::vector<int>> index(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v), -1));
    int e = 0;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e++;
    std::vector<std::uint64_t> out;
    if (s > v)
        return out;
    std::vector<int> pick(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b)
                mask |= std::uint64_t{1}
                        << index[static_cast<std::size_t>(pick[static_cast<std::size_t>(a)])]
                                [static_cast<std::size_t>(pick[static_cast<std::size_t>(b)])];
        out.push_back(mask);
        int i = s - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == v - s + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

std::size_t count_good_extensions(const EdgeColoring& c, CliqueConstraint k) {
    k.validate();
    if (c.vertices() >= 32)
        throw std::invalid_argument("count_good_extensions: too many vertices");
    std::vector<std::uint64_t> red, blue;
    adjacency(c, red, blue);
    std::size_t count = 0;
    const std::uint64_t limit = std::uint64_t{1} << c.vertices();
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if (extension_is_good(c, red, blue, mask, k))
            ++count;
    return count;
}

std::vector<EdgeColoring> glue_extensions(const EdgeColoring& c, CliqueConstraint k) {
    k.validate();
    if (has_forbidden_clique(c, k))
        throw std::invalid_argument("glue_extensions: input colouring is not good");
    if (c.vertices() + 1 > max_canonical_vertices)
        throw std::invalid_argument("glue_extensions: canonical dedup limited to 12 vertices");
    std::vector<std::uint64_t> red, blue;
    adjacency(c, red, blue);
    std::vector<EdgeColoring> out;
    std::set<CanonicalKey> seen;
    const std::uint64_t limit = std::uint64_t{1} << c.vertices();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (!extension_is_good(c, red, blue, mask, k))
            continue;
        EdgeColoring next = c.extended(mask);
        if (seen.insert(canonical_key(next)).second)
            out.push_back(std::move(next));
    }
    return out;
}

std::vector<EdgeColoring> glue_frontier(const std::vector<EdgeColoring>& frontier, CliqueConstraint k) {
    std::vector<EdgeColoring> out;
    std::set<CanonicalKey> seen;
    for (const auto& c : frontier)
        for (auto& next : glue_extensions(c, k))
            if (seen.insert(canonical_key(next)).second)
                out.push_back(std::move(next));
    return out;
}

bool good_coloring_exists_enumeration(CliqueConstraint k, int v) {
    k.validate();
    if (v < 0)
        throw std::invalid_argument("enumeration: negative vertex count");
    const std::uint64_t edges = binomial(v, 2);
    if (edges > 28)
        throw std::invalid_argument("enumeration: C(v,2) must be <= 28");
    if (!has_forbidden_clique(EdgeColoring(v), k))
        return true;
    if (edges == 0)
        return false;

    const auto red_sets = subset_edge_masks(v, k.m);
    const auto blue_sets = subset_edge_masks(v, k.n);
    // Every colouring with a red edge relabels to one with {1,2} red.
    const std::uint64_t free = std::uint64_t{1} << (edges - 1);
    for (std::uint64_t x = 0; x < free; ++x) {
        const std::uint64_t mask = (x << 1) | 1U;
        bool bad = false;
        for (auto s : red_sets)
            if ((mask & s) == s) {
                bad = true;
                break;
            }
        if (bad)
            continue;
        for (auto s : blue_sets)
            if ((mask & s) == 0) {
                bad = true;
                break;
            }
        if (!bad)
            return true;
    }
    return false;
}

RamseySearchResult brute_force_ramsey(CliqueConstraint k, int v_max, const SearchOptions& opt) {
    k.validate();
    if (v_max < 1 || v_max > max_vertices)
        throw std::invalid_argument("brute_force_ramsey: v_max must lie in [1, 64]");
    RamseySearchResult result;
    std::vector<EdgeColoring> frontier{EdgeColoring(0)};
    int frontier_v = 0;

    for (int v = 1; v <= v_max; ++v) {
        LevelReport level;
        level.v = v;
        if (binomial(v, 2) <= 28) {
            level.method = "enumeration";
            level.good_exists = good_coloring_exists_enumeration(k, v);
        } else {
            level.method = "glue-prune";
            try {
                while (frontier_v < v) {
                    frontier = glue_frontier(frontier, k);
                    ++frontier_v;
                    if (frontier.size() > opt.max_frontier)
                        throw BudgetExceeded("frontier size budget exceeded at v=" + std::to_string(frontier_v));
                    if (frontier.empty())
                        break;
                }
            } catch (const BudgetExceeded& e) {
                result.complete = false;
                result.note = e.what();
                return result;
            } catch (const std::invalid_argument& e) {
                result.complete = false;
                result.note = e.what();
                return result;
            }
            level.good_exists = !frontier.empty();
            level.classes = frontier.size();
        }
        result.levels.push_back(level);
        if (!level.good_exists) {
            result.threshold = v;
            return result;
        }
    }
    result.note = "no threshold up to v_max";
    return result;
}

std::optional<std::vector<EdgeColoring>> good_classes(CliqueConstraint k, int v, const SearchOptions& opt) {
    k.validate();
    if (v < 0)
        throw std::invalid_argument("good_classes: negative vertex count");
    std::vector<EdgeColoring> frontier;
    if (!has_forbidden_clique(EdgeColoring(0), k))
        frontier.emplace_back(0);
    try {
        for (int level = 0; level < v && !frontier.empty(); ++level) {
            frontier = glue_frontier(frontier, k);
            if (frontier.size() > opt.max_frontier)
                return std::nullopt;
        }
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return frontier;
}

std::optional<int> survivor_rank(CliqueConstraint k, int v, int d, const SearchOptions& opt) {
    if (d < 2)
        throw std::invalid_argument("survivor_rank: d must be >= 2");
    const auto classes = good_classes(k, v, opt);
    if (!classes)
        return std::nullopt;
    if (classes->empty())
        return 0;
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(d - 1), classes->size()));
}

}  // namespace ramsey::comb
