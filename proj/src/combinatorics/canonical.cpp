#include "ramsey/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace ramsey::comb {
namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
public:
    Canonizer(const EdgeColoring& c, std::size_t budget) : v_(c.vertices()), budget_(budget) {
        adj_.resize(static_cast<std::size_t>(v_));
        for (int i = 0; i < v_; ++i)
            adj_[static_cast<std::size_t>(i)] = c.red_neighbors(i);
    }

    std::vector<std::uint8_t> run() {
        Cells cells;
        if (v_ > 0) {
            cells.emplace_back(static_cast<std::size_t>(v_));
            for (int i = 0; i < v_; ++i)
                cells[0][static_cast<std::size_t>(i)] = i;
        }
        refine(cells);
        search(cells);
        return best_;
    }

private:
    // Split every cell by the vector of red-neighbour counts into each cell,
    // until the partition is equitable.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::uint64_t> masks(cells.size(), 0);
            for (std::size_t j = 0; j < cells.size(); ++j)
                for (int u : cells[j])
                    masks[j] |= std::uint64_t{1} << u;
            Cells next;
            next.reserve(cells.size() + 4);
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> sig;
                sig.reserve(cell.size());
                for (int u : cell) {
                    std::vector<int> counts(masks.size());
                    for (std::size_t j = 0; j < masks.size(); ++j)
                        counts[j] = std::popcount(adj_[static_cast<std::size_t>(u)] & masks[j]);
                    sig.emplace_back(std::move(counts), u);
                }
                std::stable_sort(sig.begin(), sig.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::size_t start = 0;
                for (std::size_t i = 1; i <= sig.size(); ++i) {
                    if (i == sig.size() || sig[i].first != sig[start].first) {
                        std::vector<int> part;
                        for (std::size_t t = start; t < i; ++t)
                            part.push_back(sig[t].second);
                        next.push_back(std::move(part));
                        start = i;
                    }
                }
            }
            if (next.size() != cells.size())
                changed = true;
            cells = std::move(next);
        }
    }

    void leaf(const Cells& cells) {
        if (++leaves_ > budget_)
            throw BudgetExceeded("canonical_key: leaf budget exceeded");
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(v_));
        for (const auto& cell : cells)
            order.push_back(cell[0]);
        std::vector<std::uint8_t> bits;
        bits.reserve(static_cast<std::size_t>(v_) * static_cast<std::size_t>(v_) / 2);
        for (int p = 0; p < v_; ++p)
            for (int q = p + 1; q < v_; ++q)
                bits.push_back(
                    static_cast<std::uint8_t>((adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] >>
                                               order[static_cast<std::size_t>(q)]) &
                                              1U));
        if (!have_ || bits < best_) {
            best_ = std::move(bits);
            have_ = true;
        }
    }

    void search(const Cells& cells) {
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        const auto& cell = cells[target];
        std::vector<int> tried;
        for (int u : cell) {
            // Swapping twins in one cell is an automorphism fixing the partition.
            bool twin = false;
            for (int w : tried) {
                const std::uint64_t both = (std::uint64_t{1} << u) | (std::uint64_t{1} << w);
                if (((adj_[static_cast<std::size_t>(u)] ^ adj_[static_cast<std::size_t>(w)]) & ~both) == 0) {
                    twin = true;
                    break;
                }
            }
            if (twin)
                continue;
            tried.push_back(u);
            Cells next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    next.push_back(cells[i]);
                    continue;
                }
                next.push_back({u});
                std::vector<int> rest;
                for (int w : cell)
                    if (w != u)
                        rest.push_back(w);
                next.push_back(std::move(rest));
            }
            refine(next);
            search(next);
        }
    }

    int v_;
    std::size_t budget_;
    std::vector<std::uint64_t> adj_;
    std::size_t leaves_ = 0;
    bool have_ = false;
    std::vector<std::uint8_t> best_;
};

}  // namespace

std::string CanonicalKey::hex() const {
    std::string out;
    char buf[3];
    for (auto b : bytes) {
        std::snprintf(buf, sizeof buf, "%02x", b);
        out += buf;
    }
    return out;
}

CanonicalKey canonical_key(const EdgeColoring& c, std::size_t leaf_budget) {
    if (c.vertices() > max_canonical_vertices)
        throw std::invalid_argument("canonical_key: at most 12 vertices");
    const std::vector<std::uint8_t> bits = Canonizer(c, leaf_budget).run();
    CanonicalKey key;
    key.bytes.push_back(static_cast<std::uint8_t>(c.vertices()));
    std::uint8_t acc = 0;
    int fill = 0;
    for (auto b : bits) {
        acc = static_cast<std::uint8_t>((acc << 1) | b);
        if (++fill == 8) {
            key.bytes.push_back(acc);
            acc = 0;
            fill = 0;
        }
    }
    if (fill > 0)
        key.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - fill)));
    return key;
}

}  // namespace ramsey::comb
