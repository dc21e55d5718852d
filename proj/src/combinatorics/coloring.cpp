#include "ramsey/combinatorics.hpp"

#include <bit>

namespace ramsey::comb {

void CliqueConstraint::validate() const {
    if (m < 1 || n < 1)
        throw std::invalid_argument("clique sizes must be >= 1");
}

std::uint64_t all_vertices(int v) {
    return v >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
}

EdgeColoring::EdgeColoring(int v) : v_(v) {
    if (v < 0 || v > max_vertices)
        throw std::invalid_argument("EdgeColoring: vertex count must lie in [0, 64]");
    red_.assign(static_cast<std::size_t>(v), 0);
}

EdgeColoring EdgeColoring::from_bits(int v, const std::vector<bool>& bits) {
    EdgeColoring c(v);
    if (bits.size() != c.edge_count())
        throw std::invalid_argument("EdgeColoring: bit count must be v(v-1)/2");
    std::size_t e = 0;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            c.set(i, j, bits[e++]);
    return c;
}

EdgeColoring EdgeColoring::from_mask(int v, std::uint64_t mask) {
    EdgeColoring c(v);
    if (c.edge_count() > 64)
        throw std::invalid_argument("EdgeColoring::from_mask: more than 64 edges");
    std::size_t e = 0;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j, ++e)
            if ((mask >> e) & 1U)
                c.set(i, j, true);
    return c;
}

bool EdgeColoring::is_red(int i, int j) const {
    if (i < 0 || j < 0 || i >= v_ || j >= v_ || i == j)
        throw std::out_of_range("EdgeColoring: bad edge");
    return (red_[static_cast<std::size_t>(i)] >> j) & 1U;
}

void EdgeColoring::set(int i, int j, bool red) {
    if (i < 0 || j < 0 || i >= v_ || j >= v_ || i == j)
        throw std::out_of_range("EdgeColoring: bad edge");
    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    if (red) {
        red_[ui] |= std::uint64_t{1} << j;
        red_[uj] |= std::uint64_t{1} << i;
    } else {
        red_[ui] &= ~(std::uint64_t{1} << j);
        red_[uj] &= ~(std::uint64_t{1} << i);
    }
}

std::uint64_t EdgeColoring::blue_neighbors(int i) const {
    return all_vertices(v_) & ~red_[static_cast<std::size_t>(i)] & ~(std::uint64_t{1} << i);
}

std::vector<bool> EdgeColoring::bits() const {
    std::vector<bool> out;
    out.reserve(edge_count());
    for (int i = 0; i < v_; ++i)
        for (int j = i + 1; j < v_; ++j)
            out.push_back(is_red(i, j));
    return out;
}

EdgeColoring EdgeColoring::extended(std::uint64_t red_mask) const {
    if (v_ >= max_vertices)
        throw std::invalid_argument("EdgeColoring::extended: vertex limit reached");
    EdgeColoring c = *this;
    c.v_ = v_ + 1;
    c.red_.push_back(red_mask & all_vertices(v_));
    for (int i = 0; i < v_; ++i)
        if ((red_mask >> i) & 1U)
            c.red_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << v_;
    return c;
}

EdgeColoring pentagon() {
    EdgeColoring c(5);
    for (int i = 0; i < 5; ++i)
        c.set(i, (i + 1) % 5, true);
    return c;
}

bool has_clique(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int size) {
    if (size <= 0)
        return true;
    if (std::popcount(candidates) < size)
        return false;
    if (size == 1)
        return candidates != 0;
    while (candidates) {
        if (std::popcount(candidates) < size)
            return false;
        const int u = std::countr_zero(candidates);
        candidates &= candidates - 1;
        // Later vertices only, so each clique is found once.
        if (has_clique(adj, candidates & adj[static_cast<std::size_t>(u)], size - 1))
            return true;
    }
    return false;
}

bool has_forbidden_clique(const EdgeColoring& c, CliqueConstraint k) {
    k.validate();
    const int v = c.vertices();
    std::vector<std::uint64_t> red(static_cast<std::size_t>(v));
    std::vector<std::uint64_t> blue(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
        red[static_cast<std::size_t>(i)] = c.red_neighbors(i);
        blue[static_cast<std::size_t>(i)] = c.blue_neighbors(i);
    }
    const std::uint64_t all = all_vertices(v);
    return has_clique(red, all, k.m) || has_clique(blue, all, k.n);
}

}  // namespace ramsey::comb
