#include "ramsey/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey::diag {

DirectionBatch SeedScheduleEmbedding::base_directions(int d, int k, std::uint64_t seed, int n) const {
    return sample_directions(d, k, stream_seed(seed, static_cast<std::uint64_t>(n)));
}

ConstraintRestrictedEmbedding::ConstraintRestrictedEmbedding(std::map<int, int> ranks)
    : ranks_(std::move(ranks)) {
    for (const auto& [n, r] : ranks_)
        if (r < 0)
            throw std::invalid_argument("ConstraintRestrictedEmbedding: negative rank at n=" + std::to_string(n));
}

int ConstraintRestrictedEmbedding::rank(int n) const {
    const auto it = ranks_.find(n);
    if (it == ranks_.end())
        throw std::out_of_range("ConstraintRestrictedEmbedding: no survivor rank for n=" + std::to_string(n));
    return it->second;
}

DirectionBatch ConstraintRestrictedEmbedding::base_directions(int d, int k, std::uint64_t seed, int) const {
    return sample_directions(d, k, seed);
}

std::map<int, int> rank_profile_from_clique(comb::CliqueConstraint k, std::span<const int> n_list, int d) {
    std::map<int, int> out;
    for (int n : n_list) {
        const auto r = comb::survivor_rank(k, n, d);
        if (!r)
            throw comb::BudgetExceeded("survivor rank unknown at v=" + std::to_string(n));
        out[n] = *r;
    }
    return out;
}

CellSample restrict_cell(const DirectionBatch& base, int rank, std::uint64_t basis_tag) {
    const int d = base.d;
    if (rank < 0 || rank >= d)
        throw std::invalid_argument("restrict_cell: rank must lie in [0, d-1]");
    const auto n = static_cast<std::size_t>(d);
    CellSample cell;
    cell.d = d;
    cell.rank = rank;
    cell.constraint = Matrix::identity(n);
    std::vector<std::vector<double>> q;
    if (rank > 0) {
        q = survivor_basis(d, stream_seed(base.seed, basis_tag));
        q.resize(static_cast<std::size_t>(rank));
        for (const auto& u : q)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    cell.constraint(i, j) -= u[i] * u[j];
    }
    cell.projected.reserve(base.vectors.size());
    for (const auto& g : base.vectors) {
        std::vector<double> w = g;
        for (const auto& u : q) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                dot += u[i] * w[i];
            for (std::size_t i = 0; i < n; ++i)
                w[i] -= dot * u[i];
        }
        double s = 0.0;
        for (double x : w)
            s += x * x;
        if (std::sqrt(s) < 1e-12)
            continue;
        cell.projected.push_back(std::move(w));
    }
    return cell;
}

}  // namespace ramsey::diag
