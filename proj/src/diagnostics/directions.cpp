#include "ramsey/diagnostics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ramsey::diag {
namespace {

std::vector<double> unit_gaussian(std::mt19937_64& rng, std::normal_distribution<double>& normal, int d) {
    std::vector<double> v(static_cast<std::size_t>(d));
    while (true) {
        double s = 0.0;
        for (auto& x : v) {
            x = normal(rng);
            s += x * x;
        }
        if (s > 0.0) {
            const double inv = 1.0 / std::sqrt(s);
            for (auto& x : v)
                x *= inv;
            return v;
        }
    }
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

DirectionBatch sample_directions(int d, int k, std::uint64_t seed) {
    if (d < 2)
        throw std::invalid_argument("sample_directions: d must be >= 2");
    if (k < 0)
        throw std::invalid_argument("sample_directions: k must be >= 0");
    DirectionBatch b{d, k, seed, {}};
    b.vectors.reserve(static_cast<std::size_t>(k));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int j = 0; j < k; ++j)
        b.vectors.push_back(unit_gaussian(rng, normal, d));
    return b;
}

Matrix build_accumulator(const DirectionBatch& batch) {
    const auto d = static_cast<std::size_t>(batch.d);
    Matrix a(d, d);
    for (const auto& v : batch.vectors)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                a(i, j) += v[i] * v[j];
    return a;
}

Matrix linear_product(const DirectionBatch& batch) {
    const auto d = static_cast<std::size_t>(batch.d);
    Matrix p = Matrix::identity(d);
    std::vector<spectral::Complex> pv(d);
    // P <- P (I - v v^T), so the factors multiply in index order.
    for (const auto& v : batch.vectors) {
        for (std::size_t i = 0; i < d; ++i) {
            spectral::Complex s = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                s += p(i, j) * v[j];
            pv[i] = s;
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                p(i, j) -= pv[i] * v[j];
    }
    return p;
}

LinearWitness linear_witness(const DirectionBatch& batch) {
    const Matrix p = linear_product(batch);
    const spectral::Spectrum s = spectral::eig_general(p);
    LinearWitness w;
    w.tr_lin = p.trace().real();
    w.min_re_lambda = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front().real();
    for (const auto& lam : s.eigenvalues) {
        w.min_re_lambda = std::min(w.min_re_lambda, lam.real());
        w.max_im_lambda = std::max(w.max_im_lambda, std::abs(lam.imag()));
    }
    return w;
}

MonteCarloEstimate deflation_norm_mc(int d, int k, int trials, std::uint64_t seed) {
    if (d < 2 || k < 0 || trials < 2)
        throw std::invalid_argument("deflation_norm_mc: need d >= 2, k >= 0, trials >= 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::vector<double> x = unit_gaussian(rng, normal, d);
        // The last factor acts first on x.
        std::vector<std::vector<double>> vs;
        vs.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            vs.push_back(unit_gaussian(rng, normal, d));
        for (int j = k - 1; j >= 0; --j) {
            const auto& v = vs[static_cast<std::size_t>(j)];
            double dot = 0.0;
            for (int i = 0; i < d; ++i)
                dot += v[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            for (int i = 0; i < d; ++i)
                x[static_cast<std::size_t>(i)] -= dot * v[static_cast<std::size_t>(i)];
        }
        double nrm = 0.0;
        for (double xi : x)
            nrm += xi * xi;
        sum += nrm;
        sum_sq += nrm * nrm;
    }
    MonteCarloEstimate e;
    e.trials = trials;
    e.mean = sum / trials;
    const double var = std::max(0.0, (sum_sq - trials * e.mean * e.mean) / (trials - 1));
    e.std_error = std::sqrt(var / trials);
    return e;
}

std::vector<std::vector<double>> survivor_basis(int d, std::uint64_t seed) {
    if (d < 2)
        throw std::invalid_argument("survivor_basis: d must be >= 2");
    const auto n = static_cast<std::size_t>(d);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<double>> q;
    q.reserve(n);
    while (q.size() < n) {
        std::vector<double> v(n);
        for (auto& x : v)
            x = normal(rng);
        // Modified Gram-Schmidt, two passes.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : q) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    dot += u[i] * v[i];
                for (std::size_t i = 0; i < n; ++i)
                    v[i] -= dot * u[i];
            }
        double s = 0.0;
        for (double x : v)
            s += x * x;
        if (s < 1e-20)
            continue;
        const double inv = 1.0 / std::sqrt(s);
        for (auto& x : v)
            x *= inv;
        q.push_back(std::move(v));
    }
    return q;
}

}  // namespace ramsey::diag
