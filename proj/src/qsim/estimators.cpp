#include "ramsey/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ramsey::qsim {
namespace {

Gate controlled(const Matrix& u, int data_qubits) {
    std::vector<int> targets;
    for (int q = 0; q < data_qubits; ++q)
        targets.push_back(q);
    return Gate{u, targets, {data_qubits}, {1}};
}

// Exact P(ancilla = 0) of the Hadamard test; the probe fills the low qubits.
double p_zero(const Gate& cu, const Gate& h, const std::vector<Complex>& probe, int data_qubits) {
    StateVector s(data_qubits + 1);
    auto& amp = s.amplitudes();
    std::fill(amp.begin(), amp.end(), Complex{});
    std::copy(probe.begin(), probe.end(), amp.begin());
    apply(s, h);
    apply(s, cu);
    apply(s, h);
    const int anc[] = {data_qubits};
    return s.probability(anc, 0);
}

double z_expectation(double p0, std::uint64_t shots, std::mt19937_64& rng) {
    if (shots == 0)
        return 2.0 * p0 - 1.0;
    std::binomial_distribution<std::uint64_t> bin(shots, std::clamp(p0, 0.0, 1.0));
    return 2.0 * static_cast<double>(bin(rng)) / static_cast<double>(shots) - 1.0;
}

}  // namespace

double hadamard_test(const Matrix& u, const StateVector& probe, std::uint64_t shots, std::uint64_t seed) {
    const int q = probe.qubits();
    if (u.rows() != probe.size() || !u.is_square())
        throw std::invalid_argument("hadamard_test: unitary does not match the probe register");
    if (q + 1 > max_qubits)
        throw std::invalid_argument("hadamard_test: register exceeds 14 qubits");
    const Gate cu = controlled(u, q);
    cu.validate(q + 1);
    const Gate h{hadamard(), {q}, {}, {}};
    std::mt19937_64 rng(seed);
    return z_expectation(p_zero(cu, h, probe.amplitudes(), q), shots, rng);
}

TraceEstimate hutchinson_trace(const BlockEncoding& enc, int probes, std::uint64_t seed, std::uint64_t shots) {
    if (probes < 1)
        throw std::invalid_argument("hutchinson_trace: probes must be >= 1");
    const int q = enc.data_qubits + enc.ancillas;
    if (q + 1 > max_qubits)
        throw std::invalid_argument("hutchinson_trace: register exceeds 14 qubits");
    const Gate cu = controlled(enc.unitary, q);
    cu.validate(q + 1);
    const Gate h{hadamard(), {q}, {}, {}};

    std::mt19937_64 rng(seed);
    std::mt19937_64 shot_rng(seed ^ 0x5eed5eed5eed5eedULL);
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::size_t full = std::size_t{1} << q;
    double sum = 0.0;
    double sum_sq = 0.0;
    std::vector<Complex> probe(full);
    for (int i = 0; i < probes; ++i) {
        std::fill(probe.begin(), probe.end(), Complex{});
        double s = 0.0;
        for (std::size_t j = 0; j < enc.dim; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            probe[j] = Complex(re, im);
            s += re * re + im * im;
        }
        const double inv = 1.0 / std::sqrt(s);
        for (std::size_t j = 0; j < enc.dim; ++j)
            probe[j] *= inv;
        const double x = z_expectation(p_zero(cu, h, probe, q), shots, shot_rng);
        sum += x;
        sum_sq += x * x;
    }
    const double scale = enc.alpha0 * static_cast<double>(enc.dim);
    const double mean = sum / probes;
    TraceEstimate t;
    t.probes = probes;
    t.estimate = scale * mean;
    if (probes > 1) {
        const double var = std::max(0.0, (sum_sq - probes * mean * mean) / (probes - 1));
        t.std_error = scale * std::sqrt(var / probes);
    } else {
        t.std_error = std::numeric_limits<double>::quiet_NaN();
    }
    return t;
}

PhaseEstimate phase_estimate_dilation(const Matrix& a, int m, double t, PhaseInput input, std::uint64_t seed) {
    if (m < 1 || m > 8)
        throw std::invalid_argument("phase_estimate_dilation: m must lie in [1, 8]");
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("phase_estimate_dilation: t must be positive");
    const Matrix h0 = spectral::hermitian_dilation(a);
    const int nq = std::max(1, qubits_for(h0.rows()));
    if (nq + m > max_qubits)
        throw std::invalid_argument("phase_estimate_dilation: register exceeds 14 qubits");
    const std::size_t dim = std::size_t{1} << nq;
    Matrix h(dim, dim);
    for (std::size_t i = 0; i < h0.rows(); ++i)
        for (std::size_t j = 0; j < h0.cols(); ++j)
            h(i, j) = h0(i, j);

    std::vector<Complex> psi(dim, Complex{});
    if (input == PhaseInput::top_eigenvector) {
        const auto eh = spectral::eig_hermitian(h);
        for (std::size_t i = 0; i < dim; ++i)
            psi[i] = eh.vectors(i, dim - 1);
    } else {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (std::size_t i = 0; i < h0.rows(); ++i)
            psi[i] = Complex(normal(rng), normal(rng));
    }

    const int total = nq + m;
    StateVector s(total);
    {
        const StateVector data = StateVector::from_amplitudes(psi);
        auto& amp = s.amplitudes();
        std::fill(amp.begin(), amp.end(), Complex{});
        std::copy(data.amplitudes().begin(), data.amplitudes().end(), amp.begin());
    }
    Circuit c(total);
    std::vector<int> data_q, pe_q;
    for (int q = 0; q < nq; ++q)
        data_q.push_back(q);
    for (int l = 0; l < m; ++l)
        pe_q.push_back(nq + l);
    for (int q : pe_q)
        c.add(hadamard(), {q});
    for (int l = 0; l < m; ++l) {
        const double scale = std::ldexp(t, l);
        c.add(spectral::mat_exp(h * Complex(0.0, -scale)), data_q, {pe_q[static_cast<std::size_t>(l)]}, {1});
    }
    c.add(inverse_qft(std::size_t{1} << m), pe_q);
    c.apply(s);

    const std::uint64_t bins = std::uint64_t{1} << m;
    std::uint64_t best = 0;
    double best_p = -1.0;
    for (std::uint64_t y = 0; y < bins; ++y) {
        const double p = s.probability(pe_q, y);
        if (p > best_p + 1e-12) {
            best_p = p;
            best = y;
        }
    }
    if (best == bins / 2)
        throw PhaseWrapError("phase_estimate_dilation: outcome on the wrap boundary; use a smaller t");
    PhaseEstimate out;
    out.signed_outcome = best < bins / 2 ? static_cast<std::int64_t>(best)
                                         : static_cast<std::int64_t>(best) - static_cast<std::int64_t>(bins);
    out.resolution = 2.0 * std::numbers::pi / (static_cast<double>(bins) * t);
    out.estimate = std::abs(-out.resolution * static_cast<double>(out.signed_outcome));
    out.probability = best_p;
    return out;
}

}  // namespace ramsey::qsim
