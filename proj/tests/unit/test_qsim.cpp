#include "oracle.hpp"
#include "ramsey/diagnostics.hpp"
#include "ramsey/qsim.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ramsey;
using namespace ramsey::qsim;

namespace {

std::vector<Complex> random_unit(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> v(n);
    double s = 0.0;
    for (auto& z : v) {
        z = {g(rng), g(rng)};
        s += std::norm(z);
    }
    for (auto& z : v)
        z /= std::sqrt(s);
    return v;
}

// Ancilla-zero block obtained by running the circuit on basis states.
Matrix simulated_block(const BlockEncoding& enc) {
    Matrix b(enc.dim, enc.dim);
    for (std::size_t j = 0; j < enc.dim; ++j) {
        auto s = StateVector::basis(enc.circuit.qubits(), j);
        enc.circuit.apply(s);
        for (std::size_t i = 0; i < enc.dim; ++i)
            b(i, j) = s.amplitudes()[i];
    }
    return b;
}

double max_diff(const Matrix& a, const Matrix& b) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            e = std::max(e, std::abs(a(i, j) - b(i, j)));
    return e;
}

}  // namespace

TEST_CASE("state vector basics") {
    StateVector s(3);
    CHECK(s.size() == 8);
    CHECK(s.norm() == doctest::Approx(1.0));
    const auto b = StateVector::basis(3, 5);
    const std::vector<int> q0{0}, q1{1}, q02{0, 2};
    CHECK(b.probability(q0, 1) == 1.0);
    CHECK(b.probability(q1, 1) == 0.0);
    CHECK(b.probability(q02, 3) == 1.0);
    const auto f = StateVector::from_amplitudes({3.0, 4.0});
    CHECK(std::abs(f.amplitudes()[1] - Complex(0.8)) < 1e-15);
    CHECK_THROWS(StateVector::from_amplitudes({1.0, 0.0, 0.0}));
    CHECK_THROWS(StateVector(max_qubits + 1));
}

TEST_CASE("gates: qubit ordering and controls") {
    // X on qubit 1 maps |0> to |2>.
    StateVector s(2);
    apply(s, Gate{pauli_x(), {1}, {}, {}});
    CHECK(std::abs(s.amplitudes()[2]) == doctest::Approx(1.0));
    // CNOT with control 1, target 0: |2> -> |3>.
    apply(s, Gate{pauli_x(), {0}, {1}, {1}});
    CHECK(std::abs(s.amplitudes()[3]) == doctest::Approx(1.0));
    // Zero-controlled: no effect when control is 1.
    apply(s, Gate{pauli_x(), {0}, {1}, {0}});
    CHECK(std::abs(s.amplitudes()[3]) == doctest::Approx(1.0));
    CHECK_THROWS(Gate({{1.0, 1.0}, {0.0, 1.0}}, {0}, {}, {}).validate(2));
    CHECK_THROWS(Gate(pauli_x(), {0}, {0}, {1}).validate(2));
}

TEST_CASE("circuit matrix matches gate-by-gate application") {
    std::mt19937_64 rng(4);
    Circuit c(3);
    c.add(hadamard(), {0});
    c.add(prep_unitary(random_unit(4, rng)), {1, 2});
    c.add(pauli_x(), {2}, {0}, {1});
    const Matrix u = c.to_matrix();
    const oracle::CMat ue = oracle::to_eigen(u);
    CHECK((ue.adjoint() * ue - oracle::CMat::Identity(8, 8)).norm() < 1e-12);
    StateVector s = StateVector::from_amplitudes(random_unit(8, rng));
    const auto before = s.amplitudes();
    c.apply(s);
    const auto want = u.apply(before);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(std::abs(s.amplitudes()[i] - want[i]) < 1e-12);
}

TEST_CASE("prep unitary and inverse QFT") {
    std::mt19937_64 rng(6);
    const auto v = random_unit(5, rng);
    const Matrix p = prep_unitary(v);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(std::abs(p(i, 0) - v[i]) < 1e-14);
    const oracle::CMat pe = oracle::to_eigen(p);
    CHECK((pe.adjoint() * pe - oracle::CMat::Identity(5, 5)).norm() < 1e-12);

    const Matrix f = inverse_qft(8);
    for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t k = 0; k < 8; ++k) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(j * k) / 8.0;
            CHECK(std::abs(f(j, k) - std::polar(1.0 / std::sqrt(8.0), angle)) < 1e-14);
        }
}

TEST_CASE("rank-1 gadget block is half the outer product") {
    std::mt19937_64 rng(8);
    for (std::size_t d : {2u, 3u, 4u, 8u}) {
        const auto u = random_unit(d, rng), v = random_unit(d, rng);
        const auto enc = block_encode_rank1(u, v);
        const Matrix want = spectral::outer(u, v) * Complex(0.5);
        CHECK(enc.alpha0 == 2.0);
        CHECK(max_diff(simulated_block(enc), want) < 1e-12);
        CHECK(max_diff(enc.block(), want) < 1e-12);
    }
    const std::vector<Complex> not_unit{1.0, 1.0};
    CHECK_THROWS_AS(block_encode_rank1(not_unit, not_unit), std::invalid_argument);
}

TEST_CASE("LCU block reproduces the weighted sum") {
    std::mt19937_64 rng(9);
    std::vector<LcuTerm> terms;
    Matrix want(4, 4);
    double total = 0.0;
    for (Complex w : {Complex(0.7, 0.0), Complex(-0.2, 0.5), Complex(0.0, -1.1)}) {
        LcuTerm t{w, random_unit(4, rng), random_unit(4, rng)};
        want += spectral::outer(t.u, t.v) * w;
        total += std::abs(w);
        terms.push_back(t);
    }
    const auto enc = lcu_block_encode(terms);
    CHECK(enc.alpha0 == doctest::Approx(2.0 * total));
    CHECK(max_diff(simulated_block(enc) * Complex(enc.alpha0), want) < 1e-10);
    CHECK_THROWS(lcu_block_encode({}));
}

TEST_CASE("dilation encoding is unitary with the scaled operator in its corner") {
    std::mt19937_64 rng(10);
    const Matrix f = oracle::random_matrix(3, 3, rng);
    const auto enc = dilation_encode(f);
    CHECK(enc.alpha0 == doctest::Approx(oracle::sigma_max(f)).epsilon(1e-7));
    const oracle::CMat u = oracle::to_eigen(enc.unitary);
    CHECK((u.adjoint() * u - oracle::CMat::Identity(u.rows(), u.cols())).norm() < 1e-9);
    CHECK(max_diff(simulated_block(enc) * Complex(enc.alpha0), f) < 1e-9);

    // Contractions are not rescaled.
    const auto small = dilation_encode(f * Complex(0.1 / oracle::sigma_max(f)));
    CHECK(small.alpha0 == 1.0);
}

TEST_CASE("Hadamard test reads the real part of the expectation") {
    std::mt19937_64 rng(12);
    const Matrix u = prep_unitary(random_unit(4, rng));
    const auto probe = StateVector::from_amplitudes(random_unit(4, rng));
    const auto want = u.apply(probe.amplitudes());
    Complex ev = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        ev += std::conj(probe.amplitudes()[i]) * want[i];
    CHECK(hadamard_test(u, probe) == doctest::Approx(ev.real()).epsilon(1e-12));
    const double sampled = hadamard_test(u, probe, 200000, 3);
    CHECK(std::abs(sampled - ev.real()) < 5.0 / std::sqrt(200000.0));
    CHECK(hadamard_test(u, probe, 1000, 5) == hadamard_test(u, probe, 1000, 5));
}

TEST_CASE("Hutchinson estimate of a trace") {
    std::mt19937_64 rng(14);
    const Matrix h = oracle::random_hermitian(4, rng);
    const auto enc = dilation_encode(h);
    const auto est = hutchinson_trace(enc, 4000, 1);
    CHECK(std::abs(est.estimate - h.trace().real()) < 4.0 * est.std_error);
    CHECK(est.probes == 4000);
    const auto again = hutchinson_trace(enc, 4000, 1);
    CHECK(again.estimate == est.estimate);
}

TEST_CASE("phase estimation on the dilation") {
    std::mt19937_64 rng(15);
    const Matrix a = oracle::random_matrix(2, 2, rng);
    const double sigma = oracle::sigma_max(a);
    const auto pe = phase_estimate_dilation(a, 7, 2.5 / sigma);
    CHECK(std::abs(pe.estimate - sigma) <= pe.resolution);
    CHECK(pe.probability > 0.4);
    CHECK_THROWS_AS(phase_estimate_dilation(a, 9, 1.0), std::invalid_argument);
    // t = pi / sigma puts the top eigenvalue on the wrap boundary.
    const Matrix diag{{1.0, 0.0}, {0.0, 0.25}};
    CHECK_THROWS_AS(phase_estimate_dilation(diag, 4, std::numbers::pi), PhaseWrapError);
}
