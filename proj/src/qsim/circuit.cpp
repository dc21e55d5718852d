#include "ramsey/qsim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ramsey::qsim {

Circuit::Circuit(int qubits) : qubits_(qubits) {
    if (qubits < 0 || qubits > max_qubits)
        throw std::invalid_argument("Circuit: qubit count must lie in [0, 14]");
}

Circuit& Circuit::add(Gate g) {
    g.validate(qubits_);
    gates_.push_back(std::move(g));
    return *this;
}

Circuit& Circuit::add(const Matrix& u, std::vector<int> targets, std::vector<int> controls,
                      std::vector<int> control_values) {
    return add(Gate{u, std::move(targets), std::move(controls), std::move(control_values)});
}

void Circuit::apply(StateVector& s) const {
    if (s.qubits() != qubits_)
        throw std::invalid_argument("Circuit::apply: register size mismatch");
    const double n0 = s.norm();
    for (const auto& g : gates_) {
        qsim::apply(s, g);
        if (std::abs(s.norm() - n0) > 1e-10)
            throw std::logic_error("Circuit::apply: norm not preserved");
    }
}

Matrix Circuit::to_matrix() const {
    const std::size_t n = std::size_t{1} << qubits_;
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        StateVector s = StateVector::basis(qubits_, j);
        apply(s);
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = s.amplitudes()[i];
    }
    return m;
}

Matrix hadamard() {
    const double h = 1.0 / std::numbers::sqrt2;
    return Matrix{{h, h}, {h, -h}};
}

Matrix pauli_x() { return Matrix{{0.0, 1.0}, {1.0, 0.0}}; }

Matrix prep_unitary(std::span<const Complex> v) {
    const std::size_t n = v.size();
    double s = 0.0;
    for (const auto& z : v)
        s += std::norm(z);
    if (n == 0 || std::abs(std::sqrt(s) - 1.0) > 1e-9)
        throw std::invalid_argument("prep_unitary: vector must have unit norm");
    std::vector<std::vector<Complex>> cols;
    cols.emplace_back(v.begin(), v.end());
    for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
        std::vector<Complex> c(n, Complex{});
        c[e] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : cols) {
                Complex dot = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    dot += std::conj(q[i]) * c[i];
                for (std::size_t i = 0; i < n; ++i)
                    c[i] -= dot * q[i];
            }
        double nc = 0.0;
        for (const auto& z : c)
            nc += std::norm(z);
        nc = std::sqrt(nc);
        if (nc < 1e-8)
            continue;
        for (auto& z : c)
            z /= nc;
        cols.push_back(std::move(c));
    }
    Matrix u(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            u(i, j) = cols[j][i];
    return u;
}

Matrix inverse_qft(std::size_t n) {
    Matrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
            f(j, k) = std::polar(scale, ang);
        }
    return f;
}

}  // namespace ramsey::qsim
