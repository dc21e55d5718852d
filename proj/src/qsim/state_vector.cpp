#include "ramsey/qsim.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey::qsim {

StateVector::StateVector(int qubits) : qubits_(qubits) {
    if (qubits < 0 || qubits > max_qubits)
        throw std::invalid_argument("StateVector: qubit count must lie in [0, 14]");
    amp_.assign(std::size_t{1} << qubits, Complex{});
    amp_[0] = 1.0;
}

StateVector StateVector::basis(int qubits, std::uint64_t index) {
    StateVector s(qubits);
    if (index >= s.size())
        throw std::out_of_range("StateVector::basis: index out of range");
    s.amp_[0] = 0.0;
    s.amp_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    const int q = qubits_for(amps.size());
    if ((std::size_t{1} << q) != amps.size())
        throw std::invalid_argument("StateVector: length must be a power of two");
    double s = 0.0;
    for (const auto& a : amps)
        s += std::norm(a);
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::invalid_argument("StateVector: zero or non-finite amplitudes");
    const double inv = 1.0 / std::sqrt(s);
    for (auto& a : amps)
        a *= inv;
    StateVector out(q);
    out.amp_ = std::move(amps);
    return out;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amp_)
        s += std::norm(a);
    return std::sqrt(s);
}

double StateVector::probability(std::span<const int> qubits, std::uint64_t value) const {
    std::uint64_t mask = 0;
    std::uint64_t want = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        mask |= std::uint64_t{1} << qubits[i];
        if ((value >> i) & 1U)
            want |= std::uint64_t{1} << qubits[i];
    }
    double p = 0.0;
    for (std::size_t idx = 0; idx < amp_.size(); ++idx)
        if ((idx & mask) == want)
            p += std::norm(amp_[idx]);
    return p;
}

int qubits_for(std::size_t dim) {
    int q = 0;
    while ((std::size_t{1} << q) < dim)
        ++q;
    return q;
}

void Gate::validate(int qubits) const {
    if (targets.empty())
        throw std::invalid_argument("Gate: no targets");
    if (u.rows() != (std::size_t{1} << targets.size()) || !u.is_square())
        throw std::invalid_argument("Gate: matrix size does not match target count");
    if (!control_values.empty() && control_values.size() != controls.size())
        throw std::invalid_argument("Gate: control values do not match controls");
    std::uint64_t seen = 0;
    auto claim = [&](int q) {
        if (q < 0 || q >= qubits)
            throw std::invalid_argument("Gate: qubit index out of range");
        if ((seen >> q) & 1U)
            throw std::invalid_argument("Gate: repeated qubit");
        seen |= std::uint64_t{1} << q;
    };
    for (int q : targets)
        claim(q);
    for (int q : controls)
        claim(q);
    const Matrix g = u.adjoint() * u;
    const Matrix id = Matrix::identity(u.rows());
    if ((g - id).max_abs() > 1e-9)
        throw std::invalid_argument("Gate: matrix is not unitary");
}

void apply(StateVector& s, const Gate& g) {
    auto& amp = s.amplitudes();
    std::uint64_t tmask = 0;
    for (int q : g.targets)
        tmask |= std::uint64_t{1} << q;
    std::uint64_t cmask = 0;
    std::uint64_t cwant = 0;
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
        cmask |= std::uint64_t{1} << g.controls[i];
        const int val = g.control_values.empty() ? 1 : g.control_values[i];
        if (val)
            cwant |= std::uint64_t{1} << g.controls[i];
    }
    const std::size_t dim = g.u.rows();
    std::vector<std::uint64_t> offset(dim, 0);
    for (std::size_t t = 0; t < dim; ++t)
        for (std::size_t i = 0; i < g.targets.size(); ++i)
            if ((t >> i) & 1U)
                offset[t] |= std::uint64_t{1} << g.targets[i];
    std::vector<Complex> in(dim), out(dim);
    for (std::uint64_t base = 0; base < amp.size(); ++base) {
        if ((base & tmask) != 0 || (base & cmask) != cwant)
            continue;
        for (std::size_t t = 0; t < dim; ++t)
            in[t] = amp[base | offset[t]];
        for (std::size_t r = 0; r < dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < dim; ++c)
                acc += g.u(r, c) * in[c];
            out[r] = acc;
        }
        for (std::size_t t = 0; t < dim; ++t)
            amp[base | offset[t]] = out[t];
    }
}

}  // namespace ramsey::qsim
