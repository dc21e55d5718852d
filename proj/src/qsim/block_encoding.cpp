#include "ramsey/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsey::qsim {
namespace {

std::vector<Complex> padded_unit(std::span<const Complex> x, std::size_t dim, const char* what) {
    double s = 0.0;
    for (const auto& z : x) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument(std::string(what) + ": non-finite entry");
        s += std::norm(z);
    }
    if (std::abs(std::sqrt(s) - 1.0) > 1e-9)
        throw std::invalid_argument(std::string(what) + ": vector must have unit norm");
    std::vector<Complex> out(dim, Complex{});
    std::copy(x.begin(), x.end(), out.begin());
    return out;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int q = lo; q < hi; ++q)
        out.push_back(q);
    return out;
}

// sqrt of a Hermitian PSD matrix, clipping round-off negatives.
Matrix psd_sqrt(const Matrix& m) {
    const auto eh = spectral::eig_hermitian(m);
    const std::size_t n = m.rows();
    Matrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = std::sqrt(std::max(0.0, eh.values[k]));
        if (s == 0.0)
            continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += s * eh.vectors(i, k) * std::conj(eh.vectors(j, k));
    }
    return out;
}

}  // namespace

Matrix BlockEncoding::block() const {
    Matrix b(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            b(i, j) = unitary(i, j);
    return b;
}

BlockEncoding block_encode_rank1(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size() || u.empty())
        throw std::invalid_argument("block_encode_rank1: u and v must have equal nonzero length");
    const int n = std::max(1, qubits_for(u.size()));
    const std::size_t dim = std::size_t{1} << n;
    const auto up = padded_unit(u, dim, "block_encode_rank1");
    const auto vp = padded_unit(v, dim, "block_encode_rank1");

    BlockEncoding enc;
    enc.circuit = Circuit(n + 1);
    enc.data_qubits = n;
    enc.ancillas = 1;
    enc.dim = u.size();
    enc.alpha0 = 2.0;

    const auto data = range(0, n);
    const int anc = n;
    // <0|R|0> = 1/2; R X maps the flagged |1> to R|0>.
    const double c = 0.5;
    const double s = std::sqrt(3.0) / 2.0;
    const Matrix rx{{-s, c}, {c, s}};
    enc.circuit.add(prep_unitary(vp).adjoint(), data);
    enc.circuit.add(pauli_x(), {anc});
    enc.circuit.add(rx, {anc}, data, std::vector<int>(static_cast<std::size_t>(n), 0));
    enc.circuit.add(prep_unitary(up), data);
    enc.unitary = enc.circuit.to_matrix();
    return enc;
}

BlockEncoding lcu_block_encode(const std::vector<LcuTerm>& terms) {
    if (terms.empty())
        throw std::invalid_argument("lcu_block_encode: empty term list");
    const std::size_t d = terms.front().u.size();
    double total = 0.0;
    for (const auto& t : terms) {
        if (t.u.size() != d || t.v.size() != d)
            throw std::invalid_argument("lcu_block_encode: terms must share one dimension");
        if (!std::isfinite(t.weight.real()) || !std::isfinite(t.weight.imag()))
            throw std::invalid_argument("lcu_block_encode: non-finite weight");
        total += std::abs(t.weight);
    }
    if (!(total > 0.0))
        throw std::invalid_argument("lcu_block_encode: all weights are zero");

    const int sel = qubits_for(terms.size());
    const int n = std::max(1, qubits_for(d));
    const int qubits = n + 1 + sel;
    if (qubits > max_qubits)
        throw std::invalid_argument("lcu_block_encode: register exceeds 14 qubits");

    BlockEncoding enc;
    enc.circuit = Circuit(qubits);
    enc.data_qubits = n;
    enc.ancillas = 1 + sel;
    enc.dim = d;
    enc.alpha0 = 2.0 * total;

    const auto gadget_qubits = range(0, n + 1);
    const auto selector = range(n + 1, n + 1 + sel);
    Matrix prep;
    if (sel > 0) {
        std::vector<Complex> amps(std::size_t{1} << sel, Complex{});
        for (std::size_t j = 0; j < terms.size(); ++j)
            amps[j] = std::sqrt(std::abs(terms[j].weight) / total);
        prep = prep_unitary(amps);
        enc.circuit.add(prep, selector);
    }
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (terms[j].weight == Complex{})
            continue;
        const BlockEncoding g = block_encode_rank1(terms[j].u, terms[j].v);
        if (g.data_qubits != n)
            throw std::logic_error("lcu_block_encode: gadget register mismatch");
        const Complex phase = terms[j].weight / std::abs(terms[j].weight);
        std::vector<int> values;
        for (int b = 0; b < sel; ++b)
            values.push_back(static_cast<int>((j >> b) & 1U));
        enc.circuit.add(g.unitary * phase, gadget_qubits, selector, values);
    }
    if (sel > 0)
        enc.circuit.add(prep.adjoint(), selector);
    enc.unitary = enc.circuit.to_matrix();
    return enc;
}

BlockEncoding dilation_encode(const Matrix& f) {
    if (!f.is_square() || f.empty())
        throw std::invalid_argument("dilation_encode: need a nonempty square matrix");
    const int n = std::max(1, qubits_for(f.rows()));
    if (n + 1 > max_qubits)
        throw std::invalid_argument("dilation_encode: register exceeds 14 qubits");
    const std::size_t dim = std::size_t{1} << n;
    Matrix g(dim, dim);
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            g(i, j) = f(i, j);
    const double alpha0 = std::max(1.0, spectral::spectral_norm(f));
    g *= Complex(1.0 / alpha0);

    const Matrix id = Matrix::identity(dim);
    const Matrix gh = g.adjoint();
    const Matrix top_right = psd_sqrt(id - g * gh);
    const Matrix bottom_left = psd_sqrt(id - gh * g);
    Matrix u(2 * dim, 2 * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            u(i, j) = g(i, j);
            u(i, dim + j) = top_right(i, j);
            u(dim + i, j) = bottom_left(i, j);
            u(dim + i, dim + j) = -gh(i, j);
        }

    BlockEncoding enc;
    enc.circuit = Circuit(n + 1);
    enc.circuit.add(u, range(0, n + 1));
    enc.unitary = u;
    enc.data_qubits = n;
    enc.ancillas = 1;
    enc.dim = f.rows();
    enc.alpha0 = alpha0;
    return enc;
}

BlockEncoding encode_exp(const Matrix& a, double alpha) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("encode_exp: alpha must be >= 0");
    return dilation_encode(spectral::mat_exp(a * Complex(-alpha)));
}

}  // namespace ramsey::qsim
