#include "ramsey/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace ramsey::spectral {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("Matrix: ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::diagonal(std::span<const Complex> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

Complex Matrix::trace() const {
    if (!is_square())
        throw std::invalid_argument("trace: matrix is not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

bool Matrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double Matrix::norm_fro() const noexcept {
    double s = 0.0;
    for (const auto& z : data_)
        s += std::norm(z);
    return std::sqrt(s);
}

double Matrix::norm_1() const noexcept {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double Matrix::max_abs() const noexcept {
    double best = 0.0;
    for (const auto& z : data_)
        best = std::max(best, std::abs(z));
    return best;
}

std::vector<Complex> Matrix::apply(std::span<const Complex> x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Complex> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex s = 0.0;
        const Complex* row = &data_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j)
            s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex s) {
    for (auto& z : data_)
        z *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        Complex* crow = &c.data_[i * c.cols_];
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a.data_[i * a.cols_ + k];
            if (aik == Complex{})
                continue;
            const Complex* brow = &b.data_[k * b.cols_];
            for (std::size_t j = 0; j < b.cols_; ++j)
                crow[j] += aik * brow[j];
        }
    }
    return c;
}

Matrix outer(std::span<const Complex> u, std::span<const Complex> v) {
    Matrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            m(i, j) = u[i] * std::conj(v[j]);
    return m;
}

bool is_hermitian(const Matrix& m, double tol) {
    if (!m.is_square())
        return false;
    const double scale = std::max(1.0, m.max_abs());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol * scale)
                return false;
    return true;
}

Matrix solve(const Matrix& m, const Matrix& b) {
    if (!m.is_square() || m.rows() != b.rows())
        throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = m.rows();
    Matrix lu = m;
    Matrix x = b;
    const double scale = std::max(m.max_abs(), 1e-300);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(piv, k)))
                piv = i;
        if (std::abs(lu(piv, k)) <= 1e-14 * scale)
            throw std::domain_error("solve: matrix is numerically singular");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(lu(k, j), lu(piv, j));
            for (std::size_t j = 0; j < x.cols(); ++j)
                std::swap(x(k, j), x(piv, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = lu(i, k) / lu(k, k);
            if (f == Complex{})
                continue;
            for (std::size_t j = k; j < n; ++j)
                lu(i, j) -= f * lu(k, j);
            for (std::size_t j = 0; j < x.cols(); ++j)
                x(i, j) -= f * x(k, j);
        }
    }
    for (std::size_t kk = n; kk-- > 0;) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            Complex s = x(kk, j);
            for (std::size_t c = kk + 1; c < n; ++c)
                s -= lu(kk, c) * x(c, j);
            x(kk, j) = s / lu(kk, kk);
        }
    }
    return x;
}

}  // namespace ramsey::spectral
