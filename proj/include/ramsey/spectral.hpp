// Dense complex linear algebra at desk scale (d <= 64): matrix exponential,
// eigenvalues of general and Hermitian matrices, Hermitian dilation and the
// spectral norm. Everything here is a pure function of its value inputs.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey::spectral {

using Complex = std::complex<double>;

/// Row-major dense complex matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zeros(std::size_t rows, std::size_t cols);
    static Matrix diagonal(std::span<const Complex> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }

    Matrix adjoint() const;
    Matrix transpose() const;
    Complex trace() const;
    bool all_finite() const noexcept;

    double norm_fro() const noexcept;
    /// Maximum absolute column sum.
    double norm_1() const noexcept;
    double max_abs() const noexcept;

    /// y = M x
    std::vector<Complex> apply(std::span<const Complex> x) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(Complex s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// |u><v| = u v^H.
Matrix outer(std::span<const Complex> u, std::span<const Complex> v);

/// Thrown by iterative kernels that exhaust their iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_estimate)
        : std::runtime_error(what), last_estimate_(last_estimate) {}
    double last_estimate() const noexcept { return last_estimate_; }

private:
    double last_estimate_;
};

inline constexpr double default_abs_tol = 1e-10;
inline constexpr double default_rel_tol = 1e-8;

struct Spectrum {
    std::vector<Complex> eigenvalues;
    /// Non-negative, sorted descending. Empty unless the producer computed them.
    std::vector<double> singular_values;
};

struct HermitianEigen {
    /// Ascending.
    std::vector<double> values;
    /// Column j is the eigenvector for values[j].
    Matrix vectors;
};

struct DilationSpectrum {
    Matrix dilation;
    Spectrum spectrum;
};

/// exp(M) by scaling and squaring around a diagonal Padé approximant
/// (degree 3..13 chosen from the 1-norm). tol must lie in (0, 1e-6].
Matrix mat_exp(const Matrix& m, double tol = default_abs_tol);

/// All eigenvalues of a general complex matrix: Householder reduction to upper
/// Hessenberg form, then single-shift QR with deflation (complex Schur form).
/// Throws ConvergenceError if an eigenvalue needs more than 30 * n sweeps.
Spectrum eig_general(const Matrix& m);

/// Cyclic Jacobi for Hermitian input. Rejects matrices whose anti-Hermitian
/// part exceeds 1e-10 * max|m_ij|.
HermitianEigen eig_hermitian(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = 1e-12);

/// H = [[0, A], [A^H, 0]].
Matrix hermitian_dilation(const Matrix& a);

/// Dilation and its (real, descending) spectrum {+-sigma_i(A)} padded with
/// zeros for rectangular A; singular_values holds the min(r, c) sigma_i.
DilationSpectrum dilation_spectrum(const Matrix& a);

/// ||A||_2 via power iteration on the dilation. Converged when successive
/// Rayleigh-type estimates differ by less than tol.
double spectral_norm(const Matrix& a, double tol = default_abs_tol, int max_iter = 10000);

/// log of sum_l exp(-alpha * lambda_l) without overflow or underflow.
struct LogTrace {
    /// log10 |sum|; -inf when the sum cancels exactly.
    double log10_abs = 0.0;
    /// arg(sum) in (-pi, pi].
    double phase = 0.0;

    /// Real part of the trace, possibly 0 after underflow.
    double real_value() const;
};

LogTrace log_exp_trace(std::span<const Complex> eigenvalues, double alpha);

/// sum_l lambda_l w_l / sum_l w_l with w_l = exp(-alpha lambda_l), real part,
/// evaluated with the same shift as log_exp_trace.
double tilted_mean(std::span<const Complex> eigenvalues, double alpha);

/// Solve M X = B by LU with partial pivoting. Throws std::domain_error when
/// M is numerically singular.
Matrix solve(const Matrix& m, const Matrix& b);

}  // namespace ramsey::spectral
