#include "ramsey/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ramsey::spectral {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

void reduce_to_hessenberg(Matrix& h) {
    const std::size_t n = h.rows();
    if (n < 3)
        return;
    std::vector<Complex> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0)
            continue;
        const Complex x0 = h(k + 1, k);
        const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
        const Complex alpha = -phase * xnorm;

        std::fill(v.begin(), v.end(), Complex{});
        for (std::size_t i = k + 1; i < n; ++i)
            v[i] = h(i, k);
        v[k + 1] -= alpha;
        double vnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            vnorm += std::norm(v[i]);
        if (vnorm == 0.0)
            continue;
        const double beta = 2.0 / vnorm;

        // H <- (I - beta v v^H) H
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i)
                s += std::conj(v[i]) * h(i, j);
            s *= beta;
            for (std::size_t i = k + 1; i < n; ++i)
                h(i, j) -= v[i] * s;
        }
        // H <- H (I - beta v v^H)
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j)
                s += h(i, j) * v[j];
            s *= beta;
            for (std::size_t j = k + 1; j < n; ++j)
                h(i, j) -= s * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i)
            h(i, k) = 0.0;
    }
}

struct Givens {
    double c = 1.0;
    Complex s = 0.0;
};

// [c, s; -conj(s), c] [a; b] = [r; 0]
Givens make_givens(Complex a, Complex b) {
    const double ab = std::abs(b);
    if (ab == 0.0)
        return {};
    const double aa = std::abs(a);
    if (aa == 0.0)
        return {0.0, std::conj(b) / ab};
    const double norm = std::hypot(aa, ab);
    return {aa / norm, (a / aa) * std::conj(b) / norm};
}

void rotate_rows(Matrix& h, const Givens& g, std::size_t i, std::size_t j, std::size_t c0,
                 std::size_t c1) {
    for (std::size_t col = c0; col <= c1; ++col) {
        const Complex x = h(i, col);
        const Complex y = h(j, col);
        h(i, col) = g.c * x + g.s * y;
        h(j, col) = -std::conj(g.s) * x + g.c * y;
    }
}

void rotate_cols(Matrix& h, const Givens& g, std::size_t i, std::size_t j, std::size_t r0,
                 std::size_t r1) {
    for (std::size_t row = r0; row <= r1; ++row) {
        const Complex x = h(row, i);
        const Complex y = h(row, j);
        h(row, i) = x * g.c + y * std::conj(g.s);
        h(row, j) = -x * g.s + y * g.c;
    }
}

Complex wilkinson_shift(const Matrix& h, std::size_t iu, int iter) {
    if (iter == 10 || iter == 20) {
        double s = std::abs(h(iu, iu - 1).real());
        if (iu >= 2)
            s += std::abs(h(iu - 1, iu - 2).real());
        return h(iu, iu) + s;
    }
    const Complex a = h(iu - 1, iu - 1);
    const Complex b = h(iu - 1, iu);
    const Complex c = h(iu, iu - 1);
    const Complex d = h(iu, iu);
    const Complex half_tr = 0.5 * (a + d);
    const Complex det = a * d - b * c;
    const Complex disc = std::sqrt(half_tr * half_tr - det);
    Complex e1 = half_tr + disc;
    Complex e2 = half_tr - disc;
    // Recover the smaller root from the product to avoid cancellation.
    if (std::abs(e1) >= std::abs(e2)) {
        if (std::abs(e1) > 0.0)
            e2 = det / e1;
    } else if (std::abs(e2) > 0.0) {
        e1 = det / e2;
    }
    return std::abs(e1 - d) < std::abs(e2 - d) ? e1 : e2;
}

}  // namespace

Spectrum eig_general(const Matrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("eig_general: matrix is not square");
    if (!m.all_finite())
        throw std::invalid_argument("eig_general: non-finite entries");
    const std::size_t n = m.rows();
    Spectrum out;
    if (n == 0)
        return out;

    Matrix h = m;
    reduce_to_hessenberg(h);

    const int max_iter_per_value = 30 * static_cast<int>(std::max<std::size_t>(n, 1));
    std::size_t iu = n - 1;
    int iter = 0;
    while (iu > 0) {
        // Deflate converged trailing subdiagonal entries.
        const double local = std::abs(h(iu - 1, iu - 1)) + std::abs(h(iu, iu));
        if (std::abs(h(iu, iu - 1)) <= eps * std::max(local, std::numeric_limits<double>::min())) {
            h(iu, iu - 1) = 0.0;
            --iu;
            iter = 0;
            continue;
        }
        if (++iter > max_iter_per_value)
            throw ConvergenceError("eig_general: QR iteration did not converge",
                                   std::abs(h(iu, iu - 1)));

        std::size_t il = iu - 1;
        while (il > 0) {
            const double s = std::abs(h(il - 1, il - 1)) + std::abs(h(il, il));
            if (std::abs(h(il, il - 1)) <= eps * s) {
                h(il, il - 1) = 0.0;
                break;
            }
            --il;
        }

        const Complex shift = wilkinson_shift(h, iu, iter);
        Givens g = make_givens(h(il, il) - shift, h(il + 1, il));
        rotate_rows(h, g, il, il + 1, il, iu);
        rotate_cols(h, g, il, il + 1, il, std::min(il + 2, iu));
        for (std::size_t i = il + 1; i < iu; ++i) {
            g = make_givens(h(i, i - 1), h(i + 1, i - 1));
            rotate_rows(h, g, i, i + 1, i - 1, iu);
            h(i + 1, i - 1) = 0.0;
            rotate_cols(h, g, i, i + 1, il, std::min(i + 2, iu));
        }
    }

    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.eigenvalues[i] = h(i, i);
    return out;
}

HermitianEigen eig_hermitian(const Matrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("eig_hermitian: matrix is not square");
    if (!m.all_finite())
        throw std::invalid_argument("eig_hermitian: non-finite entries");
    if (!is_hermitian(m, 1e-10))
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    const std::size_t n = m.rows();
    Matrix a = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    Matrix w = Matrix::identity(n);

    const double scale = std::max(a.norm_fro(), std::numeric_limits<double>::min());
    constexpr int max_sweeps = 100;
    int sweep = 0;
    for (;; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += std::norm(a(p, q));
        if (std::sqrt(2.0 * off) <= eps * scale)
            break;
        if (sweep >= max_sweeps)
            throw ConvergenceError("eig_hermitian: Jacobi sweeps did not converge", std::sqrt(off));

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const double beta = std::abs(b);
                if (beta <= 1e-300)
                    continue;
                const Complex phase = b / beta;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * beta, app - aqq);
                const double cs = std::cos(theta);
                const double sn = std::sin(theta);
                // V = diag(1, e^{-i phi}) [[cs, -sn], [sn, cs]]
                const Complex v00 = cs;
                const Complex v01 = -sn;
                const Complex v10 = std::conj(phase) * sn;
                const Complex v11 = std::conj(phase) * cs;

                for (std::size_t r = 0; r < n; ++r) {
                    const Complex x = a(r, p);
                    const Complex y = a(r, q);
                    a(r, p) = x * v00 + y * v10;
                    a(r, q) = x * v01 + y * v11;
                }
                for (std::size_t c = 0; c < n; ++c) {
                    const Complex x = a(p, c);
                    const Complex y = a(q, c);
                    a(p, c) = std::conj(v00) * x + std::conj(v10) * y;
                    a(q, c) = std::conj(v01) * x + std::conj(v11) * y;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex x = w(r, p);
                    const Complex y = w(r, q);
                    w(r, p) = x * v00 + y * v10;
                    w(r, q) = x * v01 + y * v11;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
    HermitianEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r)
            out.vectors(r, k) = w(r, order[k]);
    }
    return out;
}

LogTrace log_exp_trace(std::span<const Complex> eigenvalues, double alpha) {
    LogTrace out;
    if (eigenvalues.empty()) {
        out.log10_abs = -std::numeric_limits<double>::infinity();
        return out;
    }
    double shift = -std::numeric_limits<double>::infinity();
    for (const auto& lam : eigenvalues)
        shift = std::max(shift, -alpha * lam.real());
    Complex sum = 0.0;
    for (const auto& lam : eigenvalues)
        sum += std::exp(Complex(-alpha * lam.real() - shift, -alpha * lam.imag()));
    const double mag = std::abs(sum);
    if (mag == 0.0) {
        out.log10_abs = -std::numeric_limits<double>::infinity();
        return out;
    }
    out.log10_abs = (std::log(mag) + shift) / std::log(10.0);
    out.phase = std::arg(sum);
    return out;
}

double LogTrace::real_value() const {
    if (!std::isfinite(log10_abs))
        return 0.0;
    return std::pow(10.0, log10_abs) * std::cos(phase);
}

double tilted_mean(std::span<const Complex> eigenvalues, double alpha) {
    if (eigenvalues.empty())
        throw std::invalid_argument("tilted_mean: empty spectrum");
    double shift = -std::numeric_limits<double>::infinity();
    for (const auto& lam : eigenvalues)
        shift = std::max(shift, -alpha * lam.real());
    Complex num = 0.0;
    Complex den = 0.0;
    for (const auto& lam : eigenvalues) {
        const Complex w = std::exp(Complex(-alpha * lam.real() - shift, -alpha * lam.imag()));
        num += lam * w;
        den += w;
    }
    if (std::abs(den) == 0.0)
        throw std::domain_error("tilted_mean: weights cancel");
    return (num / den).real();
}

}  // namespace ramsey::spectral
