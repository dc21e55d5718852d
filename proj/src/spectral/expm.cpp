#include "ramsey/spectral.hpp"

#include <array>
#include <cmath>

namespace ramsey::spectral {
namespace {

// Backward-error bounds for the [m/m] Padé approximants in double precision
// (Higham 2005).
constexpr std::array<double, 5> theta = {1.495585217958292e-2, 2.539398330063230e-1,
                                         9.504178996162932e-1, 2.097847961257068e0,
                                         5.371920351148152e0};

constexpr std::array<double, 4> b3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> b5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> b7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                      25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> b9 = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                       30270240.0,    2162160.0,    110880.0,     3960.0,
                                       90.0,          1.0};
constexpr std::array<double, 14> b13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

template <std::size_t N>
Matrix pade_low(const Matrix& a, const std::array<double, N>& b) {
    const std::size_t n = a.rows();
    const Matrix a2 = a * a;
    Matrix u_even = Matrix::identity(n) * b[1];
    Matrix v = Matrix::identity(n) * b[0];
    Matrix power = Matrix::identity(n);
    for (std::size_t j = 2; j < N; j += 2) {
        power = power * a2;
        v += power * b[j];
        u_even += power * b[j + 1];
    }
    const Matrix u = a * u_even;
    return solve(v - u, v + u);
}

Matrix pade13(const Matrix& a) {
    const std::size_t n = a.rows();
    const Matrix id = Matrix::identity(n);
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    Matrix inner_u = a6 * b13[13] + a4 * b13[11] + a2 * b13[9];
    Matrix u = a * (a6 * inner_u + a6 * b13[7] + a4 * b13[5] + a2 * b13[3] + id * b13[1]);
    Matrix inner_v = a6 * b13[12] + a4 * b13[10] + a2 * b13[8];
    Matrix v = a6 * inner_v + a6 * b13[6] + a4 * b13[4] + a2 * b13[2] + id * b13[0];
    return solve(v - u, v + u);
}

}  // namespace

Matrix mat_exp(const Matrix& m, double tol) {
    if (!m.is_square())
        throw std::invalid_argument("mat_exp: matrix is not square");
    if (!m.all_finite())
        throw std::invalid_argument("mat_exp: non-finite entries");
    if (!(tol > 0.0 && tol <= 1e-6))
        throw std::invalid_argument("mat_exp: tol must lie in (0, 1e-6]");
    if (m.empty())
        return m;

    const double norm = m.norm_1();
    if (norm <= theta[0])
        return pade_low(m, b3);
    if (norm <= theta[1])
        return pade_low(m, b5);
    if (norm <= theta[2])
        return pade_low(m, b7);
    if (norm <= theta[3])
        return pade_low(m, b9);

    int squarings = 0;
    if (norm > theta[4])
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta[4])));
    Matrix scaled = m * Complex(std::ldexp(1.0, -squarings));
    Matrix r = pade13(scaled);
    for (int i = 0; i < squarings; ++i)
        r = r * r;
    return r;
}

}  // namespace ramsey::spectral
