#include "ramsey/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey::diag {
namespace {

std::vector<spectral::Complex> eigenvalues_of(const Matrix& a) {
    if (spectral::is_hermitian(a, 1e-12)) {
        const auto eh = spectral::eig_hermitian(a);
        return {eh.values.begin(), eh.values.end()};
    }
    return spectral::eig_general(a).eigenvalues;
}

}  // namespace

double exp_witness(const Matrix& a, double alpha) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("exp_witness: alpha must be >= 0");
    const auto ev = eigenvalues_of(a);
    return spectral::log_exp_trace(ev, alpha).log10_abs;
}

double mean_field_trace(double d, double k, double alpha) {
    if (!(d > 0.0) || k < 0.0 || alpha < 0.0)
        throw std::invalid_argument("mean_field_trace: need d > 0, k >= 0, alpha >= 0");
    return std::log10(d) - (alpha * k / d) / std::log(10.0);
}

double lyapunov_rate(const Matrix& a, double alpha) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("lyapunov_rate: alpha must be >= 0");
    const auto ev = eigenvalues_of(a);
    return spectral::tilted_mean(ev, alpha);
}

double slope_fit(std::span<const double> alphas, std::span<const double> log10_traces) {
    if (alphas.size() != log10_traces.size())
        throw std::invalid_argument("slope_fit: size mismatch");
    if (alphas.size() < 2)
        throw std::invalid_argument("slope_fit: need at least two points");
    const double n = static_cast<double>(alphas.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        mx += alphas[i];
        my += log10_traces[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        sxx += (alphas[i] - mx) * (alphas[i] - mx);
        sxy += (alphas[i] - mx) * (log10_traces[i] - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("slope_fit: degenerate grid (all alpha equal)");
    return sxy / sxx;
}

}  // namespace ramsey::diag
