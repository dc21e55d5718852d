#include "ramsey/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace ramsey::diag {

void MissProbabilityModel::validate() const {
    if (k < 1 || d < 1 || r < 1 || r > d)
        throw std::invalid_argument("MissProbabilityModel: need k >= 1 and 1 <= r <= d");
}

double miss_probability(const MissProbabilityModel& m) {
    m.validate();
    return std::exp(-static_cast<double>(m.k) * m.r / m.d);
}

double chernoff_miss(const MissProbabilityModel& m) {
    m.validate();
    const double mu = static_cast<double>(m.k) * m.r / m.d;
    const double delta = 1.0 - (m.r - 1) / mu;
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::domain_error("chernoff_miss: delta outside (0, 1]; need kr/d > r - 1");
    return std::exp(-mu * delta * delta / 2.0);
}

double chernoff_miss_printed(const MissProbabilityModel& m) {
    m.validate();
    const double f = 1.0 - static_cast<double>(m.r - 1) / m.k;
    return std::exp(-static_cast<double>(m.k) * m.r / (2.0 * m.d) * f * f);
}

}  // namespace ramsey::diag
