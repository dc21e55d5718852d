#include "ramsey/combinatorics.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <mutex>

namespace ramsey::comb {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i; cancel first so only true overflow throws.
        const auto ii = static_cast<std::uint64_t>(i);
        const std::uint64_t g = std::gcd(r, ii);
        const std::uint64_t f = static_cast<std::uint64_t>(n - k + i) / (ii / g);
        if (__builtin_mul_overflow(r / g, f, &r))
            throw std::overflow_error("binomial: result exceeds 64 bits");
    }
    return r;
}

std::uint64_t graded_ramsey(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("graded_ramsey: m, n must be >= 1");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::uint64_t> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find({m, n}); it != memo.end())
            return it->second;
    }
    std::uint64_t value = 1;
    if (m > 1 && n > 1) {
        const std::uint64_t a = graded_ramsey(m - 1, n);
        const std::uint64_t b = graded_ramsey(m, n - 1);
        if (a > std::numeric_limits<std::uint64_t>::max() - b)
            throw std::overflow_error("graded_ramsey: value exceeds 64 bits");
        value = a + b;
    }
    std::lock_guard lock(mu);
    memo[{m, n}] = value;
    return value;
}

QubitCost qubit_cost(int n) {
    if (n < 2)
        throw std::invalid_argument("qubit_cost: n must be >= 2");
    const std::uint64_t e = binomial(n, 2);
    return {e, e + 16};
}

const std::vector<KnownRamsey>& known_ramsey_values() {
    static const std::vector<KnownRamsey> values = {
        {1, 1, 1}, {1, 2, 1}, {2, 2, 2}, {2, 3, 3}, {3, 3, 6},
        {3, 4, 9}, {3, 6, 18}, {4, 4, 18}, {4, 5, 25},
    };
    return values;
}

}  // namespace ramsey::comb
