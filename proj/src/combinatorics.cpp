#include "ulam/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ulam {

ExactInt binom(int n, long long k) {
    if (n < 0)
        throw std::invalid_argument("binom: n must be non-negative");
    if (k < 0 || k > n)
        return ExactInt(0);
    if (k > n - k)
        k = n - k;
    // Multiply/divide in lockstep; each prefix product of the rising factors
    // divided by i! is itself a binomial, so div_exact never fails.
    ExactInt r(1);
    for (long long i = 1; i <= k; ++i) {
        r = (r * ExactInt(n - k + i)).div_exact(ExactInt(i));
    }
    return r;
}

ExactInt sphere_volume(int n, int t) {
    if (n < 0 || t < 0)
        throw std::invalid_argument("sphere_volume: arguments must be non-negative");
    ExactInt sum(0);
    for (int l = 0; l <= std::min(t, n); ++l)
        sum += binom(n, l);
    return sum;
}

ExactInt gcd_window(int n_minus_s, int t, int s) {
    if (s < 1)
        throw std::invalid_argument("gcd_window: s must be positive");
    if (n_minus_s < 0 || t < 0)
        throw std::invalid_argument("gcd_window: arguments must be non-negative");
    int lo = std::max(0, t - s + 1);
    ExactInt g(0);
    for (int l = lo; l <= t; ++l)
        g = gcd(g, binom(n_minus_s, l));
    if (g.is_zero())
        return ExactInt(1);
    return g;
}

}  // namespace ulam
