#include "ulam/bounds.hpp"

#include <stdexcept>

#include "ulam/combinatorics.hpp"

namespace ulam {

namespace {

void check_params(long long m, int t) {
    if (m < 1)
        throw std::invalid_argument("code size m must be >= 1");
    if (t < 0)
        throw std::invalid_argument("capability t must be >= 0");
}

// Smallest n >= start with spb_feasible(n, m, t).
int spb_search_from(int start, long long m, int t) {
    for (int n = start;; ++n) {
        if (spb_feasible(n, m, t))
            return n;
    }
}

}  // namespace

bool spb_feasible(int n, long long m, int t) {
    if (n < 0)
        throw std::invalid_argument("length n must be >= 0");
    check_params(m, t);
    return ExactInt(m) * sphere_volume(n, t) <= ExactInt::pow2(static_cast<unsigned>(n));
}

int spb_min_length(long long m, int t) {
    check_params(m, t);
    return spb_search_from(0, m, t);
}

KSequence k_sequence(int n, long long m, int t) {
    if (n < 0)
        throw std::invalid_argument("length n must be >= 0");
    check_params(m, t);
    KSequence seq;
    seq.params = {m, t, n};
    seq.values.reserve(static_cast<size_t>(n) + 1);
    seq.values.push_back(ExactInt(m) * sphere_volume(n, t));
    for (int i = 1; i <= n; ++i) {
        ExactInt base = seq.values.back().ceil_half();
        ExactInt a = gcd_window(n - i, t, i);
        ExactInt r = (ExactInt(m) * sphere_volume(n - i, t)).mod_euclid(a);
        // Least integer >= base congruent to r mod a.
        seq.values.push_back(base + (r - base).mod_euclid(a));
    }
    return seq;
}

Theorem2Result theorem2_check(int n, long long m, int t) {
    KSequence seq = k_sequence(n, m, t);
    for (int i = 1; i <= n; ++i) {
        ExactInt cap = ExactInt::pow2(static_cast<unsigned>(n - i));
        if (seq.values[static_cast<size_t>(i)] > cap)
            return {false, i, seq.values[static_cast<size_t>(i)], cap};
    }
    return {true, -1, ExactInt(0), ExactInt(0)};
}

bool theorem2_feasible(int n, long long m, int t) {
    return theorem2_check(n, m, t).feasible;
}

int new_bound_min_length(long long m, int t) {
    int n = spb_min_length(m, t);
    while (!theorem2_feasible(n, m, t))
        ++n;
    return n;
}

std::vector<BoundResult> sweep(long long m_min, long long m_max,
                               const std::vector<int>& t_list) {
    if (m_min < 1 || m_min > m_max)
        throw std::invalid_argument("sweep: need 1 <= m_min <= m_max");
    if (t_list.empty())
        throw std::invalid_argument("sweep: t_list must be non-empty");
    std::vector<BoundResult> out;
    out.reserve(static_cast<size_t>(m_max - m_min + 1) * t_list.size());
    for (int t : t_list) {
        // spb_min_length is non-decreasing in m, so resume each search from
        // the previous value instead of restarting at zero.
        int spb_n = spb_search_from(0, m_min, t);
        for (long long m = m_min; m <= m_max; ++m) {
            spb_n = spb_search_from(spb_n, m, t);
            int new_n = spb_n;
            while (!theorem2_feasible(new_n, m, t))
                ++new_n;
            out.push_back({m, t, spb_n, new_n, new_n > spb_n});
        }
    }
    return out;
}

}  // namespace ulam
