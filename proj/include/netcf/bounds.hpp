#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace netcf {

// Exact integer forms of the paper's irrational thresholds. All comparisons
// against sqrt(6k) etc. are done with squared integers, never floating point.

inline long long isqrt_floor(long long x) {
    if (x < 0) throw std::domain_error("isqrt of negative");
    long long r = static_cast<long long>(std::max(0.0, std::sqrt(double(x))));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline long long isqrt_ceil(long long x) {
    long long f = isqrt_floor(x);
    return f * f == x ? f : f + 1;
}

inline int floor_log2(long long x) {
    if (x <= 0) throw std::domain_error("log of non-positive");
    int r = 0;
    while (x > 1) {
        x >>= 1;
        ++r;
    }
    return r;
}

// Smallest rho >= 0 with (num/den)^rho >= x; exact via __int128 products.
inline int ceil_log_ratio(long long num, long long den, long long x) {
    if (num <= den || den <= 0) throw std::domain_error("ceil_log_ratio: base must exceed 1");
    if (x <= 1) return 0;
    __int128 a = 1, b = 1;  // a = num^rho, b = den^rho
    constexpr __int128 guard = (__int128(1) << 110);
    for (int rho = 0;; ++rho) {
        if (a >= __int128(x) * b) return rho;
        if (a > guard || b > guard) throw std::overflow_error("ceil_log_ratio overflow");
        a *= num;
        b *= den;
    }
}

// min(l+1, ceil(2*sqrt(6k)), n) -- the Theorem 6(1) upper bound.
inline int nm_trees_upper_bound(int k, int l, int n) {
    long long two_sqrt = isqrt_ceil(24LL * k);
    return int(std::min<long long>({l + 1LL, two_sqrt, n}));
}

// min(l+1, floor((1+sqrt(1+8k))/2), n) -- the Theorem 7 lower bound.
inline int nm_trees_lower_bound(int k, int l, int n) {
    long long m_prime = (1 + isqrt_floor(1 + 8LL * k)) / 2;
    while (m_prime * (m_prime - 1) / 2 > k) --m_prime;  // largest m with C(m,2) <= k
    while ((m_prime + 1) * m_prime / 2 <= k) ++m_prime;
    return int(std::min<long long>({l + 1LL, m_prime, n}));
}

// Reported budget for the trees-on-trees CF pipeline: unique singleton colors
// plus (l'+1) colors per framework round plus chain colors and the dummy,
// with rounds bounded by ceil(log_{(l'+1)/l'} 6k) and l' = min(l, sqrt(6k)).
struct CfTreesBound {
    int singleton_colors = 0;
    int rounds = 0;
    int l_prime = 0;
    int total = 0;
};

inline CfTreesBound cf_trees_upper_bound(int k, int l) {
    CfTreesBound b;
    if (k < 2) k = 2;
    long long lp = std::min<long long>(l, isqrt_floor(6LL * k));
    if (lp < 1) lp = 1;
    b.l_prime = int(lp);
    if (1LL * l * l > 24LL * k) b.singleton_colors = int(isqrt_ceil(6LL * k) - 1);
    b.rounds = ceil_log_ratio(lp + 1, lp, 6LL * k);
    b.total = b.singleton_colors + int(lp + 1) * b.rounds + 4;
    return b;
}

// Levels of the centroid recursion on t internal nodes: floor(log2 t) + 1.
inline int centroid_levels(int t) { return t >= 1 ? floor_log2(t) + 1 : 0; }

// ceil(log2(t+1)) + 3: centroid levels plus the three chain colors.
inline int cf_balls_tree_upper_bound(int t) { return centroid_levels(t) + 3; }

// ceil(log_{4/3} t) -- round budget of the planar iterated-independent-set
// coloring with exact maximum independent sets.
inline int cf_balls_planar_rounds_bound(int t) { return ceil_log_ratio(4, 3, std::max(t, 1)); }

inline int cf_balls_planar_upper_bound(int t) { return cf_balls_planar_rounds_bound(t) + 3; }

}  // namespace netcf
