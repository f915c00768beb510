#pragma once

// Test-only oracles, independent of the library's SNF implementation path:
// determinants and ranks by fraction-free Gaussian elimination, invariant
// factors by gcds of k x k minors.

#include <vector>
#include <algorithm>
#include "ktc/bigint.hpp"

namespace ktc_tests {

using ktc::BigInt;
using Mat = std::vector<std::vector<BigInt>>;

// Bareiss fraction-free determinant (square matrices)
inline BigInt bareiss_det(Mat a) {
    size_t n = a.size();
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return BigInt(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev;  // exact division by Bareiss
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// rank over Q by fraction-free elimination with full pivoting
inline size_t rational_rank(Mat a) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    size_t rank = 0;
    BigInt prev(1);
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t p = rank;
        while (p < m && a[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(a[rank], a[p]);
        for (size_t i = rank + 1; i < m; ++i)
            for (size_t j = col + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
        for (size_t i = rank + 1; i < m; ++i) a[i][col] = BigInt(0);
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

// invariant factors via gcds of k x k minors; exponential, small inputs only
inline std::vector<BigInt> minor_gcd_factors(const Mat& a) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    size_t r = rational_rank(a);
    std::vector<BigInt> d(r + 1, BigInt(1));
    for (size_t k = 1; k <= r; ++k) {
        BigInt g(0);
        // all k-subsets of rows and cols
        std::vector<size_t> rows(k), cols(k);
        for (size_t i = 0; i < k; ++i) rows[i] = i;
        auto next_subset = [&](std::vector<size_t>& s, size_t limit) {
            size_t i = k;
            while (i-- > 0) {
                if (s[i] + 1 <= limit - (k - i)) {
                    ++s[i];
                    for (size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            for (size_t i = 0; i < k; ++i) cols[i] = i;
            do {
                Mat sub(k, std::vector<BigInt>(k));
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) sub[i][j] = a[rows[i]][cols[j]];
                g = BigInt::gcd(g, bareiss_det(sub));
            } while (next_subset(cols, n));
        } while (next_subset(rows, m));
        d[k] = g;
    }
    std::vector<BigInt> factors;
    for (size_t k = 1; k <= r; ++k) factors.push_back(d[k] / d[k - 1]);
    return factors;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t m = a.size(), k = m ? a[0].size() : 0, n = k ? b[0].size() : 0;
    Mat c(m, std::vector<BigInt>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

} // namespace ktc_tests
