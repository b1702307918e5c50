#pragma once
// Brute-force double-precision Frechet matcher used as a cross-check: sample
// each segment densely and run the discrete O(K^2) coupling DP. The discrete
// distance sits within [exact, exact + gapA + gapB] where gap is the largest
// adjacent-sample difference, so with per-segment sampling fine enough the
// decision agrees with the exact matcher whenever the margin clears the gap.
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

inline std::vector<double> grid_sample(const std::vector<double>& ys, int perSeg) {
    std::vector<double> out;
    for (size_t k = 0; k + 1 < ys.size(); ++k)
        for (int t = 0; t < perSeg; ++t)
            out.push_back(ys[k] + (ys[k + 1] - ys[k]) * (double(t) / perSeg));
    out.push_back(ys.back());
    return out;
}

inline double grid_frechet(const std::vector<double>& A, const std::vector<double>& B) {
    size_t m = A.size(), n = B.size();
    std::vector<double> prev(n), cur(n);
    for (size_t j = 0; j < n; ++j) {
        double d = std::abs(A[0] - B[j]);
        prev[j] = j ? std::max(prev[j - 1], d) : d;
    }
    for (size_t i = 1; i < m; ++i) {
        cur[0] = std::max(prev[0], std::abs(A[i] - B[0]));
        for (size_t j = 1; j < n; ++j) {
            double best = std::min(prev[j], std::min(prev[j - 1], cur[j - 1]));
            cur[j] = std::max(best, std::abs(A[i] - B[j]));
        }
        std::swap(prev, cur);
    }
    return prev[n - 1];
}
