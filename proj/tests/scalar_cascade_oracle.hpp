#pragma once

#include <cmath>
#include <utility>
#include <vector>

// Independent scalar cascade oracle: integer values from the unit eigenvector
// of the integer transfer matrix (least squares through hand-rolled normal
// equations and Gaussian elimination, normalized to sum 1), then exact dyadic
// refinement. Shares no code with the library cascade.
inline std::vector<double> scalar_cascade_oracle(const std::vector<double>& taps, int levels) {
    const int span = static_cast<int>(taps.size()) - 1;
    const int n = span + 1;
    std::vector<std::vector<double>> rows(n + 1, std::vector<double>(n, 0.0));
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) {
            const int idx = 2 * row - col;
            double t = (idx >= 0 && idx <= span) ? taps[static_cast<size_t>(idx)] : 0.0;
            rows[row][col] = t - (row == col ? 1.0 : 0.0);
        }
    for (int col = 0; col < n; ++col) rows[n][col] = 1.0;
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            for (int r = 0; r <= n; ++r) m[i][j] += rows[r][i] * rows[r][j];
        m[i][n] = rows[n][i];  // A^T rhs with rhs = (0, ..., 0, 1)
    }
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m[i][k]) > std::abs(m[pivot][k])) pivot = i;
        std::swap(m[k], m[pivot]);
        for (int i = k + 1; i < n; ++i) {
            const double f = m[i][k] / m[k][k];
            for (int j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    std::vector<double> v(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double sum = m[i][n];
        for (int j = i + 1; j < n; ++j) sum -= m[i][j] * v[j];
        v[i] = sum / m[i][i];
    }
    for (int level = 0; level < levels; ++level) {
        const int stride = 1 << level;
        std::vector<double> next(static_cast<size_t>(span) * (stride * 2) + 1, 0.0);
        for (int k = 0; k < static_cast<int>(next.size()); ++k) {
            double acc = 0.0;
            for (int j = 0; j <= span; ++j) {
                const int idx = k - j * stride;
                if (idx < 0 || idx >= static_cast<int>(v.size())) continue;
                acc += v[static_cast<size_t>(idx)] * taps[static_cast<size_t>(j)];
            }
            next[static_cast<size_t>(k)] = acc;
        }
        v = std::move(next);
    }
    return v;
}
