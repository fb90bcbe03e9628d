#include "mqmf/rotations.hpp"

#include <cmath>
#include <stdexcept>

namespace mqmf {

Mat givens(int l, int m, double theta, int n) {
    if (l < 1 || m <= l || m > n) throw std::out_of_range("givens: bad plane indices");
    Mat g = Mat::identity(n);
    const double c = std::cos(theta), s = std::sin(theta);
    g(l - 1, l - 1) = c;
    g(m - 1, m - 1) = c;
    g(l - 1, m - 1) = s;
    g(m - 1, l - 1) = -s;
    return g;
}

Mat s_theta(const std::array<double, 6>& t) {
    return givens(1, 2, t[3], 4) * givens(3, 4, t[2], 4) * givens(2, 3, t[1], 4) *
           givens(1, 4, t[0], 4) * givens(1, 3, t[5], 4) * givens(2, 4, t[4], 4);
}

LieParams::LieParams(int dim, std::vector<double> coeffs) : d(dim), xi(std::move(coeffs)) {
    if (static_cast<int>(xi.size()) != d * (2 * d - 1))
        throw std::invalid_argument("LieParams: length must be d(2d-1)");
}

Mat lie_generator(int alpha, int d) {
    const int n = 2 * d;
    if (alpha < 1 || alpha > d * (2 * d - 1)) throw std::out_of_range("lie_generator: bad index");
    int idx = alpha;
    for (int i = 0; i < n - 1; ++i) {
        const int row_count = n - 1 - i;
        if (idx <= row_count) {
            const int j = i + idx;
            Mat x(n, n);
            x(i, j) = 1.0;
            x(j, i) = -1.0;
            return x;
        }
        idx -= row_count;
    }
    throw std::out_of_range("lie_generator: bad index");
}

Mat lie_exp(const LieParams& p) {
    const int n = 2 * p.d;
    Mat x(n, n);
    for (int alpha = 1; alpha <= static_cast<int>(p.xi.size()); ++alpha) {
        const double c = p.xi[alpha - 1];
        if (c != 0.0) x += c * lie_generator(alpha, p.d);
    }
    return expm(x);
}

Mat lie_exp(int d, const std::vector<double>& xi) { return lie_exp(LieParams(d, xi)); }

namespace {

// [[0, I], [z^-1 I, 0]] L(z): top rows take the bottom rows of L, bottom rows
// take the top rows of the next-higher coefficient.
LaurentMatrix apply_s_minus(const LaurentMatrix& l) {
    const int n = l.dim;
    const int d = n / 2;
    LaurentMatrix out(n);
    for (int k = l.lo() - 1; k <= l.hi(); ++k) {
        Mat c(n, n);
        c.set_block(0, 0, l.at(k).block(d, 0, d, n));
        c.set_block(d, 0, l.at(k + 1).block(0, 0, d, n));
        out.set(k, c);
    }
    return out.normalize();
}

// [[0, zI], [I, 0]] L(z)
LaurentMatrix apply_s_plus(const LaurentMatrix& l) {
    const int n = l.dim;
    const int d = n / 2;
    LaurentMatrix out(n);
    for (int k = l.lo(); k <= l.hi() + 1; ++k) {
        Mat c(n, n);
        c.set_block(0, 0, l.at(k - 1).block(d, 0, d, n));
        c.set_block(d, 0, l.at(k).block(0, 0, d, n));
        out.set(k, c);
    }
    return out.normalize();
}

LaurentMatrix mul_const_left(const Mat& m, const LaurentMatrix& l) {
    LaurentMatrix out(l.dim);
    for (int k = l.lo(); k <= l.hi(); ++k) out.set(k, m * l.at(k));
    return out.normalize();
}

}  // namespace

FilterBank apply_step(const FilterBank& bank, const RotationStep& step, double orth_tol) {
    const int n = 2 * bank.dim;
    if (step.M.rows != n || step.M.cols != n)
        throw std::invalid_argument("apply_step: M must be 2d x 2d");
    if (step.parity != 0 && step.parity != 1)
        throw std::invalid_argument("apply_step: parity must be 0 or 1");
    const double orth = max_abs_diff(step.M.transpose() * step.M, Mat::identity(n));
    if (orth > orth_tol) throw std::invalid_argument("apply_step: M is not orthogonal");

    LaurentMatrix l = polyphase(bank);
    if (step.parity == 0) {
        l = mul_const_left(step.M, l);
    } else {
        l = apply_s_plus(mul_const_left(step.M, apply_s_minus(l)));
    }
    return bank_from_polyphase(l).normalize();
}

FilterBank construct(const std::vector<RotationStep>& steps, int d, Seed seed) {
    FilterBank bank = (seed == Seed::haar) ? haar_bank(d) : trivial_bank(d);
    for (const RotationStep& step : steps) bank = apply_step(bank, step);
    return bank.normalize();
}

std::vector<RotationStep> alternating_steps(const std::vector<Mat>& ms) {
    std::vector<RotationStep> steps;
    steps.reserve(ms.size());
    for (size_t i = 0; i < ms.size(); ++i)
        steps.push_back({ms[i], static_cast<int>(i % 2)});
    return steps;
}

int expected_support_length(const std::vector<int>& parities) {
    if (parities.empty()) return 2;
    int alternations = (parities.front() == 1) ? 1 : 0;
    for (size_t i = 1; i < parities.size(); ++i)
        if (parities[i] != parities[i - 1]) ++alternations;
    return 2 + 2 * alternations;
}

}  // namespace mqmf
