#include "mqmf/laurent.hpp"

#include <cmath>
#include <stdexcept>

namespace mqmf {

namespace {
constexpr double kTrimTol = 1e-14;
}

LaurentMatrix::LaurentMatrix(int d, int low, std::vector<Mat> c)
    : dim(d), lowest_power(low), coeffs(std::move(c)) {
    for (const Mat& m : coeffs)
        if (m.rows != d || m.cols != d)
            throw std::invalid_argument("LaurentMatrix: coefficient size mismatch");
    normalize();
}

LaurentMatrix LaurentMatrix::constant(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("LaurentMatrix::constant: not square");
    LaurentMatrix p(m.rows);
    p.set(0, m);
    return p;
}

Mat LaurentMatrix::at(int power) const {
    if (power < lo() || power > hi()) return Mat::zeros(dim, dim);
    return coeffs[static_cast<size_t>(power - lowest_power)];
}

void LaurentMatrix::set(int power, const Mat& m) {
    if (m.rows != dim || m.cols != dim)
        throw std::invalid_argument("LaurentMatrix::set: wrong size");
    if (coeffs.empty()) {
        lowest_power = power;
        coeffs.push_back(m);
        return;
    }
    while (power < lowest_power) {
        coeffs.insert(coeffs.begin(), Mat::zeros(dim, dim));
        --lowest_power;
    }
    while (power > hi()) coeffs.push_back(Mat::zeros(dim, dim));
    coeffs[static_cast<size_t>(power - lowest_power)] = m;
}

LaurentMatrix& LaurentMatrix::normalize() {
    size_t begin = 0, end = coeffs.size();
    while (begin < end && coeffs[begin].max_abs() < kTrimTol) ++begin;
    while (end > begin && coeffs[end - 1].max_abs() < kTrimTol) --end;
    if (begin == end) {
        coeffs.clear();
        lowest_power = 0;
        return *this;
    }
    if (begin > 0 || end < coeffs.size()) {
        std::vector<Mat> trimmed(coeffs.begin() + begin, coeffs.begin() + end);
        lowest_power += static_cast<int>(begin);
        coeffs = std::move(trimmed);
    }
    return *this;
}

LaurentMatrix operator+(const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
    if (lhs.dim != rhs.dim) throw std::invalid_argument("LaurentMatrix +: dim mismatch");
    if (lhs.is_zero()) return rhs;
    if (rhs.is_zero()) return lhs;
    LaurentMatrix out(lhs.dim);
    const int lo = std::min(lhs.lo(), rhs.lo());
    const int hi = std::max(lhs.hi(), rhs.hi());
    for (int k = lo; k <= hi; ++k) out.set(k, lhs.at(k) + rhs.at(k));
    return out.normalize();
}

LaurentMatrix operator-(const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
    return lhs + (-1.0 * rhs);
}

LaurentMatrix operator*(double s, LaurentMatrix p) {
    for (Mat& c : p.coeffs) c *= s;
    return p.normalize();
}

double max_abs_coeff_diff(const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
    if (lhs.dim != rhs.dim) throw std::invalid_argument("max_abs_coeff_diff: dim mismatch");
    if (lhs.is_zero() && rhs.is_zero()) return 0.0;
    const int lo = std::min(lhs.is_zero() ? rhs.lo() : lhs.lo(), rhs.is_zero() ? lhs.lo() : rhs.lo());
    const int hi = std::max(lhs.is_zero() ? rhs.hi() : lhs.hi(), rhs.is_zero() ? lhs.hi() : rhs.hi());
    double m = 0.0;
    for (int k = lo; k <= hi; ++k) m = std::max(m, max_abs_diff(lhs.at(k), rhs.at(k)));
    return m;
}

LaurentMatrix symbol(const MatrixSequence& s) {
    LaurentMatrix p(s.dim);
    for (int k = s.lo(); k <= s.hi(); ++k) p.set(k, s.at(k));
    return p.normalize();
}

MatrixSequence sequence_from_symbol(const LaurentMatrix& p, int d) {
    if (p.dim != d) throw std::invalid_argument("sequence_from_symbol: dim mismatch");
    MatrixSequence s(d);
    for (int k = p.lo(); k <= p.hi(); ++k) s.set(k, p.at(k));
    return s.normalize();
}

std::pair<LaurentMatrix, LaurentMatrix> subsymbols(const MatrixSequence& s) {
    LaurentMatrix even(s.dim), odd(s.dim);
    for (int k = s.lo(); k <= s.hi(); ++k) {
        // floor division pairs index 2m+l with power m for l in {0,1}
        const int m = (k >= 0) ? k / 2 : (k - 1) / 2;
        if (k - 2 * m == 0)
            even.set(m, s.at(k));
        else
            odd.set(m, s.at(k));
    }
    even.normalize();
    odd.normalize();
    return {even, odd};
}

LaurentMatrix assemble_subsymbols(const LaurentMatrix& even, const LaurentMatrix& odd) {
    if (even.dim != odd.dim) throw std::invalid_argument("assemble_subsymbols: dim mismatch");
    LaurentMatrix out(even.dim);
    for (int k = even.lo(); k <= even.hi(); ++k) out.set(2 * k, even.at(k));
    for (int k = odd.lo(); k <= odd.hi(); ++k) out.set(2 * k + 1, odd.at(k));
    return out.normalize();
}

LaurentMatrix laurent_mul(const LaurentMatrix& lhs, const LaurentMatrix& rhs) {
    if (lhs.dim != rhs.dim) throw std::invalid_argument("laurent_mul: dim mismatch");
    LaurentMatrix out(lhs.dim);
    if (lhs.is_zero() || rhs.is_zero()) return out;
    for (int k = lhs.lo() + rhs.lo(); k <= lhs.hi() + rhs.hi(); ++k) {
        Mat acc = Mat::zeros(lhs.dim, lhs.dim);
        for (int i = std::max(lhs.lo(), k - rhs.hi()); i <= std::min(lhs.hi(), k - rhs.lo()); ++i)
            acc += lhs.at(i) * rhs.at(k - i);
        out.set(k, acc);
    }
    return out.normalize();
}

LaurentMatrix laurent_adjoint(const LaurentMatrix& p) {
    LaurentMatrix out(p.dim);
    for (int k = p.lo(); k <= p.hi(); ++k) out.set(-k, p.at(k).transpose());
    return out.normalize();
}

Mat eval_real(const LaurentMatrix& p, double x) {
    Mat out = Mat::zeros(p.dim, p.dim);
    for (int k = p.lo(); k <= p.hi(); ++k) out += std::pow(x, k) * p.at(k);
    return out;
}

std::pair<Mat, Mat> eval_circle(const LaurentMatrix& p, double omega) {
    Mat re = Mat::zeros(p.dim, p.dim);
    Mat im = Mat::zeros(p.dim, p.dim);
    for (int k = p.lo(); k <= p.hi(); ++k) {
        re += std::cos(k * omega) * p.at(k);
        im += std::sin(k * omega) * p.at(k);
    }
    return {re, im};
}

}  // namespace mqmf
