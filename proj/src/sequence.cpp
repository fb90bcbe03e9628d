#include "mqmf/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace mqmf {

namespace {
constexpr double kTrimTol = 1e-14;
}

MatrixSequence::MatrixSequence(int d, int off, std::vector<Mat> c)
    : dim(d), offset(off), coeffs(std::move(c)) {
    for (const Mat& m : coeffs)
        if (m.rows != d || m.cols != d)
            throw std::invalid_argument("MatrixSequence: coefficient is not d x d");
    normalize();
}

Mat MatrixSequence::at(int k) const {
    if (k < lo() || k > hi()) return Mat::zeros(dim, dim);
    return coeffs[static_cast<size_t>(k - offset)];
}

void MatrixSequence::set(int k, const Mat& m) {
    if (m.rows != dim || m.cols != dim)
        throw std::invalid_argument("MatrixSequence::set: wrong size");
    if (coeffs.empty()) {
        offset = k;
        coeffs.push_back(m);
        return;
    }
    while (k < offset) {
        coeffs.insert(coeffs.begin(), Mat::zeros(dim, dim));
        --offset;
    }
    while (k > hi()) coeffs.push_back(Mat::zeros(dim, dim));
    coeffs[static_cast<size_t>(k - offset)] = m;
}

MatrixSequence& MatrixSequence::normalize() {
    size_t begin = 0, end = coeffs.size();
    while (begin < end && coeffs[begin].max_abs() < kTrimTol) ++begin;
    while (end > begin && coeffs[end - 1].max_abs() < kTrimTol) --end;
    if (begin == end) {
        coeffs.clear();
        offset = 0;
        return *this;
    }
    if (begin > 0 || end < coeffs.size()) {
        std::vector<Mat> trimmed(coeffs.begin() + begin, coeffs.begin() + end);
        offset += static_cast<int>(begin);
        coeffs = std::move(trimmed);
    }
    return *this;
}

MatrixSequence operator+(const MatrixSequence& lhs, const MatrixSequence& rhs) {
    if (lhs.dim != rhs.dim) throw std::invalid_argument("MatrixSequence +: dim mismatch");
    MatrixSequence out(lhs.dim);
    if (lhs.is_zero()) return rhs;
    if (rhs.is_zero()) return lhs;
    const int lo = std::min(lhs.lo(), rhs.lo());
    const int hi = std::max(lhs.hi(), rhs.hi());
    for (int k = lo; k <= hi; ++k) out.set(k, lhs.at(k) + rhs.at(k));
    return out.normalize();
}

MatrixSequence operator-(const MatrixSequence& lhs, const MatrixSequence& rhs) {
    return lhs + (-1.0 * rhs);
}

MatrixSequence operator*(double s, MatrixSequence m) {
    for (Mat& c : m.coeffs) c *= s;
    return m.normalize();
}

double max_abs_coeff_diff(const MatrixSequence& lhs, const MatrixSequence& rhs) {
    if (lhs.dim != rhs.dim) throw std::invalid_argument("max_abs_coeff_diff: dim mismatch");
    if (lhs.is_zero() && rhs.is_zero()) return 0.0;
    const int lo = std::min(lhs.is_zero() ? rhs.lo() : lhs.lo(), rhs.is_zero() ? lhs.lo() : rhs.lo());
    const int hi = std::max(lhs.is_zero() ? rhs.hi() : lhs.hi(), rhs.is_zero() ? lhs.hi() : rhs.hi());
    double m = 0.0;
    for (int k = lo; k <= hi; ++k) m = std::max(m, max_abs_diff(lhs.at(k), rhs.at(k)));
    return m;
}

MatrixSequence delta(int n, int d) {
    if (d < 1) throw std::invalid_argument("delta: d must be positive");
    MatrixSequence s(d);
    s.set(n, Mat::identity(d));
    return s;
}

MatrixSequence translate(const MatrixSequence& s, int n) {
    MatrixSequence out = s;
    if (!out.is_zero()) out.offset += n;
    return out;
}

MatrixSequence downsample(const MatrixSequence& s) {
    MatrixSequence out(s.dim);
    for (int k = s.lo(); k <= s.hi(); ++k)
        if (k % 2 == 0) out.set(k / 2, s.at(k));
    return out.normalize();
}

MatrixSequence upsample(const MatrixSequence& s) {
    MatrixSequence out(s.dim);
    for (int k = s.lo(); k <= s.hi(); ++k) out.set(2 * k, s.at(k));
    return out.normalize();
}

VectorSignal::VectorSignal(int d, int off, std::vector<std::vector<double>> s)
    : dim(d), offset(off), samples(std::move(s)) {
    for (const auto& v : samples)
        if (static_cast<int>(v.size()) != d)
            throw std::invalid_argument("VectorSignal: sample has wrong length");
    normalize();
}

std::vector<double> VectorSignal::at(int k) const {
    if (k < lo() || k > hi()) return std::vector<double>(dim, 0.0);
    return samples[static_cast<size_t>(k - offset)];
}

void VectorSignal::set(int k, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != dim)
        throw std::invalid_argument("VectorSignal::set: wrong length");
    if (samples.empty()) {
        offset = k;
        samples.push_back(v);
        return;
    }
    while (k < offset) {
        samples.insert(samples.begin(), std::vector<double>(dim, 0.0));
        --offset;
    }
    while (k > hi()) samples.push_back(std::vector<double>(dim, 0.0));
    samples[static_cast<size_t>(k - offset)] = v;
}

VectorSignal& VectorSignal::normalize() {
    auto is_small = [](const std::vector<double>& v) {
        for (double x : v)
            if (std::abs(x) >= kTrimTol) return false;
        return true;
    };
    size_t begin = 0, end = samples.size();
    while (begin < end && is_small(samples[begin])) ++begin;
    while (end > begin && is_small(samples[end - 1])) --end;
    if (begin == end) {
        samples.clear();
        offset = 0;
        return *this;
    }
    if (begin > 0 || end < samples.size()) {
        std::vector<std::vector<double>> trimmed(samples.begin() + begin, samples.begin() + end);
        offset += static_cast<int>(begin);
        samples = std::move(trimmed);
    }
    return *this;
}

double max_abs_sample_diff(const VectorSignal& lhs, const VectorSignal& rhs) {
    if (lhs.dim != rhs.dim) throw std::invalid_argument("max_abs_sample_diff: dim mismatch");
    if (lhs.is_zero() && rhs.is_zero()) return 0.0;
    const int lo = std::min(lhs.is_zero() ? rhs.lo() : lhs.lo(), rhs.is_zero() ? lhs.lo() : rhs.lo());
    const int hi = std::max(lhs.is_zero() ? rhs.hi() : lhs.hi(), rhs.is_zero() ? lhs.hi() : rhs.hi());
    double m = 0.0;
    for (int k = lo; k <= hi; ++k) {
        const auto a = lhs.at(k), b = rhs.at(k);
        for (int i = 0; i < lhs.dim; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

VectorSignal translate(const VectorSignal& s, int n) {
    VectorSignal out = s;
    if (!out.is_zero()) out.offset += n;
    return out;
}

VectorSignal downsample(const VectorSignal& s) {
    VectorSignal out(s.dim);
    for (int k = s.lo(); k <= s.hi(); ++k)
        if (k % 2 == 0) out.set(k / 2, s.at(k));
    return out.normalize();
}

VectorSignal upsample(const VectorSignal& s) {
    VectorSignal out(s.dim);
    for (int k = s.lo(); k <= s.hi(); ++k) out.set(2 * k, s.at(k));
    return out.normalize();
}

VectorSignal convolve_filter(const MatrixSequence& a, const VectorSignal& s) {
    if (a.dim != s.dim) throw std::invalid_argument("convolve_filter: dim mismatch");
    VectorSignal out(s.dim);
    if (a.is_zero() || s.is_zero()) return out;
    const int d = a.dim;
    for (int n = a.lo() + s.lo(); n <= a.hi() + s.hi(); ++n) {
        std::vector<double> acc(d, 0.0);
        for (int k = std::max(s.lo(), n - a.hi()); k <= std::min(s.hi(), n - a.lo()); ++k) {
            const Mat tap = a.at(n - k);
            const auto sv = s.at(k);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) acc[i] += tap(j, i) * sv[j];  // transposed tap
        }
        out.set(n, acc);
    }
    return out.normalize();
}

}  // namespace mqmf
