#pragma once

#include <vector>

#include "mqmf/linalg.hpp"

namespace mqmf {

/// Finitely supported sequence of d x d matrices (a FIR matrix filter).
/// Stored densely over [offset, offset + coeffs.size()). After normalize()
/// the first and last stored matrices are nonzero, or the sequence is the
/// canonical zero sequence (empty coefficient list, offset 0).
struct MatrixSequence {
    int dim = 0;
    int offset = 0;
    std::vector<Mat> coeffs;

    MatrixSequence() = default;
    explicit MatrixSequence(int d) : dim(d) {}
    MatrixSequence(int d, int off, std::vector<Mat> c);

    static MatrixSequence zero(int d) { return MatrixSequence(d); }

    bool is_zero() const { return coeffs.empty(); }
    int lo() const { return offset; }
    int hi() const { return offset + static_cast<int>(coeffs.size()) - 1; }
    int length() const { return static_cast<int>(coeffs.size()); }

    /// Coefficient at index k (zero matrix outside the stored support).
    Mat at(int k) const;
    /// Grow storage as needed and set the coefficient at index k.
    void set(int k, const Mat& m);

    /// Trim leading/trailing coefficients whose max-abs entry is < 1e-14.
    MatrixSequence& normalize();
};

MatrixSequence operator+(const MatrixSequence& lhs, const MatrixSequence& rhs);
MatrixSequence operator-(const MatrixSequence& lhs, const MatrixSequence& rhs);
MatrixSequence operator*(double s, MatrixSequence m);

double max_abs_coeff_diff(const MatrixSequence& lhs, const MatrixSequence& rhs);

/// Dirac delta: identity matrix at index n, zero elsewhere.
MatrixSequence delta(int n, int d);
/// (T_n s)(k) = s(k - n).
MatrixSequence translate(const MatrixSequence& s, int n);
/// (D s)(k) = s(2k).
MatrixSequence downsample(const MatrixSequence& s);
/// (D^T s)(2k) = s(k), odd indices zero.
MatrixSequence upsample(const MatrixSequence& s);

/// Finitely supported d-vector signal.
struct VectorSignal {
    int dim = 0;
    int offset = 0;
    std::vector<std::vector<double>> samples;

    VectorSignal() = default;
    explicit VectorSignal(int d) : dim(d) {}
    VectorSignal(int d, int off, std::vector<std::vector<double>> s);

    bool is_zero() const { return samples.empty(); }
    int lo() const { return offset; }
    int hi() const { return offset + static_cast<int>(samples.size()) - 1; }

    std::vector<double> at(int k) const;
    void set(int k, const std::vector<double>& v);

    VectorSignal& normalize();
};

double max_abs_sample_diff(const VectorSignal& lhs, const VectorSignal& rhs);

VectorSignal translate(const VectorSignal& s, int n);
VectorSignal downsample(const VectorSignal& s);
VectorSignal upsample(const VectorSignal& s);

/// Filter application (A * s)(n) = sum_k A(n - k)^T s(k); note the transposed
/// taps. Support of the result is the Minkowski sum of the supports.
VectorSignal convolve_filter(const MatrixSequence& a, const VectorSignal& s);

}  // namespace mqmf
