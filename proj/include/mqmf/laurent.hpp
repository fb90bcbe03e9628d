#pragma once

#include <utility>
#include <vector>

#include "mqmf/linalg.hpp"
#include "mqmf/sequence.hpp"

namespace mqmf {

/// Laurent polynomial with square matrix coefficients: sum_k C(k) z^k over a
/// finite power range. dim is d for filter symbols and 2d for polyphase
/// matrices. Canonical zero: empty coefficient list, lowest_power 0.
struct LaurentMatrix {
    int dim = 0;
    int lowest_power = 0;
    std::vector<Mat> coeffs;

    LaurentMatrix() = default;
    explicit LaurentMatrix(int d) : dim(d) {}
    LaurentMatrix(int d, int low, std::vector<Mat> c);

    static LaurentMatrix constant(const Mat& m);

    bool is_zero() const { return coeffs.empty(); }
    int lo() const { return lowest_power; }
    int hi() const { return lowest_power + static_cast<int>(coeffs.size()) - 1; }

    Mat at(int power) const;
    void set(int power, const Mat& m);

    LaurentMatrix& normalize();
};

LaurentMatrix operator+(const LaurentMatrix& lhs, const LaurentMatrix& rhs);
LaurentMatrix operator-(const LaurentMatrix& lhs, const LaurentMatrix& rhs);
LaurentMatrix operator*(double s, LaurentMatrix p);

double max_abs_coeff_diff(const LaurentMatrix& lhs, const LaurentMatrix& rhs);

/// Symbol A(z) = sum_k A(k) z^k of a matrix sequence.
LaurentMatrix symbol(const MatrixSequence& s);
/// Inverse of symbol(): read coefficients back as a sequence.
MatrixSequence sequence_from_symbol(const LaurentMatrix& p, int d);

/// Subsymbols A_l(z) = sum_k A(2k + l) z^k for l = 0, 1. The reconstruction
/// A(z) = A_0(z^2) + z A_1(z^2) holds exactly.
std::pair<LaurentMatrix, LaurentMatrix> subsymbols(const MatrixSequence& s);
/// Assemble A(z) = A_0(z^2) + z A_1(z^2).
LaurentMatrix assemble_subsymbols(const LaurentMatrix& even, const LaurentMatrix& odd);

/// Polynomial product with matrix coefficients.
LaurentMatrix laurent_mul(const LaurentMatrix& lhs, const LaurentMatrix& rhs);
/// Adjoint on the unit circle: sum P(k)^T z^{-k} (real coefficients).
LaurentMatrix laurent_adjoint(const LaurentMatrix& p);

/// Evaluate at a real point z = x.
Mat eval_real(const LaurentMatrix& p, double x);
/// Evaluate at z = e^{i omega}; returns (real part, imaginary part).
std::pair<Mat, Mat> eval_circle(const LaurentMatrix& p, double omega);

}  // namespace mqmf
