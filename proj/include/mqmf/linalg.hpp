#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mqmf {

/// Dense row-major matrix of doubles. Sizes here are tiny (at most a few
/// dozen rows), so everything is written for clarity over speed.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    Mat(int r, int c, std::initializer_list<double> vals);

    static Mat identity(int n);
    static Mat zeros(int r, int c) { return Mat(r, c); }

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool empty() const { return rows == 0 || cols == 0; }

    Mat transpose() const;
    Mat block(int i0, int j0, int r, int c) const;
    void set_block(int i0, int j0, const Mat& m);
    Mat col(int j) const { return block(0, j, rows, 1); }

    double max_abs() const;

    Mat& operator+=(const Mat& m);
    Mat& operator-=(const Mat& m);
    Mat& operator*=(double s);
};

Mat operator+(Mat lhs, const Mat& rhs);
Mat operator-(Mat lhs, const Mat& rhs);
Mat operator*(const Mat& lhs, const Mat& rhs);
Mat operator*(double s, Mat m);
bool operator==(const Mat& lhs, const Mat& rhs);

double max_abs_diff(const Mat& lhs, const Mat& rhs);

/// Stack matrices vertically / horizontally. Column counts (row counts) must agree.
Mat vcat(const Mat& top, const Mat& bottom);
Mat hcat(const Mat& left, const Mat& right);

/// Householder QR, A = Q R with R upper triangular and diag(R) >= 0.
/// Requires rows >= cols; Q is rows x rows, R is rows x cols.
struct QrResult {
    Mat q;
    Mat r;
};
QrResult householder_qr(const Mat& m);

/// Thin SVD A = U diag(s) V^T via one-sided Jacobi. Singular values are
/// sorted descending; signs are fixed deterministically (largest-magnitude
/// entry of each right singular vector is positive). For rows < cols the
/// problem is transposed internally.
struct SvdResult {
    Mat u;                  // rows x k
    std::vector<double> s;  // k = min(rows, cols)
    Mat v;                  // cols x k
};
SvdResult jacobi_svd(const Mat& m);

int numeric_rank(const SvdResult& svd, double rel_tol);
int numeric_rank(const Mat& m, double rel_tol);

/// Columns spanning the column space (left singular vectors with s > rel_tol * s_max).
Mat column_space(const Mat& m, double rel_tol);
/// Columns spanning the null space (right singular vectors with s <= rel_tol * s_max).
Mat null_space(const Mat& m, double rel_tol);

/// Largest principal angle (radians) between the column spans of two bases
/// of equal dimension. 0 means identical subspaces.
double max_principal_angle(const Mat& basis_a, const Mat& basis_b);

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues ascending, eigenvectors as columns.
struct SymEigResult {
    std::vector<double> values;
    Mat vectors;
};
SymEigResult sym_eig(const Mat& m);

/// Minimum eigenvalue of the Hermitian matrix re + i*im, computed through the
/// real symmetric embedding [[re, -im], [im, re]].
double hermitian_min_eigenvalue(const Mat& re, const Mat& im);

/// Solve (SPD) A x = b by Cholesky. Throws std::runtime_error if A is not
/// positive definite to working precision.
std::vector<double> cholesky_solve(const Mat& m, const std::vector<double>& b);

/// Determinant by Gaussian elimination with partial pivoting.
double determinant(const Mat& m);

/// Matrix exponential by scaling-and-squaring on a truncated Taylor series
/// (halving until ||X||_1 <= 0.5, terms added until below 1e-18).
Mat expm(const Mat& m);

}  // namespace mqmf
