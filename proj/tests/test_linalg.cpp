#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mqmf/linalg.hpp"

using namespace mqmf;

namespace {

Mat random_mat(int r, int c, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Mat m(r, c);
    for (double& x : m.a) x = gauss(rng);
    return m;
}

}  // namespace

TEST_CASE("householder qr reproduces the input with nonnegative diagonal") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const int p = 1 + static_cast<int>(rng() % n);
        Mat a = random_mat(n, p, rng);
        QrResult qr = householder_qr(a);
        CHECK(max_abs_diff(qr.q * qr.r, a) < 1e-12);
        CHECK(max_abs_diff(qr.q.transpose() * qr.q, Mat::identity(n)) < 1e-12);
        for (int i = 0; i < p; ++i) CHECK(qr.r(i, i) >= 0.0);
    }
}

TEST_CASE("jacobi svd factors and orders singular values") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int p = 2 + static_cast<int>(rng() % 7);
        Mat a = random_mat(n, p, rng);
        SvdResult svd = jacobi_svd(a);
        const int k = static_cast<int>(svd.s.size());
        Mat rebuilt(n, p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < p; ++j) {
                double acc = 0.0;
                for (int m = 0; m < k; ++m) acc += svd.u(i, m) * svd.s[m] * svd.v(j, m);
                rebuilt(i, j) = acc;
            }
        CHECK(max_abs_diff(rebuilt, a) < 1e-11);
        for (int m = 1; m < k; ++m) CHECK(svd.s[m - 1] >= svd.s[m] - 1e-14);
    }
}

TEST_CASE("numeric rank and null space detect constructed deficiency") {
    std::mt19937_64 rng(3);
    Mat base = random_mat(6, 2, rng);
    // rank-2 6x4: columns 3,4 are combinations of 1,2
    Mat a(6, 4);
    for (int i = 0; i < 6; ++i) {
        a(i, 0) = base(i, 0);
        a(i, 1) = base(i, 1);
        a(i, 2) = base(i, 0) + 2.0 * base(i, 1);
        a(i, 3) = base(i, 0) - base(i, 1);
    }
    CHECK(numeric_rank(a, 1e-10) == 2);
    Mat ns = null_space(a, 1e-10);
    CHECK(ns.cols == 2);
    CHECK((a * ns).max_abs() < 1e-12);
}

TEST_CASE("sym_eig diagonalizes symmetric matrices") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Mat g = random_mat(n, n, rng);
        Mat s = g + g.transpose();
        SymEigResult eig = sym_eig(s);
        Mat lambda(n, n);
        for (int i = 0; i < n; ++i) lambda(i, i) = eig.values[i];
        CHECK(max_abs_diff(s * eig.vectors, eig.vectors * lambda) < 1e-11);
        for (int i = 1; i < n; ++i) CHECK(eig.values[i - 1] <= eig.values[i] + 1e-13);
    }
}

TEST_CASE("hermitian_min_eigenvalue on a known 2x2") {
    // H = [[2, i], [-i, 2]] has eigenvalues 1 and 3
    Mat re(2, 2, {2, 0, 0, 2});
    Mat im(2, 2, {0, 1, -1, 0});
    CHECK(hermitian_min_eigenvalue(re, im) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("expm of a planar generator is the rotation") {
    const double t = 0.83;
    Mat x(4, 4);
    x(0, 1) = t;
    x(1, 0) = -t;
    Mat e = expm(x);
    CHECK(e(0, 0) == doctest::Approx(std::cos(t)).epsilon(1e-14));
    CHECK(e(0, 1) == doctest::Approx(std::sin(t)).epsilon(1e-14));
    CHECK(e(1, 0) == doctest::Approx(-std::sin(t)).epsilon(1e-14));
    CHECK(e(2, 2) == doctest::Approx(1.0));
    CHECK(max_abs_diff(e.transpose() * e, Mat::identity(4)) < 1e-14);
}

TEST_CASE("cholesky_solve recovers solutions of SPD systems") {
    std::mt19937_64 rng(5);
    Mat g = random_mat(6, 6, rng);
    Mat spd = g.transpose() * g + 0.5 * Mat::identity(6);
    std::vector<double> x0 = {1, -2, 3, 0.5, -0.25, 4};
    std::vector<double> b(6, 0.0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) b[i] += spd(i, j) * x0[j];
    std::vector<double> x = cholesky_solve(spd, b);
    for (int i = 0; i < 6; ++i) CHECK(x[i] == doctest::Approx(x0[i]).epsilon(1e-10));
}

TEST_CASE("max_principal_angle distinguishes subspaces") {
    Mat e12(4, 2);
    e12(0, 0) = 1;
    e12(1, 1) = 1;
    Mat e12_rot(4, 2);  // same span, different basis
    e12_rot(0, 0) = std::sqrt(0.5);
    e12_rot(1, 0) = std::sqrt(0.5);
    e12_rot(0, 1) = std::sqrt(0.5);
    e12_rot(1, 1) = -std::sqrt(0.5);
    CHECK(max_principal_angle(e12, e12_rot) < 1e-12);
    Mat e13(4, 2);
    e13(0, 0) = 1;
    e13(2, 1) = 1;
    CHECK(max_principal_angle(e12, e13) == doctest::Approx(M_PI / 2).epsilon(1e-12));
}
