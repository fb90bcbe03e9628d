#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mqmf/cascade.hpp"
#include "mqmf/families.hpp"
#include "mqmf/qmf.hpp"
#include "scalar_cascade_oracle.hpp"

using namespace mqmf;

TEST_CASE("Haar scaling function is the box at every level") {
    for (int levels : {1, 4, 8}) {
        SampledMatrixFunction f = cascade_scaling(haar_bank(2), levels);
        CHECK(f.origin == 0.0);
        const int count = static_cast<int>(f.values.size());
        for (int k = 0; k < count; ++k) {
            Mat expect = (f.x(k) < 1.0) ? Mat::identity(2) : Mat::zeros(2, 2);
            CHECK(max_abs_diff(f.values[static_cast<size_t>(k)], expect) == 0.0);
        }
    }
}

TEST_CASE("Haar wavelet is +-identity on the half intervals") {
    SampledMatrixFunction g = cascade_wavelet(haar_bank(2), 5);
    for (int k = 0; k < static_cast<int>(g.values.size()); ++k) {
        const double x = g.x(k);
        Mat expect = Mat::zeros(2, 2);
        if (x < 0.5)
            expect = Mat::identity(2);
        else if (x < 1.0)
            expect = -1.0 * Mat::identity(2);
        CHECK(max_abs_diff(g.values[static_cast<size_t>(k)], expect) == 0.0);
    }
    CHECK(moment(g, 0).max_abs() <= 1e-15);
}

TEST_CASE("two-scale residuals vanish on the dyadic grid") {
    for (int levels : {6, 12}) {
        FilterBank first = family_first(std::cos(M_PI / 6));
        CHECK(two_scale_residual(cascade_scaling(first, levels), first.A) <= 1e-10);
        FilterBank fourth = family_fourth(0.4, 0.6);
        CHECK(two_scale_residual(cascade_scaling(fourth, levels), fourth.A) <= 1e-10);
    }
    FilterBank reference = fixtures::reference_bank();
    CHECK(two_scale_residual(cascade_scaling(reference, 10), reference.A) <= 1e-9);
}

TEST_CASE("wavelet zeroth moments vanish for full-rank banks") {
    for (const FilterBank& bank :
         {family_first(0.6), family_second(-0.4), family_fourth(0.4, 0.6), haar_bank(2)}) {
        SampledMatrixFunction g = cascade_wavelet(bank, 12);
        CHECK(moment(g, 0).max_abs() <= 1e-6);
    }
}

TEST_CASE("reference bank has two vanishing wavelet moments numerically") {
    FilterBank bank = fixtures::reference_bank();
    SampledMatrixFunction g = cascade_wavelet(bank, 12);
    CHECK(moment(g, 0).max_abs() <= 1e-6);
    CHECK(moment(g, 1).max_abs() <= 1e-4);
}

TEST_CASE("integer-shift Gramians of the scaling function are orthonormal") {
    for (const FilterBank& bank : {family_fourth(0.4, 0.6), family_first(std::cos(M_PI / 6))}) {
        SampledMatrixFunction f = cascade_scaling(bank, 12);
        const int per_unit = 1 << f.level;
        for (int shift = -2; shift <= 2; ++shift) {
            Mat acc = Mat::zeros(2, 2);
            for (int k = 0; k < static_cast<int>(f.values.size()); ++k) {
                const int k2 = k - shift * per_unit;
                if (k2 < 0 || k2 >= static_cast<int>(f.values.size())) continue;
                acc += f.values[static_cast<size_t>(k)].transpose() *
                       f.values[static_cast<size_t>(k2)];
            }
            acc *= f.spacing();
            Mat expect = (shift == 0) ? Mat::identity(2) : Mat::zeros(2, 2);
            CHECK(max_abs_diff(acc, expect) <= 1e-3);
        }
    }
}

TEST_CASE("autocorrelation of the first family is the Haar autocorrelation") {
    LaurentMatrix expect(2);
    expect.set(-1, 0.5 * Mat::identity(2));
    expect.set(0, Mat::identity(2));
    expect.set(1, 0.5 * Mat::identity(2));
    for (int i = 0; i <= 20; ++i) {
        const double a = -1.0 + 0.1 * i;
        CHECK(max_abs_coeff_diff(autocorrelation(family_first(a)), expect) <= 1e-12);
    }
    CHECK(max_abs_coeff_diff(autocorrelation(haar_bank(2)), expect) == 0.0);
    FilterBank zero;
    zero.dim = 2;
    zero.A = MatrixSequence::zero(2);
    zero.B = MatrixSequence::zero(2);
    CHECK(autocorrelation(zero).is_zero());
}

TEST_CASE("positive definiteness on the circle") {
    // first family: kernel exactly at omega = pi
    PositiveDefiniteReport first = check_positive_definite_on_circle(
        autocorrelation(family_first(0.5)), 1024);
    CHECK(first.passes);
    CHECK(first.min_eigenvalue > 1e-6);
    CHECK(std::abs(first.min_eigenvalue_at_pi) <= 1e-12);
    // second and fourth families pass across parameters
    for (double a : {-0.9, -0.3, 0.0, 0.4, 0.8}) {
        CHECK(check_positive_definite_on_circle(autocorrelation(family_second(a)), 1024).passes);
        CHECK(check_positive_definite_on_circle(autocorrelation(family_fourth(a, 0.6)), 1024).passes);
    }
}

TEST_CASE("positive-definiteness check rejects non-Hermitian symbols") {
    LaurentMatrix skew(2);
    skew.set(1, Mat::identity(2));  // C(-1) != C(1)^T
    CHECK_THROWS_AS(check_positive_definite_on_circle(skew, 64), std::invalid_argument);
}

TEST_CASE("diagonal-family cascade agrees with the independent scalar oracle") {
    for (double a : {std::sqrt(3.0) / 2, 0.5, -0.35}) {
        FilterBank bank = family_diagonal(a);
        const int levels = 10;
        SampledMatrixFunction f = cascade_scaling(bank, levels);
        std::vector<double> taps;
        for (int k = bank.A.lo(); k <= bank.A.hi(); ++k) taps.push_back(bank.A.at(k)(0, 0));
        std::vector<double> oracle = scalar_cascade_oracle(taps, levels);
        REQUIRE(oracle.size() == f.values.size());
        double worst = 0.0;
        for (size_t k = 0; k < oracle.size(); ++k)
            worst = std::max(worst, std::abs(oracle[k] - f.values[k](0, 0)));
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("cascade argument validation") {
    CHECK_THROWS_AS(cascade_scaling(haar_bank(2), 0), std::invalid_argument);
    FilterBank empty;
    empty.dim = 2;
    empty.A = MatrixSequence::zero(2);
    empty.B = MatrixSequence::zero(2);
    CHECK_THROWS_AS(cascade_scaling(empty, 3), std::invalid_argument);
}
