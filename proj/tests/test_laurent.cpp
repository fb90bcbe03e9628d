#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mqmf/laurent.hpp"
#include "mqmf/qmf.hpp"
#include "mqmf/sequence.hpp"

using namespace mqmf;

namespace {

MatrixSequence random_sequence(int d, std::mt19937_64& rng, int max_len = 6) {
    std::normal_distribution<double> gauss;
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> off(-3, 3);
    MatrixSequence s(d);
    const int lo = off(rng);
    const int n = len(rng);
    for (int k = lo; k < lo + n; ++k) {
        Mat m(d, d);
        for (double& x : m.a) x = gauss(rng);
        s.set(k, m);
    }
    return s.normalize();
}

LaurentMatrix random_laurent(int d, std::mt19937_64& rng) {
    return symbol(random_sequence(d, rng));
}

}  // namespace

TEST_CASE("delta and translate basics") {
    CHECK(max_abs_coeff_diff(delta(0, 2), MatrixSequence(2, 0, {Mat::identity(2)})) == 0.0);
    CHECK(max_abs_coeff_diff(translate(delta(1, 2), -1), delta(0, 2)) == 0.0);
    MatrixSequence d3 = delta(3, 1);
    CHECK(d3.lo() == 3);
    CHECK(d3.hi() == 3);
    std::mt19937_64 rng(11);
    MatrixSequence s = random_sequence(2, rng);
    CHECK(max_abs_coeff_diff(translate(translate(s, 1), -1), s) == 0.0);
    FilterBank haar = haar_bank(2);
    MatrixSequence t = translate(haar.A, 2);
    CHECK(t.lo() == 2);
    CHECK(t.hi() == 3);
}

TEST_CASE("downsample and upsample index maps") {
    std::mt19937_64 rng(12);
    MatrixSequence s = random_sequence(2, rng);
    CHECK(max_abs_coeff_diff(downsample(upsample(s)), s) == 0.0);
    CHECK(max_abs_coeff_diff(upsample(delta(1, 2)), delta(2, 2)) == 0.0);
    // downsample of the Haar scaling filter keeps only A(0) = I
    CHECK(max_abs_coeff_diff(downsample(haar_bank(2).A), delta(0, 2)) == 0.0);
}

TEST_CASE("convolution with delta filters and Haar") {
    const int d = 2;
    std::mt19937_64 rng(13);
    std::normal_distribution<double> gauss;
    VectorSignal s(d);
    for (int k = -2; k <= 4; ++k) s.set(k, {gauss(rng), gauss(rng)});
    CHECK(max_abs_sample_diff(convolve_filter(delta(0, d), s), s) == 0.0);
    CHECK(max_abs_sample_diff(convolve_filter(delta(1, d), s), translate(s, 1)) == 0.0);
    // Haar scaling filter smears a unit pulse over two indices
    VectorSignal pulse(d);
    pulse.set(0, {1.0, 0.0});
    VectorSignal smeared = convolve_filter(haar_bank(d).A, pulse);
    CHECK(smeared.at(0) == std::vector<double>{1.0, 0.0});
    CHECK(smeared.at(1) == std::vector<double>{1.0, 0.0});
    CHECK(smeared.lo() == 0);
    CHECK(smeared.hi() == 1);
}

TEST_CASE("convolution dimension mismatch throws") {
    VectorSignal s(3);
    s.set(0, {1.0, 0.0, 0.0});
    CHECK_THROWS_AS(convolve_filter(delta(0, 2), s), std::invalid_argument);
}

TEST_CASE("subsymbol round trip reproduces the symbol") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        MatrixSequence s = random_sequence(2, rng);
        auto [even, odd] = subsymbols(s);
        CHECK(max_abs_coeff_diff(assemble_subsymbols(even, odd), symbol(s)) == 0.0);
    }
}

TEST_CASE("symbol examples") {
    LaurentMatrix p = symbol(delta(-2, 3));
    CHECK(p.lo() == -2);
    CHECK(p.hi() == -2);
    CHECK(max_abs_diff(p.at(-2), Mat::identity(3)) == 0.0);
    // Haar subsymbols are constant identities
    auto [a0, a1] = subsymbols(haar_bank(2).A);
    CHECK(max_abs_coeff_diff(a0, LaurentMatrix::constant(Mat::identity(2))) == 0.0);
    CHECK(max_abs_coeff_diff(a1, LaurentMatrix::constant(Mat::identity(2))) == 0.0);
}

TEST_CASE("laurent_mul is associative and distributes") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentMatrix p = random_laurent(2, rng);
        LaurentMatrix q = random_laurent(2, rng);
        LaurentMatrix r = random_laurent(2, rng);
        LaurentMatrix lhs = laurent_mul(laurent_mul(p, q), r);
        LaurentMatrix rhs = laurent_mul(p, laurent_mul(q, r));
        CHECK(max_abs_coeff_diff(lhs, rhs) < 1e-14 * (1.0 + 1.0));
        LaurentMatrix dist_l = laurent_mul(p, q + r);
        LaurentMatrix dist_r = laurent_mul(p, q) + laurent_mul(p, r);
        CHECK(max_abs_coeff_diff(dist_l, dist_r) < 1e-14);
    }
}

TEST_CASE("laurent identities") {
    std::mt19937_64 rng(16);
    LaurentMatrix p = random_laurent(2, rng);
    CHECK(max_abs_coeff_diff(laurent_mul(p, LaurentMatrix::constant(Mat::identity(2))), p) == 0.0);
    CHECK(max_abs_coeff_diff(laurent_adjoint(laurent_adjoint(p)), p) == 0.0);
    // adjoint(H) * H = 2I for the Haar polyphase matrix
    LaurentMatrix h = polyphase(haar_bank(2));
    LaurentMatrix prod = laurent_mul(laurent_adjoint(h), h);
    CHECK(max_abs_coeff_diff(prod, LaurentMatrix::constant(2.0 * Mat::identity(4))) == 0.0);
}

TEST_CASE("laurent dimension mismatch throws") {
    CHECK_THROWS_AS(laurent_mul(LaurentMatrix::constant(Mat::identity(2)),
                                LaurentMatrix::constant(Mat::identity(4))),
                    std::invalid_argument);
}

TEST_CASE("support arithmetic of convolution") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixSequence a = random_sequence(2, rng, 4);
        VectorSignal s(2);
        std::normal_distribution<double> gauss;
        const int lo = static_cast<int>(rng() % 5) - 2;
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int k = lo; k < lo + n; ++k) s.set(k, {gauss(rng), gauss(rng)});
        VectorSignal out = convolve_filter(a, s);
        if (!out.is_zero()) {
            CHECK(out.lo() >= a.lo() + s.lo());
            CHECK(out.hi() <= a.hi() + s.hi());
        }
    }
}

TEST_CASE("zero sequence has canonical form") {
    MatrixSequence s(2);
    s.set(5, Mat::zeros(2, 2));
    s.normalize();
    CHECK(s.is_zero());
    CHECK(s.offset == 0);
    CHECK(s.coeffs.empty());
}
