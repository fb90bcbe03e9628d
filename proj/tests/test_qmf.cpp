#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mqmf/families.hpp"
#include "mqmf/qmf.hpp"
#include "mqmf/rotations.hpp"

using namespace mqmf;

namespace {

Mat random_rotation(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Mat g(n, n);
    for (double& x : g.a) x = gauss(rng);
    return householder_qr(g).q;
}

FilterBank random_constructed_bank(int d, int steps, std::mt19937_64& rng) {
    std::vector<Mat> ms;
    for (int i = 0; i < steps; ++i) ms.push_back(random_rotation(2 * d, rng));
    return construct(alternating_steps(ms), d);
}

VectorSignal random_signal(int d, int length, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    VectorSignal s(d);
    for (int k = 0; k < length; ++k) {
        std::vector<double> v(d);
        for (double& x : v) x = u(rng);
        s.set(k, v);
    }
    return s;
}

}  // namespace

TEST_CASE("check_qmf: Haar is exact, scaled Haar fails") {
    FilterBank haar = haar_bank(2);
    CHECK(check_qmf(haar, 1e-10).orthonormality_residual == 0.0);
    FilterBank scaled = haar;
    scaled.A = 1.01 * scaled.A;
    QmfReport report = check_qmf(scaled, 1e-10);
    CHECK(report.orthonormality_residual > 0.02);
    CHECK_FALSE(report.orthonormality_pass);
}

TEST_CASE("check_qmf: reference length-6 bank passes at 5e-6") {
    QmfReport report = check_qmf(fixtures::reference_bank(), 5e-6);
    CHECK(report.orthonormality_residual <= 5e-6);
    CHECK(report.orthonormality_pass);
}

TEST_CASE("check_full_rank examples") {
    CHECK(check_full_rank(haar_bank(2), 1e-12).first == 0.0);
    for (double a : {-0.8, -0.2, 0.3, 0.9}) {
        auto [r, pass] = check_full_rank(family_first(a), 1e-12);
        CHECK(r <= 1e-12);
        CHECK(pass);
    }
    // the trivial delta system is QMF but not full rank: odd sum of A is 0
    auto [r, pass] = check_full_rank(trivial_bank(2), 1e-10);
    CHECK(r == doctest::Approx(1.0));
    CHECK_FALSE(pass);
}

TEST_CASE("check_sum_rules examples") {
    // Haar fails the order-1 rule with residual exactly 1
    auto rules = check_sum_rules(haar_bank(2), 2, 1e-10);
    REQUIRE(rules.size() == 1);
    CHECK(rules[0] == doctest::Approx(1.0));
    // reference bank satisfies it at its six-decimal precision
    auto reference = check_sum_rules(fixtures::reference_bank(), 2, 5e-6);
    CHECK(reference[0] <= 5e-6);
    // degenerate zero sequence
    FilterBank zero;
    zero.dim = 2;
    zero.A = MatrixSequence::zero(2);
    zero.B = MatrixSequence::zero(2);
    for (double r : check_sum_rules(zero, 4, 1e-12)) CHECK(r == 0.0);
    CHECK(check_sum_rules(haar_bank(2), 1, 1e-12).empty());
}

TEST_CASE("polyphase of Haar is the constant butterfly") {
    LaurentMatrix l = polyphase(haar_bank(2));
    CHECK(l.lo() == 0);
    CHECK(l.hi() == 0);
    Mat h(4, 4);
    h.set_block(0, 0, Mat::identity(2));
    h.set_block(0, 2, Mat::identity(2));
    h.set_block(2, 0, Mat::identity(2));
    h.set_block(2, 2, -1.0 * Mat::identity(2));
    CHECK(max_abs_diff(l.at(0), h) == 0.0);
}

TEST_CASE("polyphase round trip and full-rank evaluation") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        FilterBank bank = random_constructed_bank(2, 3, rng);
        CHECK(max_abs_coeff_diff(bank_from_polyphase(polyphase(bank)), bank) == 0.0);
    }
    // full rank <=> L(1) = [[I, I], [I, -I]] for the first family
    LaurentMatrix l = polyphase(family_first(0.4));
    Mat h(4, 4);
    h.set_block(0, 0, Mat::identity(2));
    h.set_block(0, 2, Mat::identity(2));
    h.set_block(2, 0, Mat::identity(2));
    h.set_block(2, 2, -1.0 * Mat::identity(2));
    CHECK(max_abs_diff(eval_real(l, 1.0), h) < 1e-14);
}

TEST_CASE("polyphase of the first family matches the table subsymbols") {
    for (double a : {0.0, 0.37, -0.81}) {
        LaurentMatrix l = polyphase(family_first(a));
        fixtures::TapTable t = fixtures::first_family_taps(a);
        for (int k = 0; k <= 1; ++k) {
            Mat c = l.at(k);
            CHECK(max_abs_diff(c.block(0, 0, 2, 2), t.a[2 * k]) == 0.0);      // A0
            CHECK(max_abs_diff(c.block(2, 0, 2, 2), t.a[2 * k + 1]) == 0.0);  // A1
            CHECK(max_abs_diff(c.block(0, 2, 2, 2), t.b[2 * k]) == 0.0);      // B0
            CHECK(max_abs_diff(c.block(2, 2, 2, 2), t.b[2 * k + 1]) == 0.0);  // B1
        }
    }
}

TEST_CASE("bank_from_polyphase rejects odd dimension") {
    LaurentMatrix l = LaurentMatrix::constant(Mat::identity(3));
    CHECK_THROWS_AS(bank_from_polyphase(l), std::invalid_argument);
}

TEST_CASE("gram formulation agrees with the paraunitarity formulation") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        FilterBank bank = random_constructed_bank(d, 1 + static_cast<int>(rng() % 4), rng);
        const double gram = check_qmf(bank, 1e-10).orthonormality_residual;
        LaurentMatrix l = polyphase(bank);
        LaurentMatrix prod = laurent_mul(laurent_adjoint(l), l);
        const double para = max_abs_coeff_diff(
            prod, LaurentMatrix::constant(2.0 * Mat::identity(2 * d)));
        CHECK(std::abs(gram - para) < 1e-13);
        if (gram > 1e-16) CHECK(para <= 4.0 * gram);
    }
}

TEST_CASE("analysis pairs (2n, 2n-1) under the literal convolution convention") {
    FilterBank haar = haar_bank(2);
    // a signal occupying one (2n-1, 2n) block lands in a single coefficient
    VectorSignal block(2);
    block.set(-1, {1.0, 0.0});
    block.set(0, {1.0, 0.0});
    auto [s0, s1] = analyze(haar, block);
    CHECK(s1.is_zero());
    CHECK(s0.lo() == 0);
    CHECK(s0.hi() == 0);
    CHECK(s0.at(0) == std::vector<double>{2.0, 0.0});
    CHECK(max_abs_sample_diff(synthesize(haar, s0, s1), block) < 1e-15);

    // the same pulse at (0, 1) straddles two blocks
    VectorSignal straddle(2);
    straddle.set(0, {1.0, 0.0});
    straddle.set(1, {1.0, 0.0});
    auto [t0, t1] = analyze(haar, straddle);
    CHECK(t0.at(0) == std::vector<double>{1.0, 0.0});
    CHECK(t0.at(1) == std::vector<double>{1.0, 0.0});
    CHECK(t1.at(0) == std::vector<double>{1.0, 0.0});
    CHECK(t1.at(1) == std::vector<double>{-1.0, 0.0});
    CHECK(max_abs_sample_diff(synthesize(haar, t0, t1), straddle) < 1e-15);
}

TEST_CASE("analyze of the zero signal is zero") {
    auto [s0, s1] = analyze(haar_bank(2), VectorSignal(2));
    CHECK(s0.is_zero());
    CHECK(s1.is_zero());
}

TEST_CASE("transform dimension mismatches throw") {
    VectorSignal s(3);
    s.set(0, {1.0, 0.0, 0.0});
    CHECK_THROWS_AS(analyze(haar_bank(2), s), std::invalid_argument);
    CHECK_THROWS_AS(synthesize(haar_bank(2), s, s), std::invalid_argument);
}

TEST_CASE("perfect reconstruction for verified banks") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        FilterBank bank = random_constructed_bank(2, 1 + static_cast<int>(rng() % 4), rng);
        REQUIRE(check_qmf(bank, 1e-10).orthonormality_pass);
        VectorSignal s = random_signal(2, 32, rng);
        auto [s0, s1] = analyze(bank, s);
        CHECK(max_abs_sample_diff(synthesize(bank, s0, s1), s) <= 1e-10);
    }
}

TEST_CASE("perfect reconstruction with the reference bank on 100 signals") {
    FilterBank bank = fixtures::reference_bank();
    std::mt19937_64 rng(24);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        VectorSignal s = random_signal(2, 64, rng);
        auto [s0, s1] = analyze(bank, s);
        worst = std::max(worst, max_abs_sample_diff(synthesize(bank, s0, s1), s));
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("verify_bank aggregates all categories") {
    QmfReport report = verify_bank(family_fourth(0.4, 0.6), 1e-12, 2);
    CHECK(report.orthonormality_pass);
    CHECK(report.full_rank_pass);
    REQUIRE(report.sum_rule_residuals.size() == 1);
    CHECK_FALSE(report.sum_rules_pass);  // generic (a, b) has no order-1 rule
    CHECK_FALSE(report.all_pass());
}
