#include "mqmf/qmf.hpp"

#include <cmath>
#include <stdexcept>

namespace mqmf {

FilterBank::FilterBank(MatrixSequence a, MatrixSequence b) : A(std::move(a)), B(std::move(b)) {
    if (A.dim != B.dim) throw std::invalid_argument("FilterBank: A/B dim mismatch");
    dim = A.dim;
}

FilterBank& FilterBank::normalize() {
    A.normalize();
    B.normalize();
    return *this;
}

FilterBank haar_bank(int d) {
    MatrixSequence a(d), b(d);
    a.set(0, Mat::identity(d));
    a.set(1, Mat::identity(d));
    b.set(0, Mat::identity(d));
    b.set(1, -1.0 * Mat::identity(d));
    return FilterBank(a, b);
}

FilterBank trivial_bank(int d) {
    return FilterBank(delta(0, d), delta(1, d));
}

double max_abs_coeff_diff(const FilterBank& lhs, const FilterBank& rhs) {
    return std::max(max_abs_coeff_diff(lhs.A, rhs.A), max_abs_coeff_diff(lhs.B, rhs.B));
}

std::pair<int, int> support(const FilterBank& bank) {
    if (bank.A.is_zero() && bank.B.is_zero()) return {0, -1};
    if (bank.A.is_zero()) return {bank.B.lo(), bank.B.hi()};
    if (bank.B.is_zero()) return {bank.A.lo(), bank.A.hi()};
    return {std::min(bank.A.lo(), bank.B.lo()), std::max(bank.A.hi(), bank.B.hi())};
}

namespace {

// <X, T_2k Y> = sum_j X(j)^T Y(j - 2k)
Mat gram(const MatrixSequence& x, const MatrixSequence& y, int k) {
    Mat acc = Mat::zeros(x.dim, x.dim);
    if (x.is_zero() || y.is_zero()) return acc;
    const int jlo = std::max(x.lo(), y.lo() + 2 * k);
    const int jhi = std::min(x.hi(), y.hi() + 2 * k);
    for (int j = jlo; j <= jhi; ++j) acc += x.at(j).transpose() * y.at(j - 2 * k);
    return acc;
}

double gram_family_residual(const MatrixSequence& x, const MatrixSequence& y, bool want_identity) {
    // enumerate every k whose 2k-shift intersects the supports, plus one beyond
    if (x.is_zero() || y.is_zero()) {
        // missing filters: the k = 0 condition still applies
        Mat target = want_identity ? 2.0 * Mat::identity(x.dim) : Mat::zeros(x.dim, x.dim);
        return max_abs_diff(gram(x, y, 0), target);
    }
    const int kmin = static_cast<int>(std::floor((x.lo() - y.hi()) / 2.0)) - 1;
    const int kmax = static_cast<int>(std::ceil((x.hi() - y.lo()) / 2.0)) + 1;
    double residual = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        Mat target = (want_identity && k == 0) ? 2.0 * Mat::identity(x.dim)
                                               : Mat::zeros(x.dim, x.dim);
        residual = std::max(residual, max_abs_diff(gram(x, y, k), target));
    }
    return residual;
}

}  // namespace

QmfReport check_qmf(const FilterBank& bank, double tol) {
    QmfReport report;
    report.tol = tol;
    double r = gram_family_residual(bank.A, bank.A, true);
    r = std::max(r, gram_family_residual(bank.B, bank.B, true));
    r = std::max(r, gram_family_residual(bank.A, bank.B, false));
    report.orthonormality_residual = r;
    report.orthonormality_pass = (r <= tol);
    // leave full-rank / sum-rule fields at their defaults (verify_bank fills them)
    report.full_rank_pass = true;
    report.sum_rules_pass = true;
    return report;
}

std::pair<double, bool> check_full_rank(const FilterBank& bank, double tol) {
    const int d = bank.dim;
    Mat even = Mat::zeros(d, d), odd = Mat::zeros(d, d), bsum = Mat::zeros(d, d);
    for (int k = bank.A.lo(); k <= bank.A.hi(); ++k) {
        if (k % 2 == 0)
            even += bank.A.at(k);
        else
            odd += bank.A.at(k);
    }
    for (int k = bank.B.lo(); k <= bank.B.hi(); ++k) bsum += bank.B.at(k);
    double r = max_abs_diff(even, Mat::identity(d));
    r = std::max(r, max_abs_diff(odd, Mat::identity(d)));
    r = std::max(r, bsum.max_abs());
    return {r, r <= tol};
}

std::vector<double> check_sum_rules(const FilterBank& bank, int p, double tol) {
    if (p < 1) throw std::invalid_argument("check_sum_rules: p must be >= 1");
    (void)tol;
    std::vector<double> residuals;
    for (int n = 1; n <= p - 1; ++n) {
        Mat acc = Mat::zeros(bank.dim, bank.dim);
        for (int k = bank.A.lo(); k <= bank.A.hi(); ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            acc += sign * std::pow(static_cast<double>(k), n) * bank.A.at(k);
        }
        residuals.push_back(acc.max_abs());
    }
    return residuals;
}

QmfReport verify_bank(const FilterBank& bank, double tol, int moments) {
    QmfReport report = check_qmf(bank, tol);
    report.moments = moments;
    auto [fr, fr_pass] = check_full_rank(bank, tol);
    report.full_rank_residual = fr;
    report.full_rank_pass = fr_pass;
    report.sum_rule_residuals = check_sum_rules(bank, moments, tol);
    report.sum_rules_pass = true;
    for (double r : report.sum_rule_residuals)
        if (r > tol) report.sum_rules_pass = false;
    return report;
}

LaurentMatrix polyphase(const FilterBank& bank) {
    const int d = bank.dim;
    auto [a0, a1] = subsymbols(bank.A);
    auto [b0, b1] = subsymbols(bank.B);
    LaurentMatrix l(2 * d);
    const int lo = std::min(std::min(a0.is_zero() ? 0 : a0.lo(), a1.is_zero() ? 0 : a1.lo()),
                            std::min(b0.is_zero() ? 0 : b0.lo(), b1.is_zero() ? 0 : b1.lo()));
    const int hi = std::max(std::max(a0.is_zero() ? 0 : a0.hi(), a1.is_zero() ? 0 : a1.hi()),
                            std::max(b0.is_zero() ? 0 : b0.hi(), b1.is_zero() ? 0 : b1.hi()));
    for (int k = lo; k <= hi; ++k) {
        Mat block(2 * d, 2 * d);
        block.set_block(0, 0, a0.at(k));
        block.set_block(0, d, b0.at(k));
        block.set_block(d, 0, a1.at(k));
        block.set_block(d, d, b1.at(k));
        l.set(k, block);
    }
    return l.normalize();
}

FilterBank bank_from_polyphase(const LaurentMatrix& l) {
    if (l.dim % 2 != 0) throw std::invalid_argument("bank_from_polyphase: dimension not even");
    const int d = l.dim / 2;
    LaurentMatrix a0(d), a1(d), b0(d), b1(d);
    for (int k = l.lo(); k <= l.hi(); ++k) {
        const Mat block = l.at(k);
        a0.set(k, block.block(0, 0, d, d));
        b0.set(k, block.block(0, d, d, d));
        a1.set(k, block.block(d, 0, d, d));
        b1.set(k, block.block(d, d, d, d));
    }
    MatrixSequence a = sequence_from_symbol(assemble_subsymbols(a0, a1), d);
    MatrixSequence b = sequence_from_symbol(assemble_subsymbols(b0, b1), d);
    return FilterBank(a, b);
}

std::pair<VectorSignal, VectorSignal> analyze(const FilterBank& bank, const VectorSignal& s) {
    if (bank.dim != s.dim) throw std::invalid_argument("analyze: dim mismatch");
    return {downsample(convolve_filter(bank.A, s)), downsample(convolve_filter(bank.B, s))};
}

VectorSignal synthesize(const FilterBank& bank, const VectorSignal& s0, const VectorSignal& s1) {
    if (bank.dim != s0.dim || bank.dim != s1.dim)
        throw std::invalid_argument("synthesize: dim mismatch");
    const int d = bank.dim;
    // A~ = A^T(-.)
    MatrixSequence at(d), bt(d);
    for (int k = bank.A.lo(); k <= bank.A.hi(); ++k) at.set(-k, bank.A.at(k).transpose());
    for (int k = bank.B.lo(); k <= bank.B.hi(); ++k) bt.set(-k, bank.B.at(k).transpose());
    at.normalize();
    bt.normalize();
    VectorSignal u0 = convolve_filter(at, upsample(s0));
    VectorSignal u1 = convolve_filter(bt, upsample(s1));
    VectorSignal out(d);
    if (u0.is_zero() && u1.is_zero()) return out;
    const int lo = std::min(u0.is_zero() ? u1.lo() : u0.lo(), u1.is_zero() ? u0.lo() : u1.lo());
    const int hi = std::max(u0.is_zero() ? u1.hi() : u0.hi(), u1.is_zero() ? u0.hi() : u1.hi());
    for (int k = lo; k <= hi; ++k) {
        auto a = u0.at(k);
        const auto b = u1.at(k);
        for (int i = 0; i < d; ++i) a[i] = 0.5 * (a[i] + b[i]);
        out.set(k, a);
    }
    return out.normalize();
}

}  // namespace mqmf
