#include "mqmf/factorize.hpp"

#include <cmath>

namespace mqmf {

namespace {

constexpr double kRankTol = 1e-9;

std::string describe(const BlockObstruction& info) {
    return std::string("outermost ") + (info.side == Side::left ? "left" : "right") +
           " block of parity " + std::to_string(info.parity) + " covering has dimension " +
           std::to_string(info.dimension);
}

Mat haar_polyphase(int d) {
    Mat h(2 * d, 2 * d);
    h.set_block(0, 0, Mat::identity(d));
    h.set_block(0, d, Mat::identity(d));
    h.set_block(d, 0, Mat::identity(d));
    h.set_block(d, d, -1.0 * Mat::identity(d));
    return h;
}

}  // namespace

ObstructionError::ObstructionError(const BlockObstruction& i)
    : std::runtime_error(describe(i)), info(i) {}

int block_dimension(const FilterBank& bank, Side side, int parity) {
    FilterBank b = bank;
    b.normalize();
    if (b.A.is_zero() && b.B.is_zero())
        throw std::invalid_argument("block_dimension: empty bank");
    // blocks (2n-1, 2n) of the bank are blocks (2n, 2n+1) of its translate
    if (parity == 1) {
        b.A = translate(b.A, 1);
        b.B = translate(b.B, 1);
    } else if (parity != 0) {
        throw std::invalid_argument("block_dimension: parity must be 0 or 1");
    }
    auto [lo, hi] = support(b);
    const int d = b.dim;
    const int n = (side == Side::left) ? ((lo >= 0) ? lo / 2 : (lo - 1) / 2)
                                       : ((hi >= 0) ? hi / 2 : (hi - 1) / 2);
    Mat block(2 * d, 2 * d);
    block.set_block(0, 0, b.A.at(2 * n));
    block.set_block(0, d, b.B.at(2 * n));
    block.set_block(d, 0, b.A.at(2 * n + 1));
    block.set_block(d, d, b.B.at(2 * n + 1));
    return numeric_rank(block, kRankTol);
}

PeelResult peel_once(const FilterBank& bank, int parity) {
    if (parity != 0 && parity != 1) throw std::invalid_argument("peel_once: parity must be 0 or 1");
    FilterBank b = bank;
    b.normalize();
    if (parity == 1) {
        b.A = translate(b.A, 1);
        b.B = translate(b.B, 1);
    }
    LaurentMatrix l = polyphase(b);
    if (l.lo() >= l.hi()) throw std::invalid_argument("peel_once: nothing to peel");
    const int d = b.dim;
    const int len_before = support(b).second - support(b).first + 1;

    const Mat outer_left = l.at(l.lo());
    const Mat outer_right = l.at(l.hi());
    const int rank_left = numeric_rank(outer_left, kRankTol);
    const int rank_right = numeric_rank(outer_right, kRankTol);
    if (rank_left != d) throw ObstructionError({Side::left, parity, rank_left});
    if (rank_right != d) throw ObstructionError({Side::right, parity, rank_right});

    const Mat cl = column_space(outer_left, kRankTol);
    const Mat cr = column_space(outer_right, kRankTol);
    const double cross = (cr.transpose() * cl).max_abs();
    if (cross > 1e-6)
        throw OrthogonalityError("peel_once: outer blocks are not mutually orthogonal");

    // rows of W: basis of the right block's column space, then the left's;
    // re-orthonormalized by QR with nonnegative-diagonal signs
    QrResult qr = householder_qr(hcat(cr, cl));
    const Mat w = qr.q.transpose();

    LaurentMatrix reduced_l(2 * d);
    for (int k = l.lo(); k <= l.hi(); ++k) reduced_l.set(k, w * l.at(k));
    // the peel annihilates the outer half-blocks; verify, then zero them
    Mat left = reduced_l.at(l.lo());
    Mat right = reduced_l.at(l.hi());
    const double scale = 1.0 + l.at(l.lo()).max_abs() + l.at(l.hi()).max_abs();
    if (left.block(0, 0, d, 2 * d).max_abs() > 1e-6 * scale ||
        right.block(d, 0, d, 2 * d).max_abs() > 1e-6 * scale)
        throw OrthogonalityError("peel_once: outer half-blocks were not annihilated");
    left.set_block(0, 0, Mat::zeros(d, 2 * d));
    right.set_block(d, 0, Mat::zeros(d, 2 * d));
    reduced_l.set(l.lo(), left);
    reduced_l.set(l.hi(), right);

    FilterBank reduced = bank_from_polyphase(reduced_l).normalize();
    if (parity == 1) {
        reduced.A = translate(reduced.A, -1);
        reduced.B = translate(reduced.B, -1);
    }
    const int len_after = support(reduced).second - support(reduced).first + 1;
    if (len_after != len_before - 2)
        throw OrthogonalityError("peel_once: support did not shrink by 2");
    return {reduced, RotationStep{w.transpose(), parity}};
}

namespace {

struct Attempt {
    bool ok = false;
    std::vector<RotationStep> steps;  // construct order
    std::optional<BlockObstruction> obstruction;
};

Attempt try_peel_to_haar(FilterBank b, double tol) {
    Attempt attempt;
    std::vector<RotationStep> peeled;
    while (true) {
        auto [lo, hi] = support(b);
        const int len = hi - lo + 1;
        if (len <= 2) break;
        if ((hi - lo) % 2 == 0) {
            // odd combined length: no parity covering has two full outer blocks
            const int parity = (lo % 2 == 0) ? 0 : 1;
            attempt.obstruction =
                BlockObstruction{Side::right, parity, block_dimension(b, Side::right, parity)};
            return attempt;
        }
        const int parity = (lo % 2 == 0) ? 0 : 1;
        try {
            PeelResult peel = peel_once(b, parity);
            peeled.push_back(peel.step);
            b = peel.reduced;
        } catch (const ObstructionError& e) {
            attempt.obstruction = e.info;
            return attempt;
        }
    }
    auto [lo, hi] = support(b);
    (void)hi;
    if (lo != 0) {
        const int parity = (lo % 2 == 0) ? 0 : 1;
        attempt.obstruction = BlockObstruction{Side::left, parity,
                                               block_dimension(b, Side::left, parity)};
        return attempt;
    }
    const int d = b.dim;
    const Mat align = 0.5 * (polyphase(b).at(0) * haar_polyphase(d).transpose());
    if (max_abs_diff(align.transpose() * align, Mat::identity(2 * d)) > tol)
        throw OrthogonalityError("factorize: residual length-2 bank is not orthogonal");
    attempt.steps.push_back({align, 0});
    attempt.steps.insert(attempt.steps.end(), peeled.rbegin(), peeled.rend());
    attempt.ok = true;
    return attempt;
}

}  // namespace

PeelCertificate factorize(const FilterBank& bank, double tol) {
    FilterBank b = bank;
    b.normalize();
    const QmfReport qmf = check_qmf(b, tol);
    if (!qmf.orthonormality_pass)
        throw OrthogonalityError("factorize: input fails the QMF conditions (residual " +
                                 std::to_string(qmf.orthonormality_residual) + ")");
    PeelCertificate cert;
    std::optional<BlockObstruction> first_obstruction;
    for (int shift : {0, -1, 1}) {
        FilterBank shifted = b;
        shifted.A = translate(shifted.A, shift);
        shifted.B = translate(shifted.B, shift);
        Attempt attempt = try_peel_to_haar(shifted, tol);
        if (attempt.ok) {
            cert.steps = std::move(attempt.steps);
            cert.pre_translate = shift;
            FilterBank rebuilt = construct(cert.steps, b.dim);
            rebuilt.A = translate(rebuilt.A, -shift);
            rebuilt.B = translate(rebuilt.B, -shift);
            cert.residual = max_abs_coeff_diff(rebuilt, b);
            return cert;
        }
        if (!first_obstruction) first_obstruction = attempt.obstruction;
    }
    cert.obstruction = first_obstruction;
    return cert;
}

}  // namespace mqmf
