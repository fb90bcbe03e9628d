#pragma once

#include <utility>
#include <vector>

#include "mqmf/laurent.hpp"
#include "mqmf/sequence.hpp"

namespace mqmf {

/// A pair (A, B) of matrix filters claimed to form a QMF system.
struct FilterBank {
    int dim = 0;
    MatrixSequence A;
    MatrixSequence B;

    FilterBank() = default;
    FilterBank(MatrixSequence a, MatrixSequence b);

    FilterBank& normalize();
};

/// Haar bank: A(0) = A(1) = B(0) = -B(1) = I.
FilterBank haar_bank(int d);
/// Trivial system: A = I delta_0, B = I delta_1 (identity polyphase matrix).
FilterBank trivial_bank(int d);

double max_abs_coeff_diff(const FilterBank& lhs, const FilterBank& rhs);

/// Combined support interval [lo, hi] of A and B.
std::pair<int, int> support(const FilterBank& bank);

struct QmfReport {
    double orthonormality_residual = 0.0;
    double full_rank_residual = 0.0;
    std::vector<double> sum_rule_residuals;  // orders 1 .. p-1
    bool orthonormality_pass = false;
    bool full_rank_pass = false;
    bool sum_rules_pass = false;
    double tol = 0.0;
    int moments = 1;

    bool all_pass() const { return orthonormality_pass && full_rank_pass && sum_rules_pass; }
};

/// Worst deviation of the Gram conditions <A,T_2k A> = <B,T_2k B> = 2 d0(k) I,
/// <A,T_2k B> = 0, over every k whose shift intersects the supports.
QmfReport check_qmf(const FilterBank& bank, double tol);

/// Max deviation of the even/odd coefficient sums of A from I, together with
/// the deviation of sum_k B(k) from 0.
std::pair<double, bool> check_full_rank(const FilterBank& bank, double tol);

/// Residuals of sum_k (-1)^k k^n A(k) = 0 for n = 1 .. p-1 (empty for p = 1).
std::vector<double> check_sum_rules(const FilterBank& bank, int p, double tol);

/// All checks at once.
QmfReport verify_bank(const FilterBank& bank, double tol, int moments);

/// Polyphase matrix L(z) = [[A0, B0], [A1, B1]] (2d x 2d).
LaurentMatrix polyphase(const FilterBank& bank);
FilterBank bank_from_polyphase(const LaurentMatrix& l);

/// Analysis s -> (D(A * s), D(B * s)).
std::pair<VectorSignal, VectorSignal> analyze(const FilterBank& bank, const VectorSignal& s);
/// Synthesis (A~ * D^T s0 + B~ * D^T s1) / 2 with A~ = A^T(-.).
VectorSignal synthesize(const FilterBank& bank, const VectorSignal& s0, const VectorSignal& s1);

}  // namespace mqmf
