#pragma once

#include <array>
#include <vector>

#include "mqmf/linalg.hpp"
#include "mqmf/qmf.hpp"

namespace mqmf {

/// Givens rotation in the (l, m) plane, 1-indexed, 1 <= l < m <= n:
/// g_ll = g_mm = cos(theta), g_lm = -g_ml = sin(theta).
Mat givens(int l, int m, double theta, int n);

/// Six-parameter SO(4) rotation
/// S(theta) = G(1,2,t4) G(3,4,t3) G(2,3,t2) G(1,4,t1) G(1,3,t6) G(2,4,t5).
Mat s_theta(const std::array<double, 6>& theta);

/// Coefficient vector over the skew-symmetric generator basis of so(2d).
struct LieParams {
    int d = 0;
    std::vector<double> xi;  // length d(2d-1)

    LieParams() = default;
    LieParams(int dim, std::vector<double> coeffs);
};

/// Generator X_alpha = E^{i,j} - E^{j,i}, alpha 1-indexed over pairs
/// (1,2), (1,3), ..., (1,2d), (2,3), ... in lexicographic order.
Mat lie_generator(int alpha, int d);

/// M(xi) = exp(sum_alpha xi_alpha X_alpha); orthogonal with determinant +1.
Mat lie_exp(const LieParams& p);
Mat lie_exp(int d, const std::vector<double>& xi);

/// One application of the shift-commuting orthogonal operator U_eps(M).
/// parity 0 groups indices (2n, 2n+1); parity 1 groups (2n-1, 2n).
struct RotationStep {
    Mat M;       // 2d x 2d, orthogonal
    int parity;  // 0 or 1
};

/// Polyphase action: parity 0 maps L(z) to M L(z); parity 1 maps L(z) to
/// [[0, zI], [I, 0]] M [[0, I], [z^-1 I, 0]] L(z). Throws
/// std::invalid_argument if M is not orthogonal within orth_tol.
FilterBank apply_step(const FilterBank& bank, const RotationStep& step, double orth_tol = 1e-9);

enum class Seed { haar, trivial };

/// Apply steps left to right, starting from the Haar bank (or the trivial
/// delta system). An empty list returns the seed.
FilterBank construct(const std::vector<RotationStep>& steps, int d, Seed seed = Seed::haar);

/// Alternating parities 0, 1, 0, 1, ... for a list of matrices.
std::vector<RotationStep> alternating_steps(const std::vector<Mat>& ms);

/// Support-length law for construct with generic rotations: the length grows
/// by 2 at every parity alternation (an initial parity-1 step counts as an
/// alternation relative to the even-aligned seed).
int expected_support_length(const std::vector<int>& parities);

}  // namespace mqmf
