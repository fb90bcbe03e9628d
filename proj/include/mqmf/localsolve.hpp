#pragma once

#include <utility>
#include <vector>

#include "mqmf/qmf.hpp"
#include "mqmf/rotations.hpp"

namespace mqmf {

enum class Parameterization { givens, lie };

/// Bank behind the 12-parameter residual. For `givens` the two 6-vectors are
/// the angle vectors of the inner (parity-1) and outer (parity-0) rotations of
/// the length-6 construction, translated to start at index 0. For `lie` they
/// are the generator coefficients (xi, xi') of the inner (parity-0) and outer
/// (parity-1) rotations of the length-4 construction.
FilterBank parameterized_bank(const std::vector<double>& params, Parameterization kind);

/// Stacked full-rank and sum-rule deviations: entries of sum A(2j) - I,
/// sum A(2j+1) - I, and sum (-1)^k k^n A(k) for n = 1 .. p-1 (row-major).
std::vector<double> residual(const std::vector<double>& params, Parameterization kind, int p);

struct SolveOptions {
    int max_iterations = 250;
    double tol = 1e-12;
    int restarts = 1;
    unsigned long long seed = 0;
    double lambda_init = 1e-3;
};

struct SolveResult {
    std::vector<double> params;
    double residual_norm = 0.0;  // max-abs of the residual vector
    bool converged = false;
    int restarts_used = 0;
};

/// Levenberg-Marquardt on ||residual||^2 with seeded uniform restarts in
/// [-pi, pi]^12. The first attempt starts from `initial`; success means
/// residual_norm <= opts.tol.
SolveResult solve_constraints(const std::vector<double>& initial, Parameterization kind, int p,
                              const SolveOptions& opts);

/// Jacobian of (xi, xi') -> stacked coefficients (L_-1, L_0, L_1) of the lie
/// polyphase matrix at the origin, by central differences with h = 1e-6.
/// 48 rows (3 coefficients, row-major 4x4), 12 columns (xi then xi').
Mat jacobian_at_origin();

/// Kernel directions of the linearization: [-1,0,...,0,1] and
/// [0,0,0,0,0,-1,1,0,0,0,0,0].
Mat gamma_kernel_basis();

struct SubspaceBasis {
    Mat vectors;  // columns
    bool orthonormalized = false;
};

/// Null space of the linear condition X_xi' J + J X_xi = 0 with
/// J = [[0,I],[I,0]] (6-dimensional; vectors stacked as (xi' | xi)).
SubspaceBasis sufficient_condition_space();

/// The complementary 10-dimensional space paired with the kernel, as a
/// (xi' | xi)-stacked column basis.
Mat complement_space();

/// Intersection of the sufficient-condition space with the complement,
/// computed from the null space of stacked orthogonal projectors.
SubspaceBasis full_rank_intersection();

/// The four canonical direction columns (G_xi', G_xi): p = [eta, theta,
/// omega, zeta] maps to xi' = G_xi' p, xi = G_xi p.
std::pair<Mat, Mat> full_rank_directions();

/// Max-abs deviation of L(t xi, t xi'; 1) from H(1) over the grid, for the
/// direction p in the four-parameter family.
double full_rank_check_along_ray(const std::vector<double>& p, const std::vector<double>& t_grid);
/// Same for a raw direction pair.
double full_rank_deviation_along_ray(const std::vector<double>& xi, const std::vector<double>& xi_prime,
                                     const std::vector<double>& t_grid);

}  // namespace mqmf
