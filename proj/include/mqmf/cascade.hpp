#pragma once

#include <cmath>
#include <vector>

#include "mqmf/laurent.hpp"
#include "mqmf/qmf.hpp"

namespace mqmf {

/// Matrix-valued function sampled on the dyadic grid of a refinement level:
/// values[k] approximates F(origin + k 2^-level), covering the support
/// interval [origin, origin + span].
struct SampledMatrixFunction {
    int dim = 0;
    int level = 0;
    double origin = 0.0;
    std::vector<Mat> values;

    double spacing() const { return std::ldexp(1.0, -level); }
    double x(int k) const { return origin + k * spacing(); }
};

/// Cascade iteration F_{n+1}(x) = sum_j F_n(2x - j) A(j) from the box-function
/// seed F_0 = I on [0, 1), evaluated exactly on dyadic grids (level n uses
/// spacing 2^-n). Returns the level-j iterate.
SampledMatrixFunction cascade_scaling(const FilterBank& bank, int levels);

/// G(x) = sum_j F(2x - j) B(j), applied once to the level-(j-1) iterate; the
/// result is sampled at level j.
SampledMatrixFunction cascade_wavelet(const FilterBank& bank, int levels);

/// Max-abs dyadic-grid deviation of F from its own two-scale image.
double two_scale_residual(const SampledMatrixFunction& f, const MatrixSequence& a);

/// Riemann-sum moment integral x^n F(x) dx over the sample grid.
Mat moment(const SampledMatrixFunction& f, int order);

/// Autocorrelation symbol C(z) = (1/2) A^H(z) A(z).
LaurentMatrix autocorrelation(const FilterBank& bank);

struct PositiveDefiniteReport {
    double min_eigenvalue = 0.0;     // minimum over omega != pi
    double min_eigenvalue_at_pi = 0.0;
    bool passes = false;
};

/// Samples C(e^{i omega}) at `samples` uniform points. Passes when every
/// evaluation is positive semidefinite to roundoff and the kernel appears
/// only at omega = pi (the (z+1)^2 zero of a full-rank symbol). Throws
/// std::invalid_argument when C is not Hermitian on the circle within 1e-10.
PositiveDefiniteReport check_positive_definite_on_circle(const LaurentMatrix& c, int samples = 1024);

}  // namespace mqmf
