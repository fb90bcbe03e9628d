#include "mqmf/cascade.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mqmf {

namespace {

// One exact dyadic refinement: from level-n samples of F_n over [0, span] to
// level-(n+1) samples of sum_j F_n(2x - j) taps(j), taps supported {0..span}.
std::vector<Mat> refine(const std::vector<Mat>& prev, int prev_level, int span,
                        const MatrixSequence& taps, int d) {
    const int count = span * (1 << (prev_level + 1)) + 1;
    std::vector<Mat> next(count, Mat::zeros(d, d));
    const int stride = 1 << prev_level;
    for (int k = 0; k < count; ++k) {
        Mat acc = Mat::zeros(d, d);
        for (int j = taps.lo(); j <= taps.hi(); ++j) {
            const int idx = k - j * stride;  // level-n index of 2x - j
            if (idx < 0 || idx >= static_cast<int>(prev.size())) continue;
            acc += prev[static_cast<size_t>(idx)] * taps.at(j);
        }
        next[static_cast<size_t>(k)] = acc;
    }
    return next;
}

// Level-0 samples of the box seed I chi_[0,1) over [0, span].
std::vector<Mat> box_seed(int span, int d) {
    std::vector<Mat> v(static_cast<size_t>(span) + 1, Mat::zeros(d, d));
    v[0] = Mat::identity(d);
    return v;
}

// One application of the cascade operator restricted to the integers.
std::vector<Mat> integer_step(const std::vector<Mat>& v, int span, const MatrixSequence& taps,
                              int d) {
    std::vector<Mat> next(static_cast<size_t>(span) + 1, Mat::zeros(d, d));
    for (int m = 0; m <= span; ++m) {
        Mat acc = Mat::zeros(d, d);
        for (int j = taps.lo(); j <= taps.hi(); ++j) {
            const int idx = 2 * m - j;
            if (idx < 0 || idx > span) continue;
            acc += v[static_cast<size_t>(idx)] * taps.at(j);
        }
        next[static_cast<size_t>(m)] = acc;
    }
    return next;
}

// Fixed point of the integer-restricted cascade. The iteration from the box
// seed converges for bounded schemes and selects the right-continuous
// representative when the unit eigenvalue is not simple; otherwise the
// eigenvalue-1 row space is solved for directly and normalized by the
// partition of identity sum_m F(m) = I.
std::vector<Mat> integer_fixed_point(const MatrixSequence& taps, int span, int d) {
    std::vector<Mat> v = box_seed(span, d);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Mat> next = integer_step(v, span, taps, d);
        double diff = 0.0, scale = 0.0;
        for (int m = 0; m <= span; ++m) {
            diff = std::max(diff, max_abs_diff(next[static_cast<size_t>(m)], v[static_cast<size_t>(m)]));
            scale = std::max(scale, next[static_cast<size_t>(m)].max_abs());
        }
        v = std::move(next);
        if (diff <= 1e-14 * (1.0 + scale)) return v;
    }
    // direct solve: rows of F stacked as x with x = T x,
    // T[(m,c),(m',c')] = taps(2m - m')(c', c)
    const int n = (span + 1) * d;
    Mat t_minus_i(n, n);
    for (int m = 0; m <= span; ++m)
        for (int mp = 0; mp <= span; ++mp) {
            const Mat tap = taps.at(2 * m - mp);
            for (int c = 0; c < d; ++c)
                for (int cp = 0; cp < d; ++cp) t_minus_i(m * d + c, mp * d + cp) = tap(cp, c);
        }
    for (int i = 0; i < n; ++i) t_minus_i(i, i) -= 1.0;
    const Mat kernel = null_space(t_minus_i, 1e-9);
    const int k = kernel.cols;
    if (k >= d) {
        // per-slot sums of each kernel vector: S(c, i) = sum_m K_i(m)_c;
        // rows of F are the minimal-norm kernel combinations with S alpha = e_r
        Mat s(d, k);
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < d; ++c) {
                double sum = 0.0;
                for (int m = 0; m <= span; ++m) sum += kernel(m * d + c, i);
                s(c, i) = sum;
            }
        SvdResult svd = jacobi_svd(s);
        if (numeric_rank(svd, 1e-10) == d) {
            // pinv(S) = V diag(1/s) U^T, k x d
            Mat pinv(k, d);
            for (int i = 0; i < k; ++i)
                for (int r = 0; r < d; ++r) {
                    double acc = 0.0;
                    for (int j = 0; j < d; ++j)
                        if (svd.s[j] > 1e-10 * svd.s.front())
                            acc += svd.v(i, j) * svd.u(r, j) / svd.s[j];
                    pinv(i, r) = acc;
                }
            std::vector<Mat> exact(static_cast<size_t>(span) + 1, Mat::zeros(d, d));
            for (int m = 0; m <= span; ++m)
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c) {
                        double acc = 0.0;
                        for (int i = 0; i < k; ++i) acc += pinv(i, r) * kernel(m * d + c, i);
                        exact[static_cast<size_t>(m)](r, c) = acc;
                    }
            return exact;
        }
    }
    return v;  // best effort for non-convergent schemes
}

}  // namespace

SampledMatrixFunction cascade_scaling(const FilterBank& bank, int levels) {
    if (levels < 1) throw std::invalid_argument("cascade_scaling: levels must be >= 1");
    if (bank.A.is_zero()) throw std::invalid_argument("cascade_scaling: empty scaling filter");
    const int d = bank.dim;
    const int lo = bank.A.lo();
    const MatrixSequence a = translate(bank.A, -lo);
    const int span = std::max(a.hi(), 1);  // support of F is [0, N-1]
    std::vector<Mat> values = integer_fixed_point(a, span, d);
    for (int n = 0; n < levels; ++n) values = refine(values, n, span, a, d);
    SampledMatrixFunction f;
    f.dim = d;
    f.level = levels;
    f.origin = static_cast<double>(lo);
    f.values = std::move(values);
    return f;
}

SampledMatrixFunction cascade_wavelet(const FilterBank& bank, int levels) {
    if (levels < 1) throw std::invalid_argument("cascade_wavelet: levels must be >= 1");
    if (bank.A.is_zero() || bank.B.is_zero())
        throw std::invalid_argument("cascade_wavelet: empty filter");
    const int d = bank.dim;
    const int lo_a = bank.A.lo();
    const MatrixSequence a = translate(bank.A, -lo_a);
    const MatrixSequence b = translate(bank.B, -lo_a);
    const int span_a = std::max(a.hi(), 1);
    std::vector<Mat> f = integer_fixed_point(a, span_a, d);
    for (int n = 0; n + 1 < levels; ++n) f = refine(f, n, span_a, a, d);
    // one-shot B-sum; G lives on [b.lo()/2, (span_a + b.hi())/2]
    const int half = 1 << (levels - 1);
    const int count = (span_a + b.hi() - b.lo()) * half + 1;
    std::vector<Mat> values(static_cast<size_t>(count), Mat::zeros(d, d));
    for (int k = 0; k < count; ++k) {
        Mat acc = Mat::zeros(d, d);
        for (int j = b.lo(); j <= b.hi(); ++j) {
            const int idx = k + (b.lo() - j) * half;  // level-(j-1) index of 2x - j
            if (idx < 0 || idx >= static_cast<int>(f.size())) continue;
            acc += f[static_cast<size_t>(idx)] * b.at(j);
        }
        values[static_cast<size_t>(k)] = acc;
    }
    SampledMatrixFunction g;
    g.dim = d;
    g.level = levels;
    g.origin = static_cast<double>(lo_a) + 0.5 * b.lo();
    g.values = std::move(values);
    return g;
}

double two_scale_residual(const SampledMatrixFunction& f, const MatrixSequence& a) {
    if (f.level < 1) throw std::invalid_argument("two_scale_residual: level must be >= 1");
    const MatrixSequence taps = translate(a, -a.lo());
    const int stride = 1 << (f.level - 1);
    double worst = 0.0;
    for (int k = 0; k < static_cast<int>(f.values.size()); ++k) {
        Mat acc = Mat::zeros(f.dim, f.dim);
        for (int j = taps.lo(); j <= taps.hi(); ++j) {
            const int idx = 2 * k - j * 2 * stride;  // level-j index of 2x - j
            if (idx < 0 || idx >= static_cast<int>(f.values.size())) continue;
            acc += f.values[static_cast<size_t>(idx)] * taps.at(j);
        }
        worst = std::max(worst, max_abs_diff(f.values[static_cast<size_t>(k)], acc));
    }
    return worst;
}

Mat moment(const SampledMatrixFunction& f, int order) {
    Mat acc = Mat::zeros(f.dim, f.dim);
    const double h = f.spacing();
    for (int k = 0; k < static_cast<int>(f.values.size()); ++k)
        acc += (h * std::pow(f.x(k), order)) * f.values[static_cast<size_t>(k)];
    return acc;
}

LaurentMatrix autocorrelation(const FilterBank& bank) {
    const LaurentMatrix a = symbol(bank.A);
    return 0.5 * laurent_mul(laurent_adjoint(a), a);
}

PositiveDefiniteReport check_positive_definite_on_circle(const LaurentMatrix& c, int samples) {
    if (samples < 2) throw std::invalid_argument("check_positive_definite_on_circle: samples < 2");
    // Hermitian on |z| = 1 means C(-k) = C(k)^T coefficient-wise
    double herm = 0.0;
    for (int k = c.lo(); k <= c.hi(); ++k)
        herm = std::max(herm, max_abs_diff(c.at(-k), c.at(k).transpose()));
    if (herm > 1e-10)
        throw std::invalid_argument("check_positive_definite_on_circle: symbol is not Hermitian");

    PositiveDefiniteReport report;
    report.min_eigenvalue = std::numeric_limits<double>::infinity();
    report.min_eigenvalue_at_pi = std::numeric_limits<double>::infinity();
    double scale = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double omega = 2.0 * M_PI * k / samples;
        auto [re, im] = eval_circle(c, omega);
        const double lam = hermitian_min_eigenvalue(re, im);
        scale = std::max(scale, re.max_abs() + im.max_abs());
        if (2 * k == samples)
            report.min_eigenvalue_at_pi = std::min(report.min_eigenvalue_at_pi, lam);
        else
            report.min_eigenvalue = std::min(report.min_eigenvalue, lam);
    }
    const double psd_tol = 1e-12 * (1.0 + scale);
    const bool pi_ok = report.min_eigenvalue_at_pi == std::numeric_limits<double>::infinity() ||
                       report.min_eigenvalue_at_pi > -psd_tol;
    report.passes = (report.min_eigenvalue > psd_tol) && pi_ok;
    return report;
}

}  // namespace mqmf
