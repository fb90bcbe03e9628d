#include "mqmf/localsolve.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace mqmf {

namespace {

constexpr int kParamCount = 12;

std::array<double, 6> to_angles(const std::vector<double>& params, int start) {
    std::array<double, 6> t{};
    for (int i = 0; i < 6; ++i) t[i] = params[start + i];
    return t;
}

std::vector<double> half(const std::vector<double>& params, int start) {
    return std::vector<double>(params.begin() + start, params.begin() + start + 6);
}

}  // namespace

FilterBank parameterized_bank(const std::vector<double>& params, Parameterization kind) {
    if (static_cast<int>(params.size()) != kParamCount)
        throw std::invalid_argument("parameterized_bank: expected 12 parameters");
    if (kind == Parameterization::givens) {
        const Mat inner = s_theta(to_angles(params, 0));
        const Mat outer = s_theta(to_angles(params, 6));
        // native construct alignment, support [-2, 3]; callers translate by 2
        // when comparing against table-indexed coefficients
        return construct({{inner, 1}, {outer, 0}}, 2);
    }
    const Mat inner = lie_exp(2, half(params, 0));
    const Mat outer = lie_exp(2, half(params, 6));
    return construct({{inner, 0}, {outer, 1}}, 2);
}

std::vector<double> residual(const std::vector<double>& params, Parameterization kind, int p) {
    if (p < 1) throw std::invalid_argument("residual: p must be >= 1");
    const FilterBank bank = parameterized_bank(params, kind);
    const int d = bank.dim;
    std::vector<double> out;
    out.reserve(d * d * (2 + (p - 1)));
    Mat even = Mat::zeros(d, d), odd = Mat::zeros(d, d);
    for (int k = bank.A.lo(); k <= bank.A.hi(); ++k) {
        if (k % 2 == 0)
            even += bank.A.at(k);
        else
            odd += bank.A.at(k);
    }
    even -= Mat::identity(d);
    odd -= Mat::identity(d);
    for (double x : even.a) out.push_back(x);
    for (double x : odd.a) out.push_back(x);
    for (int n = 1; n <= p - 1; ++n) {
        Mat acc = Mat::zeros(d, d);
        for (int k = bank.A.lo(); k <= bank.A.hi(); ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            acc += sign * std::pow(static_cast<double>(k), n) * bank.A.at(k);
        }
        for (double x : acc.a) out.push_back(x);
    }
    return out;
}

namespace {

double norm_inf(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double norm2_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

Mat numeric_jacobian(const std::vector<double>& x, Parameterization kind, int p, double h) {
    const std::vector<double> r0 = residual(x, kind, p);
    Mat j(static_cast<int>(r0.size()), kParamCount);
    for (int c = 0; c < kParamCount; ++c) {
        std::vector<double> xp = x, xm = x;
        xp[c] += h;
        xm[c] -= h;
        const std::vector<double> rp = residual(xp, kind, p);
        const std::vector<double> rm = residual(xm, kind, p);
        for (size_t i = 0; i < r0.size(); ++i)
            j(static_cast<int>(i), c) = (rp[i] - rm[i]) / (2.0 * h);
    }
    return j;
}

struct LmOutcome {
    std::vector<double> params;
    double residual_inf;
};

LmOutcome levenberg_marquardt(std::vector<double> x, Parameterization kind, int p,
                              const SolveOptions& opts) {
    std::vector<double> r = residual(x, kind, p);
    double cost = norm2_sq(r);
    double lambda = opts.lambda_init;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (norm_inf(r) <= opts.tol) break;
        const Mat j = numeric_jacobian(x, kind, p, 1e-6);
        const Mat jtj = j.transpose() * j;
        std::vector<double> g(kParamCount, 0.0);
        for (int c = 0; c < kParamCount; ++c)
            for (int i = 0; i < j.rows; ++i) g[c] += j(i, c) * r[i];
        bool accepted = false;
        for (int attempt = 0; attempt < 25; ++attempt) {
            Mat damped = jtj;
            for (int i = 0; i < kParamCount; ++i) damped(i, i) += lambda;
            std::vector<double> rhs(kParamCount);
            for (int i = 0; i < kParamCount; ++i) rhs[i] = -g[i];
            std::vector<double> delta;
            try {
                delta = cholesky_solve(damped, rhs);
            } catch (const std::runtime_error&) {
                lambda *= 10.0;
                continue;
            }
            std::vector<double> xt = x;
            for (int i = 0; i < kParamCount; ++i) xt[i] += delta[i];
            const std::vector<double> rt = residual(xt, kind, p);
            const double cost_t = norm2_sq(rt);
            if (cost_t < cost) {
                x = std::move(xt);
                r = rt;
                cost = cost_t;
                lambda = std::max(lambda / 10.0, 1e-14);
                accepted = true;
                break;
            }
            lambda *= 10.0;
            if (lambda > 1e10) break;
        }
        if (!accepted) break;
    }
    return {std::move(x), norm_inf(r)};
}

}  // namespace

SolveResult solve_constraints(const std::vector<double>& initial, Parameterization kind, int p,
                              const SolveOptions& opts) {
    if (static_cast<int>(initial.size()) != kParamCount)
        throw std::invalid_argument("solve_constraints: expected 12 parameters");
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> uniform(-M_PI, M_PI);
    SolveResult best;
    best.residual_norm = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt < std::max(1, opts.restarts); ++attempt) {
        std::vector<double> start;
        if (attempt == 0) {
            start = initial;
        } else {
            start.resize(kParamCount);
            for (double& v : start) v = uniform(rng);
        }
        LmOutcome outcome = levenberg_marquardt(std::move(start), kind, p, opts);
        if (outcome.residual_inf < best.residual_norm) {
            best.params = outcome.params;
            best.residual_norm = outcome.residual_inf;
        }
        best.restarts_used = attempt + 1;
        if (best.residual_norm <= opts.tol) break;
    }
    best.converged = (best.residual_norm <= opts.tol);
    return best;
}

namespace {

std::vector<double> polyphase_embedding(const std::vector<double>& params) {
    const FilterBank bank = parameterized_bank(params, Parameterization::lie);
    const LaurentMatrix l = polyphase(bank);
    std::vector<double> out;
    out.reserve(48);
    for (int k = -1; k <= 1; ++k) {
        const Mat c = l.at(k);
        out.insert(out.end(), c.a.begin(), c.a.end());
    }
    return out;
}

}  // namespace

Mat jacobian_at_origin() {
    const double h = 1e-6;
    Mat j(48, kParamCount);
    for (int c = 0; c < kParamCount; ++c) {
        std::vector<double> xp(kParamCount, 0.0), xm(kParamCount, 0.0);
        xp[c] = h;
        xm[c] = -h;
        const std::vector<double> fp = polyphase_embedding(xp);
        const std::vector<double> fm = polyphase_embedding(xm);
        for (int i = 0; i < 48; ++i) j(i, c) = (fp[i] - fm[i]) / (2.0 * h);
    }
    return j;
}

Mat gamma_kernel_basis() {
    Mat g(kParamCount, 2);
    g(0, 0) = -1.0;
    g(11, 0) = 1.0;
    g(5, 1) = -1.0;
    g(6, 1) = 1.0;
    return g;
}

SubspaceBasis sufficient_condition_space() {
    Mat jswap(4, 4);
    jswap.set_block(0, 2, Mat::identity(2));
    jswap.set_block(2, 0, Mat::identity(2));
    // rows: entries of X_xi' J + J X_xi; columns: (xi' | xi) stacking
    Mat system(16, kParamCount);
    for (int alpha = 1; alpha <= 6; ++alpha) {
        const Mat x = lie_generator(alpha, 2);
        const Mat from_prime = x * jswap;
        const Mat from_plain = jswap * x;
        for (int i = 0; i < 4; ++i)
            for (int jj = 0; jj < 4; ++jj) {
                system(4 * i + jj, alpha - 1) = from_prime(i, jj);
                system(4 * i + jj, 6 + alpha - 1) = from_plain(i, jj);
            }
    }
    SubspaceBasis basis;
    basis.vectors = null_space(system, 1e-10);
    basis.orthonormalized = true;
    return basis;
}

Mat complement_space() {
    // ten columns complementary to the kernel, (xi' | xi) stacking; the fifth
    // column pairs coordinates 5 and 6, the first pairs 1 and 12
    Mat c(kParamCount, 10);
    c(0, 0) = 1.0;
    c(11, 0) = 1.0;
    c(1, 1) = 1.0;
    c(2, 2) = 1.0;
    c(3, 3) = 1.0;
    c(4, 4) = 1.0;
    c(5, 4) = 1.0;
    c(6, 5) = 1.0;
    c(7, 6) = 1.0;
    c(8, 7) = 1.0;
    c(9, 8) = 1.0;
    c(10, 9) = 1.0;
    return c;
}

SubspaceBasis full_rank_intersection() {
    const Mat v = sufficient_condition_space().vectors;
    QrResult qc = householder_qr(complement_space());
    const Mat c = qc.q.block(0, 0, kParamCount, 10);
    const Mat pv = v * v.transpose();
    const Mat pc = c * c.transpose();
    const Mat eye = Mat::identity(kParamCount);
    Mat stacked = vcat(eye - pv, eye - pc);
    SubspaceBasis basis;
    basis.vectors = null_space(stacked, 1e-8);
    basis.orthonormalized = true;
    return basis;
}

std::pair<Mat, Mat> full_rank_directions() {
    // columns ordered (eta, theta, omega, zeta): xi' = [0, zeta, eta, omega,
    // theta, theta], xi = [-theta, zeta, omega, eta, theta, 0]
    Mat g_prime(6, 4);
    g_prime(1, 3) = 1.0;
    g_prime(2, 0) = 1.0;
    g_prime(3, 2) = 1.0;
    g_prime(4, 1) = 1.0;
    g_prime(5, 1) = 1.0;
    Mat g(6, 4);
    g(0, 1) = -1.0;
    g(1, 3) = 1.0;
    g(2, 2) = 1.0;
    g(3, 0) = 1.0;
    g(4, 1) = 1.0;
    return {g_prime, g};
}

double full_rank_deviation_along_ray(const std::vector<double>& xi,
                                     const std::vector<double>& xi_prime,
                                     const std::vector<double>& t_grid) {
    Mat h1(4, 4);
    h1.set_block(0, 0, Mat::identity(2));
    h1.set_block(0, 2, Mat::identity(2));
    h1.set_block(2, 0, Mat::identity(2));
    h1.set_block(2, 2, -1.0 * Mat::identity(2));
    double worst = 0.0;
    for (double t : t_grid) {
        std::vector<double> params(kParamCount, 0.0);
        for (int i = 0; i < 6; ++i) {
            params[i] = t * xi[i];
            params[6 + i] = t * xi_prime[i];
        }
        const FilterBank bank = parameterized_bank(params, Parameterization::lie);
        const Mat l1 = eval_real(polyphase(bank), 1.0);
        worst = std::max(worst, max_abs_diff(l1, h1));
    }
    return worst;
}

double full_rank_check_along_ray(const std::vector<double>& p, const std::vector<double>& t_grid) {
    if (p.size() != 4) throw std::invalid_argument("full_rank_check_along_ray: p must be length 4");
    auto [g_prime, g] = full_rank_directions();
    std::vector<double> xi(6, 0.0), xi_prime(6, 0.0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) {
            xi[i] += g(i, j) * p[j];
            xi_prime[i] += g_prime(i, j) * p[j];
        }
    return full_rank_deviation_along_ray(xi, xi_prime, t_grid);
}

}  // namespace mqmf
