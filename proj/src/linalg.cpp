#include "mqmf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mqmf {

Mat::Mat(int r, int c, std::initializer_list<double> vals) : Mat(r, c) {
    if (static_cast<int>(vals.size()) != r * c)
        throw std::invalid_argument("Mat: initializer size mismatch");
    std::copy(vals.begin(), vals.end(), a.begin());
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::block(int i0, int j0, int r, int c) const {
    if (i0 < 0 || j0 < 0 || i0 + r > rows || j0 + c > cols)
        throw std::out_of_range("Mat::block");
    Mat b(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
}

void Mat::set_block(int i0, int j0, const Mat& m) {
    if (i0 < 0 || j0 < 0 || i0 + m.rows > rows || j0 + m.cols > cols)
        throw std::out_of_range("Mat::set_block");
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
}

double Mat::max_abs() const {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

Mat& Mat::operator+=(const Mat& m) {
    if (rows != m.rows || cols != m.cols) throw std::invalid_argument("Mat +=: size mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] += m.a[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& m) {
    if (rows != m.rows || cols != m.cols) throw std::invalid_argument("Mat -=: size mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] -= m.a[i];
    return *this;
}

Mat& Mat::operator*=(double s) {
    for (double& x : a) x *= s;
    return *this;
}

Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }

Mat operator*(const Mat& lhs, const Mat& rhs) {
    if (lhs.cols != rhs.rows) throw std::invalid_argument("Mat *: inner size mismatch");
    Mat out(lhs.rows, rhs.cols);
    for (int i = 0; i < lhs.rows; ++i)
        for (int k = 0; k < lhs.cols; ++k) {
            const double lik = lhs(i, k);
            if (lik == 0.0) continue;
            for (int j = 0; j < rhs.cols; ++j) out(i, j) += lik * rhs(k, j);
        }
    return out;
}

Mat operator*(double s, Mat m) { return m *= s; }

bool operator==(const Mat& lhs, const Mat& rhs) {
    return lhs.rows == rhs.rows && lhs.cols == rhs.cols && lhs.a == rhs.a;
}

double max_abs_diff(const Mat& lhs, const Mat& rhs) {
    if (lhs.rows != rhs.rows || lhs.cols != rhs.cols)
        throw std::invalid_argument("max_abs_diff: size mismatch");
    double m = 0.0;
    for (size_t i = 0; i < lhs.a.size(); ++i) m = std::max(m, std::abs(lhs.a[i] - rhs.a[i]));
    return m;
}

Mat vcat(const Mat& top, const Mat& bottom) {
    if (top.cols != bottom.cols) throw std::invalid_argument("vcat: column mismatch");
    Mat out(top.rows + bottom.rows, top.cols);
    out.set_block(0, 0, top);
    out.set_block(top.rows, 0, bottom);
    return out;
}

Mat hcat(const Mat& left, const Mat& right) {
    if (left.rows != right.rows) throw std::invalid_argument("hcat: row mismatch");
    Mat out(left.rows, left.cols + right.cols);
    out.set_block(0, 0, left);
    out.set_block(0, left.cols, right);
    return out;
}

QrResult householder_qr(const Mat& m) {
    if (m.rows < m.cols) throw std::invalid_argument("householder_qr: rows < cols");
    const int n = m.rows, p = m.cols;
    Mat r = m;
    Mat q = Mat::identity(n);
    for (int k = 0; k < p; ++k) {
        double norm = 0.0;
        for (int i = k; i < n; ++i) norm += r(i, k) * r(i, k);
        norm = std::sqrt(norm);
        if (norm < 1e-300) continue;
        const double alpha = (r(k, k) >= 0.0) ? -norm : norm;
        std::vector<double> v(n, 0.0);
        v[k] = r(k, k) - alpha;
        for (int i = k + 1; i < n; ++i) v[i] = r(i, k);
        double vtv = 0.0;
        for (int i = k; i < n; ++i) vtv += v[i] * v[i];
        if (vtv < 1e-300) continue;
        // apply H = I - 2 v v^T / (v^T v) to R (left) and accumulate into Q
        for (int j = 0; j < p; ++j) {
            double dot = 0.0;
            for (int i = k; i < n; ++i) dot += v[i] * r(i, j);
            const double f = 2.0 * dot / vtv;
            for (int i = k; i < n; ++i) r(i, j) -= f * v[i];
        }
        for (int j = 0; j < n; ++j) {
            double dot = 0.0;
            for (int i = k; i < n; ++i) dot += v[i] * q(j, i);
            const double f = 2.0 * dot / vtv;
            for (int i = k; i < n; ++i) q(j, i) -= f * v[i];
        }
    }
    // sign convention: nonnegative diagonal of R
    for (int k = 0; k < p; ++k) {
        if (r(k, k) < 0.0) {
            for (int j = 0; j < p; ++j) r(k, j) = -r(k, j);
            for (int i = 0; i < n; ++i) q(i, k) = -q(i, k);
        }
    }
    for (int k = 0; k < p; ++k)
        for (int i = k + 1; i < n; ++i) r(i, k) = 0.0;
    return {q, r};
}

SvdResult jacobi_svd(const Mat& m) {
    if (m.rows < m.cols) {
        SvdResult t = jacobi_svd(m.transpose());
        return {t.v, t.s, t.u};
    }
    const int n = m.rows, p = m.cols;
    Mat w = m;
    Mat v = Mat::identity(p);
    const double eps = 1e-15;
    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < p - 1; ++i) {
            for (int j = i + 1; j < p; ++j) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (int k = 0; k < n; ++k) {
                    alpha += w(k, i) * w(k, i);
                    beta += w(k, j) * w(k, j);
                    gamma += w(k, i) * w(k, j);
                }
                const double scale = std::sqrt(alpha * beta);
                if (scale < 1e-300 || std::abs(gamma) <= eps * scale) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = ((zeta >= 0.0) ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (int k = 0; k < n; ++k) {
                    const double wi = w(k, i), wj = w(k, j);
                    w(k, i) = cs * wi - sn * wj;
                    w(k, j) = sn * wi + cs * wj;
                }
                for (int k = 0; k < p; ++k) {
                    const double vi = v(k, i), vj = v(k, j);
                    v(k, i) = cs * vi - sn * vj;
                    v(k, j) = sn * vi + cs * vj;
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<double> s(p, 0.0);
    for (int j = 0; j < p; ++j) {
        double norm = 0.0;
        for (int k = 0; k < n; ++k) norm += w(k, j) * w(k, j);
        s[j] = std::sqrt(norm);
    }
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return s[x] > s[y]; });

    SvdResult out;
    out.u = Mat(n, p);
    out.v = Mat(p, p);
    out.s.resize(p);
    const double smax = s.empty() ? 0.0 : s[order[0]];
    for (int idx = 0; idx < p; ++idx) {
        const int j = order[idx];
        out.s[idx] = s[j];
        // deterministic sign: largest-|entry| component of v-column positive
        int pivot = 0;
        double best = -1.0;
        for (int k = 0; k < p; ++k)
            if (std::abs(v(k, j)) > best + 1e-18) {
                best = std::abs(v(k, j));
                pivot = k;
            }
        const double sign = (v(pivot, j) < 0.0) ? -1.0 : 1.0;
        for (int k = 0; k < p; ++k) out.v(k, idx) = sign * v(k, j);
        if (s[j] > 1e-14 * (smax > 0 ? smax : 1.0)) {
            for (int k = 0; k < n; ++k) out.u(k, idx) = sign * w(k, j) / s[j];
        }
    }
    return out;
}

int numeric_rank(const SvdResult& svd, double rel_tol) {
    if (svd.s.empty()) return 0;
    const double thresh = rel_tol * svd.s.front();
    int r = 0;
    for (double x : svd.s)
        if (x > thresh) ++r;
    return r;
}

int numeric_rank(const Mat& m, double rel_tol) { return numeric_rank(jacobi_svd(m), rel_tol); }

Mat column_space(const Mat& m, double rel_tol) {
    SvdResult svd = jacobi_svd(m);
    const int r = numeric_rank(svd, rel_tol);
    return svd.u.block(0, 0, m.rows, r);
}

Mat null_space(const Mat& m, double rel_tol) {
    SvdResult svd = jacobi_svd(m);
    const int r = numeric_rank(svd, rel_tol);
    const int k = static_cast<int>(svd.s.size());
    if (m.cols > m.rows)
        throw std::invalid_argument("null_space: requires rows >= cols");
    Mat out(m.cols, m.cols - r);
    int col = 0;
    for (int j = r; j < k; ++j, ++col)
        for (int i = 0; i < m.cols; ++i) out(i, col) = svd.v(i, j);
    return out;
}

double max_principal_angle(const Mat& basis_a, const Mat& basis_b) {
    if (basis_a.cols != basis_b.cols)
        throw std::invalid_argument("max_principal_angle: dimension mismatch");
    if (basis_a.cols == 0) return 0.0;
    QrResult qa = householder_qr(basis_a);
    QrResult qb = householder_qr(basis_b);
    Mat oa = qa.q.block(0, 0, basis_a.rows, basis_a.cols);
    Mat ob = qb.q.block(0, 0, basis_b.rows, basis_b.cols);
    SvdResult svd = jacobi_svd(oa.transpose() * ob);
    double smin = 1.0;
    for (double x : svd.s) smin = std::min(smin, x);
    smin = std::clamp(smin, -1.0, 1.0);
    return std::acos(smin);
}

SymEigResult sym_eig(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("sym_eig: not square");
    const int n = m.rows;
    Mat a = m;
    Mat v = Mat::identity(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (std::sqrt(off) < 1e-15 * (1.0 + a.max_abs())) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = ((theta >= 0.0) ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    SymEigResult out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a(i, i);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return out.values[x] < out.values[y]; });
    SymEigResult sorted;
    sorted.values.resize(n);
    sorted.vectors = Mat(n, n);
    for (int idx = 0; idx < n; ++idx) {
        sorted.values[idx] = out.values[order[idx]];
        for (int k = 0; k < n; ++k) sorted.vectors(k, idx) = v(k, order[idx]);
    }
    return sorted;
}

double hermitian_min_eigenvalue(const Mat& re, const Mat& im) {
    const int n = re.rows;
    Mat embed(2 * n, 2 * n);
    embed.set_block(0, 0, re);
    embed.set_block(n, n, re);
    Mat neg_im = im;
    neg_im *= -1.0;
    embed.set_block(0, n, neg_im);
    embed.set_block(n, 0, im);
    SymEigResult eig = sym_eig(embed);
    return eig.values.front();
}

std::vector<double> cholesky_solve(const Mat& m, const std::vector<double>& b) {
    if (m.rows != m.cols || static_cast<int>(b.size()) != m.rows)
        throw std::invalid_argument("cholesky_solve: size mismatch");
    const int n = m.rows;
    Mat l(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = m(i, j);
            for (int k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
            if (i == j) {
                if (sum <= 0.0) throw std::runtime_error("cholesky_solve: not positive definite");
                l(i, i) = std::sqrt(sum);
            } else {
                l(i, j) = sum / l(j, j);
            }
        }
    }
    std::vector<double> y(n), x(n);
    for (int i = 0; i < n; ++i) {
        double sum = b[i];
        for (int k = 0; k < i; ++k) sum -= l(i, k) * y[k];
        y[i] = sum / l(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double sum = y[i];
        for (int k = i + 1; k < n; ++k) sum -= l(k, i) * x[k];
        x[i] = sum / l(i, i);
    }
    return x;
}

double determinant(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
    const int n = m.rows;
    Mat a = m;
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
        if (std::abs(a(pivot, k)) < 1e-300) return 0.0;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            det = -det;
        }
        det *= a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

Mat expm(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("expm: not square");
    const int n = m.rows;
    double norm1 = 0.0;
    for (int j = 0; j < n; ++j) {
        double colsum = 0.0;
        for (int i = 0; i < n; ++i) colsum += std::abs(m(i, j));
        norm1 = std::max(norm1, colsum);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm1 * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    Mat x = m;
    x *= scale;
    Mat result = Mat::identity(n);
    Mat term = Mat::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = term * x;
        term *= 1.0 / k;
        result += term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace mqmf
