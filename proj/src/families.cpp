#include "mqmf/families.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace mqmf {

namespace {

// scalar Laurent polynomial, sparse over powers
using Poly = std::map<int, double>;

Poly pmono(int power, double c) { return {{power, c}}; }

Poly padd(const Poly& x, const Poly& y) {
    Poly out = x;
    for (const auto& [p, c] : y) out[p] += c;
    return out;
}

Poly pmul(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [px, cx] : x)
        for (const auto& [py, cy] : y) out[px + py] += cx * cy;
    return out;
}

Poly pscale(double s, const Poly& x) {
    Poly out;
    for (const auto& [p, c] : x) out[p] = s * c;
    return out;
}

// assemble a 2x2 symbol from entry polynomials into filter taps
MatrixSequence taps_from_entries(const Poly& e11, const Poly& e12, const Poly& e21,
                                 const Poly& e22) {
    MatrixSequence s(2);
    const Poly* entries[2][2] = {{&e11, &e12}, {&e21, &e22}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const auto& [p, c] : *entries[i][j]) {
                Mat m = s.at(p);
                m(i, j) += c;
                s.set(p, m);
            }
    return s.normalize();
}

void require_param(double a, const char* name) {
    if (!(std::abs(a) <= 1.0)) throw std::domain_error(std::string(name) + " must lie in [-1, 1]");
}

const Poly kZPlus1 = {{0, 1.0}, {1, 1.0}};
const Poly kOneMinusZ = {{0, 1.0}, {1, -1.0}};

}  // namespace

MatrixSequence mirror_filter(const MatrixSequence& a) {
    MatrixSequence out(a.dim);
    for (int k = a.lo(); k <= a.hi(); ++k) {
        Mat m = a.at(k);
        const double ksign = (k % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                const double psign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
                m(i, j) *= ksign * psign;
            }
        out.set(k, m);
    }
    return out.normalize();
}

FilterBank family_first(double a) {
    require_param(a, "a");
    const double r = a * std::sqrt(1.0 - a * a);
    const double q = 1.0 - a * a;
    const Poly e11 = pmul(kZPlus1, padd(pmono(1, a * a), pmono(0, q)));
    const Poly e12 = pmul(kZPlus1, pscale(r, kOneMinusZ));
    const Poly e21 = pmul(kZPlus1, pscale(r, pmul(pmono(1, 1.0), kOneMinusZ)));
    const Poly e22 = pmul(kZPlus1, padd(pmono(2, q), pmono(1, a * a)));
    MatrixSequence A = taps_from_entries(e11, e12, e21, e22);
    return FilterBank(A, mirror_filter(A));
}

FilterBank family_second(double a) {
    require_param(a, "a");
    const double s2 = std::sqrt(2.0 * (1.0 - a * a));
    const Poly ta11 = padd(pmono(2, (a - 1) * (a - 1)), pmono(1, 3 + 2 * a - a * a));
    const Poly ta12 = pscale((1 - a) * (1 + a - s2), pmul(pmono(1, 1.0), kOneMinusZ));
    const Poly ta21 =
        pmul(pscale(1 - a, kOneMinusZ), padd(pmono(0, 1 + a), pmono(1, -s2)));
    const Poly ta22 = padd(padd(pmono(2, (a + 1) * (2 - 2 * a - s2)),
                                pmono(1, 3 * a * a + 2 * a - 1)),
                           pmono(0, 3 - a * a - 2 * a + (a + 1) * s2));
    const Poly tb11 = padd(pmono(2, (a - 1) * (a - 1)), pmono(1, a * a - 2 * a - 3));
    const Poly tb12 = pscale((1 - a) * (1 + a + s2), pmul(pmono(1, 1.0), kZPlus1));
    const Poly tb21 =
        pmul(pscale(1 - a, kZPlus1), padd(pmono(0, -1 - a), pmono(1, s2)));
    const Poly tb22 = padd(padd(pmono(2, (a + 1) * (2 - 2 * a + s2)),
                                pmono(1, 1 - 3 * a * a - 2 * a)),
                           pmono(0, 3 - a * a - 2 * a - (a + 1) * s2));
    const Poly fa = pscale(0.25, kZPlus1);
    const Poly fb = pscale(0.25, kOneMinusZ);
    MatrixSequence A =
        taps_from_entries(pmul(fa, ta11), pmul(fa, ta12), pmul(fa, ta21), pmul(fa, ta22));
    MatrixSequence B =
        taps_from_entries(pmul(fb, tb11), pmul(fb, tb12), pmul(fb, tb21), pmul(fb, tb22));
    return FilterBank(A, B);
}

FilterBank family_diagonal(double a) {
    require_param(a, "a");
    const double r = a * std::sqrt(1.0 - a * a);
    const Poly core_a =
        padd(padd(pmono(1, a * a - r), pmono(0, 1 - 2 * a * a)), pmono(-1, a * a + r));
    const Poly core_b =
        padd(padd(pmono(1, a * a + r), pmono(0, 2 * a * a - 1)), pmono(-1, a * a - r));
    const Poly zero;
    MatrixSequence A = taps_from_entries(pmul(kZPlus1, core_a), zero, zero, kZPlus1);
    MatrixSequence B = taps_from_entries(pmul(kOneMinusZ, core_b), zero, zero, kOneMinusZ);
    return FilterBank(A, B);
}

FilterBank family_fourth(double a, double b) {
    require_param(a, "a");
    require_param(b, "b");
    const double ra = a * std::sqrt(1.0 - a * a);
    const double rb = b * std::sqrt(1.0 - b * b);
    const Poly quad_factor = pmul(kZPlus1, kOneMinusZ);  // (z+1)(1-z)
    const Poly e11 = pmul(kZPlus1, padd(padd(pmono(2, b * b), pmono(1, 1 - a * a - b * b)),
                                        pmono(0, a * a)));
    const Poly e12 = pmul(quad_factor, padd(pmono(1, rb), pmono(0, ra)));
    const Poly e21 = pmul(quad_factor, padd(pmono(1, ra), pmono(0, rb)));
    const Poly e22 = pmul(kZPlus1, padd(padd(pmono(2, a * a), pmono(1, 1 - a * a - b * b)),
                                        pmono(0, b * b)));
    MatrixSequence A = taps_from_entries(e11, e12, e21, e22);
    return FilterBank(A, mirror_filter(A));
}

FilterBank family_by_tag(const std::string& tag, double a, double b) {
    if (tag == "first") return family_first(a);
    if (tag == "second") return family_second(a);
    if (tag == "diagonal") return family_diagonal(a);
    if (tag == "fourth") return family_fourth(a, b);
    throw std::invalid_argument("unknown family tag: " + tag);
}

namespace fixtures {

FilterBank reference_bank() {
    MatrixSequence a(2), b(2);
    a.set(0, Mat(2, 2, {0.054311209333498010694, -0.16684440354507635408,
                        0.047827189604400026824, -0.17618585179038651232}));
    a.set(1, Mat(2, 2, {0.087708930185872110064, -0.30362455474026860115,
                        -0.088952962252079719437, 0.29041642693165752616}));
    a.set(2, Mat(2, 2, {0.65527236381392715834, 0.07789144188237754498,
                        -0.35145174509107688357, 1.0884769216695398767}));
    a.set(3, Mat(2, 2, {1.088476921748056695, 0.35145174524818843912,
                        -0.07789144192861210554, 0.65527236401729840172}));
    a.set(4, Mat(2, 2, {0.29041642689141252135, 0.088952962017450863579,
                        0.30362455490066007842, 0.087708930001853805185}));
    a.set(5, Mat(2, 2, {-0.17618585197276649584, -0.047827189524548346775,
                        0.16684440342858505769, 0.054311209170036901976}));
    b.set(0, Mat(2, 2, {0.0543112093345566594, -0.166844403526512642,
                        0.0478271896021416066, -0.176185851776288344}));
    b.set(1, Mat(2, 2, {0.0877089301796203924, -0.303624554700031024,
                        -0.088952962258738763, 0.290416426927014915}));
    b.set(2, Mat(2, 2, {-0.276396211477648534, 1.1144837374540959,
                        -0.602889006833760122, -0.248606647031728134}));
    b.set(3, Mat(2, 2, {0.248606647088857046, -0.602889006560141438,
                        1.11448373738822482, 0.276396211518095014}));
    b.set(4, Mat(2, 2, {-0.290416426894247737, -0.0889529620232064194,
                        -0.303624554889251552, -0.087708930001465138}));
    b.set(5, Mat(2, 2, {0.176185851960222128, 0.0478271895207618912,
                        -0.166844403430672834, -0.0543112091753285287}));
    return FilterBank(a, b);
}

TapTable first_family_taps(double a) {
    const double r = a * std::sqrt(1.0 - a * a);
    const double q = 1.0 - a * a;
    TapTable t;
    t.a = {Mat(2, 2, {q, r, 0, 0}), Mat(2, 2, {1, 0, r, a * a}),
           Mat(2, 2, {a * a, -r, 0, 1}), Mat(2, 2, {0, 0, -r, q})};
    t.b = {Mat(2, 2, {q, -r, 0, 0}), Mat(2, 2, {-1, 0, r, -a * a}),
           Mat(2, 2, {a * a, r, 0, 1}), Mat(2, 2, {0, 0, -r, a * a - 1})};
    return t;
}

TapTable second_family_taps(double a) {
    const double s2 = std::sqrt(2.0 * (1.0 - a * a));
    TapTable t;
    t.a = {Mat(2, 2, {0, 0, 1 - a * a, -2 * a + (a + 1) * s2 + 3 - a * a}),
           Mat(2, 2, {3 + 2 * a - a * a, (a - 1) * (-1 - a + s2),
                      (a - 1) * s2, 2 * a * a + 2 + (a + 1) * s2}),
           Mat(2, 2, {4, 0, -1 + a * a, a * a - (a + 1) * s2 + 1 + 2 * a}),
           Mat(2, 2, {(a - 1) * (a - 1), -(a - 1) * (-1 - a + s2),
                      -(a - 1) * s2, -(a + 1) * (-2 + 2 * a + s2)})};
    t.b = {Mat(2, 2, {0, 0, -1 + a * a, -2 * a - (a + 1) * s2 + 3 - a * a}),
           Mat(2, 2, {-3 - 2 * a + a * a, -(a - 1) * (1 + a + s2),
                      -(a - 1) * s2, -2 * a * a - 2 + (a + 1) * s2}),
           Mat(2, 2, {4, 0, 1 - a * a, a * a + (a + 1) * s2 + 1 + 2 * a}),
           Mat(2, 2, {-(a - 1) * (a - 1), (a - 1) * (1 + a + s2),
                      (a - 1) * s2, -(a + 1) * (2 - 2 * a + s2)})};
    return t;
}

TapTable fourth_family_taps(double a, double b) {
    const double ra = a * std::sqrt(1.0 - a * a);
    const double rb = b * std::sqrt(1.0 - b * b);
    TapTable t;
    t.a = {Mat(2, 2, {a * a, ra, rb, b * b}),
           Mat(2, 2, {1 - b * b, rb, ra, 1 - a * a}),
           Mat(2, 2, {1 - a * a, -ra, -rb, 1 - b * b}),
           Mat(2, 2, {b * b, -rb, -ra, a * a})};
    t.b = {Mat(2, 2, {a * a, -ra, -rb, b * b}),
           Mat(2, 2, {-1 + b * b, rb, ra, -1 + a * a}),
           Mat(2, 2, {1 - a * a, ra, rb, 1 - b * b}),
           Mat(2, 2, {-b * b, -rb, -ra, -a * a})};
    return t;
}

}  // namespace fixtures

}  // namespace mqmf
