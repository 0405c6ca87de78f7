#include "kinematica/spin.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kinematica/errors.hpp"
#include "kinematica/gentrig.hpp"

namespace kinematica {
namespace {

GenComplex re(double x, double k) { return GenComplex::real(x, k); }
GenComplex cx(double a, double b, double k) { return {a, b, k}; }

bool near(const GenComplex& a, const GenComplex& b, double tol) {
    return std::fabs(a.re - b.re) <= tol && std::fabs(a.im - b.im) <= tol;
}

}  // namespace

Mat2C m2_make(const GenComplex& a, const GenComplex& b, const GenComplex& c, const GenComplex& d) {
    return {{a, b, c, d}};
}

Mat2C m2_identity(double k) { return m2_make(re(1, k), re(0, k), re(0, k), re(1, k)); }
Mat2C m2_zero(double k) { return m2_make(re(0, k), re(0, k), re(0, k), re(0, k)); }

Mat2C m2_add(const Mat2C& a, const Mat2C& b) {
    Mat2C r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Mat2C m2_sub(const Mat2C& a, const Mat2C& b) {
    Mat2C r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

Mat2C m2_mul(const Mat2C& a, const Mat2C& b) {
    return m2_make(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                   a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

Mat2C m2_scale(const Mat2C& a, double s) {
    Mat2C r = a;
    for (auto& x : r.e) x = gc_scale(x, s);
    return r;
}

Mat2C m2_scale(const Mat2C& a, const GenComplex& s) {
    Mat2C r = a;
    for (auto& x : r.e) x = s * x;
    return r;
}

Mat2C m2_star(const Mat2C& a) { return m2_make(gc_conj(a(0, 0)), gc_conj(a(1, 0)), gc_conj(a(0, 1)), gc_conj(a(1, 1))); }
GenComplex m2_det(const Mat2C& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }
GenComplex m2_trace(const Mat2C& a) { return a(0, 0) + a(1, 1); }
Mat2C m2_commutator(const Mat2C& a, const Mat2C& b) { return m2_sub(m2_mul(a, b), m2_mul(b, a)); }

double m2_max_abs_diff(const Mat2C& a, const Mat2C& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) {
        const GenComplex d = a.e[i] - b.e[i];
        m = std::max({m, std::fabs(d.re), std::fabs(d.im)});
    }
    return m;
}

Mat2C SpinElement::matrix() const {
    return m2_make(alpha, beta, gc_scale(gc_conj(beta), -kp.kappa1), gc_conj(alpha));
}

SpinElement SpinElement::negated() const { return {kp, -alpha, -beta}; }

SpinElement SpinElement::canonical() const {
    for (double v : {alpha.re, alpha.im, beta.re, beta.im}) {
        if (v > 0) return *this;
        if (v < 0) return negated();
    }
    return *this;
}

SpinElement spin_identity(const KappaPair& kp) { return {kp, re(1, kp.kappa2), re(0, kp.kappa2)}; }

SpinElement spin_from_matrix(const KappaPair& kp, const Mat2C& m) {
    if (!is_spin(kp, m)) throw Error(ErrorKind::NotSpin, "matrix is not in the spin group");
    return {kp, m(0, 0), m(0, 1)};
}

SpinElement spin_mul(const SpinElement& a, const SpinElement& b) {
    const Mat2C m = m2_mul(a.matrix(), b.matrix());
    return {a.kp, m(0, 0), m(0, 1)};
}

MoebiusMap moebius_of(const SpinElement& s) {
    const Mat2C m = s.matrix();
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

bool same_up_to_sign(const SpinElement& a, const SpinElement& b, double tol) {
    const double plus = m2_max_abs_diff(a.matrix(), b.matrix());
    const double minus = m2_max_abs_diff(a.matrix(), b.negated().matrix());
    return std::min(plus, minus) <= tol;
}

Mat2C a_matrix(const KappaPair& kp) {
    const double k = kp.kappa2;
    return m2_make(re(kp.kappa1, k), re(0, k), re(0, k), re(1, k));
}

bool is_spin(const KappaPair& kp, const Mat2C& m) {
    constexpr double tol = 1e-10;
    const double k2 = kp.kappa2;
    if (m.kappa() != k2) return false;
    const GenComplex alpha = m(0, 0), beta = m(0, 1);
    if (!near(m(1, 0), gc_scale(gc_conj(beta), -kp.kappa1), tol)) return false;
    if (!near(m(1, 1), gc_conj(alpha), tol)) return false;
    const double unit = gc_sqmod(alpha) + kp.kappa1 * gc_sqmod(beta);
    return std::fabs(unit - 1.0) <= tol;
}

bool is_su2_algebra(const KappaPair& kp, const Mat2C& b) {
    constexpr double tol = 1e-12;
    const Mat2C a = a_matrix(kp);
    const Mat2C lhs = m2_add(m2_mul(m2_star(b), a), m2_mul(a, b));
    return m2_max_abs_diff(lhs, m2_zero(kp.kappa2)) <= tol && near(m2_trace(b), re(0, kp.kappa2), tol);
}

PauliMatrices pauli_generators(const KappaPair& kp) {
    const double k1 = kp.kappa1, k = kp.kappa2;
    return {m2_make(re(1, k), re(0, k), re(0, k), re(-1, k)), m2_make(re(0, k), re(1, k), re(k1, k), re(0, k)),
            m2_make(re(0, k), cx(0, 1, k), cx(0, -k1, k), re(0, k))};
}

SpinGenerators spin_generators(const KappaPair& kp) {
    const auto [s1, s2, s3] = pauli_generators(kp);
    const double k = kp.kappa2;
    const GenComplex half_i = cx(0, 0.5, k);
    return {m2_make(re(0, k), re(0.5, k), re(-kp.kappa1 / 2, k), re(0, k)), m2_scale(s2, half_i),
            m2_scale(s1, half_i)};
}

SpinElement sl2_of_expK(const KappaPair& kp, double theta) {
    const double k = kp.kappa2;
    return SpinElement{kp, cx(cosk(k, theta / 2), sink(k, theta / 2), k), re(0, k)}.canonical();
}

SpinElement sl2_of_expH(const KappaPair& kp, double alpha) {
    const double k1 = kp.kappa1, k = kp.kappa2;
    return SpinElement{kp, re(cosk(k1, alpha / 2), k), re(sink(k1, alpha / 2), k)}.canonical();
}

SpinElement sl2_of_expP(const KappaPair& kp, double beta) {
    const double kk = kp.kappa1 * kp.kappa2, k = kp.kappa2;
    return SpinElement{kp, re(cosk(kk, beta / 2), k), cx(0, sink(kk, beta / 2), k)}.canonical();
}

SpinElement sl2_of_exp(const KappaPair& kp, Generator g, double param) {
    switch (g) {
        case Generator::H: return sl2_of_expH(kp, param);
        case Generator::P: return sl2_of_expP(kp, param);
        case Generator::K: return sl2_of_expK(kp, param);
    }
    return spin_identity(kp);
}

SpinElement sl2_of_word(const KappaPair& kp, const GroupWord& word) {
    SpinElement s = spin_identity(kp);
    for (const auto& [g, param] : word) s = spin_mul(s, sl2_of_exp(kp, g, param));
    return s.canonical();
}

SpinElement spin_from_axis(const KappaPair& kp, const UnitAxis& n, double phi) {
    const double k = bivector_kappa(axis_bivector(kp, n));
    const double c = cosk(k, phi / 2), s = sink(k, phi / 2);
    return {kp, cx(c, n.n1 * s, kp.kappa2), cx(n.n3 * s, n.n2 * s, kp.kappa2)};
}

Multivector to_multivector(const SpinElement& s) {
    Multivector m{s.kp, {}};
    m.c[kOne] = s.alpha.re;
    m.c[kIS1] = s.alpha.im;
    m.c[kIS2] = s.beta.im;
    m.c[kS3c] = s.beta.re;
    return m;
}

SpinElement from_multivector(const Multivector& m) {
    if (!is_even(m, 1e-12)) throw Error(ErrorKind::NotSpin, "multivector is not even");
    const double k = m.kp.kappa2;
    const SpinElement s{m.kp, cx(m.c[kOne], m.c[kIS1], k), cx(m.c[kS3c], m.c[kIS2], k)};
    if (!is_spin(m.kp, s.matrix())) throw Error(ErrorKind::NotSpin, "even element is not unit");
    return s;
}

Mat2C to_mat2c(const Multivector& m) {
    const double k1 = m.kp.kappa1, k = m.kp.kappa2;
    const std::array<Mat2C, kBladeCount> basis{
        m2_identity(k),
        m2_make(re(1, k), re(0, k), re(0, k), re(-1, k)),
        m2_make(re(0, k), re(1, k), re(k1, k), re(0, k)),
        m2_make(re(0, k), cx(0, 1, k), cx(0, -k1, k), re(0, k)),
        m2_make(cx(0, 1, k), re(0, k), re(0, k), cx(0, -1, k)),
        m2_make(re(0, k), cx(0, 1, k), cx(0, k1, k), re(0, k)),
        m2_make(re(0, k), re(1, k), re(-k1, k), re(0, k)),
        m2_make(cx(0, 1, k), re(0, k), re(0, k), cx(0, 1, k)),
    };
    Mat2C out = m2_zero(k);
    for (int b = 0; b < kBladeCount; ++b)
        if (m.c[b] != 0.0) out = m2_add(out, m2_scale(basis[b], m.c[b]));
    return out;
}

namespace {

// s1 r s1: aligns Clifford conjugation with the orientation of the projected Moebius action.
Multivector twisted(const Multivector& r) {
    const Multivector s1 = Multivector::blade(r.kp, kS1);
    return mv_mul(mv_mul(s1, r), s1);
}

}  // namespace

So3Matrix cover_to_so3(const SpinElement& s) {
    if (!is_spin(s.kp, s.matrix())) throw Error(ErrorKind::NotSpin, "cover_to_so3 needs a spin element");
    const Multivector r = twisted(to_multivector(s));
    const Multivector rinv = reverse(r);
    So3Matrix m{};
    for (int j = 0; j < 3; ++j) {
        const Multivector img = mv_mul(mv_mul(r, Multivector::blade(s.kp, kS1 + j)), rinv);
        for (int i = 0; i < 3; ++i) m[i][j] = img.c[kS1 + i];
    }
    return m;
}

SpinLift spin_lift(const KappaPair& kp, const So3Matrix& rot) {
    // Columns: the residual of s~ s_j - R(s_j) s~ for each even basis element.
    constexpr std::array<int, 4> unknowns{kOne, kIS1, kIS2, kS3c};
    std::vector<std::array<double, 4>> rows(3 * kBladeCount);
    double scale = 0.0;
    for (int u = 0; u < 4; ++u) {
        const Multivector st = twisted(Multivector::blade(kp, unknowns[u]));
        for (int j = 0; j < 3; ++j) {
            const Multivector image = Multivector::vector(kp, rot[0][j], rot[1][j], rot[2][j]);
            const Multivector res = mv_sub(mv_mul(st, Multivector::blade(kp, kS1 + j)), mv_mul(image, st));
            for (int b = 0; b < kBladeCount; ++b) {
                rows[j * kBladeCount + b][u] = res.c[b];
                scale = std::max(scale, std::fabs(res.c[b]));
            }
        }
    }
    // Reduced row echelon form with partial pivoting.
    const double tol = 1e-9 * std::max(scale, 1.0);
    std::vector<int> pivot_cols;
    std::size_t row = 0;
    for (int col = 0; col < 4 && row < rows.size(); ++col) {
        std::size_t best = row;
        for (std::size_t r = row; r < rows.size(); ++r)
            if (std::fabs(rows[r][col]) > std::fabs(rows[best][col])) best = r;
        if (std::fabs(rows[best][col]) <= tol) continue;
        std::swap(rows[row], rows[best]);
        const double p = rows[row][col];
        for (double& x : rows[row]) x /= p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row) continue;
            const double f = rows[r][col];
            for (int c = 0; c < 4; ++c) rows[r][c] -= f * rows[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    const int nullity = 4 - static_cast<int>(pivot_cols.size());
    if (nullity != 1) {
        if (nullity == 0) throw Error(ErrorKind::DecompositionFailure, "no spin element covers the rotation");
        return {spin_identity(kp), spin_identity(kp), nullity};
    }
    int free_col = 0;
    while (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end()) ++free_col;
    std::array<double, 4> x{};
    x[free_col] = 1.0;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -rows[i][free_col];
    const double k1 = kp.kappa1, k2 = kp.kappa2;
    const double norm = x[0] * x[0] + k2 * x[1] * x[1] + k1 * k2 * x[2] * x[2] + k1 * x[3] * x[3];
    if (!(norm > 0.0)) throw Error(ErrorKind::DecompositionFailure, "solution has no unit normalization");
    const double f = 1.0 / std::sqrt(norm);
    const SpinElement s{kp, cx(f * x[0], f * x[1], k2), cx(f * x[3], f * x[2], k2)};
    const SpinElement plus = s.canonical();
    return {plus, plus.negated(), nullity};
}

}  // namespace kinematica
