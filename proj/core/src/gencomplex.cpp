#include "kinematica/gencomplex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "kinematica/errors.hpp"
#include "kinematica/gentrig.hpp"

namespace kinematica {
namespace {

void same_kappa(const GenComplex& a, const GenComplex& b) {
    if (a.kappa != b.kappa)
        throw Error(ErrorKind::KappaMismatch, "mixed kappa " + std::to_string(a.kappa) + " and " +
                                                  std::to_string(b.kappa));
}

}  // namespace

GenComplex gc_add(const GenComplex& a, const GenComplex& b) {
    same_kappa(a, b);
    return {a.re + b.re, a.im + b.im, a.kappa};
}

GenComplex gc_sub(const GenComplex& a, const GenComplex& b) {
    same_kappa(a, b);
    return {a.re - b.re, a.im - b.im, a.kappa};
}

GenComplex gc_mul(const GenComplex& a, const GenComplex& b) {
    same_kappa(a, b);
    return {a.re * b.re - a.kappa * a.im * b.im, a.re * b.im + a.im * b.re, a.kappa};
}

GenComplex gc_neg(const GenComplex& a) noexcept { return {-a.re, -a.im, a.kappa}; }
GenComplex gc_scale(const GenComplex& a, double s) noexcept { return {s * a.re, s * a.im, a.kappa}; }
GenComplex gc_conj(const GenComplex& a) noexcept { return {a.re, -a.im, a.kappa}; }
double gc_sqmod(const GenComplex& a) noexcept { return a.re * a.re + a.kappa * a.im * a.im; }
bool gc_is_zero(const GenComplex& a) noexcept { return a.re == 0.0 && a.im == 0.0; }

bool gc_invertible(const GenComplex& a) noexcept {
    const double scale = a.re * a.re + std::fabs(a.kappa) * a.im * a.im;
    return scale > 0.0 && std::fabs(gc_sqmod(a)) > kInvertTolerance * scale;
}

GenComplex gc_inv(const GenComplex& a) {
    if (gc_is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (!gc_invertible(a)) throw Error(ErrorKind::ZeroDivisorError, "inverse of zero divisor " + gc_to_string(a));
    const double q = gc_sqmod(a);
    return {a.re / q, -a.im / q, a.kappa};
}

GenComplex gc_div(const GenComplex& a, const GenComplex& b) { return a * gc_inv(b); }

GenComplex gc_exp_unit(double kappa, double phi) noexcept { return {cosk(kappa, phi), sink(kappa, phi), kappa}; }

bool gc_approx(const GenComplex& a, const GenComplex& b, double tol) noexcept {
    return a.kappa == b.kappa && std::fabs(a.re - b.re) <= tol && std::fabs(a.im - b.im) <= tol;
}

std::string gc_to_string(const GenComplex& a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.17g%+.17gi; k=%.17g)", a.re, a.im, a.kappa);
    return buf;
}

MoebiusMap MoebiusMap::make(GenComplex a, GenComplex b, GenComplex c, GenComplex d) {
    MoebiusMap m{a, b, c, d};
    same_kappa(a, b);
    same_kappa(a, c);
    same_kappa(a, d);
    if (!gc_invertible(m.det())) throw Error(ErrorKind::SingularMap, "Moebius determinant is not invertible");
    return m;
}

MoebiusMap MoebiusMap::identity(double kappa) {
    return {GenComplex::real(1, kappa), GenComplex::real(0, kappa), GenComplex::real(0, kappa),
            GenComplex::real(1, kappa)};
}

MoebiusMap MoebiusMap::inverse() const {
    const GenComplex r = gc_inv(det());
    return {d * r, -b * r, -c * r, a * r};
}

MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2) {
    return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d, m1.c * m2.a + m1.d * m2.c,
            m1.c * m2.b + m1.d * m2.d};
}

GenComplex moebius_apply(const MoebiusMap& m, const GenComplex& w) {
    const GenComplex den = m.c * w + m.d;
    if (!gc_invertible(den)) throw Error(ErrorKind::AtInfinity, "cw + d is not invertible at w=" + gc_to_string(w));
    return (m.a * w + m.b) * gc_inv(den);
}

bool gamma_admissible(const GammaPoint& p) {
    same_kappa(p.u, p.v);
    const double k = p.u.kappa;
    // Columns of the real 2x4 matrix of lambda -> (lambda u, lambda v).
    const std::array<std::array<double, 2>, 4> col{{{p.u.re, p.u.im},
                                                    {-k * p.u.im, p.u.re},
                                                    {p.v.re, p.v.im},
                                                    {-k * p.v.im, p.v.re}}};
    double scale = 0.0, best = 0.0;
    for (const auto& c : col) scale = std::max({scale, std::fabs(c[0]), std::fabs(c[1])});
    if (scale == 0.0) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            best = std::max(best, std::fabs(col[i][0] * col[j][1] - col[i][1] * col[j][0]));
    return best > 1e-12 * scale * scale;
}

GammaPoint gamma_lift(const GenComplex& w) { return {w, GenComplex::real(1.0, w.kappa)}; }

GammaPoint gamma_apply(const MoebiusMap& m, const GammaPoint& p) {
    if (!gamma_admissible(p)) throw Error(ErrorKind::InadmissiblePoint, "input pair is not admissible");
    GammaPoint q{m.a * p.u + m.b * p.v, m.c * p.u + m.d * p.v};
    if (!gamma_admissible(q)) throw Error(ErrorKind::InadmissiblePoint, "image pair is not admissible");
    return q;
}

GenComplex gamma_project(const GammaPoint& p) {
    if (!gc_invertible(p.v)) throw Error(ErrorKind::AtInfinity, "point lies outside the finite plane");
    return p.u * gc_inv(p.v);
}

bool gamma_equivalent(const GammaPoint& p, const GammaPoint& q, double tol) {
    const GenComplex cross = p.u * q.v - q.u * p.v;
    return std::fabs(cross.re) <= tol && std::fabs(cross.im) <= tol;
}

}  // namespace kinematica
