#include "kinematica/ckgeom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "kinematica/errors.hpp"
#include "kinematica/gentrig.hpp"

namespace kinematica {

std::array<KappaPair, 9> sign_patterns() noexcept {
    std::array<KappaPair, 9> out{};
    int i = 0;
    for (double k1 : {-1.0, 0.0, 1.0})
        for (double k2 : {-1.0, 0.0, 1.0}) out[i++] = {k1, k2};
    return out;
}

std::string_view generator_tag(Generator g) noexcept {
    switch (g) {
        case Generator::H: return "H";
        case Generator::P: return "P";
        case Generator::K: return "K";
    }
    return "";
}

Generator parse_generator(std::string_view s) {
    if (s == "H") return Generator::H;
    if (s == "P") return Generator::P;
    if (s == "K") return Generator::K;
    throw Error(ErrorKind::UnknownName, "unknown generator '" + std::string(s) + "'");
}

So3Generators so3_generators(const KappaPair& kp) noexcept {
    const double k1 = kp.kappa1, k2 = kp.kappa2;
    return {Mat3{{{0, -k1, 0}, {1, 0, 0}, {0, 0, 0}}}, Mat3{{{0, 0, -k1 * k2}, {0, 0, 0}, {1, 0, 0}}},
            Mat3{{{0, 0, 0}, {0, 0, -k2}, {0, 1, 0}}}};
}

Mat3 bilinear_form(const KappaPair& kp) noexcept {
    return {{{1, 0, 0}, {0, kp.kappa1, 0}, {0, 0, kp.kappa1 * kp.kappa2}}};
}

So3Matrix exp_H(const KappaPair& kp, double alpha) noexcept {
    const double k = kp.kappa1, c = cosk(k, alpha), s = sink(k, alpha);
    return {{{c, -k * s, 0}, {s, c, 0}, {0, 0, 1}}};
}

So3Matrix exp_P(const KappaPair& kp, double beta) noexcept {
    const double k = kp.kappa1 * kp.kappa2, c = cosk(k, beta), s = sink(k, beta);
    return {{{c, 0, -k * s}, {0, 1, 0}, {s, 0, c}}};
}

So3Matrix exp_K(const KappaPair& kp, double theta) noexcept {
    const double k = kp.kappa2, c = cosk(k, theta), s = sink(k, theta);
    return {{{1, 0, 0}, {0, c, -k * s}, {0, s, c}}};
}

So3Matrix exp_generator(const KappaPair& kp, Generator g, double param) noexcept {
    switch (g) {
        case Generator::H: return exp_H(kp, param);
        case Generator::P: return exp_P(kp, param);
        case Generator::K: return exp_K(kp, param);
    }
    return mat3_identity();
}

So3Matrix word_matrix(const KappaPair& kp, const GroupWord& word) noexcept {
    So3Matrix m = mat3_identity();
    for (const auto& [g, param] : word) m = mat3_mul(m, exp_generator(kp, g, param));
    return m;
}

double sigma_residual(const KappaPair& kp, const SigmaPoint& s) noexcept {
    return s.z * s.z + kp.kappa1 * s.t * s.t + kp.kappa1 * kp.kappa2 * s.x * s.x - 1.0;
}

SigmaPoint make_sigma_point(const KappaPair& kp, double z, double t, double x) {
    const SigmaPoint s{z, t, x};
    if (std::fabs(sigma_residual(kp, s)) > 1e-10)
        throw Error(ErrorKind::NotOnSigma, "point is not on the quadric z^2 + k1 t^2 + k1 k2 x^2 = 1");
    return s;
}

SigmaPoint act(const So3Matrix& g, const SigmaPoint& s) noexcept {
    const Vec3 v = mat3_apply(g, {s.z, s.t, s.x});
    return {v[0], v[1], v[2]};
}

GenComplex project(const KappaPair& kp, const SigmaPoint& s) {
    const double d = s.z + 1.0;
    if (std::fabs(d) < 1e-14) throw Error(ErrorKind::ProjectionPole, "projection pole at z = -1");
    return {s.t / d, s.x / d, kp.kappa2};
}

ProjectedPoint project_flagged(const KappaPair& kp, const SigmaPoint& s) {
    return {project(kp, s), std::fabs(s.z) < 1e-12};
}

SigmaPoint unproject(const KappaPair& kp, const GenComplex& w) {
    if (w.kappa != kp.kappa2) throw Error(ErrorKind::KappaMismatch, "w must lie in C_{kappa2}");
    const double q = 1.0 + kp.kappa1 * gc_sqmod(w);
    if (!(q > 0.0)) throw Error(ErrorKind::OutsideModel, "1 + k1 |w|^2 <= 0");
    return {(2.0 - q) / q, 2.0 * w.re / q, 2.0 * w.im / q};
}

double metric_g1(const KappaPair& kp, const GenComplex& w, const GenComplex& dw) {
    const double q = 1.0 + kp.kappa1 * gc_sqmod(w);
    if (std::fabs(q) < 1e-14) throw Error(ErrorKind::BoundarySingularity, "1 + k1 |w|^2 = 0");
    return gc_sqmod(dw) / (q * q);
}

double metric_g2(const KappaPair& kp, double t0, double dx) {
    if (kp.kappa2 != 0.0) throw Error(ErrorKind::WrongGeometry, "the subsidiary metric needs kappa2 = 0");
    const double q = 1.0 + kp.kappa1 * t0 * t0;
    return dx * dx / (q * q);
}

double distance(const KappaPair& kp, const GenComplex& w1, const GenComplex& w2) {
    const GenComplex one = GenComplex::real(1.0, w1.kappa);
    const GenComplex den = gc_scale(gc_conj(w1) * w2, kp.kappa1) + one;
    if (!gc_invertible(den))
        throw Error(ErrorKind::DenominatorNotInvertible, "k1 conj(w1) w2 + 1 is a zero divisor");
    const GenComplex arg = (w2 - w1) * gc_inv(den);
    if (gc_is_zero(arg)) return 0.0;
    const double s = gc_sqmod(arg);
    if (s < 0.0 || !gc_invertible(arg))
        throw Error(ErrorKind::NullOrImaginarySeparation, "separation has squared modulus " + std::to_string(s));
    return atank(kp.kappa1, std::sqrt(s));
}

std::pair<GenComplex, GenComplex> act_and_project_equivariance(const KappaPair& kp, const So3Matrix& g,
                                                                const MoebiusMap& m, const SigmaPoint& s) {
    return {project(kp, act(g, s)), moebius_apply(m, project(kp, s))};
}

namespace {

using Polyline = std::vector<std::pair<double, double>>;

// Curves u^2 + k2 v^2 = c, clipped loosely beyond the viewport.
std::vector<Polyline> conic(double k2, double c) {
    constexpr int n = 240;
    constexpr double reach = 3.0;
    std::vector<Polyline> out;
    if (c > 0 && k2 > 0) {
        Polyline p;
        const double a = std::sqrt(c), b = std::sqrt(c / k2);
        for (int i = 0; i <= n; ++i) {
            const double th = 2.0 * M_PI * i / n;
            p.emplace_back(a * std::cos(th), b * std::sin(th));
        }
        out.push_back(p);
    } else if (c > 0 && k2 == 0) {
        const double a = std::sqrt(c);
        if (a < reach)
            for (double sgn : {1.0, -1.0}) out.push_back({{sgn * a, -reach}, {sgn * a, reach}});
    } else if (k2 < 0 && c != 0) {
        // Hyperbola: the "major" coordinate is u when c > 0, v when c < 0.
        const double a = c > 0 ? std::sqrt(c) : std::sqrt(-c / -k2);
        const double b = c > 0 ? std::sqrt(c / -k2) : std::sqrt(-c);
        if (a < reach) {
            const double tmax = std::min(std::acosh(reach / a), std::asinh(reach / b));
            for (double sgn : {1.0, -1.0}) {
                Polyline p;
                for (int i = 0; i <= n; ++i) {
                    const double tau = -tmax + 2.0 * tmax * i / n;
                    const double major = sgn * a * std::cosh(tau), minor = b * std::sinh(tau);
                    if (c > 0) p.emplace_back(major, minor);
                    else p.emplace_back(minor, major);
                }
                out.push_back(p);
            }
        }
    }
    return out;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

// Model coordinates to SVG coordinates (v points up).
std::string path_data(const Polyline& p) {
    std::string d;
    for (std::size_t i = 0; i < p.size(); ++i) {
        d += i == 0 ? "M" : " L";
        d += num(p[i].first) + " " + num(-p[i].second);
    }
    return d;
}

void emit_paths(std::ostringstream& os, const std::vector<Polyline>& curves, const char* cls, const char* stroke,
                const char* width) {
    for (const auto& p : curves)
        os << "  <path class=\"" << cls << "\" d=\"" << path_data(p) << "\" fill=\"none\" stroke=\"" << stroke
           << "\" stroke-width=\"" << width << "\"/>\n";
}

void emit_line(std::ostringstream& os, const char* cls, double x1, double y1, double x2, double y2,
               const char* extra) {
    os << "  <line class=\"" << cls << "\"" << extra << " x1=\"" << num(x1) << "\" x2=\"" << num(x2) << "\" y1=\""
       << num(y1) << "\" y2=\"" << num(y2) << "\"/>\n";
}

}  // namespace

std::string region_svg(const KappaPair& kp) {
    const double k1 = kp.kappa1, k2 = kp.kappa2;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg height=\"400\" viewBox=\"-2 -2 4 4\" width=\"400\" xmlns=\"http://www.w3.org/2000/svg\">\n";
    os << "  <title>kappa1=" << num(k1) << " kappa2=" << num(k2) << "</title>\n";
    os << "  <rect class=\"frame\" fill=\"none\" height=\"4\" stroke=\"#999999\" stroke-width=\"0.01\" width=\"4\" "
          "x=\"-2\" y=\"-2\"/>\n";
    emit_line(os, "axis", -2, 0, 2, 0, " stroke=\"#cccccc\" stroke-width=\"0.01\"");
    emit_line(os, "axis", 0, -2, 0, 2, " stroke=\"#cccccc\" stroke-width=\"0.01\"");
    if (k1 != 0.0) {
        emit_paths(os, conic(k2, -1.0 / k1), "boundary", "#000000", "0.02");
        emit_paths(os, conic(k2, 1.0 / k1), "rim", "#1f77b4", "0.015");
    }
    if (k2 <= 0.0) {
        const char* dashed = " stroke=\"#d62728\" stroke-dasharray=\"0.08 0.05\" stroke-width=\"0.015\"";
        if (k2 == 0.0) {
            emit_line(os, "null-cone", 0, -3, 0, 3, dashed);
        } else {
            // u = +-sqrt(-k2) v
            const double r = std::sqrt(-k2), len = 3.0 / std::hypot(r, 1.0);
            for (double sgn : {1.0, -1.0}) emit_line(os, "null-cone", -sgn * r * len, len, sgn * r * len, -len, dashed);
        }
    }
    os << "  <circle class=\"origin\" cx=\"0\" cy=\"0\" fill=\"#000000\" r=\"0.03\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace kinematica
