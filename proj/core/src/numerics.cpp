#include "kinematica/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "kinematica/errors.hpp"

namespace kinematica::numerics {
namespace {

double norm_inf(const RealMatrix& m) {
    double best = 0.0;
    for (int r = 0; r < m.n; ++r) {
        double row = 0.0;
        for (int c = 0; c < m.n; ++c) row += std::fabs(m(r, c));
        best = std::max(best, row);
    }
    return best;
}

struct Simpson {
    const std::function<double(double)>& f;
    double step(double a, double fa, double b, double fb, double m, double fm, double whole, double tol, int depth) {
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = f(lm), frm = f(rm);
        const double left = (m - a) / 6 * (fa + 4 * flm + fm), right = (b - m) / 6 * (fm + 4 * frm + fb);
        const double diff = left + right - whole;
        if (std::fabs(diff) <= 15 * tol) return left + right + diff / 15;
        if (depth >= 40) throw Error(ErrorKind::NonConvergence, "adaptive quadrature exceeded depth 40");
        return step(a, fa, m, fm, lm, flm, left, tol / 2, depth + 1) +
               step(m, fm, b, fb, rm, frm, right, tol / 2, depth + 1);
    }
};

double d1(const std::function<double(double)>& f, double x, double h) {
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}
double d2(const std::function<double(double)>& f, double x, double h) {
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

double det3(const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

RealMatrix RealMatrix::identity(int n) {
    RealMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix matmul(const RealMatrix& x, const RealMatrix& y) {
    RealMatrix out(x.n);
    for (int r = 0; r < x.n; ++r)
        for (int k = 0; k < x.n; ++k)
            for (int c = 0; c < x.n; ++c) out(r, c) += x(r, k) * y(k, c);
    return out;
}

double max_abs_diff(const RealMatrix& x, const RealMatrix& y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::fabs(x.a[i] - y.a[i]));
    return d;
}

RealMatrix expm(const RealMatrix& m, const OracleConfig& cfg) {
    const double nrm = norm_inf(m);
    int squarings = 0;
    if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
    RealMatrix x = m;
    const double s = std::ldexp(1.0, -squarings);
    for (double& v : x.a) v *= s;
    RealMatrix sum = RealMatrix::identity(m.n), term = RealMatrix::identity(m.n);
    for (int k = 1; k <= cfg.series_terms; ++k) {
        term = matmul(term, x);
        for (double& v : term.a) v /= k;
        for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += term.a[i];
        if (norm_inf(term) == 0.0) break;
    }
    for (int i = 0; i < squarings; ++i) sum = matmul(sum, sum);
    return sum;
}

double quad_adaptive(const std::function<double(double)>& f, double a, double b, const OracleConfig& cfg) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    Simpson s{f};
    return s.step(a, fa, b, fb, m, fm, (b - a) / 6 * (fa + 4 * fm + fb), cfg.quad_tol, 0);
}

double derivative(const std::function<double(double)>& f, double x, double h) { return d1(f, x, h); }

double gaussian_curvature_fd(const MetricField& g, double u, double v, const OracleConfig& cfg) {
    const double h = cfg.fd_step;
    const MetricCoeffs c = g(u, v);
    const double W = c.E * c.G - c.F * c.F;
    if (!std::isfinite(W) || std::fabs(W) <= 1e-14)
        throw Error(ErrorKind::SingularMetric, "metric is degenerate at the point");
    auto E = [&](double uu, double vv) { return g(uu, vv).E; };
    auto F = [&](double uu, double vv) { return g(uu, vv).F; };
    auto G = [&](double uu, double vv) { return g(uu, vv).G; };
    auto along_u = [&](auto fn, double vv) { return std::function<double(double)>([=](double x) { return fn(x, vv); }); };
    auto along_v = [&](auto fn, double uu) { return std::function<double(double)>([=](double y) { return fn(uu, y); }); };

    const double Eu = d1(along_u(E, v), u, h), Ev = d1(along_v(E, u), v, h);
    const double Fu = d1(along_u(F, v), u, h), Fv = d1(along_v(F, u), v, h);
    const double Gu = d1(along_u(G, v), u, h), Gv = d1(along_v(G, u), v, h);
    const double Evv = d2(along_v(E, u), v, h), Guu = d2(along_u(G, v), u, h);
    const double Fuv = d1(std::function<double(double)>([&](double y) { return d1(along_u(F, y), u, h); }), v, h);

    const double A[3][3] = {{-Evv / 2 + Fuv - Guu / 2, Eu / 2, Fu - Ev / 2}, {Fv - Gu / 2, c.E, c.F}, {Gv / 2, c.F, c.G}};
    const double B[3][3] = {{0, Ev / 2, Gu / 2}, {Ev / 2, c.E, c.F}, {Gu / 2, c.F, c.G}};
    const double K = (det3(A) - det3(B)) / (W * W);
    if (!std::isfinite(K)) throw Error(ErrorKind::SingularMetric, "curvature estimate is not finite");
    return K;
}

double gaussian_curvature_fd(const ConformalFactor& lambda, double u, double v, const OracleConfig& cfg) {
    return gaussian_curvature_fd(
        MetricField([&](double uu, double vv) {
            const double l = lambda(uu, vv);
            return MetricCoeffs{l, 0.0, l};
        }),
        u, v, cfg);
}

}  // namespace kinematica::numerics
