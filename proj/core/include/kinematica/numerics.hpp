#pragma once

#include <functional>
#include <vector>

namespace kinematica::numerics {

struct OracleConfig {
    int series_terms = 40;
    double quad_tol = 1e-9;
    double fd_step = 1e-5;
};

// Dense n x n real matrix, row major.
struct RealMatrix {
    int n = 0;
    std::vector<double> a;

    explicit RealMatrix(int n_ = 0) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
    static RealMatrix identity(int n);
    double& operator()(int r, int c) { return a[r * n + c]; }
    double operator()(int r, int c) const { return a[r * n + c]; }
};

RealMatrix matmul(const RealMatrix& x, const RealMatrix& y);
double max_abs_diff(const RealMatrix& x, const RealMatrix& y);

// Scaling and squaring around a truncated Taylor series.
RealMatrix expm(const RealMatrix& m, const OracleConfig& cfg = {});

// Adaptive Simpson. Throws NonConvergence past depth 40.
double quad_adaptive(const std::function<double(double)>& f, double a, double b, const OracleConfig& cfg = {});

struct MetricCoeffs {
    double E, F, G;
};
using MetricField = std::function<MetricCoeffs(double u, double v)>;
using ConformalFactor = std::function<double(double u, double v)>;

// Brioschi formula with fourth-order central differences; indefinite metrics allowed.
// Throws SingularMetric when EG - F^2 vanishes.
double gaussian_curvature_fd(const MetricField& g, double u, double v, const OracleConfig& cfg = {});
// ds^2 = lambda(u, v) (du^2 + dv^2).
double gaussian_curvature_fd(const ConformalFactor& lambda, double u, double v, const OracleConfig& cfg = {});

// Fourth-order central first derivative.
double derivative(const std::function<double(double)>& f, double x, double h);

}  // namespace kinematica::numerics
