#include "kinematica/gentrig.hpp"

#include <cmath>
#include <string>

#include "kinematica/errors.hpp"

namespace kinematica {
namespace {

constexpr double kSeriesCutoff = 1e-8;
constexpr int kSeriesTerms = 6;

bool parabolic(double kappa) { return std::fabs(kappa) < kKappaZero; }

// sum_n (-k phi^2)^n / (2n + offset)!  for offset 0 (cosine) or 1 (sine / phi)
double even_series(double kappa, double phi, int offset) {
    const double x = -kappa * phi * phi;
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < kSeriesTerms; ++n) {
        term *= x / ((2.0 * n + offset - 1) * (2.0 * n + offset));
        sum += term;
    }
    return sum;
}

}  // namespace

double cosk(double kappa, double phi) noexcept {
    if (parabolic(kappa)) return 1.0;
    if (std::fabs(kappa) * phi * phi < kSeriesCutoff) return even_series(kappa, phi, 0);
    if (kappa > 0) return std::cos(std::sqrt(kappa) * phi);
    return std::cosh(std::sqrt(-kappa) * phi);
}

double sink(double kappa, double phi) noexcept {
    if (parabolic(kappa)) return phi;
    if (std::fabs(kappa) * phi * phi < kSeriesCutoff) return phi * even_series(kappa, phi, 1);
    if (kappa > 0) {
        const double r = std::sqrt(kappa);
        return std::sin(r * phi) / r;
    }
    const double r = std::sqrt(-kappa);
    return std::sinh(r * phi) / r;
}

double tank(double kappa, double phi) {
    const double c = cosk(kappa, phi);
    if (std::fabs(c) < kPoleTolerance)
        throw Error(ErrorKind::PoleError, "tank: cosk vanishes at phi=" + std::to_string(phi));
    return sink(kappa, phi) / c;
}

double atank(double kappa, double x) {
    if (parabolic(kappa)) return x;
    if (kappa < 0 && std::fabs(x) * std::sqrt(-kappa) >= 1.0)
        throw Error(ErrorKind::DomainError, "atank: |x| >= 1/sqrt(-kappa)");
    const double kx2 = kappa * x * x;
    if (std::fabs(kx2) < kSeriesCutoff) {
        // x * sum_n (-k x^2)^n / (2n+1)
        double p = 1.0, sum = 1.0;
        for (int n = 1; n < kSeriesTerms; ++n) {
            p *= -kx2;
            sum += p / (2.0 * n + 1.0);
        }
        return x * sum;
    }
    if (kappa > 0) {
        const double r = std::sqrt(kappa);
        return std::atan(r * x) / r;
    }
    const double r = std::sqrt(-kappa);
    return std::atanh(r * x) / r;
}

}  // namespace kinematica
