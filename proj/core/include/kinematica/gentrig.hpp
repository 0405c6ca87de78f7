#pragma once

// Curvature-labelled trigonometry: C_k, S_k, T_k and the inverse tangent.
// k > 0 is circular, k = 0 parabolic, k < 0 hyperbolic.

namespace kinematica {

// |kappa| below this is the parabolic branch.
inline constexpr double kKappaZero = 1e-300;
// |cosk| below this makes tank a pole.
inline constexpr double kPoleTolerance = 1e-12;

double cosk(double kappa, double phi) noexcept;
double sink(double kappa, double phi) noexcept;

// Throws Error(PoleError) when |cosk| < kPoleTolerance.
double tank(double kappa, double phi);

// Principal value. Throws Error(DomainError) when kappa < 0 and |x| >= 1/sqrt(-kappa).
double atank(double kappa, double x);

}  // namespace kinematica
