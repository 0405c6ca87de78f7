#pragma once

#include <string>

namespace kinematica {

// u + iv with i^2 = -kappa. Complex for kappa > 0, dual for 0, double (split) for < 0.
struct GenComplex {
    double re = 0.0;
    double im = 0.0;
    double kappa = 0.0;

    static GenComplex real(double x, double kappa) { return {x, 0.0, kappa}; }
    static GenComplex unit_i(double kappa) { return {0.0, 1.0, kappa}; }

    friend bool operator==(const GenComplex&, const GenComplex&) = default;
};

// Relative threshold on sqmod below which an element counts as a zero divisor.
inline constexpr double kInvertTolerance = 1e-14;

GenComplex gc_add(const GenComplex& a, const GenComplex& b);
GenComplex gc_sub(const GenComplex& a, const GenComplex& b);
GenComplex gc_mul(const GenComplex& a, const GenComplex& b);
GenComplex gc_neg(const GenComplex& a) noexcept;
GenComplex gc_scale(const GenComplex& a, double s) noexcept;
GenComplex gc_conj(const GenComplex& a) noexcept;
double gc_sqmod(const GenComplex& a) noexcept;
bool gc_is_zero(const GenComplex& a) noexcept;
bool gc_invertible(const GenComplex& a) noexcept;
GenComplex gc_inv(const GenComplex& a);
GenComplex gc_div(const GenComplex& a, const GenComplex& b);
GenComplex gc_exp_unit(double kappa, double phi) noexcept;
bool gc_approx(const GenComplex& a, const GenComplex& b, double tol) noexcept;
std::string gc_to_string(const GenComplex& a);

inline GenComplex operator+(const GenComplex& a, const GenComplex& b) { return gc_add(a, b); }
inline GenComplex operator-(const GenComplex& a, const GenComplex& b) { return gc_sub(a, b); }
inline GenComplex operator*(const GenComplex& a, const GenComplex& b) { return gc_mul(a, b); }
inline GenComplex operator/(const GenComplex& a, const GenComplex& b) { return gc_div(a, b); }
inline GenComplex operator-(const GenComplex& a) { return gc_neg(a); }
inline GenComplex operator*(double s, const GenComplex& a) { return gc_scale(a, s); }

// w -> (aw + b)/(cw + d), det invertible.
struct MoebiusMap {
    GenComplex a, b, c, d;

    // Validates shared kappa and invertible determinant (SingularMap otherwise).
    static MoebiusMap make(GenComplex a, GenComplex b, GenComplex c, GenComplex d);
    static MoebiusMap identity(double kappa);

    double kappa() const noexcept { return a.kappa; }
    GenComplex det() const { return a * d - b * c; }
    MoebiusMap inverse() const;
};

MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2);

// Throws AtInfinity when cw + d is not invertible.
GenComplex moebius_apply(const MoebiusMap& m, const GenComplex& w);

// Homogeneous pair [u : v] on the inversive plane.
struct GammaPoint {
    GenComplex u, v;
};

// The pair generates the unit ideal: lambda -> (lambda u, lambda v) has real rank 2.
bool gamma_admissible(const GammaPoint& p);
GammaPoint gamma_lift(const GenComplex& w);
GammaPoint gamma_apply(const MoebiusMap& m, const GammaPoint& p);
// u v^-1; throws AtInfinity when v is a zero divisor.
GenComplex gamma_project(const GammaPoint& p);
// [u:v] == [u':v'] iff u v' - u' v vanishes (admissible pairs).
bool gamma_equivalent(const GammaPoint& p, const GammaPoint& q, double tol);

}  // namespace kinematica
