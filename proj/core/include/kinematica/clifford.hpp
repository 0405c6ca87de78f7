#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "kinematica/ckgeom.hpp"

namespace kinematica {

// Basis order (1, s1, s2, s3, i s1, i s2, s3check, i); s3check is the element written (1/i) s3.
enum Blade : int { kOne = 0, kS1, kS2, kS3, kIS1, kIS2, kS3c, kI };
inline constexpr int kBladeCount = 8;
std::string_view blade_tag(int b) noexcept;

// Integer polynomial in (k1, k2): exponent pair -> coefficient.
using KappaPoly = std::map<std::pair<int, int>, long>;
double poly_eval(const KappaPoly& p, const KappaPair& kp) noexcept;
std::string poly_to_string(const KappaPoly& p);

using SymbolicTable = std::array<std::array<std::array<KappaPoly, kBladeCount>, kBladeCount>, kBladeCount>;
using ProductTable = std::array<std::array<std::array<double, kBladeCount>, kBladeCount>, kBladeCount>;

// table[a][b][c]: coefficient of blade c in blade a * blade b.
const SymbolicTable& symbolic_product_table();
ProductTable build_product_table(const KappaPair& kp);

struct Multivector {
    KappaPair kp;
    std::array<double, kBladeCount> c{};

    static Multivector scalar(const KappaPair& kp, double s);
    static Multivector blade(const KappaPair& kp, int b, double s = 1.0);
    static Multivector vector(const KappaPair& kp, double a1, double a2, double a3);
    // n1 i s1 + n2 i s2 + n3 s3check
    static Multivector bivector(const KappaPair& kp, double n1, double n2, double n3);

    Vec3 vector_part() const noexcept { return {c[kS1], c[kS2], c[kS3]}; }
    Vec3 bivector_part() const noexcept { return {c[kIS1], c[kIS2], c[kS3c]}; }
};

Multivector mv_add(const Multivector& a, const Multivector& b);
Multivector mv_sub(const Multivector& a, const Multivector& b);
Multivector mv_scale(const Multivector& a, double s) noexcept;
// Throws KappaMismatch.
Multivector mv_mul(const Multivector& a, const Multivector& b);
// Grades 2 and 3 change sign.
Multivector reverse(const Multivector& a) noexcept;
double mv_max_abs_diff(const Multivector& a, const Multivector& b);

bool is_vector(const Multivector& a, double tol = 0.0) noexcept;
bool is_bivector(const Multivector& a, double tol = 0.0) noexcept;
bool is_even(const Multivector& a, double tol = 0.0) noexcept;

// Throw NotAVector.
Multivector wedge(const Multivector& a, const Multivector& b);
double ck_dot(const Multivector& a, const Multivector& b);
// (aB - Ba)/2. Throws GradeError.
Multivector left_contract(const Multivector& a, const Multivector& bv);
// -B^2. Throws GradeError.
double bivector_kappa(const Multivector& bv);

struct UnitAxis {
    double n1 = 1.0, n2 = 0.0, n3 = 0.0;

    // Throws NotUnitAxis unless n1^2 + n2^2 + n3^2 = 1 to 1e-12.
    static UnitAxis make(double n1, double n2, double n3);
    // Euclidean normalization; throws NotUnitAxis for the zero vector.
    static UnitAxis normalized(double n1, double n2, double n3);
};

Multivector axis_bivector(const KappaPair& kp, const UnitAxis& n);
// C(phi/2) + B S(phi/2) with label -B^2.
Multivector rotor_from_bivector(const Multivector& bv, double phi);
Multivector rotor(const KappaPair& kp, const UnitAxis& n, double phi);
// reverse(r) a r. Throws GradeError.
Multivector sandwich(const Multivector& r, const Multivector& a);

struct AxisVector {
    Multivector v;
    bool check_form = false;  // true: (1/i) n.sigma = n1 s1 + n2 s2
};
AxisVector axis_vector(const KappaPair& kp, const UnitAxis& n);

struct PlaneElement {
    Multivector e, f;          // e ^ f spans the plane of n.sigma
    bool substituted = false;  // k1 = 0, n1 != 0: the plane s3 ^ s2 stands in
};
PlaneElement plane_element(const KappaPair& kp, const UnitAxis& n);

// (sandwich by exp(phi/2 a^b), [C(phi) - (a^b) S(phi)] a). Throws DegeneratePlane.
std::pair<Multivector, Multivector> in_plane_rotation_check(const KappaPair& kp, const Multivector& a,
                                                            const Multivector& b, double phi);

}  // namespace kinematica
