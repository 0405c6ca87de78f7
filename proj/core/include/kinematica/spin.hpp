#pragma once

#include <array>

#include "kinematica/ckgeom.hpp"
#include "kinematica/clifford.hpp"
#include "kinematica/gencomplex.hpp"

namespace kinematica {

// 2x2 matrix over C_{k2}, row major.
struct Mat2C {
    std::array<GenComplex, 4> e;

    const GenComplex& operator()(int r, int c) const { return e[2 * r + c]; }
    GenComplex& operator()(int r, int c) { return e[2 * r + c]; }
    double kappa() const noexcept { return e[0].kappa; }
};

Mat2C m2_make(const GenComplex& a, const GenComplex& b, const GenComplex& c, const GenComplex& d);
Mat2C m2_identity(double kappa2);
Mat2C m2_zero(double kappa2);
Mat2C m2_add(const Mat2C& a, const Mat2C& b);
Mat2C m2_sub(const Mat2C& a, const Mat2C& b);
Mat2C m2_mul(const Mat2C& a, const Mat2C& b);
Mat2C m2_scale(const Mat2C& a, double s);
Mat2C m2_scale(const Mat2C& a, const GenComplex& s);
// Conjugate transpose.
Mat2C m2_star(const Mat2C& a);
GenComplex m2_det(const Mat2C& a);
GenComplex m2_trace(const Mat2C& a);
Mat2C m2_commutator(const Mat2C& a, const Mat2C& b);
double m2_max_abs_diff(const Mat2C& a, const Mat2C& b);

// [[alpha, beta], [-k1 conj(beta), conj(alpha)]], alpha conj(alpha) + k1 beta conj(beta) = 1.
struct SpinElement {
    KappaPair kp;
    GenComplex alpha, beta;

    Mat2C matrix() const;
    SpinElement negated() const;
    // Representative with Re(alpha) >= 0, ties by Im(alpha) then beta.
    SpinElement canonical() const;
};

SpinElement spin_identity(const KappaPair& kp);
// Throws NotSpin.
SpinElement spin_from_matrix(const KappaPair& kp, const Mat2C& m);
SpinElement spin_mul(const SpinElement& a, const SpinElement& b);
MoebiusMap moebius_of(const SpinElement& s);
bool same_up_to_sign(const SpinElement& a, const SpinElement& b, double tol);

// diag(k1, 1)
Mat2C a_matrix(const KappaPair& kp);
bool is_spin(const KappaPair& kp, const Mat2C& m);
bool is_su2_algebra(const KappaPair& kp, const Mat2C& b);

struct PauliMatrices {
    Mat2C s1, s2, s3;
};
PauliMatrices pauli_generators(const KappaPair& kp);

struct SpinGenerators {
    Mat2C H, P, K;  // (1/2)[[0,1],[-k1,0]], (i/2) s2, (i/2) s1
};
SpinGenerators spin_generators(const KappaPair& kp);

SpinElement sl2_of_expK(const KappaPair& kp, double theta);
SpinElement sl2_of_expH(const KappaPair& kp, double alpha);
SpinElement sl2_of_expP(const KappaPair& kp, double beta);
SpinElement sl2_of_exp(const KappaPair& kp, Generator g, double param);
SpinElement sl2_of_word(const KappaPair& kp, const GroupWord& word);

// C(phi/2) + (n.sigma) S(phi/2) with label bivector_kappa(n.sigma).
SpinElement spin_from_axis(const KappaPair& kp, const UnitAxis& n, double phi);

// Even Cl3 element x0 + x1 i s1 + x2 i s2 + x3 s3check with alpha = x0 + i x1, beta = x3 + i x2.
Multivector to_multivector(const SpinElement& s);
// Throws NotSpin unless m is even and unit.
SpinElement from_multivector(const Multivector& m);
// Matrix image of a multivector under the Pauli identification.
Mat2C to_mat2c(const Multivector& m);

// Rotation of the vector basis induced by s, expressed in (z, t, x) coordinates. Throws NotSpin.
So3Matrix cover_to_so3(const SpinElement& s);

struct SpinLift {
    SpinElement plus, minus;
    int nullity = 0;  // dimension of the even solutions of s a = R(a) s; 1 means exactly {s, -s}
};
// Solves for the spin elements covering R. Throws DecompositionFailure when no unit solution exists.
SpinLift spin_lift(const KappaPair& kp, const So3Matrix& r);

}  // namespace kinematica
