#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kinematica/gencomplex.hpp"
#include "kinematica/mat3.hpp"

namespace kinematica {

// kappa1 = +-1/tau^2 (curvature), kappa2 = -1/c^2 (conformal label).
struct KappaPair {
    double kappa1 = 0.0;
    double kappa2 = 0.0;

    bool spacetime() const noexcept { return kappa2 <= 0.0; }
    friend bool operator==(const KappaPair&, const KappaPair&) = default;
};

// The nine sign patterns with unit magnitudes, kappa1 major.
std::array<KappaPair, 9> sign_patterns() noexcept;

using So3Matrix = Mat3;

// Coordinates (z, t, x) on z^2 + k1 t^2 + k1 k2 x^2 = 1.
struct SigmaPoint {
    double z = 1.0;
    double t = 0.0;
    double x = 0.0;
};

enum class Generator { H, P, K };
std::string_view generator_tag(Generator g) noexcept;
// Throws UnknownName.
Generator parse_generator(std::string_view s);

struct So3Generators {
    Mat3 H, P, K;
};

So3Generators so3_generators(const KappaPair& kp) noexcept;
// diag(1, k1, k1 k2)
Mat3 bilinear_form(const KappaPair& kp) noexcept;

So3Matrix exp_H(const KappaPair& kp, double alpha) noexcept;
So3Matrix exp_P(const KappaPair& kp, double beta) noexcept;
So3Matrix exp_K(const KappaPair& kp, double theta) noexcept;
So3Matrix exp_generator(const KappaPair& kp, Generator g, double param) noexcept;

// Product of one-parameter subgroup elements, applied left to right as matrices.
using GroupWord = std::vector<std::pair<Generator, double>>;
So3Matrix word_matrix(const KappaPair& kp, const GroupWord& word) noexcept;

double sigma_residual(const KappaPair& kp, const SigmaPoint& s) noexcept;
// Throws NotOnSigma when the residual exceeds 1e-10.
SigmaPoint make_sigma_point(const KappaPair& kp, double z, double t, double x);
SigmaPoint act(const So3Matrix& g, const SigmaPoint& s) noexcept;

// w = (t + ix)/(z + 1) in C_{k2}. Throws ProjectionPole at z = -1.
GenComplex project(const KappaPair& kp, const SigmaPoint& s);

struct ProjectedPoint {
    GenComplex w;
    bool boundary = false;  // z == 0: antipodal identification applies
};
ProjectedPoint project_flagged(const KappaPair& kp, const SigmaPoint& s);

// Inverse of project. Throws OutsideModel when 1 + k1 sqmod(w) <= 0.
SigmaPoint unproject(const KappaPair& kp, const GenComplex& w);

// sqmod(dw)/(1 + k1 sqmod(w))^2. Throws BoundarySingularity.
double metric_g1(const KappaPair& kp, const GenComplex& w, const GenComplex& dw);
// dx^2/(1 + k1 t0^2)^2 for k2 = 0. Throws WrongGeometry.
double metric_g2(const KappaPair& kp, double t0, double dx);

// atank(k1, |(w2 - w1)/(k1 conj(w1) w2 + 1)|).
// Throws DenominatorNotInvertible, NullOrImaginarySeparation.
double distance(const KappaPair& kp, const GenComplex& w1, const GenComplex& w2);

// (project(g s), moebius(m, project(s))) where m is the SL(2) image of g.
std::pair<GenComplex, GenComplex> act_and_project_equivariance(const KappaPair& kp, const So3Matrix& g,
                                                                const MoebiusMap& m, const SigmaPoint& s);

// SVG of the model region on [-2, 2]^2: boundary 1 + k1 sqmod(w) = 0, rim k1 sqmod(w) = 1,
// dashed null directions for k2 <= 0.
std::string region_svg(const KappaPair& kp);

}  // namespace kinematica
