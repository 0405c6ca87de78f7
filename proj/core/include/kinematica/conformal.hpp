#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "kinematica/spin.hpp"

namespace kinematica {

enum class ConformalTag { H, P, K, G1, G2, D };
inline constexpr std::array<ConformalTag, 6> kConformalTags{ConformalTag::H,  ConformalTag::P,  ConformalTag::K,
                                                            ConformalTag::G1, ConformalTag::G2, ConformalTag::D};
std::string_view conformal_tag_name(ConformalTag t) noexcept;
// Throws UnknownName.
ConformalTag parse_conformal_tag(std::string_view s);

struct ConformalGenerator {
    ConformalTag tag;
    Mat2C matrix;
};

std::array<ConformalGenerator, 6> conformal_basis(const KappaPair& kp);

// Coefficients over (H, P, K, G1, G2, D).
using ConformalCoeffs = std::array<double, 6>;

struct Decomposition {
    ConformalCoeffs coeffs{};
    double residual = 0.0;
};
// Throws DecompositionFailure when the residual exceeds 1e-12 (relative to the matrix size).
Decomposition decompose(const KappaPair& kp, const Mat2C& m);

struct BracketResult {
    Mat2C matrix;
    ConformalCoeffs coeffs{};
    double residual = 0.0;
};
BracketResult conformal_bracket(const KappaPair& kp, ConformalTag x, ConformalTag y);

// One term c * k1^d1 * k2^d2 * generator of a claimed entry.
struct ClaimedTerm {
    int coeff;
    int d1;
    int d2;
    ConformalTag gen;
};

struct ClaimedEntry {
    std::string text;
    std::vector<ClaimedTerm> terms;
    bool undefined_symbol = false;
};

// The printed bracket [row, col], as published.
ClaimedEntry claimed_bracket(ConformalTag row, ConformalTag col);
ConformalCoeffs claimed_coeffs(const KappaPair& kp, const ClaimedEntry& e);

enum class DiffStatus { Match, Mismatch, UndefinedSymbol };
std::string_view diff_status_name(DiffStatus s) noexcept;

struct DiffEntry {
    ConformalTag row, col;
    std::string claimed;
    std::string computed;
    DiffStatus status;
};

// Entry-by-entry comparison of the computed table against the printed one.
std::vector<DiffEntry> bracket_table_diff(const KappaPair& kp);
std::string format_combination(const ConformalCoeffs& c);

// Closed-form one-parameter subgroups: Table matrices for G1, G2, D; spin matrices for H, P, K.
Mat2C conformal_exp(const KappaPair& kp, ConformalTag tag, double t);
MoebiusMap conformal_moebius(const KappaPair& kp, ConformalTag tag, double t);
// The Moebius formulas w/(tw + 1), w/(tiw + 1), e^t w. Throws AtInfinity.
GenComplex conformal_action(const KappaPair& kp, ConformalTag tag, double t, const GenComplex& w);

// True when m acts as w -> w + c on the three sample points 0, 1/2, i/2 (wherever defined).
bool acts_as_translation(const MoebiusMap& m, double tol = 1e-12);
// Decomposition of [[0,1],[0,0]], the generator of w -> w + t.
ConformalCoeffs translation_generator(const KappaPair& kp);

}  // namespace kinematica
