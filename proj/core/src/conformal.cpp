#include "kinematica/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "kinematica/errors.hpp"

namespace kinematica {
namespace {

GenComplex re(double x, double k) { return GenComplex::real(x, k); }
GenComplex cx(double a, double b, double k) { return {a, b, k}; }

int index_of(ConformalTag t) { return static_cast<int>(t); }

using T = ConformalTag;

// Printed table, row x column -> [row, column].
struct Printed {
    T row, col;
    const char* text;
    std::vector<ClaimedTerm> terms;
    bool undefined = false;
};

const std::vector<Printed>& printed_table() {
    static const std::vector<Printed> table{
        {T::H, T::H, "0", {}},
        {T::H, T::P, "k1 K", {{1, 1, 0, T::K}}},
        {T::H, T::K, "-P", {{-1, 0, 0, T::P}}},
        {T::H, T::G1, "D", {{1, 0, 0, T::D}}},
        {T::H, T::G2, "K", {{1, 0, 0, T::K}}},
        {T::H, T::D, "-H - k1 G1", {{-1, 0, 0, T::H}, {-1, 1, 0, T::G1}}},
        {T::P, T::H, "-k1 K", {{-1, 1, 0, T::K}}},
        {T::P, T::P, "0", {}},
        {T::P, T::K, "k2 H", {{1, 0, 1, T::H}}},
        {T::P, T::G1, "K", {{1, 0, 0, T::K}}},
        {T::P, T::G2, "-k2 D", {{-1, 0, 1, T::D}}},
        {T::P, T::D, "-P + k1 G2", {{-1, 0, 0, T::P}, {1, 1, 0, T::G2}}},
        {T::K, T::H, "P", {{1, 0, 0, T::P}}},
        {T::K, T::P, "-k2 H", {{-1, 0, 1, T::H}}},
        {T::K, T::K, "0", {}},
        {T::K, T::G1, "-S2", {}, true},
        {T::K, T::G2, "k2 G2", {{1, 0, 1, T::G2}}},
        {T::K, T::D, "0", {}},
        {T::G1, T::H, "-D", {{-1, 0, 0, T::D}}},
        {T::G1, T::P, "-K", {{-1, 0, 0, T::K}}},
        {T::G1, T::K, "S2", {}, true},
        {T::G1, T::G1, "0", {}},
        {T::G1, T::G2, "0", {}},
        {T::G1, T::D, "G1", {{1, 0, 0, T::G1}}},
        {T::G2, T::H, "-K", {{-1, 0, 0, T::K}}},
        {T::G2, T::P, "k2 D", {{1, 0, 1, T::D}}},
        {T::G2, T::K, "-k2 G2", {{-1, 0, 1, T::G2}}},
        {T::G2, T::G1, "0", {}},
        {T::G2, T::G2, "0", {}},
        {T::G2, T::D, "G2", {{1, 0, 0, T::G2}}},
        {T::D, T::H, "H + k1 G1", {{1, 0, 0, T::H}, {1, 1, 0, T::G1}}},
        {T::D, T::P, "P - k1 G2", {{1, 0, 0, T::P}, {-1, 1, 0, T::G2}}},
        {T::D, T::K, "0", {}},
        {T::D, T::G1, "-G1", {{-1, 0, 0, T::G1}}},
        {T::D, T::G2, "-G2", {{-1, 0, 0, T::G2}}},
        {T::D, T::D, "0", {}},
    };
    return table;
}

}  // namespace

std::string_view conformal_tag_name(ConformalTag t) noexcept {
    static constexpr std::array<std::string_view, 6> names{"H", "P", "K", "G1", "G2", "D"};
    return names[index_of(t)];
}

ConformalTag parse_conformal_tag(std::string_view s) {
    for (auto t : kConformalTags)
        if (conformal_tag_name(t) == s) return t;
    throw Error(ErrorKind::UnknownName, "unknown conformal generator '" + std::string(s) + "'");
}

std::array<ConformalGenerator, 6> conformal_basis(const KappaPair& kp) {
    const double k = kp.kappa2;
    const SpinGenerators g = spin_generators(kp);
    return {{{T::H, g.H},
             {T::P, g.P},
             {T::K, g.K},
             {T::G1, m2_make(re(0, k), re(0, k), re(1, k), re(0, k))},
             {T::G2, m2_make(re(0, k), re(0, k), cx(0, 1, k), re(0, k))},
             {T::D, m2_make(re(0.5, k), re(0, k), re(0, k), re(-0.5, k))}}};
}

Decomposition decompose(const KappaPair& kp, const Mat2C& m) {
    const double k1 = kp.kappa1;
    const GenComplex a = gc_scale(m(0, 0) - m(1, 1), 0.5), b = m(0, 1), c = m(1, 0);
    Decomposition d;
    d.coeffs = {2 * b.re, 2 * b.im, 2 * a.im, c.re + k1 * b.re, c.im - k1 * b.im, 2 * a.re};
    Mat2C rebuilt = m2_zero(kp.kappa2);
    const auto basis = conformal_basis(kp);
    for (int i = 0; i < 6; ++i) rebuilt = m2_add(rebuilt, m2_scale(basis[i].matrix, d.coeffs[i]));
    d.residual = m2_max_abs_diff(rebuilt, m);
    double scale = 1.0;
    for (const auto& e : m.e) scale = std::max({scale, std::fabs(e.re), std::fabs(e.im)});
    if (d.residual > 1e-12 * scale)
        throw Error(ErrorKind::DecompositionFailure, "matrix is not in sl(2): residual " + std::to_string(d.residual));
    return d;
}

BracketResult conformal_bracket(const KappaPair& kp, ConformalTag x, ConformalTag y) {
    const auto basis = conformal_basis(kp);
    const Mat2C m = m2_commutator(basis[index_of(x)].matrix, basis[index_of(y)].matrix);
    const Decomposition d = decompose(kp, m);
    return {m, d.coeffs, d.residual};
}

ClaimedEntry claimed_bracket(ConformalTag row, ConformalTag col) {
    for (const auto& p : printed_table())
        if (p.row == row && p.col == col) return {p.text, p.terms, p.undefined};
    return {};
}

ConformalCoeffs claimed_coeffs(const KappaPair& kp, const ClaimedEntry& e) {
    ConformalCoeffs c{};
    for (const auto& t : e.terms)
        c[index_of(t.gen)] += t.coeff * std::pow(kp.kappa1, t.d1) * std::pow(kp.kappa2, t.d2);
    return c;
}

std::string_view diff_status_name(DiffStatus s) noexcept {
    switch (s) {
        case DiffStatus::Match: return "match";
        case DiffStatus::Mismatch: return "mismatch";
        case DiffStatus::UndefinedSymbol: return "undefined_symbol";
    }
    return "";
}

std::string format_combination(const ConformalCoeffs& c) {
    std::string out;
    for (int i = 0; i < 6; ++i) {
        if (c[i] == 0.0) continue;
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.17g", std::fabs(c[i]));
        const std::string mag = std::fabs(c[i]) == 1.0 ? "" : std::string(buf) + " ";
        out += out.empty() ? (c[i] < 0 ? "-" : "") : (c[i] < 0 ? " - " : " + ");
        out += mag + std::string(conformal_tag_name(kConformalTags[i]));
    }
    return out.empty() ? "0" : out;
}

std::vector<DiffEntry> bracket_table_diff(const KappaPair& kp) {
    std::vector<DiffEntry> out;
    for (auto x : kConformalTags)
        for (auto y : kConformalTags) {
            const BracketResult r = conformal_bracket(kp, x, y);
            const ClaimedEntry e = claimed_bracket(x, y);
            DiffStatus status = DiffStatus::UndefinedSymbol;
            if (!e.undefined_symbol) {
                const ConformalCoeffs c = claimed_coeffs(kp, e);
                double diff = 0.0;
                for (int i = 0; i < 6; ++i) diff = std::max(diff, std::fabs(c[i] - r.coeffs[i]));
                status = diff <= 1e-12 ? DiffStatus::Match : DiffStatus::Mismatch;
            }
            out.push_back({x, y, e.text, format_combination(r.coeffs), status});
        }
    return out;
}

Mat2C conformal_exp(const KappaPair& kp, ConformalTag tag, double t) {
    const double k = kp.kappa2;
    switch (tag) {
        case T::H: return sl2_of_expH(kp, t).matrix();
        case T::P: return sl2_of_expP(kp, t).matrix();
        case T::K: return sl2_of_expK(kp, t).matrix();
        case T::G1: return m2_make(re(1, k), re(0, k), re(t, k), re(1, k));
        case T::G2: return m2_make(re(1, k), re(0, k), cx(0, t, k), re(1, k));
        case T::D: return m2_make(re(std::exp(t / 2), k), re(0, k), re(0, k), re(std::exp(-t / 2), k));
    }
    return m2_identity(k);
}

MoebiusMap conformal_moebius(const KappaPair& kp, ConformalTag tag, double t) {
    const Mat2C m = conformal_exp(kp, tag, t);
    return MoebiusMap::make(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

GenComplex conformal_action(const KappaPair& kp, ConformalTag tag, double t, const GenComplex& w) {
    const double k = kp.kappa2;
    const GenComplex one = re(1, k);
    switch (tag) {
        case T::G1: {
            const GenComplex den = gc_scale(w, t) + one;
            if (!gc_invertible(den)) throw Error(ErrorKind::AtInfinity, "tw + 1 is a zero divisor");
            return w * gc_inv(den);
        }
        case T::G2: {
            const GenComplex den = cx(0, t, k) * w + one;
            if (!gc_invertible(den)) throw Error(ErrorKind::AtInfinity, "tiw + 1 is a zero divisor");
            return w * gc_inv(den);
        }
        case T::D: return gc_scale(w, std::exp(t));
        default: return moebius_apply(conformal_moebius(kp, tag, t), w);
    }
}

bool acts_as_translation(const MoebiusMap& m, double tol) {
    const double k = m.kappa();
    const std::array<GenComplex, 3> samples{re(0, k), re(0.5, k), cx(0, 0.5, k)};
    const GenComplex shift = moebius_apply(m, samples[0]) - samples[0];
    for (const auto& w : samples)
        if (!gc_approx(moebius_apply(m, w) - w, shift, tol)) return false;
    return true;
}

ConformalCoeffs translation_generator(const KappaPair& kp) {
    const double k = kp.kappa2;
    return decompose(kp, m2_make(re(0, k), re(1, k), re(0, k), re(0, k))).coeffs;
}

}  // namespace kinematica
