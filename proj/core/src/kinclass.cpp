#include "kinematica/kinclass.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kinematica/errors.hpp"

namespace kinematica {
namespace {

int sign_of(double x) { return (x > 0) - (x < 0); }

struct NameEntry {
    KinematicsName name;
    std::string_view tag;
    BracketTriple triple;
};

constexpr std::array<NameEntry, 14> kNames{{
    {KinematicsName::adS, "adS", {1, 1, 1}},
    {KinematicsName::dS, "dS", {-1, 1, 1}},
    {KinematicsName::M, "M", {0, 1, 1}},
    {KinematicsName::Mprime, "M'", {1, 1, 0}},
    {KinematicsName::Mplus, "M+", {-1, 1, 0}},
    {KinematicsName::Nminus, "N-", {1, 0, 1}},
    {KinematicsName::Nplus, "N+", {-1, 0, 1}},
    {KinematicsName::G, "G", {0, 0, 1}},
    {KinematicsName::C, "C", {0, 1, 0}},
    {KinematicsName::SdS, "SdS", {1, 0, 0}},
    {KinematicsName::St, "St", {0, 0, 0}},
    {KinematicsName::El, "El", {1, -1, 1}},
    {KinematicsName::H, "H", {-1, -1, 1}},
    {KinematicsName::Eu, "Eu", {0, -1, 1}},
}};

const NameEntry& entry(KinematicsName n) {
    return *std::find_if(kNames.begin(), kNames.end(), [n](const NameEntry& e) { return e.name == n; });
}

// Number of sign changes in a coefficient sequence, zeros skipped.
int sign_changes(const std::array<long, 4>& c) {
    int changes = 0, last = 0;
    for (long x : c) {
        const int s = (x > 0) - (x < 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// ad matrices in basis (K, H, P); column j is ad_x(e_j).
using Mat3i = std::array<std::array<int, 3>, 3>;

std::array<Mat3i, 3> ad_matrices(const BracketTriple& t) {
    const auto [k, h, p] = t;
    Mat3i adK{{{0, 0, 0}, {0, 0, h}, {0, p, 0}}};
    Mat3i adH{{{0, 0, k}, {0, 0, 0}, {-p, 0, 0}}};
    Mat3i adP{{{0, -k, 0}, {-h, 0, 0}, {0, 0, 0}}};
    return {adK, adH, adP};
}

}  // namespace

std::string_view name_tag(KinematicsName n) noexcept { return entry(n).tag; }

KinematicsName parse_name(std::string_view s) {
    for (const auto& e : kNames)
        if (e.tag == s) return e.name;
    if (s == "Mp" || s == "Mprime") return KinematicsName::Mprime;
    if (s == "Mplus") return KinematicsName::Mplus;
    if (s == "Nminus") return KinematicsName::Nminus;
    if (s == "Nplus") return KinematicsName::Nplus;
    throw Error(ErrorKind::UnknownName, "unknown kinematics name '" + std::string(s) + "'");
}

BracketTriple triple_of(KinematicsName n) noexcept { return entry(n).triple; }

std::vector<BracketTriple> enumerate_all() {
    std::vector<BracketTriple> out;
    out.reserve(27);
    for (int k = -1; k <= 1; ++k)
        for (int h = -1; h <= 1; ++h)
            for (int p = -1; p <= 1; ++p) out.push_back({k, h, p});
    return out;
}

bool is_kinematical(const BracketTriple& t) noexcept { return t.p * t.h != -1; }

BracketTriple pair_image(const BracketTriple& t) noexcept { return {-t.k, -t.h, -t.p}; }

BracketTriple canonicalize(const BracketTriple& t) noexcept { return std::max(t, pair_image(t)); }

std::array<std::array<int, 3>, 3> killing_form(const BracketTriple& t) noexcept {
    const auto ad = ad_matrices(t);
    Mat3i kf{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            int tr = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) tr += ad[a][i][j] * ad[b][j][i];
            kf[a][b] = tr;
        }
    return kf;
}

Signature killing_signature(const BracketTriple& t) noexcept {
    // Descartes' rule is exact for the real-rooted characteristic polynomial of a symmetric matrix.
    const Mat3i m = killing_form(t);
    const long tr = m[0][0] + m[1][1] + m[2][2];
    const long minors = static_cast<long>(m[0][0]) * m[1][1] - static_cast<long>(m[0][1]) * m[1][0] +
                        static_cast<long>(m[0][0]) * m[2][2] - static_cast<long>(m[0][2]) * m[2][0] +
                        static_cast<long>(m[1][1]) * m[2][2] - static_cast<long>(m[1][2]) * m[2][1];
    const long det = static_cast<long>(m[0][0]) * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     static_cast<long>(m[0][1]) * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     static_cast<long>(m[0][2]) * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    // x^3 - tr x^2 + minors x - det
    const std::array<long, 4> pos{1, -tr, minors, -det};
    const std::array<long, 4> neg{-1, -tr, -minors, -det};
    Signature s;
    s.zero = det != 0 ? 0 : (minors != 0 ? 1 : (tr != 0 ? 2 : 3));
    s.positive = sign_changes(pos);
    s.negative = sign_changes(neg);
    return s;
}

KinematicsName name_of(const BracketTriple& t) noexcept {
    if (!is_kinematical(t)) {
        const Signature s = killing_signature(t);
        if (s.zero > 0) return KinematicsName::Eu;
        return s.negative == 3 ? KinematicsName::El : KinematicsName::H;
    }
    const BracketTriple c = canonicalize(t);
    for (const auto& e : kNames)
        if (canonicalize(e.triple) == c) return e.name;
    return KinematicsName::St;  // unreachable: the table covers all 11 classes
}

std::string_view symmetry_tag(Symmetry s) noexcept {
    switch (s) {
        case Symmetry::S_H: return "S_H";
        case Symmetry::S_P: return "S_P";
        case Symmetry::S_K: return "S_K";
    }
    return "";
}

BracketTriple apply_symmetry(Symmetry s, const BracketTriple& t) noexcept {
    switch (s) {
        case Symmetry::S_P: return {t.h, t.k, -t.p};    // K <-> H
        case Symmetry::S_H: return {-t.p, -t.h, -t.k};  // K <-> P
        case Symmetry::S_K: return {-t.k, t.p, t.h};    // H <-> P
    }
    return t;
}

std::string_view contraction_tag(ContractionType c) noexcept {
    switch (c) {
        case ContractionType::SpeedSpace: return "speed-space";
        case ContractionType::SpeedTime: return "speed-time";
        case ContractionType::SpaceTime: return "space-time";
    }
    return "";
}

ContractionType parse_contraction(std::string_view s) {
    for (auto c : kContractionTypes)
        if (contraction_tag(c) == s) return c;
    throw Error(ErrorKind::UnknownName, "unknown contraction type '" + std::string(s) + "'");
}

Exponents exponents_of(ContractionType c) noexcept {
    switch (c) {
        case ContractionType::SpeedSpace: return {1, 0, 1};
        case ContractionType::SpeedTime: return {1, 1, 0};
        case ContractionType::SpaceTime: return {0, 1, 1};
    }
    return {};
}

GeneralAlgebra contract(const GeneralAlgebra& a, const Exponents& e) {
    auto limit = [](double c, int power, const char* slot) {
        if (c == 0.0 || power == 0) return c;
        if (power > 0) return 0.0;
        throw Error(ErrorKind::DivergentContraction,
                    std::string("constant of ") + slot + " carries epsilon^" + std::to_string(power));
    };
    return {limit(a.ck, e.eH + e.eP - e.eK, "[H,P]"), limit(a.ch, e.eK + e.eP - e.eH, "[K,P]"),
            limit(a.cp, e.eK + e.eH - e.eP, "[K,H]")};
}

BracketTriple contract(const BracketTriple& t, const Exponents& e) { return normalize(contract(to_general(t), e)); }

GeneralAlgebra to_general(const BracketTriple& t) noexcept {
    return {static_cast<double>(t.k), static_cast<double>(t.h), static_cast<double>(t.p)};
}

BracketTriple normalize(const GeneralAlgebra& a) noexcept { return {sign_of(a.ck), sign_of(a.ch), sign_of(a.cp)}; }

GeneralAlgebra so3_algebra(double kappa1, double kappa2) noexcept { return {kappa1, -kappa2, 1.0}; }

std::vector<ContractionEdge> contraction_graph() {
    std::vector<ContractionEdge> edges;
    for (KinematicsName n : kKinematicalNames)
        for (ContractionType c : kContractionTypes) {
            const KinematicsName to = name_of(contract(triple_of(n), exponents_of(c)));
            const ContractionEdge e{n, to, c};
            if (to != n && std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
        }
    return edges;
}

}  // namespace kinematica
