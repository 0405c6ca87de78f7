#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kinematica {

// [H,P] = kK, [K,P] = hH, [K,H] = pP with k, h, p in {-1, 0, 1}.
struct BracketTriple {
    int k = 0;
    int h = 0;
    int p = 0;

    friend auto operator<=>(const BracketTriple&, const BracketTriple&) = default;
};

// Un-normalized structure constants, same slots as BracketTriple.
struct GeneralAlgebra {
    double ck = 0.0;
    double ch = 0.0;
    double cp = 0.0;

    friend bool operator==(const GeneralAlgebra&, const GeneralAlgebra&) = default;
};

enum class KinematicsName { adS, dS, M, Mprime, Mplus, Nminus, Nplus, G, C, SdS, St, El, H, Eu };

inline constexpr std::array<KinematicsName, 11> kKinematicalNames{
    KinematicsName::adS,    KinematicsName::dS,    KinematicsName::M, KinematicsName::Mprime,
    KinematicsName::Mplus,  KinematicsName::Nminus, KinematicsName::Nplus, KinematicsName::G,
    KinematicsName::C,      KinematicsName::SdS,   KinematicsName::St};

// ASCII tag: adS dS M M' M+ N- N+ G C SdS St El H Eu.
std::string_view name_tag(KinematicsName n) noexcept;
// Accepts the tags plus Mp, Mplus, Nminus, Nplus. Throws UnknownName.
KinematicsName parse_name(std::string_view s);
// The representative triple listed for each named algebra.
BracketTriple triple_of(KinematicsName n) noexcept;

std::vector<BracketTriple> enumerate_all();
bool is_kinematical(const BracketTriple& t) noexcept;
// Image under K, H, P -> -K, -H, -P with reversed brackets.
BracketTriple pair_image(const BracketTriple& t) noexcept;
BracketTriple canonicalize(const BracketTriple& t) noexcept;
KinematicsName name_of(const BracketTriple& t) noexcept;

// Killing form tr(ad x ad y) in the basis (K, H, P).
std::array<std::array<int, 3>, 3> killing_form(const BracketTriple& t) noexcept;
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};
Signature killing_signature(const BracketTriple& t) noexcept;

enum class Symmetry { S_H, S_P, S_K };
std::string_view symmetry_tag(Symmetry s) noexcept;
BracketTriple apply_symmetry(Symmetry s, const BracketTriple& t) noexcept;

struct Exponents {
    int eK = 0;
    int eH = 0;
    int eP = 0;
    friend bool operator==(const Exponents&, const Exponents&) = default;
};

enum class ContractionType { SpeedSpace, SpeedTime, SpaceTime };
inline constexpr std::array<ContractionType, 3> kContractionTypes{
    ContractionType::SpeedSpace, ContractionType::SpeedTime, ContractionType::SpaceTime};

std::string_view contraction_tag(ContractionType c) noexcept;
// Throws UnknownName.
ContractionType parse_contraction(std::string_view s);
Exponents exponents_of(ContractionType c) noexcept;

// epsilon -> 0 limit after K -> e^eK K, H -> e^eH H, P -> e^eP P. Throws DivergentContraction.
GeneralAlgebra contract(const GeneralAlgebra& a, const Exponents& e);
BracketTriple contract(const BracketTriple& t, const Exponents& e);

GeneralAlgebra to_general(const BracketTriple& t) noexcept;
// Positive rescaling of K, H, P sends every nonzero constant to its sign.
BracketTriple normalize(const GeneralAlgebra& a) noexcept;
// Structure constants of so(3) for the Cayley-Klein pair: (p, h, k) = (1, -kappa2, kappa1).
GeneralAlgebra so3_algebra(double kappa1, double kappa2) noexcept;

struct ContractionEdge {
    KinematicsName from;
    KinematicsName to;
    ContractionType type;
    friend bool operator==(const ContractionEdge&, const ContractionEdge&) = default;
};

// Edges from each named kinematical algebra under each contraction type, no self-loops.
std::vector<ContractionEdge> contraction_graph();

}  // namespace kinematica
