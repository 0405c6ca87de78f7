#include "kinematica/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "kinematica/errors.hpp"
#include "kinematica/gentrig.hpp"

namespace kinematica {
namespace {

// A word I^a s_{j1} s_{j2} ... with an integer polynomial coefficient; generators 1..3, I central.
struct Term {
    KappaPoly coeff;
    int a = 0;
    std::vector<int> word;
};

KappaPoly poly_mul(const KappaPoly& p, const KappaPoly& q) {
    KappaPoly r;
    for (const auto& [e1, c1] : p)
        for (const auto& [e2, c2] : q) r[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

void poly_add_into(KappaPoly& acc, const KappaPoly& p) {
    for (const auto& [e, c] : p) acc[e] += c;
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

KappaPoly mono(long c, int d1, int d2) { return {{{d1, d2}, c}}; }

// s1^2 = 1, s2^2 = k1, s3^2 = k1 k2
KappaPoly square_of(int g) { return g == 1 ? mono(1, 0, 0) : g == 2 ? mono(1, 1, 0) : mono(1, 1, 1); }

// Normal-orders a word: anticommuting distinct generators, contracting squares, I^2 = -k2.
void normal_order(Term& t) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x + 1 < t.word.size(); ++x) {
            if (t.word[x] > t.word[x + 1]) {
                std::swap(t.word[x], t.word[x + 1]);
                t.coeff = poly_mul(t.coeff, mono(-1, 0, 0));
                changed = true;
                break;
            }
            if (t.word[x] == t.word[x + 1]) {
                t.coeff = poly_mul(t.coeff, square_of(t.word[x]));
                t.word.erase(t.word.begin() + x, t.word.begin() + x + 2);
                changed = true;
                break;
            }
        }
    }
    while (t.a >= 2) {
        t.a -= 2;
        t.coeff = poly_mul(t.coeff, mono(-1, 0, 1));
    }
}

int blade_of(const Term& t) {
    const auto& w = t.word;
    if (t.a == 0) {
        if (w.empty()) return kOne;
        if (w == std::vector<int>{1}) return kS1;
        if (w == std::vector<int>{2}) return kS2;
        if (w == std::vector<int>{3}) return kS3;
        if (w == std::vector<int>{1, 2}) return kS3c;
    } else {
        if (w.empty()) return kI;
        if (w == std::vector<int>{1}) return kIS1;
        if (w == std::vector<int>{2}) return kIS2;
    }
    return -1;
}

// Identification relations: s1 s3 = I s2, s2 s3 = -k1 I s1, I s1 s2 = s3.
// One rewrite step on a normal-ordered non-basis term.
Term rewrite(Term t) {
    const auto& w = t.word;
    if (w == std::vector<int>{1, 3}) return {t.coeff, t.a + 1, {2}};
    if (w == std::vector<int>{2, 3}) return {poly_mul(t.coeff, mono(-1, 1, 0)), t.a + 1, {1}};
    if (w == std::vector<int>{1, 2, 3}) return {poly_mul(t.coeff, mono(-1, 1, 0)), t.a + 1, {1, 1}};
    if (t.a == 1 && w == std::vector<int>{1, 2}) return {t.coeff, 0, {3}};
    if (t.a == 1 && w == std::vector<int>{3}) return {t.coeff, 2, {1, 2}};
    return t;
}

std::pair<int, std::vector<int>> word_of(int blade) {
    switch (blade) {
        case kOne: return {0, {}};
        case kS1: return {0, {1}};
        case kS2: return {0, {2}};
        case kS3: return {0, {3}};
        case kIS1: return {1, {1}};
        case kIS2: return {1, {2}};
        case kS3c: return {0, {1, 2}};
        case kI: return {1, {}};
    }
    return {0, {}};
}

SymbolicTable derive_table() {
    SymbolicTable table{};
    for (int x = 0; x < kBladeCount; ++x)
        for (int y = 0; y < kBladeCount; ++y) {
            const auto [ax, wx] = word_of(x);
            const auto [ay, wy] = word_of(y);
            Term t{mono(1, 0, 0), ax + ay, wx};
            t.word.insert(t.word.end(), wy.begin(), wy.end());
            for (int guard = 0; guard < 16; ++guard) {
                normal_order(t);
                if (t.coeff.empty() || blade_of(t) >= 0) break;
                t = rewrite(t);
            }
            if (!t.coeff.empty()) poly_add_into(table[x][y][blade_of(t)], t.coeff);
        }
    return table;
}

struct TableCache {
    KappaPair kp{std::nan(""), std::nan("")};
    ProductTable table{};
};

const ProductTable& table_for(const KappaPair& kp) {
    thread_local TableCache cache;
    if (!(cache.kp == kp)) {
        cache.table = build_product_table(kp);
        cache.kp = kp;
    }
    return cache.table;
}

void same_kp(const Multivector& a, const Multivector& b) {
    if (!(a.kp == b.kp)) throw Error(ErrorKind::KappaMismatch, "multivectors over different kappa pairs");
}

void require_vector(const Multivector& a, const char* op) {
    if (!is_vector(a)) throw Error(ErrorKind::NotAVector, std::string(op) + ": argument is not a pure vector");
}

void require_bivector(const Multivector& a, const char* op) {
    if (!is_bivector(a)) throw Error(ErrorKind::GradeError, std::string(op) + ": argument is not a pure bivector");
}

bool only_in(const Multivector& a, std::initializer_list<int> allowed, double tol) {
    for (int b = 0; b < kBladeCount; ++b)
        if (std::find(allowed.begin(), allowed.end(), b) == allowed.end() && std::fabs(a.c[b]) > tol) return false;
    return true;
}

}  // namespace

std::string_view blade_tag(int b) noexcept {
    static constexpr std::array<std::string_view, kBladeCount> tags{"1", "s1", "s2", "s3", "is1", "is2", "s3c", "i"};
    return b >= 0 && b < kBladeCount ? tags[b] : "";
}

double poly_eval(const KappaPoly& p, const KappaPair& kp) noexcept {
    double s = 0.0;
    for (const auto& [e, c] : p) s += c * std::pow(kp.kappa1, e.first) * std::pow(kp.kappa2, e.second);
    return s;
}

std::string poly_to_string(const KappaPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : p) {
        std::string m;
        if (e.first > 0) m += e.first == 1 ? "k1" : "k1^" + std::to_string(e.first);
        if (e.second > 0) m += (m.empty() ? "" : "*") + std::string(e.second == 1 ? "k2" : "k2^" + std::to_string(e.second));
        std::string coef = std::to_string(std::labs(c));
        std::string piece = m.empty() ? coef : (std::labs(c) == 1 ? m : coef + "*" + m);
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        out += piece;
    }
    return out;
}

const SymbolicTable& symbolic_product_table() {
    static const SymbolicTable table = derive_table();
    return table;
}

ProductTable build_product_table(const KappaPair& kp) {
    const SymbolicTable& sym = symbolic_product_table();
    ProductTable t{};
    for (int x = 0; x < kBladeCount; ++x)
        for (int y = 0; y < kBladeCount; ++y)
            for (int z = 0; z < kBladeCount; ++z) t[x][y][z] = poly_eval(sym[x][y][z], kp);
    return t;
}

Multivector Multivector::scalar(const KappaPair& kp, double s) { return blade(kp, kOne, s); }

Multivector Multivector::blade(const KappaPair& kp, int b, double s) {
    Multivector m{kp, {}};
    m.c[b] = s;
    return m;
}

Multivector Multivector::vector(const KappaPair& kp, double a1, double a2, double a3) {
    Multivector m{kp, {}};
    m.c[kS1] = a1, m.c[kS2] = a2, m.c[kS3] = a3;
    return m;
}

Multivector Multivector::bivector(const KappaPair& kp, double n1, double n2, double n3) {
    Multivector m{kp, {}};
    m.c[kIS1] = n1, m.c[kIS2] = n2, m.c[kS3c] = n3;
    return m;
}

Multivector mv_add(const Multivector& a, const Multivector& b) {
    same_kp(a, b);
    Multivector r = a;
    for (int i = 0; i < kBladeCount; ++i) r.c[i] += b.c[i];
    return r;
}

Multivector mv_sub(const Multivector& a, const Multivector& b) { return mv_add(a, mv_scale(b, -1.0)); }

Multivector mv_scale(const Multivector& a, double s) noexcept {
    Multivector r = a;
    for (double& x : r.c) x *= s;
    return r;
}

Multivector mv_mul(const Multivector& a, const Multivector& b) {
    same_kp(a, b);
    const ProductTable& t = table_for(a.kp);
    Multivector r{a.kp, {}};
    for (int x = 0; x < kBladeCount; ++x) {
        if (a.c[x] == 0.0) continue;
        for (int y = 0; y < kBladeCount; ++y) {
            if (b.c[y] == 0.0) continue;
            const double w = a.c[x] * b.c[y];
            for (int z = 0; z < kBladeCount; ++z) r.c[z] += w * t[x][y][z];
        }
    }
    return r;
}

Multivector reverse(const Multivector& a) noexcept {
    Multivector r = a;
    for (int b : {kIS1, kIS2, kS3c, kI}) r.c[b] = -r.c[b];
    return r;
}

double mv_max_abs_diff(const Multivector& a, const Multivector& b) {
    same_kp(a, b);
    double m = 0.0;
    for (int i = 0; i < kBladeCount; ++i) m = std::max(m, std::fabs(a.c[i] - b.c[i]));
    return m;
}

bool is_vector(const Multivector& a, double tol) noexcept { return only_in(a, {kS1, kS2, kS3}, tol); }
bool is_bivector(const Multivector& a, double tol) noexcept { return only_in(a, {kIS1, kIS2, kS3c}, tol); }
bool is_even(const Multivector& a, double tol) noexcept { return only_in(a, {kOne, kIS1, kIS2, kS3c}, tol); }

Multivector wedge(const Multivector& a, const Multivector& b) {
    require_vector(a, "wedge");
    require_vector(b, "wedge");
    return mv_scale(mv_sub(mv_mul(a, b), mv_mul(b, a)), 0.5);
}

double ck_dot(const Multivector& a, const Multivector& b) {
    require_vector(a, "ck_dot");
    require_vector(b, "ck_dot");
    same_kp(a, b);
    const double k1 = a.kp.kappa1, k2 = a.kp.kappa2;
    return a.c[kS1] * b.c[kS1] + k1 * a.c[kS2] * b.c[kS2] + k1 * k2 * a.c[kS3] * b.c[kS3];
}

Multivector left_contract(const Multivector& a, const Multivector& bv) {
    if (!is_vector(a)) throw Error(ErrorKind::GradeError, "left_contract: first argument is not a vector");
    require_bivector(bv, "left_contract");
    return mv_scale(mv_sub(mv_mul(a, bv), mv_mul(bv, a)), 0.5);
}

double bivector_kappa(const Multivector& bv) {
    require_bivector(bv, "bivector_kappa");
    return -mv_mul(bv, bv).c[kOne];
}

UnitAxis UnitAxis::make(double n1, double n2, double n3) {
    if (std::fabs(n1 * n1 + n2 * n2 + n3 * n3 - 1.0) > 1e-12)
        throw Error(ErrorKind::NotUnitAxis, "axis must satisfy n1^2 + n2^2 + n3^2 = 1");
    return {n1, n2, n3};
}

UnitAxis UnitAxis::normalized(double n1, double n2, double n3) {
    const double r = std::sqrt(n1 * n1 + n2 * n2 + n3 * n3);
    if (!(r > 0.0)) throw Error(ErrorKind::NotUnitAxis, "zero axis");
    return {n1 / r, n2 / r, n3 / r};
}

Multivector axis_bivector(const KappaPair& kp, const UnitAxis& n) {
    return Multivector::bivector(kp, n.n1, n.n2, n.n3);
}

Multivector rotor_from_bivector(const Multivector& bv, double phi) {
    const double k = bivector_kappa(bv);
    return mv_add(Multivector::scalar(bv.kp, cosk(k, phi / 2)), mv_scale(bv, sink(k, phi / 2)));
}

Multivector rotor(const KappaPair& kp, const UnitAxis& n, double phi) {
    return rotor_from_bivector(axis_bivector(kp, n), phi);
}

Multivector sandwich(const Multivector& r, const Multivector& a) {
    if (!is_even(r)) throw Error(ErrorKind::GradeError, "sandwich: rotor has odd components");
    if (!is_vector(a)) throw Error(ErrorKind::GradeError, "sandwich: argument is not a vector");
    const Multivector unit = mv_mul(r, reverse(r));
    if (mv_max_abs_diff(unit, Multivector::scalar(r.kp, 1.0)) > 1e-9)
        throw Error(ErrorKind::DomainError, "sandwich: rotor is not unit");
    Multivector out = mv_mul(mv_mul(reverse(r), a), r);
    for (int b : {kOne, kIS1, kIS2, kS3c, kI}) out.c[b] = 0.0;
    return out;
}

AxisVector axis_vector(const KappaPair& kp, const UnitAxis& n) {
    const Multivector v = mv_mul(Multivector::blade(kp, kI), axis_bivector(kp, n));
    if (v.c[kS1] != 0.0 || v.c[kS2] != 0.0 || v.c[kS3] != 0.0) return {v, false};
    return {Multivector::vector(kp, n.n1, n.n2, 0.0), true};
}

PlaneElement plane_element(const KappaPair& kp, const UnitAxis& n) {
    const double k1 = kp.kappa1;
    if (k1 == 0.0) {
        if (n.n1 != 0.0) return {Multivector::vector(kp, 0, 0, 1), Multivector::vector(kp, 0, 1, 0), true};
        return {Multivector::vector(kp, 1, 0, 0), Multivector::vector(kp, 0, n.n3, n.n2), false};
    }
    const Multivector a = Multivector::vector(kp, k1 * n.n3, 0, n.n1);
    const Multivector b = Multivector::vector(kp, k1 * n.n2, -n.n1, 0);
    const Multivector c = Multivector::vector(kp, 0, n.n3, n.n2);
    const double m1 = std::fabs(n.n1), m2 = std::fabs(n.n2), m3 = std::fabs(n.n3);
    if (m1 >= m2 && m1 >= m3) return {mv_scale(b, 1.0 / (k1 * n.n1)), a, false};
    if (m2 >= m3) return {mv_scale(b, 1.0 / (k1 * n.n2)), c, false};
    return {mv_scale(a, 1.0 / (k1 * n.n3)), c, false};
}

std::pair<Multivector, Multivector> in_plane_rotation_check(const KappaPair& kp, const Multivector& a,
                                                            const Multivector& b, double phi) {
    if (!(a.kp == kp)) throw Error(ErrorKind::KappaMismatch, "vector over a different kappa pair");
    const Multivector bv = wedge(a, b);
    if (is_bivector(bv) && std::all_of(bv.c.begin(), bv.c.end(), [](double x) { return x == 0.0; }))
        throw Error(ErrorKind::DegeneratePlane, "a ^ b = 0");
    const double k = bivector_kappa(bv);
    const Multivector lhs = sandwich(rotor_from_bivector(bv, phi), a);
    const Multivector factor = mv_sub(Multivector::scalar(kp, cosk(k, phi)), mv_scale(bv, sink(k, phi)));
    Multivector rhs = mv_mul(factor, a);
    return {lhs, rhs};
}

}  // namespace kinematica
