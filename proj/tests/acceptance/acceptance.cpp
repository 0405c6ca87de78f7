// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "kinematica/ckgeom.hpp"
#include "kinematica/clifford.hpp"
#include "kinematica/conformal.hpp"
#include "kinematica/errors.hpp"
#include "kinematica/gentrig.hpp"
#include "kinematica/kinclass.hpp"
#include "kinematica/numerics.hpp"
#include "kinematica/spin.hpp"
#include "oracles.hpp"

using namespace kinematica;
namespace nm = kinematica::numerics;

namespace {

// Worst observed error against a pinned tolerance.
struct Bound {
    double tol, worst = 0;
    bool nan = false;
    void see(double err) {
        if (std::isnan(err)) nan = true;
        worst = std::max(worst, err);
    }
    bool ok() const { return !nan && worst < tol; }
};

struct Outcome {
    bool ok;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.ok && secs < limit_s;
    failures += !pass;
    std::printf("%s %2d %-22s %s [%.3f s < %.0f s]\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs, limit_s);
    std::fflush(stdout);
}

Mat3 from_real3(const oracle::RealMatrix& m) {
    Mat3 out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r][c] = m(r, c);
    return out;
}

oracle::RealMatrix to_real4(const Mat2C& m) {
    return oracle::mat2(m.kappa(), {m(0, 0).re, m(0, 0).im}, {m(0, 1).re, m(0, 1).im}, {m(1, 0).re, m(1, 0).im},
                        {m(1, 1).re, m(1, 1).im});
}

GenComplex entry(const oracle::RealMatrix& m, int r, int c, double k) { return {m(2 * r, 2 * c), m(2 * r + 1, 2 * c), k}; }

GroupWord random_word(oracle::Rng& rng, int len, double span) {
    GroupWord w;
    for (int i = 0; i < len; ++i)
        w.emplace_back(static_cast<Generator>(static_cast<int>(rng.uniform(0, 3)) % 3), rng.uniform(-span, span));
    return w;
}

SpinElement random_spin(oracle::Rng& rng, const KappaPair& kp) {
    return sl2_of_word(kp, random_word(rng, 3, 1.2));
}

double gc_err(const GenComplex& a, const GenComplex& b) { return std::max(std::fabs(a.re - b.re), std::fabs(a.im - b.im)); }

// Ambient quadratic form restricted to the quadric and pulled back through unproject.
nm::MetricCoeffs induced_metric(const KappaPair& kp, double u, double v) {
    const double h = 1e-3;
    auto coord = [&](int i, double uu, double vv) {
        const SigmaPoint s = unproject(kp, {uu, vv, kp.kappa2});
        return i == 0 ? s.z : i == 1 ? s.t : s.x;
    };
    double du[3], dv[3];
    for (int i = 0; i < 3; ++i) {
        du[i] = nm::derivative([&](double x) { return coord(i, x, v); }, u, h);
        dv[i] = nm::derivative([&](double y) { return coord(i, u, y); }, v, h);
    }
    auto form = [&](const double* a, const double* b) {
        const double zz = kp.kappa1 == 0.0 ? 0.0 : a[0] * b[0] / kp.kappa1;
        return zz + a[1] * b[1] + kp.kappa2 * a[2] * b[2];
    };
    return {form(du, du), form(du, dv), form(dv, dv)};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Outcome classification() {
    const auto all = enumerate_all();
    const long kin = std::count_if(all.begin(), all.end(), [](auto t) { return is_kinematical(t); });
    std::vector<BracketTriple> classes;
    for (const auto& t : all)
        if (is_kinematical(t)) classes.push_back(canonicalize(t));
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    const long total = static_cast<long>(all.size()), non = total - kin, ncls = static_cast<long>(classes.size());
    return {total == 27 && non == 6 && ncls == 11,
            fmt("total=%ld non_kinematical=%ld classes=%ld (want 27/6/11)", total, non, ncls)};
}

Outcome contractions() {
    const Exponents ss = exponents_of(ContractionType::SpeedSpace);
    const BracketTriple a = contract(triple_of(KinematicsName::dS), ss);
    const BracketTriple b = contract(triple_of(KinematicsName::adS), ss);
    const BracketTriple c = contract(triple_of(KinematicsName::dS), Exponents{2, 1, 1});
    const bool ok = a == triple_of(KinematicsName::Nplus) && b == triple_of(KinematicsName::Nminus) &&
                    name_of(c) == KinematicsName::SdS;
    return {ok, fmt("dS->%s adS->%s dS(2,1,1)->%s", std::string(name_tag(name_of(a))).c_str(),
                    std::string(name_tag(name_of(b))).c_str(), std::string(name_tag(name_of(c))).c_str())};
}

Outcome exponentials() {
    Bound b{1e-10};
    oracle::Rng rng(3001);
    int n = 0;
    for (const auto& [k1, k2] : oracle::kSignPatterns)
        for (int i = 0; i < 100; ++i, ++n) {
            const KappaPair kp{k1, k2};
            const double t = rng.uniform(-2, 2);
            b.see(mat3_max_abs_diff(exp_H(kp, t), from_real3(oracle::expm(oracle::scaled(oracle::gen_H(k1, k2), t)))));
            b.see(mat3_max_abs_diff(exp_P(kp, t), from_real3(oracle::expm(oracle::scaled(oracle::gen_P(k1, k2), t)))));
            b.see(mat3_max_abs_diff(exp_K(kp, t), from_real3(oracle::expm(oracle::scaled(oracle::gen_K(k1, k2), t)))));
        }
    return {b.ok(), fmt("%d params x 3 gens, max err %.2e (tol %.0e)", n, b.worst, b.tol)};
}

Outcome trig_identities() {
    Bound id{1e-10}, der{1e-8};
    const double kappas[] = {-2, -1, -0.5, 0, 0.5, 1, 2};
    int checks = 0;
    for (double k : kappas)
        for (int j = 0; j < 50; ++j) {
            const double phi = -3 + 6.0 * j / 49, psi = 0.35 - 0.9 * phi / 3;
            const double c = cosk(k, phi), s = sink(k, phi);
            const double sc = std::max(1.0, c * c + std::fabs(k) * s * s);
            id.see(std::fabs(c * c + k * s * s - 1) / sc);
            id.see(std::fabs(cosk(k, 2 * phi) - (c * c - k * s * s)) / sc);
            id.see(std::fabs(sink(k, 2 * phi) - 2 * c * s) / sc);
            checks += 3;
            if (std::fabs(c + 1) > 1e-3 && std::fabs(cosk(k, phi / 2)) > 1e-3) {
                const double rhs = s / (c + 1);
                id.see(std::fabs(tank(k, phi / 2) - rhs) / std::max(1.0, std::fabs(rhs)));
                ++checks;
            }
            const double ca = cosk(k, phi), cb = cosk(k, psi);
            for (int sign : {1, -1}) {
                const double cab = cosk(k, phi + sign * psi);
                if (std::fabs(ca) < 1e-2 || std::fabs(cb) < 1e-2 || std::fabs(cab) < 1e-2) continue;
                const double ta = tank(k, phi), tb = tank(k, psi);
                const double rhs = (ta + sign * tb) / (1 - sign * k * ta * tb);
                id.see(std::fabs(tank(k, phi + sign * psi) - rhs) / std::max(1.0, std::fabs(rhs)));
                ++checks;
            }
            const double h = 1e-5;
            const double dc = (cosk(k, phi + h) - cosk(k, phi - h)) / (2 * h);
            const double ds = (sink(k, phi + h) - sink(k, phi - h)) / (2 * h);
            const double dsc = std::max(1.0, std::fabs(c));
            der.see(std::fabs(dc + k * s) / dsc);
            der.see(std::fabs(ds - c) / dsc);
        }
    return {id.ok() && der.ok(), fmt("%d identity checks max %.2e (tol %.0e), derivatives max %.2e (tol %.0e)", checks,
                                     id.worst, id.tol, der.worst, der.tol)};
}

Outcome clifford_table() {
    Bound table{1e-12}, assoc{1e-10};
    oracle::Rng rng(3002);
    const auto& sym = symbolic_product_table();
    std::vector<std::pair<double, double>> points;
    for (const auto& [k1, k2] : oracle::kSignPatterns)
        if (k1 != 0) points.emplace_back(k1, k2);
    for (int i = 0; i < 5; ++i) points.emplace_back(rng.uniform(0.2, 2) * (i % 2 ? 1 : -1), rng.uniform(-2, 2));
    for (const auto& [k1, k2] : points) {
        const auto m = oracle::clifford_matrices(k1, k2);
        const std::vector<oracle::RealMatrix> basis(m.begin(), m.end());
        for (int a = 0; a < kBladeCount; ++a)
            for (int b = 0; b < kBladeCount; ++b) {
                double residual = 0;
                const auto coords = oracle::coordinates(basis, nm::matmul(m[a], m[b]), &residual);
                table.see(residual);
                for (int c = 0; c < kBladeCount; ++c)
                    table.see(std::fabs(poly_eval(sym[a][b][c], {k1, k2}) - coords[c]));
            }
    }
    int triples = 0;
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        auto rnd = [&] {
            Multivector v{kp, {}};
            for (double& c : v.c) c = rng.uniform(-1, 1);
            return v;
        };
        for (int i = 0; i < 200; ++i, ++triples) {
            const Multivector a = rnd(), b = rnd(), c = rnd();
            assoc.see(mv_max_abs_diff(mv_mul(mv_mul(a, b), c), mv_mul(a, mv_mul(b, c))));
        }
    }
    return {table.ok() && assoc.ok(), fmt("%zu kappa points table err %.2e (tol %.0e); %d triples assoc err %.2e (tol %.0e)",
                                          points.size(), table.worst, table.tol, triples, assoc.worst, assoc.tol)};
}

Outcome rotations() {
    Bound b{1e-10};
    oracle::Rng rng(3003);
    int n = 0;
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        for (int i = 0; i < 100; ++i, ++n) {
            const UnitAxis ax = UnitAxis::normalized(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
            const Multivector r = rotor(kp, ax, rng.uniform(-2, 2));
            const Multivector a = Multivector::vector(kp, rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
            const Multivector img = sandwich(r, a);
            b.see(std::fabs(ck_dot(img, img) - ck_dot(a, a)));
            if (!is_vector(img, 1e-12)) b.see(1);
            const Multivector axis = axis_vector(kp, ax).v;
            b.see(mv_max_abs_diff(sandwich(r, axis), axis));
            const Multivector p = Multivector::vector(kp, rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
            const auto [lhs, rhs] = in_plane_rotation_check(kp, a, p, rng.uniform(-1.5, 1.5));
            b.see(mv_max_abs_diff(lhs, rhs));
        }
    }
    return {b.ok(), fmt("%d cases: norm, axis, in-plane max err %.2e (tol %.0e)", n, b.worst, b.tol)};
}

Outcome double_cover() {
    Bound hom{1e-9}, sign{1e-12}, gens{1e-10};
    oracle::Rng rng(3004);
    int n = 0;
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        for (int i = 0; i < 50; ++i, ++n) {
            const SpinElement a = random_spin(rng, kp), b = random_spin(rng, kp);
            hom.see(mat3_max_abs_diff(cover_to_so3(spin_mul(a, b)), mat3_mul(cover_to_so3(a), cover_to_so3(b))));
            sign.see(mat3_max_abs_diff(cover_to_so3(a.negated()), cover_to_so3(a)));
            const double t = rng.uniform(-2, 2);
            gens.see(mat3_max_abs_diff(cover_to_so3(sl2_of_expK(kp, t)), exp_K(kp, t)));
            gens.see(mat3_max_abs_diff(cover_to_so3(sl2_of_expH(kp, t)), exp_H(kp, t)));
            gens.see(mat3_max_abs_diff(cover_to_so3(sl2_of_expP(kp, t)), exp_P(kp, t)));
        }
    }
    return {hom.ok() && sign.ok() && gens.ok(),
            fmt("%d pairs: hom %.2e (tol %.0e), sign %.2e, generators %.2e (tol %.0e)", n, hom.worst, hom.tol, sign.worst,
                gens.worst, gens.tol)};
}

Outcome conformal_algebra() {
    Bound closure{1e-12}, jacobi{1e-10}, action{1e-12};
    bool flagged = true;
    int undefined = 0, mismatched = 0, actions = 0;
    oracle::Rng rng(3005);
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        const auto basis = conformal_basis(kp);
        for (auto x : kConformalTags)
            for (auto y : kConformalTags) closure.see(conformal_bracket(kp, x, y).residual);
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) {
                    const Mat2C &a = x.matrix, &b = y.matrix, &c = z.matrix;
                    const Mat2C j = m2_add(m2_add(m2_commutator(a, m2_commutator(b, c)), m2_commutator(b, m2_commutator(c, a))),
                                           m2_commutator(c, m2_commutator(a, b)));
                    jacobi.see(m2_max_abs_diff(j, m2_zero(k2)));
                }
        bool kg1 = false, g1k = false;
        for (const auto& d : bracket_table_diff(kp)) {
            undefined += d.status == DiffStatus::UndefinedSymbol;
            mismatched += d.status == DiffStatus::Mismatch;
            if (d.status == DiffStatus::UndefinedSymbol && d.row == ConformalTag::K && d.col == ConformalTag::G1) kg1 = true;
            if (d.status == DiffStatus::UndefinedSymbol && d.row == ConformalTag::G1 && d.col == ConformalTag::K) g1k = true;
        }
        flagged = flagged && kg1 && g1k;
        for (const auto& g : basis)
            for (int i = 0; i < 10; ++i) {
                const double t = rng.uniform(-1, 1);
                const GenComplex w{rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8), k2};
                const auto e = oracle::expm(oracle::scaled(to_real4(g.matrix), t));
                const GenComplex num = entry(e, 0, 0, k2) * w + entry(e, 0, 1, k2);
                const GenComplex den = entry(e, 1, 0, k2) * w + entry(e, 1, 1, k2);
                if (std::fabs(gc_sqmod(den)) < 1e-2) continue;  // near the conformal boundary
                const GenComplex want = num / den;
                action.see(gc_err(conformal_action(kp, g.tag, t, w), want) / std::max(1.0, std::fabs(want.re) + std::fabs(want.im)));
                ++actions;
            }
    }
    return {closure.ok() && jacobi.ok() && action.ok() && flagged,
            fmt("closure %.2e, jacobi %.2e, undefined S2 slots %d, mismatches %d, %d actions vs expm %.2e (tol %.0e)",
                closure.worst, jacobi.worst, undefined, mismatched, actions, action.worst, action.tol)};
}

Outcome metric_and_distance() {
    Bound quad{1e-6}, inv{1e-8}, curv{1e-4};
    oracle::Rng rng(3006);
    const double k1s[] = {-1, -0.5, 0, 0.5, 1};
    for (double k1 : k1s)
        for (int i = 0; i < 10; ++i) {
            const KappaPair kp{k1, 1};
            const double ang = rng.uniform(0, 2 * std::numbers::pi), r = rng.uniform(0.05, 0.9);
            const double cu = std::cos(ang), cv = std::sin(ang);
            const double len = nm::quad_adaptive(
                [&](double s) { return std::sqrt(metric_g1(kp, {s * cu, s * cv, 1}, {cu, cv, 1})); }, 0, r);
            quad.see(std::fabs(distance(kp, {0, 0, 1}, {r * cu, r * cv, 1}) - len));
        }
    int pairs = 0;
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        for (int i = 0; i < 200; ++i) {
            const MoebiusMap m = moebius_of(sl2_of_word(kp, random_word(rng, 3, 0.6)));
            const GenComplex a{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), k2};
            const GenComplex b{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), k2};
            try {
                const double d = distance(kp, a, b);
                inv.see(std::fabs(distance(kp, moebius_apply(m, a), moebius_apply(m, b)) - d));
                ++pairs;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NullOrImaginarySeparation) throw;
            }
        }
    }
    nm::OracleConfig cfg;
    cfg.fd_step = 1e-3;
    int points = 0;
    for (double k1 : {-1.0, -0.5, 0.0, 0.5, 1.0})
        for (int i = 0; i < 4; ++i, ++points) {
            const KappaPair kp{k1, 1};
            const double u = rng.uniform(-0.3, 0.3), v = rng.uniform(-0.3, 0.3);
            const double K = nm::gaussian_curvature_fd(
                nm::MetricField([&](double a, double b) { return induced_metric(kp, a, b); }), u, v, cfg);
            curv.see(std::fabs(K - k1));
        }
    return {quad.ok() && inv.ok() && curv.ok(),
            fmt("ray quadrature %.2e (tol %.0e), %d invariance pairs %.2e (tol %.0e), curvature at %d points %.2e (tol %.0e)",
                quad.worst, quad.tol, pairs, inv.worst, inv.tol, points, curv.worst, curv.tol)};
}

Outcome equivariance() {
    Bound b{1e-10};
    oracle::Rng rng(3007);
    int total = 0, patterns = 0;
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        int checked = 0;
        for (int i = 0; i < 400 && checked < 50; ++i) {
            const GroupWord w = random_word(rng, 1 + i % 4, 0.5);
            const SigmaPoint s = unproject(kp, {rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), k2});
            try {
                const auto [lhs, rhs] = act_and_project_equivariance(kp, word_matrix(kp, w), moebius_of(sl2_of_word(kp, w)), s);
                b.see(gc_err(lhs, rhs));
                ++checked;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::ProjectionPole && e.kind() != ErrorKind::AtInfinity) throw;
            }
        }
        total += checked;
        patterns += checked == 50;
    }
    return {b.ok() && patterns == 9, fmt("%d patterns x 50 words (%d checked), max err %.2e (tol %.0e)", patterns, total, b.worst, b.tol)};
}

Outcome golden_files() {
    const std::string dir = KINEMATICA_GOLDEN_DIR;
    std::ifstream manifest(dir + "/cases.txt");
    if (!manifest) return {false, "missing " + dir + "/cases.txt"};
    unsetenv("KINEMATICA_PRECISION");
    int cases = 0, identical = 0;
    std::string bad;
    for (std::string line; std::getline(manifest, line);) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string file;
        is >> file;
        std::vector<std::string> args{"kinematica"};
        for (std::string a; is >> a;) args.push_back(a);
        std::ostringstream out, err;
        const int rc = cli::run(args, out, err);
        ++cases;
        if (rc == 0 && out.str() == slurp(dir + "/" + file)) ++identical;
        else bad += " " + file;
    }
    return {cases > 0 && identical == cases, fmt("%d/%d byte-identical%s", identical, cases, bad.c_str())};
}

}  // namespace

int main() {
    criterion(1, "classification-counts", 1, classification);
    criterion(2, "contractions", 1, contractions);
    criterion(3, "closed-form-exp", 5, exponentials);
    criterion(4, "trig-identities", 5, trig_identities);
    criterion(5, "clifford-table", 5, clifford_table);
    criterion(6, "rotation-contract", 5, rotations);
    criterion(7, "double-cover", 5, double_cover);
    criterion(8, "conformal-algebra", 2, conformal_algebra);
    criterion(9, "metric-and-distance", 10, metric_and_distance);
    criterion(10, "equivariance", 5, equivariance);
    criterion(11, "cli-goldens", 2, golden_files);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
