#include <gtest/gtest.h>

#include <cmath>

#include "kinematica/conformal.hpp"
#include "kinematica/kinclass.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace kinematica;
using T = ConformalTag;

namespace {

GenComplex cx(double a, double b, double k) { return {a, b, k}; }

Mat2C from_real4(const oracle::RealMatrix& m, double k2) {
    Mat2C out = m2_zero(k2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out(r, c) = cx(m(2 * r, 2 * c), m(2 * r + 1, 2 * c), k2);
    return out;
}

oracle::RealMatrix to_real4(const Mat2C& m) {
    const double k = m.kappa();
    return oracle::mat2(k, {m(0, 0).re, m(0, 0).im}, {m(0, 1).re, m(0, 1).im}, {m(1, 0).re, m(1, 0).im},
                        {m(1, 1).re, m(1, 1).im});
}

int idx(T t) { return static_cast<int>(t); }

ConformalCoeffs unit(T t, double s = 1.0) {
    ConformalCoeffs c{};
    c[idx(t)] = s;
    return c;
}

void expect_coeffs(const ConformalCoeffs& a, const ConformalCoeffs& b, double tol) {
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(a[i], b[i], tol) << conformal_tag_name(kConformalTags[i]);
}

}  // namespace

TEST(Conformal, Basis) {
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        for (const auto& g : conformal_basis(kp)) EXPECT_EQ(m2_trace(g.matrix), cx(0, 0, k2)) << conformal_tag_name(g.tag);
        const auto b = conformal_basis(kp);
        EXPECT_EQ(m2_max_abs_diff(b[idx(T::H)].matrix, m2_make(cx(0, 0, k2), cx(0.5, 0, k2), cx(-k1 / 2, 0, k2), cx(0, 0, k2))), 0.0);
        EXPECT_EQ(m2_max_abs_diff(b[idx(T::G1)].matrix, m2_make(cx(0, 0, k2), cx(0, 0, k2), cx(1, 0, k2), cx(0, 0, k2))), 0.0);
        EXPECT_EQ(m2_max_abs_diff(b[idx(T::G2)].matrix, m2_make(cx(0, 0, k2), cx(0, 0, k2), cx(0, 1, k2), cx(0, 0, k2))), 0.0);
        EXPECT_EQ(m2_max_abs_diff(b[idx(T::D)].matrix, m2_make(cx(0.5, 0, k2), cx(0, 0, k2), cx(0, 0, k2), cx(-0.5, 0, k2))), 0.0);
    }
    for (auto t : kConformalTags) EXPECT_EQ(parse_conformal_tag(conformal_tag_name(t)), t);
    expect_kind(ErrorKind::UnknownName, [] { parse_conformal_tag("G3"); });
}

TEST(Conformal, BracketExamples) {
    const KappaPair kp{0.7, -1.2};
    expect_coeffs(conformal_bracket(kp, T::H, T::G1).coeffs, unit(T::D), 0);
    expect_coeffs(conformal_bracket(kp, T::D, T::G1).coeffs, unit(T::G1, -1), 0);
    expect_coeffs(conformal_bracket(kp, T::H, T::P).coeffs, unit(T::K, 0.7), 1e-16);
}

TEST(ConformalProperty, ClosureAndJacobi) {
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        const auto basis = conformal_basis(kp);
        for (auto x : kConformalTags)
            for (auto y : kConformalTags) {
                const BracketResult r = conformal_bracket(kp, x, y);
                EXPECT_LT(r.residual, 1e-12);
                ConformalCoeffs neg = conformal_bracket(kp, y, x).coeffs;
                for (double& v : neg) v = -v;
                expect_coeffs(r.coeffs, neg, 0);
            }
        for (auto x : kConformalTags)
            for (auto y : kConformalTags)
                for (auto z : kConformalTags) {
                    const Mat2C &a = basis[idx(x)].matrix, &b = basis[idx(y)].matrix, &c = basis[idx(z)].matrix;
                    const Mat2C j = m2_add(m2_add(m2_commutator(a, m2_commutator(b, c)), m2_commutator(b, m2_commutator(c, a))),
                                           m2_commutator(c, m2_commutator(a, b)));
                    EXPECT_LT(m2_max_abs_diff(j, m2_zero(k2)), 1e-10);
                }
    }
}

TEST(ConformalProperty, RestrictsToSo3) {
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        const GeneralAlgebra a = so3_algebra(k1, k2);
        expect_coeffs(conformal_bracket(kp, T::K, T::H).coeffs, unit(T::P, a.cp), 0);
        expect_coeffs(conformal_bracket(kp, T::K, T::P).coeffs, unit(T::H, a.ch), 0);
        expect_coeffs(conformal_bracket(kp, T::H, T::P).coeffs, unit(T::K, a.ck), 0);
    }
}

TEST(Conformal, PrintedTableDiff) {
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const auto diff = bracket_table_diff({k1, k2});
        ASSERT_EQ(diff.size(), 36u);
        std::vector<std::pair<T, T>> undefined, mismatch;
        for (const auto& d : diff) {
            if (d.status == DiffStatus::UndefinedSymbol) undefined.emplace_back(d.row, d.col);
            if (d.status == DiffStatus::Mismatch) mismatch.emplace_back(d.row, d.col);
        }
        EXPECT_EQ(undefined, (std::vector<std::pair<T, T>>{{T::K, T::G1}, {T::G1, T::K}}));
        if (k2 != 0)
            EXPECT_EQ(mismatch, (std::vector<std::pair<T, T>>{{T::K, T::G2}, {T::G2, T::K}}));
        else
            EXPECT_TRUE(mismatch.empty());
    }
    const KappaPair kp{1, 1};
    expect_coeffs(conformal_bracket(kp, T::K, T::G1).coeffs, unit(T::G2, -1), 0);
    expect_coeffs(conformal_bracket(kp, T::K, T::G2).coeffs, unit(T::G1, 1), 0);
    EXPECT_EQ(claimed_bracket(T::K, T::G2).text, "k2 G2");
    EXPECT_EQ(format_combination(conformal_bracket({2, 1}, T::D, T::H).coeffs), "H + 2 G1");
}

TEST(Conformal, ExponentialsMatchOracle) {
    oracle::Rng rng(163);
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        const auto basis = conformal_basis(kp);
        for (auto tag : kConformalTags) {
            const double t = rng.uniform(-1.5, 1.5);
            const Mat2C e = from_real4(oracle::expm(oracle::scaled(to_real4(basis[idx(tag)].matrix), t)), k2);
            const Mat2C c = conformal_exp(kp, tag, t);
            EXPECT_TRUE(m2_max_abs_diff(c, e) < 1e-10 || m2_max_abs_diff(c, m2_scale(e, -1.0)) < 1e-10)
                << conformal_tag_name(tag);
        }
        EXPECT_EQ(m2_max_abs_diff(conformal_exp(kp, T::G1, 0.3), m2_make(cx(1, 0, k2), cx(0, 0, k2), cx(0.3, 0, k2), cx(1, 0, k2))), 0.0);
    }
}

TEST(Conformal, MoebiusActions) {
    const double t = 0.4;
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        EXPECT_NEAR(moebius_apply(conformal_moebius(kp, T::D, t), cx(1, 0, k2)).re, std::exp(t), 1e-15);
        EXPECT_EQ(moebius_apply(conformal_moebius(kp, T::G1, t), cx(0, 0, k2)), cx(0, 0, k2));
        oracle::Rng rng(167);
        for (int i = 0; i < 50; ++i) {
            const GenComplex w = cx(rng.uniform(-1, 1), rng.uniform(-1, 1), k2);
            for (auto tag : {T::G1, T::G2, T::D}) {
                const double s = rng.uniform(-1, 1);
                try {
                    const GenComplex a = conformal_action(kp, tag, s, w), b = moebius_apply(conformal_moebius(kp, tag, s), w);
                    EXPECT_TRUE(gc_approx(a, b, 1e-12 * std::max(1.0, std::fabs(a.re) + std::fabs(a.im))));
                } catch (const Error& e) {
                    EXPECT_EQ(e.kind(), ErrorKind::AtInfinity);
                }
            }
        }
    }
    const KappaPair dual{1, 0};
    const GenComplex w = cx(-1 / t, 1, 0);
    expect_kind(ErrorKind::AtInfinity, [&] { moebius_apply(conformal_moebius(dual, T::G1, t), w); });
    expect_kind(ErrorKind::AtInfinity, [&] { conformal_action(dual, T::G1, t, w); });
    const GammaPoint q = gamma_apply(conformal_moebius(dual, T::G1, t), gamma_lift(w));
    EXPECT_TRUE(gamma_admissible(q));
    EXPECT_EQ(q.v, cx(0, t, 0));
}

TEST(Conformal, NotTranslations) {
    const double t = 0.8;
    for (const auto& [k1, k2] : oracle::kSignPatterns) {
        const KappaPair kp{k1, k2};
        EXPECT_FALSE(acts_as_translation(conformal_moebius(kp, T::G1, t)));
        EXPECT_EQ(acts_as_translation(moebius_of(sl2_of_expH(kp, 2 * t))), k1 == 0) << k1 << " " << k2;
        const ConformalCoeffs c = translation_generator(kp);
        expect_coeffs(c, ConformalCoeffs{2, 0, 0, k1, 0, 0}, 0);
        EXPECT_TRUE(acts_as_translation(MoebiusMap::make(cx(1, 0, k2), cx(t, 0, k2), cx(0, 0, k2), cx(1, 0, k2))));
    }
}

TEST(Conformal, DecompositionFailure) {
    expect_kind(ErrorKind::DecompositionFailure, [] { decompose({1, 1}, m2_identity(1)); });
}
