#include <algne/zerodim.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace algne;

namespace {

std::vector<MPoly> four_player_system(const MonomialOrder& ord) {
    VarNames v = indexed_vars(4);
    return {
        MPoly::parse("x2*x3*x4 + 2*x2*x3 - 2*x2 - 2*x3*x4 + 1", v, ord),
        MPoly::parse("3*x1*x3*x4 - 3*x1*x3 + x1 - x3*x4 + x3 - x4", v, ord),
        MPoly::parse("x1*x4 - x1 - 2*x4 + 1", v, ord),
        MPoly::parse("-x1*x2*x3 + 3*x1*x3 - x2*x3 + x2 - 1", v, ord),
    };
}

// Sylvester-matrix resultant in variable `var`, determinant by Laplace
// expansion (no division), entries are polynomials.
MPoly det(const std::vector<std::vector<MPoly>>& m, const MPoly& zero) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    MPoly acc = zero;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        MPoly term = m[0][j] * det(minor, zero);
        acc = j % 2 ? acc - term : acc + term;
    }
    return acc;
}

std::vector<MPoly> coeffs_in(const MPoly& f, std::size_t var) {
    std::vector<MPoly> c(f.degree_in(var) + 1, MPoly(f.vars(), f.order()));
    for (const auto& t : f.terms()) {
        Monomial m = t.mono;
        unsigned e = m[var];
        m.set(var, 0);
        c[e] = c[e] + MPoly::from_terms(f.vars(), f.order(), {{m, t.coef}});
    }
    return c;
}

MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var) {
    auto a = coeffs_in(f, var), b = coeffs_in(g, var);
    const std::size_t m = a.size() - 1, n = b.size() - 1, N = m + n;
    MPoly zero(f.vars(), f.order());
    if (N == 0) return MPoly::constant(f.vars(), Rational(1)).with_order(f.order());
    std::vector<std::vector<MPoly>> s(N, std::vector<MPoly>(N, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
    return det(s, zero);
}

MPoly random_multilinear(std::mt19937_64& rng, const VarNames& v, const MonomialOrder& ord, std::size_t nv) {
    std::uniform_int_distribution<long> c(-3, 3);
    std::vector<Term> ts;
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        if (rng() % 2) continue;
        Monomial m;
        for (std::size_t i = 0; i < nv; ++i)
            if (mask >> i & 1u) m.set(i, 1);
        ts.push_back({m, Rational(c(rng))});
    }
    return MPoly::from_terms(v, ord, ts);
}

}  // namespace

TEST(Quotient, FourPlayerEliminants) {
    MonomialOrder grl = MonomialOrder::grevlex(4);
    QuotientRing A(buchberger(four_player_system(grl), grl));
    EXPECT_EQ(A.dim(), 6u);
    EXPECT_EQ(A.eliminant(0).integer_cleared(), UPoly::from_desc({7, -42, 89, -83, 40, -10, 1}));
    EXPECT_EQ(A.eliminant(1).integer_cleared(), UPoly::from_desc({4, -27, 70, -79, 45, -13, 1}));
    EXPECT_EQ(A.eliminant(2).integer_cleared(), UPoly::from_desc({140, -511, 701, -454, 141, -19, 1}));
    EXPECT_EQ(A.eliminant(3).integer_cleared(), UPoly::from_desc({5, -44, 143, -163, 85, -21, 2}));
}

TEST(Quotient, FglmMatchesDirectLex) {
    MonomialOrder lex = MonomialOrder::lex(4), grl = MonomialOrder::grevlex(4);
    GroebnerBasis direct = buchberger(four_player_system(lex), lex);
    GroebnerBasis via = fglm(QuotientRing(buchberger(four_player_system(grl), grl)), lex);
    EXPECT_EQ(direct.generators, via.generators);
    for (std::size_t keep = 0; keep < 4; ++keep) {
        MonomialOrder o = MonomialOrder::lex_last(4, keep);
        EXPECT_EQ(groebner_basis(four_player_system(o), o).generators, buchberger(four_player_system(o), o).generators);
    }
}

TEST(Eliminate, Examples) {
    VarNames v = indexed_vars(4);
    MonomialOrder lex = MonomialOrder::lex(4);
    EXPECT_EQ(eliminate_to_univariate(four_player_system(lex), 0), UPoly::from_desc({7, -42, 89, -83, 40, -10, 1}));
    VarNames x = make_vars({"x"});
    EXPECT_EQ(eliminate_to_univariate({MPoly::parse("x - 1", x)}, 0), UPoly::from_desc({1, -1}));
    VarNames w = indexed_vars(3);
    EXPECT_THROW(eliminate_to_univariate({MPoly::parse("x1 - x3", w), MPoly::parse("x2 - x1", w)}, 2),
                 PositiveDimensional);
}

TEST(Eliminate, DividesResultantOracle) {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 40; ++t) {
        const std::size_t nv = 2 + t % 2;
        VarNames v = indexed_vars(nv);
        MonomialOrder ord = MonomialOrder::lex(nv);
        std::vector<MPoly> F;
        for (std::size_t i = 0; i < nv; ++i) F.push_back(random_multilinear(rng, v, ord, nv));
        MPoly r;
        if (nv == 2) {
            r = resultant(F[0], F[1], 1);
        } else {
            MPoly r1 = resultant(F[0], F[1], 2), r2 = resultant(F[0], F[2], 2);
            if (r1.is_zero() || r2.is_zero()) continue;
            r = resultant(r1, r2, 1);
        }
        if (r.is_zero() || r.is_constant()) continue;
        UPoly e;
        try {
            e = eliminate_to_univariate(F, 0);
        } catch (const PositiveDimensional&) {
            continue;
        }
        if (e.degree() < 1) continue;
        UPoly ru = r.to_upoly(0);
        EXPECT_TRUE(poly_rem(ru, e).is_zero()) << e.to_string() << " does not divide " << ru.to_string();
        ++checked;
    }
    EXPECT_GE(checked, 20);
}

TEST(Solve, FourPlayerRealPointsInBox) {
    VarNames v = indexed_vars(4);
    MonomialOrder lex = MonomialOrder::lex(4);
    auto pts = solve_zero_dimensional(four_player_system(lex), {0, 1, 2, 3}, true);
    ASSERT_EQ(pts.size(), 1u);
    const auto& p = pts[0];
    EXPECT_EQ(p.coords[3].defining(), UPoly::from_desc({5, -44, 143, -163, 85, -21, 2}));
    EXPECT_EQ(p.coords[3].compare(Rational::parse("0.320065197644")), 1);
    EXPECT_EQ(p.coords[3].compare(Rational::parse("0.320065197646")), -1);
    EXPECT_EQ(p.coords[0].compare(Rational::parse("0.52927075282")), 1);
    EXPECT_EQ(p.coords[0].compare(Rational::parse("0.52927075283")), -1);
    for (const auto& f : four_player_system(lex)) EXPECT_EQ(sign_at(p, f), 0);
    EXPECT_EQ(sign_at(p, MPoly::parse("x1 - 1/2", v, lex)), 1);
    auto all = solve_zero_dimensional(four_player_system(lex), {0, 1, 2, 3}, false);
    EXPECT_EQ(all.size(), 2u);
}

TEST(Solve, NonRadicalAndNonShape) {
    VarNames v = indexed_vars(2);
    MonomialOrder ord = MonomialOrder::lex(2);
    // (x1 - 1/2)^2 = 0, (x2 - 1/3)(x2 - 2/3) = 0: not radical, four-fold structure
    auto pts = solve_zero_dimensional({MPoly::parse("x1^2 - x1 + 1/4", v, ord),
                                       MPoly::parse("x2^2 - x2 + 2/9", v, ord)},
                                      {0, 1}, true);
    ASSERT_EQ(pts.size(), 2u);
    for (const auto& p : pts) {
        ASSERT_TRUE(p.coords[0].as_rational().has_value());
        EXPECT_EQ(*p.coords[0].as_rational(), Rational::parse("1/2"));
        EXPECT_TRUE(p.coords[1].as_rational().has_value());
    }
}
