#include <algne/galois.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace algne;

namespace {

UPoly upoly(const char* s) { return UPoly::parse(s); }

const UPoly& p1() {
    static const UPoly p = upoly("7*y^6 - 42*y^5 + 89*y^4 - 83*y^3 + 40*y^2 - 10*y + 1");
    return p;
}

const std::vector<UPoly>& four_player_polys() {
    static const std::vector<UPoly> ps{
        p1(),
        upoly("4*y^6 - 27*y^5 + 70*y^4 - 79*y^3 + 45*y^2 - 13*y + 1"),
        upoly("140*y^6 - 511*y^5 + 701*y^4 - 454*y^3 + 141*y^2 - 19*y + 1"),
        upoly("5*y^6 - 44*y^5 + 143*y^4 - 163*y^3 + 85*y^2 - 21*y + 2"),
    };
    return ps;
}

const UPoly& degree26() {
    static const UPoly p = upoly(
        "5828*y^26 - 80590*y^25 + 471147*y^24 - 1473516*y^23 + 1995893*y^22 + 3280961*y^21 - 21791522*y^20"
        " + 51425278*y^19 - 93080861*y^18 + 203283288*y^17 - 444991348*y^16 + 713613468*y^15 - 837466118*y^14"
        " + 925602099*y^13 - 1210417319*y^12 + 1552957912*y^11 - 1585613560*y^10 + 1241271492*y^9"
        " - 772369636*y^8 + 401799920*y^7 - 180281904*y^6 + 69151344*y^5 - 21721184*y^4 + 5260240*y^3"
        " - 909264*y^2 + 99200*y - 5120");
    return p;
}

// Every monic polynomial of degree d over GF(p), in a fixed order.
std::vector<ModPoly> monic_of_degree(std::uint64_t p, int d) {
    std::vector<ModPoly> out;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d + 1));
        std::uint64_t k = code;
        for (int i = 0; i < d; ++i, k /= p) c[static_cast<std::size_t>(i)] = k % p;
        c[static_cast<std::size_t>(d)] = 1;
        out.emplace_back(p, std::move(c));
    }
    return out;
}

// Trial division by all monic polynomials of increasing degree: once the
// factors of degree < d are divided out, any monic divisor of degree d of a
// squarefree polynomial is irreducible.
CycleType factor_oracle(ModPoly f) {
    const std::uint64_t p = f.modulus();
    f = f.monic();
    CycleType parts;
    for (int d = 1; 2 * d <= f.degree(); ++d)
        for (const auto& g : monic_of_degree(p, d)) {
            while (f.degree() >= d) {
                auto [q, r] = poly_divrem(f, g);
                if (!r.is_zero()) break;
                parts.push_back(d);
                f = q;
            }
        }
    if (f.degree() > 0) parts.push_back(f.degree());
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p < bound; p = next_prime(p)) out.push_back(p);
    return out;
}

}  // namespace

TEST(ModP, Reduction) {
    EXPECT_EQ(reduce_mod_p(upoly("x^2 - 2"), 7), ModPoly(7, {5, 0, 1}));
    auto r = reduce_mod_p(p1(), 101);
    EXPECT_EQ(r.degree(), 6);
    EXPECT_EQ(r.leading(), 7u);
    EXPECT_THROW(reduce_mod_p(upoly("1/3*x^2 + 1"), 3), BadPrime);
    EXPECT_THROW(reduce_mod_p(upoly("7*x^2 + 1"), 7), BadPrime);
    EXPECT_THROW(reduce_mod_p(upoly("x^2 + 1"), 8), DomainError);
    EXPECT_EQ(reduce_mod_p(upoly("1/2*x + 1/3"), 5), reduce_mod_p(upoly("3*x + 2"), 5));
}

TEST(ModP, Arithmetic) {
    ModPoly a(7, {1, 2, 3}), b(7, {6, 1});
    EXPECT_EQ(a + b, ModPoly(7, {0, 3, 3}));
    EXPECT_EQ(a - a, ModPoly(7));
    auto [q, r] = poly_divrem(a * b + ModPoly(7, {4}), b);
    EXPECT_EQ(q, a);
    EXPECT_EQ(r, ModPoly(7, {4}));
    EXPECT_EQ(poly_gcd(a * b, b * b), b.monic());
    EXPECT_THROW(poly_divrem(a, ModPoly(7)), DivisionByZero);
    EXPECT_EQ(ModPoly(5, {1, 0, 3}).to_string(), "3*x^2 + 1 mod 5");
}

TEST(ModP, SmallPatterns) {
    EXPECT_EQ(std::get<CycleType>(degree_pattern(reduce_mod_p(upoly("x^2 - 2"), 7))), (CycleType{1, 1}));
    EXPECT_EQ(std::get<CycleType>(degree_pattern(reduce_mod_p(upoly("x^2 - 2"), 5))), (CycleType{2}));
    EXPECT_TRUE(std::holds_alternative<NotSquarefree>(degree_pattern(reduce_mod_p(upoly("x^2 - 2*x + 1"), 5))));
    EXPECT_TRUE(std::holds_alternative<NotSquarefree>(degree_pattern(reduce_mod_p(upoly("x^5 - 1"), 5))));
}

TEST(ModP, PatternsMatchTrialFactorization) {
    int checked = 0;
    for (auto p : primes_below(50)) {
        for (const auto& f : four_player_polys()) {
            ModPoly fp(p);
            try {
                fp = reduce_mod_p(f, p);
            } catch (const BadPrime&) {
                continue;
            }
            auto pat = degree_pattern(fp);
            if (std::holds_alternative<NotSquarefree>(pat)) continue;
            EXPECT_EQ(std::get<CycleType>(pat), factor_oracle(fp)) << f.to_string() << " mod " << p;
            ++checked;
        }
    }
    EXPECT_GE(checked, 40);
}

TEST(ModP, RandomPatternsMatchOracleAndSecondPass) {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (auto p : primes_below(30)) {
        std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<std::uint64_t> c(7);
            for (auto& x : c) x = d(rng);
            c.back() = 1 + d(rng) % (p - 1);
            ModPoly f(p, c);
            auto pat = degree_pattern(f);
            auto direct = detail::degree_pattern_direct(f);
            if (std::holds_alternative<NotSquarefree>(pat)) {
                EXPECT_FALSE(direct);
                continue;
            }
            EXPECT_EQ(std::get<CycleType>(pat), factor_oracle(f));
            ASSERT_TRUE(direct);
            EXPECT_EQ(*direct, std::get<CycleType>(pat));
            int sum = 0;
            for (int x : *direct) sum += x;
            EXPECT_EQ(sum, f.degree());
            ++checked;
        }
    }
    EXPECT_GE(checked, 60);
}

TEST(ModP, RepeatedFrobeniusEqualsDirectPower) {
    for (std::uint64_t p : {3u, 11u, 13u}) {
        ModPoly f = reduce_mod_p(p1(), p);
        ModPoly h = ModPoly::x(p);
        for (unsigned d = 1; d <= 6; ++d) {
            h = powmod(h, BigInt(p), f);
            EXPECT_EQ(h, powmod(ModPoly::x(p), BigInt::pow(BigInt(p), d), f)) << p << " " << d;
        }
    }
    // x^p = x mod p for every constant, so x^p - x vanishes on GF(p)
    ModPoly f(11, {3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    EXPECT_EQ(poly_rem(powmod(ModPoly::x(11), BigInt(11), f) - ModPoly::x(11), ModPoly(11, {0, 1})), ModPoly(11));
}

TEST(Sn, FourPlayerPolynomials) {
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> pinned{{2, 131}, {5, 131}, {17, 131}, {2, 131}};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& f = four_player_polys()[i];
        auto irr = certify_irreducible(f);
        ASSERT_TRUE(irr);
        EXPECT_EQ(irr->kind, IrreducibilityCertificate::Kind::Murty);
        auto c = sn_certificate(f, *irr);
        ASSERT_TRUE(c) << i;
        EXPECT_EQ(c->method, SnCertificate::Method::Classical);
        EXPECT_EQ(c->ncycle_minus1.pattern, (CycleType{5, 1}));
        ASSERT_TRUE(c->transposition);
        EXPECT_EQ(c->transposition->pattern, (CycleType{2, 1, 1, 1, 1}));
        EXPECT_EQ(c->ncycle_minus1.prime, pinned[i].first);
        EXPECT_EQ(c->transposition->prime, pinned[i].second);
        EXPECT_TRUE(verify_sn_certificate(f, *c));
    }
}

TEST(Sn, QuinticTextbookExample) {
    const UPoly f = upoly("x^5 - x - 1");
    auto c = sn_certificate(f, *certify_irreducible(f));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->ncycle_minus1.prime, 23u);
    EXPECT_EQ(c->transposition->prime, 163u);
    EXPECT_EQ(certify(f).verdict, Radicality::Irradical);
}

TEST(Sn, DegreeTwentySixUsesJordan) {
    auto irr = certify_irreducible(degree26());
    ASSERT_TRUE(irr);
    EXPECT_EQ(irr->kind, IrreducibilityCertificate::Kind::ModPrime);
    EXPECT_EQ(irr->prime, 113u);
    EXPECT_TRUE(verify_irreducibility(degree26(), *irr));
    auto c = sn_certificate(degree26(), *irr);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->method, SnCertificate::Method::Jordan);
    EXPECT_EQ(c->ncycle_minus1.prime, 3u);
    EXPECT_EQ(c->prime_cycle->prime, 13u);
    EXPECT_EQ(c->prime_cycle->pattern, (CycleType{18, 5, 2, 1}));
    EXPECT_EQ(c->odd->prime, 17u);
    EXPECT_TRUE(verify_sn_certificate(degree26(), *c));
}

TEST(Sn, TamperedCertificateFailsRecheck) {
    auto c = *sn_certificate(p1(), *certify_irreducible(p1()));
    auto bad = c;
    bad.transposition->prime = 3;
    EXPECT_FALSE(verify_sn_certificate(p1(), bad));
    bad = c;
    bad.ncycle_minus1.pattern = {4, 2};
    EXPECT_FALSE(verify_sn_certificate(p1(), bad));
    EXPECT_FALSE(verify_sn_certificate(upoly("x^5 - x - 1"), c));
}

TEST(Sn, JordanHelpers) {
    EXPECT_EQ(detail::prime_cycle_part({18, 5, 2, 1}, 26), 5);
    EXPECT_EQ(detail::prime_cycle_part({25, 1}, 26), std::nullopt);
    EXPECT_EQ(detail::prime_cycle_part({10, 5, 5, 3, 3}, 26), std::nullopt);
    EXPECT_TRUE(detail::is_odd_permutation({12, 11, 3}, 26));
    EXPECT_FALSE(detail::is_odd_permutation({25, 1}, 26));
    EXPECT_TRUE(detail::is_transposition({2, 1, 1, 1, 1}, 6));
    EXPECT_FALSE(detail::is_transposition({2, 2, 1, 1}, 6));
}

TEST(Sn, LowDegreeIsInconclusive) {
    const UPoly f = upoly("x^2 - 2");
    EXPECT_FALSE(sn_certificate(f, *certify_irreducible(f)));
    EXPECT_FALSE(sn_certificate(p1(), *certify_irreducible(p1()), 3));
}

TEST(Irreducibility, Certificates) {
    EXPECT_EQ(certify_irreducible(upoly("2*x - 1"))->kind, IrreducibilityCertificate::Kind::Linear);
    EXPECT_EQ(certify_irreducible(upoly("x^2 + 3*x - 1"))->kind, IrreducibilityCertificate::Kind::NoRationalRoots);
    EXPECT_FALSE(certify_irreducible(upoly("x^2 - 4")));
    auto m = certify_irreducible(p1());
    ASSERT_TRUE(m && m->murty);
    EXPECT_EQ(m->murty->n, BigInt(18));
    EXPECT_EQ(m->murty->value, BigInt(167595301));
    EXPECT_EQ(m->murty->H, Rational(89, 7));
    for (const auto& f : four_player_polys()) EXPECT_TRUE(verify_irreducibility(f, *certify_irreducible(f)));
    EXPECT_FALSE(modp_irreducibility(upoly("x^4 + 1"), 1000));
}

TEST(Radicality, Verdicts) {
    auto x3 = real_roots(upoly("y^2 + 3*y - 1"))[1];
    EXPECT_THROW(irradicality_verdict(x3), DomainError);
    auto v = irradicality_verdict(*with_irreducibility(x3));
    EXPECT_EQ(v.verdict, Radicality::RadicalExpressible);
    ASSERT_TRUE(v.closed_form);
    EXPECT_EQ(v.closed_form->p, Rational(-3, 2));
    EXPECT_EQ(v.closed_form->q, Rational(1, 2));
    EXPECT_EQ(v.closed_form->c, BigInt(13));

    auto r1 = real_roots(four_player_polys()[3], Rational(3, 10), Rational(4, 10));
    ASSERT_EQ(r1.size(), 1u);
    auto w = irradicality_verdict(*with_irreducibility(r1[0]));
    EXPECT_EQ(w.verdict, Radicality::Irradical);
    ASSERT_TRUE(w.sn);

    auto z = real_roots(degree26(), Rational(0), Rational(1));
    ASSERT_FALSE(z.empty());
    EXPECT_EQ(irradicality_verdict(*with_irreducibility(z[0])).verdict, Radicality::Irradical);
}

TEST(Radicality, CertificateText) {
    auto c = certify(four_player_polys()[0]);
    const std::string t = c.to_text();
    EXPECT_NE(t.find("irreducible: murty n=18 value=167595301 H=89/7\n"), std::string::npos);
    EXPECT_NE(t.find("galois: S_6\n"), std::string::npos);
    EXPECT_NE(t.find("transposition: p=131 pattern=(2,1,1,1,1)\n"), std::string::npos);
    EXPECT_NE(t.find("verdict: irradical\n"), std::string::npos);
    EXPECT_EQ(certify(upoly("x^2 - 4")).verdict, Radicality::Unknown);
}
