// One PASS/FAIL line per acceptance criterion. With arguments, only the
// listed criteria run; the exit status is the number of failures.

#include <algne/certified.hpp>
#include <algne/sampler.hpp>

#include "oracles.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

using namespace algne;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

UPoly upoly(const std::string& s) { return UPoly::parse(s); }

std::vector<std::string> read_lines(const std::string& name) {
    std::ifstream in(std::string(ALGNE_TEST_DATA) + "/" + name);
    if (!in) throw std::runtime_error("missing data file " + name);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

bool same_up_to_scalar(const UPoly& a, const UPoly& b) { return b.leading() * a == a.leading() * b; }

bool same_up_to_scalar(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return b.leading_coeff() * a == a.leading_coeff() * b;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
}

const std::vector<UPoly>& four_player_minimal_polys() {
    static const std::vector<UPoly> ps{
        upoly("7*y^6 - 42*y^5 + 89*y^4 - 83*y^3 + 40*y^2 - 10*y + 1"),
        upoly("4*y^6 - 27*y^5 + 70*y^4 - 79*y^3 + 45*y^2 - 13*y + 1"),
        upoly("140*y^6 - 511*y^5 + 701*y^4 - 454*y^3 + 141*y^2 - 19*y + 1"),
        upoly("5*y^6 - 44*y^5 + 143*y^4 - 163*y^3 + 85*y^2 - 21*y + 2"),
    };
    return ps;
}

Check three_player() {
    Check c;
    auto t0 = Clock::now();
    auto r = solve_all_ne(make_g3());
    auto pure = pure_ne(make_g3());
    const double dt = seconds_since(t0);
    c.expect(r.uniqueness == Uniqueness::Unique, "not unique");
    c.expect(r.pure_nes.empty() && pure.equilibria.empty(), "pure equilibria found");
    c.expect(r.mixed_nes.size() == 1, "expected one mixed equilibrium");
    if (r.mixed_nes.size() == 1) {
        const auto& e = r.mixed_nes[0];
        c.expect(support_code(e.support) == "MMM", "support " + support_code(e.support));
        c.expect(e.defining == std::vector<UPoly>{upoly("3*y^2 - 7*y + 3"), upoly("9*y^2 - 7*y + 1"), upoly("y^2 + 3*y - 1")},
                 "defining polynomials differ");
        const std::vector<std::pair<Rational, Rational>> forms{
            {Rational(7, 6), Rational(-1, 6)}, {Rational(7, 18), Rational(1, 18)}, {Rational(-3, 2), Rational(1, 2)}};
        for (std::size_t i = 0; i < 3; ++i) {
            auto s = radical_form_deg2(e.x[i]);
            c.expect(s.p == forms[i].first && s.q == forms[i].second && s.c == BigInt(13), "closed form of x" + std::to_string(i + 1));
        }
    }
    auto players = [](std::initializer_list<std::size_t> one_based) {
        std::set<std::size_t> s;
        for (auto i : one_based) s.insert(i - 1);
        return s;
    };
    const std::vector<std::set<std::size_t>> table{players({2}),    players({3}), players({1, 3}), players({1}),
                                                   players({2, 3}), players({1}), players({3}),    players({2})};
    c.expect(pure.table.unsatisfied == table, "deviation table differs");
    c.expect(dt < 1.0, "took " + std::to_string(dt) + " s");
    return c;
}

Check four_player_basis() {
    Check c;
    auto t0 = Clock::now();
    VarNames v = indexed_vars(4);
    MonomialOrder lex = MonomialOrder::lex(4);
    std::vector<MPoly> F;
    for (auto& f : advantage_polys(make_g4())) F.push_back(f.with_order(lex));
    GroebnerBasis gb = buchberger(F, lex);
    const std::vector<MPoly> expected{
        MPoly::parse("5*x4^6 - 44*x4^5 + 143*x4^4 - 163*x4^3 + 85*x4^2 - 21*x4 + 2", v, lex),
        MPoly::parse("28*x3 - 1465*x4^5 + 12302*x4^4 - 36947*x4^3 + 32897*x4^2 - 11699*x4 + 1447", v, lex),
        MPoly::parse("4*x2 + 255*x4^5 - 2094*x4^4 + 6053*x4^3 - 4687*x4^2 + 1401*x4 - 149", v, lex),
        MPoly::parse("7*x1 + 5*x4^5 - 39*x4^4 + 104*x4^3 - 59*x4^2 + 26*x4 - 9", v, lex),
    };
    c.expect(gb.generators.size() == 4, std::to_string(gb.generators.size()) + " generators");
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : gb.generators) {
            if (!same_up_to_scalar(g, e)) continue;
            found = found || (g.leading_coeff() * e.leading_coeff()).sign() > 0;
        }
        c.expect(found, "missing " + e.to_string());
    }
    const double dt = seconds_since(t0);
    c.expect(dt < 30.0, "took " + std::to_string(dt) + " s");
    return c;
}

Check four_player_digits() {
    Check c;
    auto t0 = Clock::now();
    auto r = solve_all_ne(make_g4());
    const double dt = seconds_since(t0);
    c.expect(r.uniqueness == Uniqueness::Unique && r.mixed_nes.size() == 1, "not a unique equilibrium");
    c.expect(r.faces == 81, std::to_string(r.faces) + " faces");
    if (r.mixed_nes.size() == 1) {
        auto got = approx_profile(r.mixed_nes[0].x, 12);
        const std::vector<std::string> printed{"0.529270752820", "0.846414728986", "0.523440476515", "0.320065197645"};
        c.expect(got == printed, "certified " + join(got) + " vs expected " + join(printed));
    }
    c.expect(dt < 60.0, "took " + std::to_string(dt) + " s");
    return c;
}

Check sturm_appendix() {
    Check c;
    const UPoly g = four_player_minimal_polys()[3];
    SturmChain chain(g);
    const std::vector<std::vector<const char*>> polys = {
        {"5", "-44", "143", "-163", "85", "-21", "2"},
        {"30", "-220", "572", "-489", "170", "-21"},
        {"55/9", "-5249/90", "943/15", "-433/18", "47/15"},
        {"-27110403/30250", "15927363/15125", "-2514591/6050", "831852/15125"},
        {"4813052861375/81663772313601", "-1017283844500/27221257437867", "417696219875/81663772313601"},
        {"46666740312733677523326/1531601841083641320125", "-19799411241381912287163/1531601841083641320125"},
        {"3506083202136869448018665125/26667695965024814331677001308676"},
    };
    c.expect(chain.size() == 7, "chain length " + std::to_string(chain.size()));
    for (std::size_t k = 0; k < std::min<std::size_t>(7, chain.size()); ++k) {
        std::vector<Rational> desc;
        for (const char* s : polys[k]) desc.push_back(Rational::parse(s));
        std::reverse(desc.begin(), desc.end());
        c.expect(chain[k] == UPoly(desc), "p" + std::to_string(k) + " differs");
    }
    const char* at[3][7] = {
        {"161/40000", "-2751/10000", "371/7500", "26761959/30250000", "-258737930605/326655089254404",
         "-28996945737809045150826/7658009205418206600625",
         "3506083202136869448018665125/26667695965024814331677001308676"},
        {"-4/3125", "27/625", "-4/625", "-236727/1890625", "-32955935705/81663772313601",
         "-5663575581442206389163/7658009205418206600625",
         "3506083202136869448018665125/26667695965024814331677001308676"},
        {"1/64", "7/16", "-31/360", "-383139/242000", "380134673875/326655089254404",
         "28271671319879411796/12252814728669130561",
         "3506083202136869448018665125/26667695965024814331677001308676"},
    };
    const Rational pts[3] = {Rational(3, 10), Rational(4, 10), Rational(5, 10)};
    int matched = 0;
    for (int j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < std::min<std::size_t>(7, chain.size()); ++k)
            matched += chain[k].eval(pts[j]) == Rational::parse(at[j][k]);
    c.expect(matched == 21, std::to_string(matched) + "/21 evaluations match");
    c.expect(count_real_roots(g, ExtRational::neg_inf(), ExtRational::pos_inf()) == 2, "total root count");
    c.expect(count_real_roots(g, pts[0], pts[1]) == 1, "roots in (0.3, 0.4]");
    c.expect(count_real_roots(g, pts[1], pts[2]) == 1, "roots in (0.4, 0.5]");
    auto roots = real_roots(g, pts[0], pts[1]);
    if (roots.size() == 1) {
        auto r = roots[0].refined(Rational(BigInt(1), BigInt::pow(BigInt(10), 13)));
        c.expect(r.interval().lo >= Rational::parse("0.320065197644") && r.interval().hi <= Rational::parse("0.320065197645"),
                 "refined root outside (0.320065197644, 0.320065197645]");
    }
    return c;
}

Check four_player_minimal() {
    Check c;
    auto polys = minimal_polys_per_variable(make_g4());
    const auto& expected = four_player_minimal_polys();
    c.expect(polys.size() == 4, "expected four eliminants");
    for (std::size_t i = 0; i < std::min<std::size_t>(4, polys.size()); ++i)
        c.expect(same_up_to_scalar(polys[i], expected[i]), "eliminant of x" + std::to_string(i + 1));
    const Rational heights[4] = {Rational(89, 7), Rational(79, 4), Rational(701, 140), Rational(163, 5)};
    const long points[4] = {18, 28, 11, 39};
    for (std::size_t i = 0; i < 4; ++i) {
        c.expect(murty_height(expected[i]) == heights[i], "height of P" + std::to_string(i + 1));
        Rational v = expected[i].eval(Rational(points[i]));
        c.expect(v.is_integer() && is_prime(v.num()), "value at " + std::to_string(points[i]) + " is not prime");
        MurtyCertificate m{BigInt(points[i]), v.num(), heights[i]};
        c.expect(verify_murty(expected[i], m), "Murty certificate of P" + std::to_string(i + 1));
        auto found = murty_certificate(expected[i]);
        c.expect(found && found->n == BigInt(points[i]), "first Murty point of P" + std::to_string(i + 1));
    }
    return c;
}

Check four_player_galois() {
    Check c;
    auto t0 = Clock::now();
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses{{2, 131}, {5, 131}, {17, 131}, {2, 131}};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& f = four_player_minimal_polys()[i];
        auto irr = certify_irreducible(f);
        c.expect(bool(irr), "P" + std::to_string(i + 1) + " irreducibility");
        if (!irr) continue;
        auto sn = sn_certificate(f, *irr, 100000);
        c.expect(sn && sn->transposition && sn->ncycle_minus1.pattern == CycleType{5, 1} &&
                     sn->transposition->pattern == CycleType{2, 1, 1, 1, 1} && verify_sn_certificate(f, *sn),
                 "S_6 certificate of P" + std::to_string(i + 1));
        if (sn && sn->transposition)
            c.expect(sn->ncycle_minus1.prime == witnesses[i].first && sn->transposition->prime == witnesses[i].second,
                     "witness primes of P" + std::to_string(i + 1));
    }
    auto r = solve_all_ne(make_g4());
    if (r.mixed_nes.size() == 1)
        for (std::size_t i = 0; i < 4; ++i) {
            auto x = with_irreducibility(r.mixed_nes[0].x[i]);
            c.expect(x && irradicality_verdict(*x).verdict == Radicality::Irradical, "x" + std::to_string(i + 1) + " verdict");
        }
    const UPoly quintic = upoly("x^5 - x - 1");
    auto q = sn_certificate(quintic, *certify_irreducible(quintic));
    c.expect(q && q->degree == 5 && verify_sn_certificate(quintic, *q), "S_5 certificate of x^5 - x - 1");
    const double dt = seconds_since(t0);
    c.expect(dt < 10.0, "took " + std::to_string(dt) + " s");
    return c;
}

Check five_player() {
    Check c;
    auto t0 = Clock::now();
    const std::size_t n = 5;
    VarNames v = indexed_vars(n);
    MonomialOrder lex = MonomialOrder::lex(n);
    std::vector<MPoly> F;
    for (auto& f : advantage_polys(make_g5())) F.push_back(f.with_order(lex));
    GroebnerBasis gb = groebner_basis(F, lex);
    auto lines = read_lines("g5_lex_basis.txt");
    c.expect(gb.generators.size() == lines.size(), std::to_string(gb.generators.size()) + " generators");
    for (const auto& l : lines) {
        MPoly e = MPoly::parse(l, v, lex);
        bool found = false;
        for (const auto& g : gb.generators) found = found || same_up_to_scalar(g, e);
        c.expect(found, "basis element " + e.to_string().substr(0, 40) + "... differs");
    }
    UPoly g1 = eliminate_to_univariate(F, 4);
    c.expect(g1.degree() == 26 && g1.leading() == Rational(25772032) && g1.coeff(0) == Rational(-67892),
             "univariate basis element shape");

    auto polys = minimal_polys_per_variable(make_g5());
    auto minimal = read_lines("g5_minimal_polys.txt");
    c.expect(polys.size() == 5 && minimal.size() == 5, "expected five eliminants");
    for (std::size_t i = 0; i < std::min(polys.size(), minimal.size()); ++i)
        c.expect(same_up_to_scalar(polys[i], upoly(minimal[i])), "eliminant of x" + std::to_string(i + 1));

    auto r = solve_all_ne(make_g5());
    c.expect(r.faces == 243, std::to_string(r.faces) + " faces");
    c.expect(r.uniqueness == Uniqueness::Unique && r.mixed_nes.size() == 1, "not a unique equilibrium");
    for (const auto& f : r.positive_dimensional_faces)
        c.expect(f.family != FamilyVerdict::Unresolved, "unresolved family " + support_code(f.support));
    if (r.mixed_nes.size() == 1) {
        auto got = approx_profile(r.mixed_nes[0].x, 10);
        const std::vector<std::string> printed{"0.3503704221", "0.6465164785", "0.6487118183", "0.3717487703", "0.3680616872"};
        c.expect(got == printed, "certified " + join(got));
    }
    const double dt = seconds_since(t0);
    c.expect(dt < 3600.0, "took " + std::to_string(dt) + " s");
    return c;
}

Check five_player_boundary() {
    Check c;
    const MPoly f1 = advantage_polys(make_g5())[0];
    const std::vector<std::string> printed[2] = {
        {"0.650518016106", "0.638238319763", "0.402794248582", "0.433321011106"},
        {"0.589697169563", "0.681923203912", "0.338247172171", "0.218624870529"},
    };
    for (int value : {0, 1}) {
        auto r = solve_all_ne(restrict(make_g5(), 0, value));
        const std::string tag = "x1 = " + std::to_string(value);
        c.expect(r.uniqueness == Uniqueness::Unique && r.mixed_nes.size() == 1, tag + ": not a unique equilibrium");
        if (r.mixed_nes.size() != 1) continue;
        auto got = approx_profile(r.mixed_nes[0].x, 12);
        c.expect(got == printed[value], tag + ": certified " + join(got) + " vs expected " + join(printed[value]));
        std::vector<Interval> box{Interval::point(Rational(value))};
        for (const auto& a : r.mixed_nes[0].x) {
            auto b = a.refined(Rational(BigInt(1), BigInt::pow(BigInt(10), 16)));
            box.push_back(Interval{b.interval().lo, b.interval().hi});
        }
        const int sign = eval_interval(f1, box).certain_sign();
        c.expect(value == 0 ? sign > 0 : sign < 0, tag + ": sign of f1");
    }
    return c;
}

Check composition() {
    Check c;
    auto g3 = solve_all_ne(make_g3());
    auto sq = solve_all_ne(product(make_g3(), make_g3()));
    c.expect(sq.faces == 729, std::to_string(sq.faces) + " faces in the product");
    c.expect(sq.uniqueness == Uniqueness::Unique && sq.mixed_nes.size() == 1 && sq.pure_nes.empty(),
             "product is not uniquely mixed");
    if (sq.mixed_nes.size() == 1)
        for (std::size_t i = 0; i < 6; ++i)
            c.expect(algebraic_equal(sq.mixed_nes[0].x[i], g3.mixed_nes[0].x[i % 3]), "product coordinate " + std::to_string(i + 1));

    auto h = solve_all_ne(circ_h3(make_g4()));
    c.expect(h.uniqueness == Uniqueness::Unique && h.mixed_nes.size() == 1, "gadget game is not unique");
    if (h.mixed_nes.size() == 1) {
        const auto& x = h.mixed_nes[0].x;
        for (std::size_t i : {4u, 5u})
            c.expect(same_up_to_scalar(x[i].defining(), four_player_minimal_polys()[3]) && x[i].interval() == x[3].interval(),
                     "gadget coordinate " + std::to_string(i + 1));
    }

    FactorCache factors;
    CertificateCache certs;
    const UPoly tail4 = four_player_minimal_polys()[3];
    const UPoly tail5 = upoly(read_lines("g5_minimal_polys.txt")[4]);
    for (std::size_t n = 6; n <= 11; ++n) {
        const std::string tag = "n = " + std::to_string(n);
        auto [game, recipe] = make_gn(n);
        c.expect(game.players() == n, tag + ": player count");
        auto r = compose_gn(n, factors, certs);
        c.expect(r.uniqueness == Uniqueness::Unique && r.coordinates.size() == n, tag + ": not unique");
        for (const auto& cr : r.coordinates) {
            const bool irradical = cr.certificate.verdict == Radicality::Irradical;
            const bool mirrored = cr.mirrors && r.coordinates[*cr.mirrors].certificate.verdict == Radicality::Irradical &&
                                  (same_up_to_scalar(cr.certificate.poly, tail4) || same_up_to_scalar(cr.certificate.poly, tail5));
            c.expect(irradical || mirrored, tag + ": coordinate " + std::to_string(cr.player + 1));
        }
        if (n % 4 == 2 || n % 4 == 3) {
            const UPoly& tail = n % 4 == 2 ? tail4 : tail5;
            for (std::size_t i = n - 3; i < n && i < r.coordinates.size(); ++i)
                c.expect(same_up_to_scalar(r.coordinates[i].certificate.poly, tail) && (i == n - 3 || r.coordinates[i].mirrors),
                         tag + ": gadget coordinate " + std::to_string(i + 1));
        }
    }
    return c;
}

Check properties() {
    Check c;
    std::mt19937_64 rng(20240);
    std::uniform_int_distribution<long> pay(0, 3);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::vector<Rational>> rows(8, std::vector<Rational>(3));
        for (auto& r : rows)
            for (auto& u : r) u = Rational(pay(rng));
        auto rep = solve_all_ne(Game(3, rows));
        std::size_t found = rep.equilibrium_count();
        for (const auto& f : rep.positive_dimensional_faces) found += f.family == FamilyVerdict::HasEquilibria;
        c.expect(found >= 1, "random game " + std::to_string(t) + " has no equilibrium");
        for (const auto& e : rep.mixed_nes)
            for (const auto& p : e.defining) c.expect(p.degree() <= 2, "random game " + std::to_string(t) + " degree " + std::to_string(p.degree()));
    }

    std::uniform_int_distribution<long> coef(-20, 20), deg(1, 8);
    for (int t = 0; t < 100; ++t) {
        const int d = static_cast<int>(deg(rng));
        std::vector<Rational> a(d + 1);
        for (auto& x : a) x = Rational(coef(rng));
        if (a[d].is_zero()) a[d] = Rational(1);
        UPoly f(a);
        Rational b = cauchy_bound(squarefree_part(f));
        c.expect(count_real_roots(f, -b, b) == oracle::root_count(f, -b, b), "root count of " + f.to_string());
    }

    std::uniform_int_distribution<long> small(-3, 3);
    std::uniform_int_distribution<unsigned> e(0, 2);
    VarNames v = indexed_vars(3);
    for (int t = 0; t < 50; ++t) {
        MonomialOrder ord = t % 2 ? MonomialOrder::lex(3) : MonomialOrder::grevlex(3);
        std::vector<MPoly> F;
        for (std::size_t i = 0, m = 2 + rng() % 2; i < m; ++i) {
            std::vector<Term> ts;
            for (std::size_t k = 0, nt = 2 + rng() % 3; k < nt; ++k) {
                Monomial mono;
                for (std::size_t j = 0; j < 3; ++j) mono.set(j, e(rng) * (rng() % 2));
                if (mono.degree() > 2) mono.set(rng() % 3, 0);
                ts.push_back({mono, Rational(small(rng))});
            }
            F.push_back(MPoly::from_terms(v, ord, ts));
        }
        auto a = buchberger(F, ord, {PairStrategy::Normal, true});
        auto b = buchberger(F, ord, {PairStrategy::Fifo, false});
        auto d = buchberger(F, ord, {PairStrategy::Lifo, true});
        c.expect(a.generators == b.generators && a.generators == d.generators, "schedule dependence in system " + std::to_string(t));
    }

    auto rep = solve_all_ne(make_g4());
    ProfileSampler sampler(rep);
    const double p = std::stod(approx_decimal(rep.mixed_nes.at(0).x[3], 17));
    BitSource src(2024);
    const int draws = 100000;
    int zeros = 0;
    for (int i = 0; i < draws; ++i) zeros += sampler.draw(src)[3] == 0;
    const double mean = zeros / double(draws), sigma = std::sqrt(p * (1 - p) / draws);
    c.expect(std::abs(mean - p) <= 4 * sigma, "sampled mean " + std::to_string(mean) + " vs " + std::to_string(p));
    return c;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "three-player equilibrium, closed forms and deviation table", three_player},
        {2, "four-player lex Groebner basis", four_player_basis},
        {3, "four-player equilibrium at 12 digits", four_player_digits},
        {4, "Sturm chain, evaluations and root isolation", sturm_appendix},
        {5, "four-player minimal polynomials and Murty witnesses", four_player_minimal},
        {6, "symmetric Galois groups and irradicality", four_player_galois},
        {7, "five-player basis, minimal polynomials and equilibrium", five_player},
        {8, "five-player boundary cases", five_player_boundary},
        {9, "products, mirror gadget and the n-player family", composition},
        {10, "random-game, root-count, schedule and sampler properties", properties},
    };
    std::set<int> pick;
    for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
    int failures = 0;
    for (const auto& cr : all) {
        if (!pick.empty() && !pick.count(cr.id)) continue;
        auto t0 = Clock::now();
        Check r;
        try {
            r = cr.run();
        } catch (const std::exception& e) {
            r.ok = false;
            r.notes.push_back(std::string("exception: ") + e.what());
        }
        failures += !r.ok;
        std::cout << (r.ok ? "PASS" : "FAIL") << ' ' << std::setw(2) << cr.id << "  " << cr.name << "  (" << std::fixed
                  << std::setprecision(2) << seconds_since(t0) << " s)";
        for (const auto& n : r.notes) std::cout << "\n        " << n;
        std::cout << std::endl;
    }
    return failures;
}
