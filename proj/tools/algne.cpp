#include <algne/certified.hpp>
#include <algne/sampler.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>

using namespace algne;
using nlohmann::ordered_json;

namespace {

struct Common {
    std::string format = "text";
    unsigned digits = 12;
    std::uint64_t seed = 1;
    std::uint64_t prime_bound = 100000;
    unsigned refine_budget = 256;

    bool json() const { return format == "json"; }
    SolveOptions solve() const {
        SolveOptions o;
        o.refine_budget = refine_budget;
        o.seed = seed;
        return o;
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--digits", c.digits, "decimal digits");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--prime-bound", c.prime_bound, "largest prime scanned for certificates");
    sub->add_option("--refine-budget", c.refine_budget, "interval refinements before giving up");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// A file's contents with '#' comments removed, or the argument itself.
std::string text_or_file(const std::string& arg) {
    if (!std::filesystem::is_regular_file(arg)) return arg;
    std::istringstream in(slurp(arg));
    std::string line, out;
    while (std::getline(in, line)) out += line.substr(0, line.find('#')) + '\n';
    return out;
}

UPoly read_upoly(const std::string& arg, std::string* var = nullptr) {
    std::string t = text_or_file(arg);
    std::replace(t.begin(), t.end(), '\n', ' ');
    return UPoly::parse(t, var);
}

/// G3, G4, G5, H3, G<n>, G4oH3, G5oH3, A*B products, or a game file.
Game load_game(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        std::string t = slurp(arg);
        auto first = t.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && t[first] == '{') return Game::from_json(ordered_json::parse(t));
        return Game::parse_text(t);
    }
    if (auto star = arg.find('*'); star != std::string::npos)
        return product(load_game(arg.substr(0, star)), load_game(arg.substr(star + 1)));
    if (arg == "G4oH3") return circ_h3(make_g4());
    if (arg == "G5oH3") return circ_h3(make_g5());
    static const std::regex gn("G([0-9]+)");
    std::smatch m;
    if (std::regex_match(arg, m, gn)) {
        const std::size_t n = std::stoul(m[1]);
        if (n <= 5) return make_named(arg);
        return make_gn(n).first;
    }
    return make_named(arg);
}

/// "p/q" or "POLY@lo:hi" for the unique root of POLY in (lo, hi].
AlgebraicNumber parse_point(const std::string& s) {
    auto at = s.find('@');
    if (at == std::string::npos) return AlgebraicNumber::from_rational(Rational::parse(s));
    auto colon = s.find(':', at);
    if (colon == std::string::npos) throw ParseError("expected POLY@lo:hi, got '" + s + "'");
    UPoly f = UPoly::parse(s.substr(0, at));
    return AlgebraicNumber(f, {Rational::parse(s.substr(at + 1, colon - at - 1)), Rational::parse(s.substr(colon + 1))});
}

std::string profile_string(const Profile& a) {
    std::string s;
    for (int x : a) s += std::to_string(x);
    return s;
}

std::string players_string(const std::set<std::size_t>& ps) {
    std::string s;
    for (auto i : ps) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return s.empty() ? "-" : s;
}

ordered_json coordinate_json(const AlgebraicNumber& x, unsigned digits) {
    ordered_json j;
    j["decimal"] = approx_decimal(x, digits);
    if (auto q = x.as_rational()) {
        j["exact"] = q->to_string();
        return j;
    }
    j["poly"] = x.defining().integer_cleared().to_string("y");
    j["interval"] = {x.interval().lo.to_string(), x.interval().hi.to_string()};
    if (x.degree() <= 2) j["closed_form"] = radical_form_deg2(x).to_string();
    return j;
}

ordered_json certificate_json(const PolyCertificate& c) {
    ordered_json j;
    j["irreducible"] = c.irreducibility ? c.irreducibility->describe() : "unknown";
    if (c.sn) {
        j["galois"] = "S_" + std::to_string(c.sn->degree);
        j["method"] = method_name(c.sn->method);
        ordered_json w = ordered_json::array();
        for (const auto& p : c.sn->witnesses()) w.push_back({{"prime", p.prime}, {"pattern", p.pattern}});
        j["witnesses"] = w;
    } else {
        j["galois"] = "unknown";
    }
    j["verdict"] = radicality_name(c.verdict);
    return j;
}

void print_coordinate(std::ostream& os, const std::string& label, const ordered_json& c) {
    os << "  " << label << " = " << c["decimal"].get<std::string>();
    if (c.contains("exact")) {
        os << "  (exact " << c["exact"].get<std::string>() << ")\n";
        return;
    }
    os << "  root of " << c["poly"].get<std::string>() << " in (" << c["interval"][0].get<std::string>() << ", "
       << c["interval"][1].get<std::string>() << "]\n";
    if (c.contains("closed_form")) os << "      closed form " << c["closed_form"].get<std::string>() << '\n';
    if (c.contains("certificate")) {
        const auto& k = c["certificate"];
        os << "      irreducible: " << k["irreducible"].get<std::string>() << "; galois: " << k["galois"].get<std::string>();
        if (k.contains("witnesses"))
            for (const auto& w : k["witnesses"]) {
                CycleType ct = w["pattern"].get<CycleType>();
                os << " p=" << w["prime"].get<std::uint64_t>() << cycle_type_string(ct);
            }
        os << "; verdict: " << k["verdict"].get<std::string>() << '\n';
    }
    if (c.contains("mirrors")) os << "      same value as x" << c["mirrors"].get<std::size_t>() << '\n';
}

void emit(const ordered_json& j, const Common& c, const std::function<void(std::ostream&)>& text) {
    if (c.json()) std::cout << j.dump(2) << '\n';
    else text(std::cout);
}

int run_emit(const std::string& game, const Common& c) {
    Game g = load_game(game);
    if (c.json()) std::cout << ordered_json(g.to_json()).dump(2) << '\n';
    else std::cout << g.to_text();
    return 0;
}

int run_pure(const std::string& game, const Common& c) {
    Game g = load_game(game);
    auto r = pure_ne(g);
    ordered_json j;
    j["players"] = g.players();
    ordered_json table = ordered_json::array();
    for (std::size_t k = 0; k < g.profiles(); ++k) {
        std::vector<std::size_t> dev;
        for (auto i : r.table.unsatisfied[k]) dev.push_back(i + 1);
        table.push_back({{"profile", profile_string(g.profile(k))}, {"deviators", dev}});
    }
    j["deviations"] = table;
    ordered_json eq = ordered_json::array();
    for (const auto& p : r.equilibria) eq.push_back(profile_string(p));
    j["pure_equilibria"] = eq;
    emit(j, c, [&](std::ostream& os) {
        os << "profile  deviators\n";
        for (std::size_t k = 0; k < g.profiles(); ++k)
            os << profile_string(g.profile(k)) << std::string(g.players() < 8 ? 9 - g.players() : 1, ' ')
               << players_string(r.table.unsatisfied[k]) << '\n';
        os << "pure equilibria: ";
        if (r.equilibria.empty()) os << "none";
        for (std::size_t i = 0; i < r.equilibria.size(); ++i) os << (i ? " " : "") << profile_string(r.equilibria[i]);
        os << '\n';
    });
    return 0;
}

int run_solve(const std::string& game, bool certify_coords, bool expect_unique, const Common& c) {
    Game g = load_game(game);
    auto rep = solve_all_ne(g, c.solve());
    CertificateCache certs(c.prime_bound);
    ordered_json j;
    j["players"] = rep.players;
    j["faces"] = rep.faces;
    ordered_json pures = ordered_json::array();
    for (const auto& p : rep.pure_nes) pures.push_back(profile_string(p));
    j["pure_equilibria"] = pures;
    ordered_json mixed = ordered_json::array();
    for (const auto& e : rep.mixed_nes) {
        ordered_json m;
        m["support"] = support_code(e.support);
        ordered_json xs = ordered_json::array();
        std::vector<CoordinateReport> cert;
        if (certify_coords) cert = certify_profile(e.x, certs);
        for (std::size_t i = 0; i < e.x.size(); ++i) {
            auto cj = coordinate_json(e.x[i], c.digits);
            if (certify_coords && !e.x[i].as_rational()) {
                cj["certificate"] = certificate_json(cert[i].certificate);
                if (cert[i].mirrors) cj["mirrors"] = *cert[i].mirrors + 1;
            }
            xs.push_back(cj);
        }
        m["x"] = xs;
        mixed.push_back(m);
    }
    j["mixed_equilibria"] = mixed;
    ordered_json fams = ordered_json::array();
    for (const auto& f : rep.positive_dimensional_faces) {
        ordered_json fj;
        fj["support"] = support_code(f.support);
        fj["verdict"] = verdict_name(f.family);
        if (f.witness) {
            ordered_json w = ordered_json::array();
            for (const auto& x : f.witness->x) w.push_back(approx_decimal(x, c.digits));
            fj["witness"] = w;
        }
        fams.push_back(fj);
    }
    j["positive_dimensional_faces"] = fams;
    j["rejected_faces"] = rep.rejections.size();
    j["uniqueness"] = uniqueness_name(rep.uniqueness);

    emit(j, c, [&](std::ostream& os) {
        os << "players: " << rep.players << "\nfaces: " << rep.faces << "\npure equilibria: ";
        if (rep.pure_nes.empty()) os << "none";
        for (std::size_t i = 0; i < rep.pure_nes.size(); ++i) os << (i ? " " : "") << profile_string(rep.pure_nes[i]);
        os << '\n';
        for (std::size_t k = 0; k < mixed.size(); ++k) {
            os << "equilibrium " << k + 1 << " (support " << mixed[k]["support"].get<std::string>() << ")\n";
            for (std::size_t i = 0; i < mixed[k]["x"].size(); ++i) print_coordinate(os, "x" + std::to_string(i + 1), mixed[k]["x"][i]);
        }
        os << "positive-dimensional faces: " << fams.size() << '\n';
        for (const auto& f : fams) {
            if (f["verdict"] == "no-equilibrium") continue;
            os << "family " << f["support"].get<std::string>() << ": " << f["verdict"].get<std::string>();
            if (f.contains("witness")) {
                os << ", e.g.";
                for (const auto& w : f["witness"]) os << ' ' << w.get<std::string>();
            }
            os << '\n';
        }
        os << "rejected faces: " << rep.rejections.size() << "\nuniqueness: " << uniqueness_name(rep.uniqueness) << '\n';
    });
    if (rep.uniqueness == Uniqueness::Unresolved) return 1;
    if (expect_unique && rep.uniqueness != Uniqueness::Unique) return 1;
    return 0;
}

int run_verify(const std::string& game, const std::vector<std::string>& at, const Common& c) {
    Game g = load_game(game);
    if (at.size() != g.players())
        throw DomainError("--at needs " + std::to_string(g.players()) + " coordinates, got " + std::to_string(at.size()));
    MixedProfile x;
    for (const auto& s : at) x.push_back(parse_point(s));
    auto check = verify_ne(g, x, c.refine_budget);
    const char* v = check.verdict == NeVerdict::Equilibrium      ? "equilibrium"
                    : check.verdict == NeVerdict::NotEquilibrium ? "not an equilibrium"
                                                                 : "undetermined";
    ordered_json j{{"verdict", v}, {"explanation", check.explanation}};
    emit(j, c, [&](std::ostream& os) { os << v << ": " << check.explanation << '\n'; });
    return check.verdict == NeVerdict::Equilibrium ? 0 : 1;
}

int run_certify(const std::string& poly, const Common& c) {
    UPoly f = read_upoly(poly);
    auto cert = certify(f, c.prime_bound);
    ordered_json j;
    j["poly"] = cert.poly.to_string("y");
    if (cert.irreducibility && cert.irreducibility->murty) {
        const auto& m = *cert.irreducibility->murty;
        j["murty"] = {{"n", m.n.to_string()}, {"value", m.value.to_string()}, {"H", m.H.to_string()}};
    }
    j.update(certificate_json(cert));
    emit(j, c, [&](std::ostream& os) { os << cert.to_text(); });
    return cert.verdict == Radicality::Unknown ? 1 : 0;
}

int run_sturm(const std::string& poly, const std::vector<std::string>& at, const Common& c) {
    std::string var;
    UPoly f = read_upoly(poly, &var);
    SturmChain chain(f);
    std::vector<Rational> pts;
    for (const auto& s : at) pts.push_back(Rational::parse(s));
    ordered_json j;
    ordered_json ps = ordered_json::array();
    for (const auto& p : chain.polys()) ps.push_back(p.to_string(var));
    j["chain"] = ps;
    ordered_json evals = ordered_json::array();
    std::vector<unsigned> vs;
    for (const auto& a : pts) {
        ordered_json e;
        e["at"] = a.to_string();
        ordered_json vals = ordered_json::array();
        for (const auto& p : chain.polys()) vals.push_back(p.eval(a).to_string());
        e["values"] = vals;
        vs.push_back(sign_changes_at(chain, ExtRational(a)));
        e["V"] = vs.back();
        evals.push_back(e);
    }
    j["evaluations"] = evals;
    j["real_roots"] = chain_count(chain, ExtRational::neg_inf(), ExtRational::pos_inf());
    ordered_json between = ordered_json::array();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        between.push_back({{"lo", pts[i].to_string()}, {"hi", pts[i + 1].to_string()}, {"roots", int(vs[i]) - int(vs[i + 1])}});
    j["roots_between"] = between;
    ordered_json roots = ordered_json::array();
    for (const auto& r : real_roots(f)) {
        auto rr = r.refined(Rational(BigInt(1), BigInt::pow(BigInt(10), c.digits)));
        roots.push_back({{"interval", {rr.interval().lo.to_string(), rr.interval().hi.to_string()}},
                         {"decimal", approx_decimal(r, c.digits)}});
    }
    j["roots"] = roots;
    emit(j, c, [&](std::ostream& os) {
        for (std::size_t i = 0; i < ps.size(); ++i) os << "p" << i << " = " << ps[i].get<std::string>() << '\n';
        for (const auto& e : evals) {
            os << "at " << e["at"].get<std::string>() << ": V = " << e["V"].get<unsigned>() << '\n';
            for (std::size_t i = 0; i < e["values"].size(); ++i)
                os << "  p" << i << " = " << e["values"][i].get<std::string>() << '\n';
        }
        os << "real roots: " << j["real_roots"].get<unsigned>() << '\n';
        for (const auto& b : between)
            os << "roots in (" << b["lo"].get<std::string>() << ", " << b["hi"].get<std::string>() << "]: " << b["roots"].get<int>() << '\n';
        for (const auto& r : roots)
            os << "root " << r["decimal"].get<std::string>() << " in (" << r["interval"][0].get<std::string>() << ", "
               << r["interval"][1].get<std::string>() << "]\n";
    });
    return 0;
}

std::vector<std::string> identifiers(const std::string& text) {
    static const std::regex id("[A-Za-z_][A-Za-z0-9_]*");
    std::vector<std::string> out;
    for (std::sregex_iterator it(text.begin(), text.end(), id), end; it != end; ++it)
        if (std::find(out.begin(), out.end(), it->str()) == out.end()) out.push_back(it->str());
    return out;
}

int run_groebner(const std::string& input, const std::string& order_name, std::string vars_csv, bool buchberger_only,
                 const Common& c) {
    std::vector<MPoly> F;
    VarNames vars;
    bool from_game = false;
    try {
        if (!std::filesystem::is_regular_file(input)) {
            F = advantage_polys(load_game(input));
            from_game = true;
        }
    } catch (const DomainError&) {
    }
    if (from_game) {
        vars = F.front().vars();
    } else {
        std::string text = text_or_file(input);
        std::vector<std::string> lines;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line, text.find('\n') == std::string::npos ? ';' : '\n'))
            if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
        std::vector<std::string> names;
        if (vars_csv.empty()) {
            names = identifiers(text);
        } else {
            std::istringstream vs(vars_csv);
            while (std::getline(vs, line, ',')) names.push_back(line);
        }
        vars = make_vars(names);
        for (const auto& l : lines) F.push_back(MPoly::parse(l, vars));
    }
    const std::size_t n = vars->size();
    MonomialOrder ord = order_name == "lex" ? MonomialOrder::lex(n) : MonomialOrder::grevlex(n);
    for (auto& f : F) f = f.with_order(ord);
    GroebnerBasis gb = buchberger_only ? buchberger(F, ord) : groebner_basis(F, ord);
    ordered_json j;
    j["order"] = ord.to_string(*vars);
    ordered_json gens = ordered_json::array();
    for (const auto& p : gb.integer_cleared()) gens.push_back(p.to_string());
    j["basis"] = gens;
    j["zero_dimensional"] = gb.is_zero_dimensional();
    emit(j, c, [&](std::ostream& os) {
        os << "order: " << j["order"].get<std::string>() << '\n';
        for (std::size_t i = 0; i < gens.size(); ++i) os << "g" << i + 1 << " = " << gens[i].get<std::string>() << '\n';
        os << "zero-dimensional: " << (gb.is_zero_dimensional() ? "yes" : "no") << '\n';
    });
    return 0;
}

int run_gn(std::size_t n, bool table, const Common& c) {
    if (table) {
        Game g = make_gn(n).first;
        if (c.json()) std::cout << ordered_json(g.to_json()).dump(2) << '\n';
        else std::cout << g.to_text();
        return 0;
    }
    FactorCache factors(c.solve());
    CertificateCache certs(c.prime_bound);
    auto r = compose_gn(n, factors, certs);
    ordered_json j;
    j["n"] = n;
    j["recipe"] = r.recipe.describe();
    j["uniqueness"] = uniqueness_name(r.uniqueness);
    j["exhaustive"] = r.exhaustive;
    ordered_json xs = ordered_json::array();
    bool all_irradical = true;
    for (const auto& cr : r.coordinates) {
        auto cj = coordinate_json(cr.x, c.digits);
        cj["certificate"] = certificate_json(cr.certificate);
        if (cr.mirrors) cj["mirrors"] = *cr.mirrors + 1;
        all_irradical = all_irradical && cr.certificate.verdict == Radicality::Irradical;
        xs.push_back(cj);
    }
    j["x"] = xs;
    j["all_irradical"] = all_irradical && !r.coordinates.empty();
    emit(j, c, [&](std::ostream& os) {
        os << "G_" << n << " = " << r.recipe.describe() << '\n';
        os << "uniqueness: " << uniqueness_name(r.uniqueness) << (r.exhaustive ? "" : " (from the factors)") << '\n';
        for (std::size_t i = 0; i < xs.size(); ++i) print_coordinate(os, "x" + std::to_string(i + 1), xs[i]);
        os << "all coordinates irradical: " << (j["all_irradical"].get<bool>() ? "yes" : "no") << '\n';
    });
    if (r.uniqueness != Uniqueness::Unique) return 1;
    return n == 3 || j["all_irradical"].get<bool>() ? 0 : 1;
}

int run_sample(const std::string& game, std::size_t draws, const Common& c) {
    auto rep = solve_all_ne(load_game(game), c.solve());
    ProfileSampler sampler(rep);
    BitSource src(c.seed);
    std::size_t bits = 0;
    std::vector<std::size_t> zeros(rep.players);
    ordered_json out = ordered_json::array();
    for (std::size_t d = 0; d < draws; ++d) {
        auto a = sampler.draw(src, &bits);
        for (std::size_t i = 0; i < a.size(); ++i) zeros[i] += a[i] == 0;
        out.push_back(profile_string(a));
    }
    auto profile = rep.profiles().front();
    ordered_json j;
    j["seed"] = c.seed;
    j["draws"] = out;
    ordered_json freq = ordered_json::array(), probs = ordered_json::array();
    for (std::size_t i = 0; i < rep.players; ++i) {
        freq.push_back(draws ? double(zeros[i]) / double(draws) : 0.0);
        probs.push_back(approx_decimal(profile[i], c.digits));
    }
    j["p_action0"] = probs;
    j["frequency_action0"] = freq;
    j["bits"] = bits;
    emit(j, c, [&](std::ostream& os) {
        for (const auto& d : out) os << d.get<std::string>() << '\n';
        for (std::size_t i = 0; i < rep.players; ++i)
            os << "x" << i + 1 << ": p = " << probs[i].get<std::string>() << ", frequency " << freq[i].get<double>() << '\n';
        os << "bits used: " << bits << '\n';
    });
    return 0;
}

std::string error_kind(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    if (dynamic_cast<const DivisionByZero*>(&e)) return "division-by-zero";
    if (dynamic_cast<const PositiveDimensional*>(&e)) return "positive-dimensional";
    if (dynamic_cast<const BadPrime*>(&e)) return "bad-prime";
    if (dynamic_cast<const Unsupported*>(&e)) return "unsupported";
    return "error";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Nash equilibria of binary-action games"};
    app.require_subcommand(1, 1);
    Common c;
    std::string game, poly, order = "lex", vars;
    std::vector<std::string> at;
    bool certify_coords = false, expect_unique = false, buchberger_only = false, table = false;
    std::size_t n = 0, draws = 10;

    auto* e = app.add_subcommand("emit", "print a game's payoff table");
    e->add_option("game", game, "G3, G4, G5, H3, G<n>, G4oH3, G5oH3, A*B or a game file")->required();
    auto* p = app.add_subcommand("pure-ne", "deviation table and pure equilibria");
    p->add_option("game", game)->required();
    auto* s = app.add_subcommand("solve", "all equilibria over every support");
    s->add_option("game", game)->required();
    s->add_flag("--certify", certify_coords, "attach irreducibility and Galois certificates");
    s->add_flag("--expect-unique", expect_unique, "exit 1 unless the equilibrium is unique");
    auto* v = app.add_subcommand("verify", "check a profile; coordinates are p/q or POLY@lo:hi");
    v->add_option("game", game)->required();
    v->add_option("--at", at, "one coordinate per player")->required();
    auto* ce = app.add_subcommand("certify", "irreducibility, Galois group and radicality of a polynomial");
    ce->add_option("poly", poly, "polynomial text or file")->required();
    auto* st = app.add_subcommand("sturm", "Sturm chain, sign changes and root counts");
    st->add_option("poly", poly)->required();
    st->add_option("--at", at, "evaluation points");
    auto* gr = app.add_subcommand("groebner", "reduced Groebner basis");
    gr->add_option("input", poly, "game name, or polynomials one per line (or ';'-separated)")->required();
    gr->add_option("--order", order)->check(CLI::IsMember({"lex", "grevlex"}));
    gr->add_option("--vars", vars, "comma-separated variables, greatest first");
    gr->add_flag("--buchberger", buchberger_only, "run Buchberger directly in the target order");
    auto* gn = app.add_subcommand("gn", "the n-player construction and its equilibrium");
    gn->add_option("n", n)->required()->check(CLI::Range(3, 64));
    gn->add_flag("--table", table, "print the payoff table instead");
    auto* sa = app.add_subcommand("sample", "draw profiles from the unique equilibrium");
    sa->add_option("game", game)->required();
    sa->add_option("--draws", draws);
    for (auto* sub : {e, p, s, v, ce, st, gr, gn, sa}) add_common(sub, c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*e) return run_emit(game, c);
        if (*p) return run_pure(game, c);
        if (*s) return run_solve(game, certify_coords, expect_unique, c);
        if (*v) return run_verify(game, at, c);
        if (*ce) return run_certify(poly, c);
        if (*st) return run_sturm(poly, at, c);
        if (*gr) return run_groebner(poly, order, vars, buchberger_only, c);
        if (*gn) return run_gn(n, table, c);
        if (*sa) return run_sample(game, draws, c);
    } catch (const Error& err) {
        if (c.json())
            std::cout << ordered_json{{"error", {{"kind", error_kind(err)}, {"message", err.what()}}}}.dump(2) << '\n';
        else
            std::cerr << "error (" << error_kind(err) << "): " << err.what() << '\n';
        return 2;
    }
    return 2;
}
