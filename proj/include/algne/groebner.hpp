#pragma once

// Buchberger's algorithm with Gebauer-Moeller pair pruning, reduced bases,
// normal forms and shape-position extraction.

#include <algne/mpoly.hpp>

#include <algorithm>
#include <list>
#include <optional>
#include <variant>

namespace algne {

/// Reduced Groebner basis; generators are monic and sorted ascending by
/// leading monomial.
struct GroebnerBasis {
    VarNames vars;
    MonomialOrder order;
    std::vector<MPoly> generators;
    bool reduced = true;

    bool is_unit() const { return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero(); }
    std::vector<MPoly> integer_cleared() const {
        std::vector<MPoly> out;
        for (const auto& g : generators) out.push_back(g.integer_cleared());
        return out;
    }
    /// Every variable has a pure power among the leading monomials.
    bool is_zero_dimensional() const {
        if (is_unit()) return false;
        for (std::size_t v = 0; v < order.nvars(); ++v) {
            bool found = false;
            for (const auto& g : generators) {
                const Monomial& m = g.leading_monomial();
                if (m[v] > 0 && m.degree() == m[v]) { found = true; break; }
            }
            if (!found) return false;
        }
        return true;
    }
};

enum class PairStrategy {
    Normal,  ///< smallest lcm: total degree first, then the monomial order
    Fifo,    ///< creation order
    Lifo,    ///< newest pair first
};

struct BuchbergerOptions {
    PairStrategy strategy = PairStrategy::Normal;
    bool use_criteria = true;
};

namespace detail {

struct ITerm {
    Monomial m;
    mpz_class c;
};
using IPoly = std::vector<ITerm>;

inline void make_primitive(IPoly& f) {
    if (f.empty()) return;
    mpz_class g = 0;
    for (const auto& t : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    if (f.front().c < 0) g = -g;
    if (g != 1)
        for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

inline IPoly to_ipoly(const MPoly& p, const MonomialOrder& order) {
    MPoly q = p.order() == order ? p : p.with_order(order);
    mpz_class l = 1;
    for (const auto& t : q.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.raw().get_den_mpz_t());
    IPoly out;
    out.reserve(q.terms().size());
    for (const auto& t : q.terms()) out.push_back({t.mono, t.coef.raw().get_num() * (l / t.coef.raw().get_den())});
    make_primitive(out);
    return out;
}

inline MPoly from_ipoly(const IPoly& f, const VarNames& vars, const MonomialOrder& order) {
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f) ts.push_back({t.m, Rational(BigInt(t.c))});
    return MPoly::from_terms(vars, order, std::move(ts));
}

/// a*f[from..] - b*m*g, merged; f[0..from) is scaled by a and kept.
inline IPoly axpy(const IPoly& f, std::size_t from, const mpz_class& a, const mpz_class& b, const Monomial& m,
                  const IPoly& g, const MonomialOrder& ord) {
    IPoly r;
    r.reserve(f.size() + g.size());
    for (std::size_t i = 0; i < from; ++i) r.push_back({f[i].m, f[i].c * a});
    std::size_t i = from, j = 0;
    Monomial gm;
    bool have_gm = false;
    while (i < f.size() || j < g.size()) {
        if (j < g.size() && !have_gm) {
            gm = g[j].m * m;
            have_gm = true;
        }
        int c = i == f.size() ? -1 : j == g.size() ? 1 : ord.compare(f[i].m, gm);
        if (c > 0) {
            r.push_back({f[i].m, f[i].c * a});
            ++i;
        } else if (c < 0) {
            r.push_back({gm, -(g[j].c * b)});
            ++j;
            have_gm = false;
        } else {
            mpz_class s = f[i].c * a - g[j].c * b;
            if (s != 0) r.push_back({gm, std::move(s)});
            ++i;
            ++j;
            have_gm = false;
        }
    }
    return r;
}

/// Full reduction of f by `basis` (primitive integer result). With
/// tail = false only the leading term is driven out of the ideal's
/// leading-term set.
inline IPoly reduce(IPoly f, const std::vector<const IPoly*>& basis, const MonomialOrder& ord, bool tail = true) {
    std::size_t pos = 0;
    unsigned steps = 0;
    while (pos < f.size()) {
        const IPoly* red = nullptr;
        for (const IPoly* g : basis)
            if (!g->empty() && g->front().m.divides(f[pos].m)) { red = g; break; }
        if (!red) {
            if (!tail) break;
            ++pos;
            continue;
        }
        mpz_class gc;
        mpz_gcd(gc.get_mpz_t(), red->front().c.get_mpz_t(), f[pos].c.get_mpz_t());
        mpz_class a = red->front().c / gc, b = f[pos].c / gc;
        if (a < 0) { a = -a; b = -b; }
        Monomial m = f[pos].m / red->front().m;
        f = axpy(f, pos, a, b, m, *red, ord);
        if (++steps % 8 == 0) make_primitive(f);
    }
    make_primitive(f);
    return f;
}

inline IPoly spoly(const IPoly& f, const IPoly& g, const MonomialOrder& ord) {
    Monomial l = Monomial::lcm(f.front().m, g.front().m);
    mpz_class gc;
    mpz_gcd(gc.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    mpz_class a = g.front().c / gc, b = f.front().c / gc;
    // a * (l/lm f) * f - b * (l/lm g) * g
    IPoly fm;
    Monomial mf = l / f.front().m;
    fm.reserve(f.size());
    for (const auto& t : f) fm.push_back({t.m * mf, t.c});
    IPoly r = axpy(fm, 0, a, b, l / g.front().m, g, ord);
    make_primitive(r);
    return r;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::size_t serial;
};

class BuchbergerRun {
public:
    BuchbergerRun(const MonomialOrder& ord, BuchbergerOptions opt) : ord_(ord), opt_(opt) {}

    std::vector<IPoly> run(std::vector<IPoly> input) {
        std::sort(input.begin(), input.end(),
                  [this](const IPoly& a, const IPoly& b) { return ord_.compare(a.front().m, b.front().m) < 0; });
        for (auto& f : input) {
            std::vector<const IPoly*> cur = active_ptrs();
            IPoly h = reduce(std::move(f), cur, ord_);
            if (h.empty()) continue;
            if (h.front().m.is_one()) return {h};
            add(std::move(h));
        }
        while (!pairs_.empty()) {
            auto it = select();
            Pair p = *it;
            pairs_.erase(it);
            if (!active_[p.i] || !active_[p.j]) {
                // still needed for correctness: the pair was kept by the update
            }
            IPoly s = spoly(polys_[p.i], polys_[p.j], ord_);
            std::vector<const IPoly*> cur = active_ptrs();
            IPoly h = reduce(std::move(s), cur, ord_, false);
            if (h.empty()) continue;
            if (h.front().m.is_one()) return {h};
            add(std::move(h));
        }
        return finish();
    }

private:
    std::vector<const IPoly*> active_ptrs() const {
        std::vector<const IPoly*> out;
        for (std::size_t i = 0; i < polys_.size(); ++i)
            if (active_[i]) out.push_back(&polys_[i]);
        return out;
    }

    std::list<Pair>::iterator select() {
        if (opt_.strategy == PairStrategy::Fifo) {
            return std::min_element(pairs_.begin(), pairs_.end(),
                                    [](const Pair& a, const Pair& b) { return a.serial < b.serial; });
        }
        if (opt_.strategy == PairStrategy::Lifo) {
            return std::max_element(pairs_.begin(), pairs_.end(),
                                    [](const Pair& a, const Pair& b) { return a.serial < b.serial; });
        }
        return std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
            if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
            int c = ord_.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return a.serial < b.serial;
        });
    }

    // Gebauer-Moeller update when inserting h.
    void add(IPoly h) {
        std::size_t t = polys_.size();
        const Monomial lh = h.front().m;
        polys_.push_back(std::move(h));
        active_.push_back(true);
        if (!opt_.use_criteria) {
            for (std::size_t i = 0; i < t; ++i)
                if (active_[i]) pairs_.push_back({i, t, Monomial::lcm(polys_[i].front().m, lh), serial_++});
            return;
        }
        std::vector<Pair> c;
        for (std::size_t i = 0; i < t; ++i)
            if (active_[i]) c.push_back({i, t, Monomial::lcm(polys_[i].front().m, lh), 0});
        std::vector<Pair> d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Pair& p = c[k];
            bool coprime = Monomial::coprime(polys_[p.i].front().m, lh);
            bool keep = true;
            if (!coprime) {
                for (std::size_t q = 0; q < c.size() && keep; ++q)
                    if (q > k && c[q].lcm.divides(p.lcm)) keep = false;
                for (const auto& q : d)
                    if (keep && q.lcm.divides(p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }
        std::vector<Pair> e;
        for (const auto& p : d)
            if (!Monomial::coprime(polys_[p.i].front().m, lh)) e.push_back(p);
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Monomial& l = it->lcm;
            Monomial l1 = Monomial::lcm(polys_[it->i].front().m, lh);
            Monomial l2 = Monomial::lcm(polys_[it->j].front().m, lh);
            if (lh.divides(l) && !(l1 == l) && !(l2 == l)) it = pairs_.erase(it);
            else ++it;
        }
        for (auto& p : e) {
            p.serial = serial_++;
            pairs_.push_back(p);
        }
        for (std::size_t i = 0; i < t; ++i)
            if (active_[i] && lh.divides(polys_[i].front().m)) active_[i] = false;
    }

    std::vector<IPoly> finish() {
        std::vector<IPoly> g;
        for (std::size_t i = 0; i < polys_.size(); ++i)
            if (active_[i]) g.push_back(polys_[i]);
        // minimal basis: drop generators whose leading monomial is divisible by another's
        std::vector<IPoly> min;
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool drop = false;
            for (std::size_t j = 0; j < g.size() && !drop; ++j) {
                if (i == j) continue;
                if (g[j].front().m.divides(g[i].front().m) && (!(g[j].front().m == g[i].front().m) || j < i))
                    drop = true;
            }
            if (!drop) min.push_back(g[i]);
        }
        std::sort(min.begin(), min.end(),
                  [this](const IPoly& a, const IPoly& b) { return ord_.compare(a.front().m, b.front().m) < 0; });
        // interreduce
        for (std::size_t i = 0; i < min.size(); ++i) {
            std::vector<const IPoly*> others;
            for (std::size_t j = 0; j < min.size(); ++j)
                if (j != i) others.push_back(&min[j]);
            IPoly head{min[i].front()};
            IPoly tail(min[i].begin() + 1, min[i].end());
            tail = reduce_tail_keep_scale(std::move(head), std::move(tail), others);
            min[i] = std::move(tail);
        }
        return min;
    }

    // Reduces the tail of head+tail by `others`, keeping the leading term.
    IPoly reduce_tail_keep_scale(IPoly head, IPoly tail, const std::vector<const IPoly*>& others) {
        IPoly f = std::move(head);
        f.insert(f.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
        std::size_t pos = 1;
        unsigned steps = 0;
        while (pos < f.size()) {
            const IPoly* red = nullptr;
            for (const IPoly* g : others)
                if (g->front().m.divides(f[pos].m)) { red = g; break; }
            if (!red) { ++pos; continue; }
            mpz_class gc;
            mpz_gcd(gc.get_mpz_t(), red->front().c.get_mpz_t(), f[pos].c.get_mpz_t());
            mpz_class a = red->front().c / gc, b = f[pos].c / gc;
            if (a < 0) { a = -a; b = -b; }
            Monomial m = f[pos].m / red->front().m;
            f = axpy(f, pos, a, b, m, *red, ord_);
            if (++steps % 8 == 0) make_primitive(f);
        }
        make_primitive(f);
        return f;
    }

    const MonomialOrder& ord_;
    BuchbergerOptions opt_;
    std::vector<IPoly> polys_;
    std::vector<bool> active_;
    std::list<Pair> pairs_;
    std::size_t serial_ = 0;
};

inline void check_ring(const std::vector<MPoly>& F, const MonomialOrder& order) {
    for (const auto& f : F)
        if (!f.is_zero() && f.nvars() != order.nvars()) throw DomainError("generator variable count differs from order");
}

}  // namespace detail

/// Reduced Groebner basis of <F>. Zero generators are dropped; the unit
/// ideal yields {1}; the zero ideal yields an empty basis.
inline GroebnerBasis buchberger(const std::vector<MPoly>& F, const MonomialOrder& order,
                                BuchbergerOptions options = {}) {
    detail::check_ring(F, order);
    VarNames vars;
    std::vector<detail::IPoly> in;
    for (const auto& f : F) {
        if (!vars && f.vars()) vars = f.vars();
        if (f.is_zero()) continue;
        in.push_back(detail::to_ipoly(f, order));
    }
    GroebnerBasis gb{vars, order, {}, true};
    if (in.empty()) return gb;
    detail::BuchbergerRun run(order, options);
    for (auto& g : run.run(std::move(in))) gb.generators.push_back(detail::from_ipoly(g, vars, order).monic());
    return gb;
}

/// Remainder of multivariate division of f by the basis generators (exact
/// over the rationals; zero iff f is in the ideal when the basis is a
/// Groebner basis).
inline MPoly normal_form(const MPoly& f, const GroebnerBasis& basis) {
    if (f.is_zero()) return f;
    if (f.nvars() != basis.order.nvars()) throw DomainError("normal_form: variable-set mismatch");
    if (basis.vars && f.vars() && *f.vars() != *basis.vars) throw DomainError("normal_form: variable-set mismatch");
    MPoly p = f.order() == basis.order ? f : f.with_order(basis.order);
    MPoly r(p.vars(), basis.order);
    std::vector<Term> rem;
    while (!p.is_zero()) {
        const Term lt = p.terms().front();
        const MPoly* red = nullptr;
        for (const auto& g : basis.generators)
            if (g.leading_monomial().divides(lt.mono)) { red = &g; break; }
        if (red) {
            p = p - red->mul_term(lt.mono / red->leading_monomial(), lt.coef / red->leading_coeff());
        } else {
            rem.push_back(lt);
            std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
            p = MPoly::from_terms(p.vars(), basis.order, std::move(rest));
        }
    }
    return MPoly::from_terms(f.vars(), basis.order, std::move(rem));
}

/// lcm-cancellation combination of f and g with leading terms eliminated.
inline MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial of the zero polynomial");
    MPoly a = f.with_order(order), b = g.with_order(order);
    Monomial l = Monomial::lcm(a.leading_monomial(), b.leading_monomial());
    return a.mul_term(l / a.leading_monomial(), a.leading_coeff().inverse()) -
           b.mul_term(l / b.leading_monomial(), b.leading_coeff().inverse());
}

/// a * x_var + h(x_last) = 0
struct LinearRule {
    std::size_t var;
    Rational a;
    UPoly h;

    /// x_var = -h(t) / a
    UPoly solved() const { return (-a.inverse()) * h; }
};

/// One univariate generator in the last variable plus one linear rule per
/// other variable.
struct ShapePosition {
    std::size_t last_var;
    UPoly univariate;
    std::vector<LinearRule> rules;
};

struct NotInShape {
    std::string reason;
};

/// Reads a reduced lex basis as shape position, using the integer-cleared
/// generators (so a_j are the integer leading coefficients).
inline std::variant<ShapePosition, NotInShape> shape_extract(const GroebnerBasis& basis) {
    if (basis.order.kind != MonomialOrder::Kind::Lex) return NotInShape{"basis is not lexicographic"};
    if (basis.generators.empty()) return NotInShape{"zero ideal"};
    if (basis.is_unit()) return NotInShape{"unit ideal"};
    const std::size_t last = basis.order.last();
    ShapePosition sp{last, {}, {}};
    bool have_uni = false;
    std::vector<bool> seen(basis.order.nvars(), false);
    for (const auto& g0 : basis.generators) {
        MPoly g = g0.integer_cleared();
        if (g.is_univariate_in(last)) {
            if (have_uni) return NotInShape{"two univariate generators"};
            sp.univariate = g.to_upoly(last);
            have_uni = true;
            continue;
        }
        std::size_t lead_var = kMaxVars;
        for (std::size_t v = 0; v < g.nvars(); ++v)
            if (v != last && g.leading_monomial()[v] > 0) lead_var = v;
        if (lead_var == kMaxVars || g.leading_monomial().degree() != 1)
            return NotInShape{"generator " + g.to_string() + " is not linear in a single variable"};
        Rational a;
        std::vector<Rational> h;
        for (const auto& t : g.terms()) {
            if (t.mono[lead_var] == 1 && t.mono.degree() == 1) {
                a = t.coef;
            } else if (t.mono.degree() == t.mono[last]) {
                if (h.size() <= t.mono[last]) h.resize(t.mono[last] + 1);
                h[t.mono[last]] = t.coef;
            } else {
                return NotInShape{"generator " + g.to_string() + " has a mixed tail"};
            }
        }
        if (seen[lead_var]) return NotInShape{"two rules for one variable"};
        seen[lead_var] = true;
        sp.rules.push_back({lead_var, a, UPoly(std::move(h))});
    }
    if (!have_uni) return NotInShape{"no univariate generator in the last variable"};
    for (std::size_t v = 0; v < basis.order.nvars(); ++v)
        if (v != last && !seen[v]) return NotInShape{"variable without a linear rule"};
    std::sort(sp.rules.begin(), sp.rules.end(), [](const LinearRule& x, const LinearRule& y) { return x.var < y.var; });
    return sp;
}

}  // namespace algne
