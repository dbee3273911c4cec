#pragma once

// Zero-dimensional ideals: quotient-ring linear algebra, eliminants as
// Krylov minimal polynomials, FGLM order change and real solving through a
// separating linear form.

#include <algne/algebraic.hpp>
#include <algne/groebner.hpp>
#include <algne/interval.hpp>

#include <map>
#include <optional>

namespace algne {

using Vec = std::vector<Rational>;

/// Incremental Gaussian elimination that expresses each new vector in terms
/// of the previously accepted ones when it is dependent.
class LinearSpan {
public:
    explicit LinearSpan(std::size_t dim) : dim_(dim) {}

    std::size_t size() const { return rows_.size(); }

    /// Coefficients c with v = sum c_k * accepted_k, or nullopt after
    /// accepting v as a new independent vector.
    std::optional<Vec> add_or_express(const Vec& v) {
        Vec w = v;
        Vec comb(rows_.size() + 1);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational f = w[pivots_[k]];
            if (f.is_zero()) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                if (!rows_[k][i].is_zero()) w[i] -= f * rows_[k][i];
            for (std::size_t j = 0; j < combs_[k].size(); ++j)
                if (!combs_[k][j].is_zero()) comb[j] -= f * combs_[k][j];
        }
        std::size_t p = 0;
        while (p < dim_ && w[p].is_zero()) ++p;
        if (p == dim_) {
            comb.resize(rows_.size());
            for (auto& c : comb) c = -c;
            return comb;
        }
        comb[rows_.size()] = Rational(1);
        const Rational inv = w[p].inverse();
        for (auto& x : w) x *= inv;
        for (auto& x : comb) x *= inv;
        rows_.push_back(std::move(w));
        combs_.push_back(std::move(comb));
        pivots_.push_back(p);
        return std::nullopt;
    }

private:
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<Vec> combs_;
    std::vector<std::size_t> pivots_;
};

/// Q[x]/I for a zero-dimensional ideal given by a Groebner basis.
class QuotientRing {
public:
    explicit QuotientRing(GroebnerBasis gb) : gb_(std::move(gb)) {
        if (!gb_.is_zero_dimensional()) throw PositiveDimensional("quotient ring needs a zero-dimensional ideal");
        enumerate_standard_monomials();
        mult_.resize(gb_.order.nvars());
    }

    const GroebnerBasis& basis() const { return gb_; }
    std::size_t dim() const { return mono_.size(); }
    std::size_t nvars() const { return gb_.order.nvars(); }
    const std::vector<Monomial>& standard_monomials() const { return mono_; }

    Vec one() const {
        Vec v(dim());
        v[index_.at(Monomial())] = Rational(1);
        return v;
    }

    /// Normal-form coordinates of f.
    Vec reduce(const MPoly& f) const {
        Vec v(dim());
        const MPoly r = normal_form(f, gb_);
        for (const auto& t : r.terms()) v[index_.at(t.mono)] = t.coef;
        return v;
    }

    MPoly lift(const Vec& v) const {
        std::vector<Term> ts;
        for (std::size_t i = 0; i < dim(); ++i)
            if (!v[i].is_zero()) ts.push_back({mono_[i], v[i]});
        return MPoly::from_terms(gb_.vars, gb_.order, std::move(ts));
    }

    /// x_var * v
    Vec mul_var(std::size_t var, const Vec& v) const {
        const auto& m = matrix(var);
        Vec out(dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < dim(); ++i)
                if (!m[j][i].is_zero()) out[i] += v[j] * m[j][i];
        }
        return out;
    }

    /// a * v for a polynomial a.
    Vec mul(const MPoly& a, const Vec& v) const {
        Vec out(dim());
        for (const auto& t : a.terms()) {
            Vec w = v;
            for (std::size_t var = 0; var < nvars(); ++var)
                for (unsigned e = 0; e < t.mono[var]; ++e) w = mul_var(var, w);
            for (std::size_t i = 0; i < dim(); ++i)
                if (!w[i].is_zero()) out[i] += t.coef * w[i];
        }
        return out;
    }

    /// Minimal polynomial of a in the quotient ring: the monic generator of
    /// the ideal's intersection with Q[a] (for a = x_v, the eliminant).
    UPoly minimal_polynomial(const MPoly& a) const {
        LinearSpan span(dim());
        Vec cur = one();
        for (std::size_t k = 0;; ++k) {
            if (auto c = span.add_or_express(cur)) {
                Vec coeffs(k + 1);
                for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*c)[i];
                coeffs[k] = Rational(1);
                return UPoly(std::move(coeffs));
            }
            cur = mul(a, cur);
        }
    }

    UPoly eliminant(std::size_t var) const {
        return minimal_polynomial(MPoly::from_terms(gb_.vars, gb_.order, {{Monomial::var(var), Rational(1)}}));
    }

private:
    // Columns: column j holds the coordinates of x_var * standard_j.
    const std::vector<Vec>& matrix(std::size_t var) const {
        auto& m = mult_[var];
        if (m.empty()) {
            m.reserve(dim());
            for (const auto& b : mono_) {
                Monomial xb = b * Monomial::var(var);
                auto it = index_.find(xb);
                if (it != index_.end()) {
                    Vec col(dim());
                    col[it->second] = Rational(1);
                    m.push_back(std::move(col));
                } else {
                    m.push_back(reduce(MPoly::from_terms(gb_.vars, gb_.order, {{xb, Rational(1)}})));
                }
            }
        }
        return m;
    }

    void enumerate_standard_monomials() {
        std::vector<Monomial> queue{Monomial()};
        std::map<Monomial, bool> seen{{Monomial(), true}};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Monomial m = queue[qi];
            bool standard = true;
            for (const auto& g : gb_.generators)
                if (g.leading_monomial().divides(m)) { standard = false; break; }
            if (!standard) continue;
            mono_.push_back(m);
            if (mono_.size() > 100000) throw Unsupported("quotient ring dimension too large");
            for (std::size_t v = 0; v < nvars(); ++v) {
                Monomial n = m * Monomial::var(v);
                if (seen.emplace(n, true).second) queue.push_back(n);
            }
        }
        std::sort(mono_.begin(), mono_.end(),
                  [this](const Monomial& a, const Monomial& b) { return gb_.order.compare(a, b) < 0; });
        for (std::size_t i = 0; i < mono_.size(); ++i) index_[mono_[i]] = i;
    }

    GroebnerBasis gb_;
    std::vector<Monomial> mono_;
    std::map<Monomial, std::size_t> index_;
    mutable std::vector<std::vector<Vec>> mult_;
};

/// FGLM: reduced Groebner basis of the same ideal under `target`.
inline GroebnerBasis fglm(const QuotientRing& A, const MonomialOrder& target) {
    const VarNames& vars = A.basis().vars;
    GroebnerBasis out{vars, target, {}, true};
    LinearSpan span(A.dim());
    std::vector<Monomial> staircase;
    std::vector<Vec> stair_vecs;
    struct Candidate {
        Monomial m;
        std::size_t parent;  // index into staircase, or npos for 1
        std::size_t var;
    };
    std::vector<Candidate> cand{{Monomial(), std::string::npos, 0}};
    std::vector<Monomial> leads;
    auto divisible = [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m)) return true;
        return false;
    };
    while (!cand.empty()) {
        auto it = std::min_element(cand.begin(), cand.end(), [&](const Candidate& a, const Candidate& b) {
            return target.compare(a.m, b.m) < 0;
        });
        Candidate c = *it;
        cand.erase(it);
        std::erase_if(cand, [&](const Candidate& d) { return d.m == c.m; });
        if (divisible(c.m)) continue;
        Vec v = c.parent == std::string::npos ? A.one() : A.mul_var(c.var, stair_vecs[c.parent]);
        if (auto comb = span.add_or_express(v)) {
            std::vector<Term> ts{{c.m, Rational(1)}};
            for (std::size_t k = 0; k < comb->size(); ++k)
                if (!(*comb)[k].is_zero()) ts.push_back({staircase[k], -(*comb)[k]});
            out.generators.push_back(MPoly::from_terms(vars, target, std::move(ts)));
            leads.push_back(c.m);
        } else {
            staircase.push_back(c.m);
            stair_vecs.push_back(std::move(v));
            for (std::size_t var = 0; var < A.nvars(); ++var)
                cand.push_back({c.m * Monomial::var(var), staircase.size() - 1, var});
        }
    }
    std::sort(out.generators.begin(), out.generators.end(), [&](const MPoly& a, const MPoly& b) {
        return target.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
}

inline MonomialOrder grevlex_like(const MonomialOrder& order) { return MonomialOrder::grevlex(order.perm); }

/// Reduced basis under `order`, going through grevlex and FGLM whenever the
/// ideal is zero-dimensional.
inline GroebnerBasis groebner_basis(const std::vector<MPoly>& F, const MonomialOrder& order) {
    if (order.kind == MonomialOrder::Kind::GrevLex) return buchberger(F, order);
    GroebnerBasis g = buchberger(F, grevlex_like(order));
    if (g.generators.empty() || g.is_unit()) {
        g.order = order;
        for (auto& p : g.generators) p = p.with_order(order);
        return g;
    }
    if (g.is_zero_dimensional()) return fglm(QuotientRing(std::move(g)), order);
    return buchberger(F, order);
}

/// The univariate generator of <F> intersected with Q[keep], integer-cleared.
/// Throws PositiveDimensional when there is none.
inline UPoly eliminate_to_univariate(const std::vector<MPoly>& F, std::size_t keep) {
    if (F.empty()) throw DomainError("eliminate_to_univariate of an empty system");
    std::size_t n = 0;
    for (const auto& f : F) n = std::max(n, f.nvars());
    if (keep >= n) throw DomainError("variable index out of range");
    GroebnerBasis g = buchberger(F, MonomialOrder::grevlex(n));
    if (g.is_unit()) return UPoly::constant(Rational(1));
    if (g.is_zero_dimensional()) return QuotientRing(std::move(g)).eliminant(keep).integer_cleared();
    GroebnerBasis lex = buchberger(F, MonomialOrder::lex_last(n, keep));
    for (const auto& p : lex.generators)
        if (p.is_univariate_in(keep)) return p.to_upoly(keep).integer_cleared();
    throw PositiveDimensional("no univariate polynomial in the elimination ideal");
}

/// A real solution of a zero-dimensional block, represented through a
/// separating element t: coordinate k equals coord_in_t[k](t).
struct BlockPoint {
    std::vector<std::size_t> vars;  ///< ambient variable indices
    UPoly minpoly;                  ///< squarefree, of t
    AlgebraicNumber t;
    std::vector<UPoly> coord_in_t;
    std::vector<AlgebraicNumber> coords;
};

namespace detail {

/// h(x_vars = coord_in_t(t)) reduced modulo the minimal polynomial of t.
inline UPoly to_t(const BlockPoint& p, const MPoly& h) {
    std::vector<std::vector<UPoly>> powers(p.vars.size(), {UPoly::constant(Rational(1))});
    UPoly acc;
    for (const auto& term : h.terms()) {
        UPoly v = UPoly::constant(term.coef);
        for (std::size_t k = 0; k < p.vars.size(); ++k) {
            unsigned e = term.mono[p.vars[k]];
            auto& pw = powers[k];
            while (pw.size() <= e) pw.push_back(poly_rem(pw.back() * p.coord_in_t[k], p.minpoly));
            if (e) v = poly_rem(v * pw[e], p.minpoly);
        }
        for (std::size_t var = 0; var < h.nvars(); ++var)
            if (term.mono[var] && std::find(p.vars.begin(), p.vars.end(), var) == p.vars.end())
                throw DomainError("polynomial uses a variable outside the block");
        acc = acc + v;
    }
    return poly_rem(acc, p.minpoly);
}

/// Real roots of one eliminant, prepared once per block.
struct EliminantRoots {
    std::vector<AlgebraicNumber> roots;
    std::vector<Rational> rational;
    UPoly irrational_part;

    explicit EliminantRoots(const UPoly& elim) {
        UPoly e = squarefree_part(elim);
        roots = real_roots(e);
        rational = rational_roots(e);
        irrational_part = e;
        for (const auto& r : rational) irrational_part = poly_divrem(irrational_part, UPoly{-r, Rational(1)}).first;
    }
};

/// The coordinate h(t) as a root of its eliminant: refine t until the
/// interval image of h meets exactly one isolating interval.
inline AlgebraicNumber coordinate(const EliminantRoots& er, const AlgebraicNumber& t0, const UPoly& h) {
    std::vector<AlgebraicNumber> roots = er.roots;
    AlgebraicNumber t = t0;
    for (;;) {
        Interval img = eval_interval(h, Interval{t.interval().lo, t.interval().hi});
        std::vector<std::size_t> hits;
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (roots[k].interval().hi >= img.lo && roots[k].interval().lo <= img.hi) hits.push_back(k);
        if (hits.empty()) throw Error("coordinate image misses every root of its eliminant");
        if (hits.size() == 1) {
            const AlgebraicNumber& y = roots[hits[0]];
            for (const auto& r : er.rational)
                if (y.compare(r) == 0) return AlgebraicNumber::from_rational(r);
            if (er.rational.empty()) return y;
            return AlgebraicNumber(er.irrational_part, y.interval());
        }
        t = t.bisected();
        for (std::size_t k : hits) roots[k] = roots[k].bisected();
    }
}

}  // namespace detail

/// Exact sign of h (ambient polynomial in the block's variables) at p.
inline int sign_at(const BlockPoint& p, const MPoly& h) { return sign_at(detail::to_t(p, h), p.t); }

/// Real solutions of a zero-dimensional system in the given ambient
/// variables; with open_unit_box only points with every coordinate in (0,1)
/// are returned. Throws PositiveDimensional when the block is not
/// zero-dimensional.
struct ZeroDimStats {
    bool inconsistent = false;   ///< no complex solutions at all
    std::size_t complex_points = 0;
    std::size_t real_points = 0;
};

inline std::vector<BlockPoint> solve_zero_dimensional(const std::vector<MPoly>& eqs,
                                                      const std::vector<std::size_t>& vars, bool open_unit_box,
                                                      ZeroDimStats* stats = nullptr) {
    if (eqs.empty()) throw PositiveDimensional("no equations");
    const VarNames& ambient = eqs.front().vars();
    std::vector<std::string> names;
    for (std::size_t v : vars) names.push_back((*ambient)[v]);
    VarNames sub = make_vars(names);
    const std::size_t k = vars.size();
    MonomialOrder grl = MonomialOrder::grevlex(k);
    std::vector<MPoly> F;
    for (const auto& e : eqs) F.push_back(e.embed(sub, grl));
    GroebnerBasis gb = buchberger(F, grl);
    if (gb.is_unit()) {
        if (stats) stats->inconsistent = true;
        return {};
    }
    if (!gb.is_zero_dimensional()) throw PositiveDimensional("block is positive-dimensional");
    auto A = std::make_unique<QuotientRing>(std::move(gb));
    std::vector<UPoly> elim(k);
    bool radical = true;
    for (std::size_t i = 0; i < k; ++i) {
        elim[i] = A->eliminant(i);
        if (!is_squarefree(elim[i])) radical = false;
    }
    if (!radical) {
        for (std::size_t i = 0; i < k; ++i) {
            elim[i] = squarefree_part(elim[i]);
            F.push_back(MPoly::from_upoly(elim[i], sub, grl, i));
        }
        A = std::make_unique<QuotientRing>(buchberger(F, grl));
    }
    // cheap rejection: some coordinate has no root in the box
    if (open_unit_box)
        for (std::size_t i = 0; i < k; ++i) {
            UPoly e = squarefree_part(elim[i]);
            if (e.degree() >= 1 && count_real_roots(e, Rational(0), Rational(1)) - (e.sign_at(Rational(1)) == 0 ? 1 : 0) == 0)
                return {};
        }
    const std::size_t D = A->dim();
    if (stats) stats->complex_points = D;
    // separating element
    MPoly t;
    UPoly mt;
    bool found = false;
    for (std::size_t i = k; i-- > 0 && !found;) {
        if (elim[i].degree() == static_cast<int>(D)) {
            t = MPoly::from_terms(sub, grl, {{Monomial::var(i), Rational(1)}});
            mt = elim[i];
            found = true;
        }
    }
    for (long c = 2; !found; ++c) {
        std::vector<Term> ts;
        Rational w(1);
        for (std::size_t i = k; i-- > 0;) {
            ts.push_back({Monomial::var(i), w});
            w *= Rational(c);
        }
        t = MPoly::from_terms(sub, grl, std::move(ts));
        mt = A->minimal_polynomial(t);
        found = mt.degree() == static_cast<int>(D);
        if (c > 10000) throw Unsupported("no separating element found");
    }
    // x_i = h_i(t) through the Krylov basis 1, t, ..., t^(D-1)
    LinearSpan span(D);
    Vec cur = A->one();
    for (std::size_t j = 0; j < D; ++j) {
        if (span.add_or_express(cur)) throw Unsupported("Krylov basis degenerate");
        cur = A->mul(t, cur);
    }
    std::vector<UPoly> h(k);
    for (std::size_t i = 0; i < k; ++i) {
        LinearSpan s2 = span;
        auto c = s2.add_or_express(A->reduce(MPoly::from_terms(sub, grl, {{Monomial::var(i), Rational(1)}})));
        if (!c) throw Unsupported("coordinate outside the Krylov span");
        h[i] = UPoly(*c);
    }
    UPoly m = mt.integer_cleared();
    std::vector<detail::EliminantRoots> er;
    for (std::size_t i = 0; i < k; ++i) er.emplace_back(elim[i]);
    std::vector<BlockPoint> out;
    const auto troots = real_roots(m);
    if (stats) stats->real_points = troots.size();
    for (const auto& r : troots) {
        BlockPoint p{vars, squarefree_part(m), r, h, {}};
        bool inside = true;
        for (std::size_t i = 0; i < k && inside; ++i) {
            p.coords.push_back(detail::coordinate(er[i], r, h[i]));
            if (open_unit_box) inside = p.coords.back().compare(Rational(0)) > 0 && p.coords.back().compare(Rational(1)) < 0;
        }
        if (inside) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace algne
