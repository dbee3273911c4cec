#pragma once

// Sparse multivariate polynomials over the rationals with lexicographic and
// graded reverse lexicographic monomial orders.

#include <algne/upoly.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace algne {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector; unused trailing slots stay zero.
class Monomial {
public:
    Monomial() { e_.fill(0); }

    static Monomial var(std::size_t i, unsigned exp = 1) {
        Monomial m;
        m.set(i, exp);
        return m;
    }

    unsigned operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, unsigned exp) {
        if (i >= kMaxVars) throw DomainError("variable index out of range");
        if (exp > 0xFFFFu) throw DomainError("exponent overflow");
        deg_ = deg_ - e_[i] + exp;
        e_[i] = static_cast<std::uint16_t>(exp);
    }
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            unsigned s = static_cast<unsigned>(a.e_[i]) + b.e_[i];
            if (s > 0xFFFFu) throw DomainError("exponent overflow");
            r.e_[i] = static_cast<std::uint16_t>(s);
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }
    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
        r.deg_ = a.deg_ - b.deg_;
        return r;
    }
    bool divides(const Monomial& b) const {
        if (deg_ > b.deg_) return false;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e_[i] > b.e_[i]) return false;
        return true;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        unsigned d = 0;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg_ == b.deg_ && a.e_ == b.e_; }
    /// Plain array order, used only for containers.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    std::array<std::uint16_t, kMaxVars> e_;
    unsigned deg_ = 0;
};

/// Lexicographic or graded reverse lexicographic order over a variable
/// permutation; perm[0] is the most significant variable.
struct MonomialOrder {
    enum class Kind { Lex, GrevLex };

    Kind kind = Kind::Lex;
    std::vector<std::size_t> perm;

    static MonomialOrder lex(std::size_t n) { return {Kind::Lex, identity(n)}; }
    static MonomialOrder lex(std::vector<std::size_t> perm) { return checked({Kind::Lex, std::move(perm)}); }
    static MonomialOrder grevlex(std::size_t n) { return {Kind::GrevLex, identity(n)}; }
    static MonomialOrder grevlex(std::vector<std::size_t> perm) { return checked({Kind::GrevLex, std::move(perm)}); }
    /// Lex with `last` least significant and the rest in index order.
    static MonomialOrder lex_last(std::size_t n, std::size_t last) {
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < n; ++i)
            if (i != last) p.push_back(i);
        p.push_back(last);
        return lex(std::move(p));
    }

    std::size_t nvars() const { return perm.size(); }
    std::size_t last() const { return perm.back(); }

    /// <0, 0, >0 as a is smaller, equal, greater than b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind == Kind::Lex) {
            for (std::size_t v : perm)
                if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
            return 0;
        }
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        for (std::size_t i = perm.size(); i-- > 0;) {
            std::size_t v = perm[i];
            if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        return 0;
    }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

    std::string to_string(const std::vector<std::string>& names) const {
        std::string s = kind == Kind::Lex ? "lex(" : "grevlex(";
        for (std::size_t i = 0; i < perm.size(); ++i) s += (i ? " > " : "") + names[perm[i]];
        return s + ")";
    }

private:
    static std::vector<std::size_t> identity(std::size_t n) {
        if (n > kMaxVars) throw DomainError("too many variables");
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }
    static MonomialOrder checked(MonomialOrder o) {
        std::vector<std::size_t> s = o.perm;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != i) throw DomainError("monomial order permutation is not a bijection");
        if (s.size() > kMaxVars) throw DomainError("too many variables");
        return o;
    }
};

using VarNames = std::shared_ptr<const std::vector<std::string>>;

inline VarNames make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}
/// x1, ..., xn
inline VarNames indexed_vars(std::size_t n, const std::string& stem = "x") {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return make_vars(std::move(v));
}

struct Term {
    Monomial mono;
    Rational coef;
};

/// Terms are kept sorted strictly descending in the polynomial's order with
/// no zero coefficients.
class MPoly {
public:
    MPoly() = default;
    MPoly(VarNames vars, MonomialOrder order) : vars_(std::move(vars)), order_(std::move(order)) {
        if (order_.nvars() != vars_->size()) throw DomainError("order and variable count differ");
    }
    MPoly(VarNames vars) : MPoly(vars, MonomialOrder::lex(vars->size())) {}

    static MPoly constant(VarNames vars, const Rational& c) {
        MPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
        return p;
    }
    static MPoly variable(VarNames vars, std::size_t i) {
        MPoly p(std::move(vars));
        p.terms_.push_back({Monomial::var(i), Rational(1)});
        return p;
    }
    static MPoly from_terms(VarNames vars, MonomialOrder order, std::vector<Term> terms) {
        MPoly p(std::move(vars), std::move(order));
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const VarNames& vars() const { return vars_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Rational& leading_coeff() const { return terms_.front().coef; }
    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }
    unsigned degree_in(std::size_t v) const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono[v]);
        return d;
    }
    bool uses(std::size_t v) const { return degree_in(v) > 0; }
    std::vector<std::size_t> used_vars() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < nvars(); ++v)
            if (uses(v)) out.push_back(v);
        return out;
    }
    /// Nonzero and every term involves only v.
    bool is_univariate_in(std::size_t v) const {
        if (is_zero()) return false;
        for (const auto& t : terms_)
            if (t.mono.degree() != t.mono[v]) return false;
        return true;
    }

    /// Same polynomial re-sorted in another order over the same variables.
    MPoly with_order(const MonomialOrder& order) const {
        MPoly p = *this;
        if (order.nvars() != nvars()) throw DomainError("order and variable count differ");
        p.order_ = order;
        p.sort_terms();
        return p;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }
    friend MPoly operator+(const MPoly& a, const MPoly& b) { return combine(a, b, Rational(1)); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return combine(a, b, Rational(-1)); }
    friend MPoly operator*(const Rational& s, const MPoly& a) {
        MPoly r(a.vars_, a.order_);
        if (s.is_zero()) return r;
        r.terms_ = a.terms_;
        for (auto& t : r.terms_) t.coef *= s;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_same_ring(a, b);
        std::map<Monomial, Rational> acc;
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) acc[x.mono * y.mono] += x.coef * y.coef;
        std::vector<Term> ts;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) ts.push_back({m, c});
        return from_terms(a.vars_, a.order_, std::move(ts));
    }
    /// c * m * a
    MPoly mul_term(const Monomial& m, const Rational& c) const {
        MPoly r(vars_, order_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (a.nvars() != b.nvars()) return false;
        MPoly bb = b.order_ == a.order_ ? b : b.with_order(a.order_);
        if (a.terms_.size() != bb.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == bb.terms_[i].mono) || a.terms_[i].coef != bb.terms_[i].coef) return false;
        return true;
    }

    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() != nvars()) throw DomainError("evaluation point has wrong dimension");
        Rational s;
        for (const auto& t : terms_) {
            Rational v = t.coef;
            for (std::size_t i = 0; i < nvars(); ++i)
                if (t.mono[i]) v *= Rational::pow(point[i], t.mono[i]);
            s += v;
        }
        return s;
    }

    /// Substitutes x_v = value; the variable stays in the ring with degree 0.
    MPoly substitute(std::size_t v, const Rational& value) const {
        std::map<Monomial, Rational> acc;
        for (const auto& t : terms_) {
            Monomial m = t.mono;
            unsigned e = m[v];
            m.set(v, 0);
            acc[m] += t.coef * Rational::pow(value, e);
        }
        std::vector<Term> ts;
        for (auto& [m, c] : acc)
            if (!c.is_zero()) ts.push_back({m, c});
        return from_terms(vars_, order_, std::move(ts));
    }

    /// Substitutes x_v = p (a polynomial in the same ring).
    MPoly substitute(std::size_t v, const MPoly& p) const {
        check_same_ring(*this, p);
        MPoly out(vars_, order_);
        std::vector<MPoly> powers{constant(vars_, Rational(1)).with_order(order_)};
        for (const auto& t : terms_) {
            unsigned e = t.mono[v];
            while (powers.size() <= e) powers.push_back(powers.back() * p);
            Monomial m = t.mono;
            m.set(v, 0);
            out = out + powers[e].mul_term(m, t.coef);
        }
        return out;
    }

    /// Moves the polynomial into a ring with other variable names; every
    /// used variable must exist there (matched by name).
    MPoly embed(const VarNames& target, const MonomialOrder& order) const {
        std::vector<std::size_t> map(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) {
            auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
            if (it == target->end()) {
                if (uses(i)) throw DomainError("variable " + (*vars_)[i] + " missing in target ring");
                map[i] = kMaxVars;
                continue;
            }
            map[i] = static_cast<std::size_t>(it - target->begin());
        }
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            Monomial m;
            for (std::size_t i = 0; i < nvars(); ++i)
                if (t.mono[i]) m.set(map[i], t.mono[i]);
            ts.push_back({m, t.coef});
        }
        return from_terms(target, order, std::move(ts));
    }

    /// The univariate polynomial in x_v; requires no other variable.
    UPoly to_upoly(std::size_t v) const {
        std::vector<Rational> c;
        for (const auto& t : terms_) {
            if (t.mono.degree() != t.mono[v]) throw DomainError("polynomial is not univariate");
            if (c.size() <= t.mono[v]) c.resize(t.mono[v] + 1);
            c[t.mono[v]] += t.coef;
        }
        return UPoly(std::move(c));
    }
    static MPoly from_upoly(const UPoly& f, VarNames vars, MonomialOrder order, std::size_t v) {
        std::vector<Term> ts;
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            if (!f.coeff(i).is_zero()) ts.push_back({Monomial::var(v, static_cast<unsigned>(i)), f.coeff(i)});
        return from_terms(std::move(vars), std::move(order), std::move(ts));
    }

    MPoly monic() const {
        if (is_zero()) return *this;
        return leading_coeff().inverse() * *this;
    }
    /// Coprime integer coefficients, positive leading coefficient.
    MPoly integer_cleared() const {
        if (is_zero()) return *this;
        mpz_class l = 1, g = 0;
        for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.raw().get_den_mpz_t());
        for (const auto& t : terms_) {
            mpz_class v = t.coef.raw().get_num() * (l / t.coef.raw().get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        Rational s{BigInt(l), BigInt(g)};
        if (leading_coeff().sign() < 0) s = -s;
        return s * *this;
    }

    std::string to_string() const;
    static MPoly parse(std::string_view text, VarNames vars, const MonomialOrder& order);
    static MPoly parse(std::string_view text, VarNames vars) {
        return parse(text, vars, MonomialOrder::lex(vars->size()));
    }

private:
    static void check_same_ring(const MPoly& a, const MPoly& b) {
        if (a.nvars() != b.nvars()) throw DomainError("polynomials live in different rings");
        if (!(a.order_ == b.order_)) throw DomainError("polynomials use different monomial orders");
    }

    static MPoly combine(const MPoly& a, const MPoly& b, const Rational& sb) {
        if (a.vars_ == nullptr) return sb * b;
        if (b.vars_ == nullptr) return a;
        check_same_ring(a, b);
        MPoly r(a.vars_, a.order_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int c = i == a.terms_.size() ? -1
                    : j == b.terms_.size() ? 1
                                           : a.order_.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back({b.terms_[j].mono, b.terms_[j].coef * sb});
                ++j;
            } else {
                Rational s = a.terms_[i].coef + b.terms_[j].coef * sb;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, s});
                ++i;
                ++j;
            }
        }
        return r;
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [this](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
    }
    void normalize() {
        sort_terms();
        std::vector<Term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) out.back().coef += t.coef;
            else out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.coef.is_zero(); });
        terms_ = std::move(out);
    }

    VarNames vars_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

inline std::string MPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational a = t.coef.abs();
        if (first) {
            if (t.coef.sign() < 0) os << "-";
        } else {
            os << (t.coef.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (t.mono.is_one() || a != Rational(1)) {
            os << a;
            need_star = true;
        }
        for (std::size_t v = 0; v < nvars(); ++v) {
            unsigned e = t.mono[v];
            if (!e) continue;
            if (need_star) os << "*";
            os << (*vars_)[v];
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

inline MPoly MPoly::parse(std::string_view text, VarNames vars, const MonomialOrder& order) {
    std::vector<Term> ts;
    for (const auto& t : detail::split_terms(text)) {
        auto [coef, factors] = detail::parse_term(t);
        Monomial m;
        for (const auto& [name, e] : factors) {
            auto it = std::find(vars->begin(), vars->end(), name);
            if (it == vars->end()) throw ParseError("unknown variable '" + name + "'");
            auto idx = static_cast<std::size_t>(it - vars->begin());
            m.set(idx, m[idx] + e);
        }
        ts.push_back({m, coef});
    }
    return from_terms(std::move(vars), order, std::move(ts));
}

}  // namespace algne
