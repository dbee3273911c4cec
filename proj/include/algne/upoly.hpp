#pragma once

// Dense univariate polynomials over the rationals.

#include <algne/exact.hpp>

#include <cctype>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace algne {

/// coeffs[i] is the coefficient of x^i; the highest stored coefficient is
/// nonzero, and the zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UPoly constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
    static UPoly monomial(const Rational& c, std::size_t deg) {
        std::vector<Rational> v(deg + 1);
        v[deg] = c;
        return UPoly(std::move(v));
    }
    static UPoly x() { return monomial(Rational(1), 1); }
    /// From integer coefficients listed highest degree first: {5, -44, ...}.
    static UPoly from_desc(std::initializer_list<long> desc) {
        std::vector<Rational> v;
        for (auto it = std::rbegin(desc); it != std::rend(desc); ++it) v.emplace_back(*it);
        return UPoly(std::move(v));
    }

    /// Degree, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& coeff(std::size_t i) const {
        static const Rational zero;
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const {
        static const Rational zero;
        return c_.empty() ? zero : c_.back();
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const Rational& s, const UPoly& a) {
        if (s.is_zero()) return {};
        UPoly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UPoly(std::move(v));
    }

    /// Exact value by Horner's rule.
    Rational eval(const Rational& a) const {
        Rational r;
        for (std::size_t i = c_.size(); i-- > 0;) {
            r *= a;
            r += c_[i];
        }
        return r;
    }
    /// Sign of f(a) without forming the full rational: evaluates the
    /// numerator polynomial at num/den scaled by den^deg.
    int sign_at(const Rational& a) const {
        if (c_.empty()) return 0;
        const BigInt n = a.num(), d = a.den();
        mpz_class acc, dpow = 1;
        // sum c_i * n^i * d^(deg-i), computed Horner style on the cleared form
        mpz_class lcm_den = 1;
        for (const auto& c : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
        for (std::size_t i = c_.size(); i-- > 0;) {
            mpz_class ci = c_[i].raw().get_num() * (lcm_den / c_[i].raw().get_den());
            acc = acc * n.raw() + ci * dpow;
            dpow *= d.raw();
        }
        return sgn(acc);
    }

    /// Monic associate (zero stays zero).
    UPoly monic() const {
        if (is_zero()) return {};
        return leading().inverse() * *this;
    }

    /// Coprime integer coefficients with positive leading coefficient.
    UPoly integer_cleared() const {
        if (is_zero()) return {};
        mpz_class l = 1, g = 0;
        for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
        std::vector<mpz_class> ints;
        ints.reserve(c_.size());
        for (const auto& c : c_) {
            ints.push_back(c.raw().get_num() * (l / c.raw().get_den()));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
        }
        if (ints.back() < 0) g = -g;
        std::vector<Rational> v;
        v.reserve(c_.size());
        for (auto& i : ints) v.emplace_back(BigInt(mpz_class(i / g)));
        return UPoly(std::move(v));
    }
    /// Integer coefficients of integer_cleared() as BigInts, index = degree.
    std::vector<BigInt> integer_coeffs() const {
        std::vector<BigInt> out;
        for (const auto& c : integer_cleared().c_) out.push_back(c.num());
        return out;
    }

    /// f(g(x)).
    UPoly compose(const UPoly& g) const {
        UPoly r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
        return r;
    }

    std::string to_string(const std::string& var = "x") const;
    static UPoly parse(std::string_view text, std::string* var_out = nullptr);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// f = q*g + r with deg r < deg g.
inline std::pair<UPoly, UPoly> poly_divrem(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (f.degree() < g.degree()) return {UPoly{}, f};
    std::vector<Rational> r = f.coeffs();
    std::vector<Rational> q(f.degree() - g.degree() + 1);
    const Rational inv = g.leading().inverse();
    const auto dg = static_cast<std::size_t>(g.degree());
    for (std::size_t k = r.size(); k-- > dg;) {
        if (r[k].is_zero()) continue;
        Rational t = r[k] * inv;
        q[k - dg] = t;
        for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] -= t * g.coeff(j);
    }
    r.resize(dg);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

inline UPoly poly_rem(const UPoly& f, const UPoly& g) { return poly_divrem(f, g).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly poly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = poly_rem(a, b).integer_cleared();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// f / gcd(f, f'), integer-cleared.
inline UPoly squarefree_part(const UPoly& f) {
    if (f.degree() <= 0) return f.integer_cleared();
    UPoly g = poly_gcd(f, f.derivative());
    return poly_divrem(f, g).first.integer_cleared();
}

inline bool is_squarefree(const UPoly& f) {
    return f.degree() <= 0 || poly_gcd(f, f.derivative()).degree() == 0;
}

// ---------------------------------------------------------------------------
// Text form: "c_d*x^d + ... + c_0" with coefficients "a/b".

inline std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = a == Rational(1);
        if (i == 0) {
            os << a;
        } else {
            if (!unit) os << a << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace detail {

/// Splits "a*x^2 - 3/4*x + 1" into signed terms.
inline std::vector<std::string> split_terms(std::string_view text) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        bool exponent_sign = !cur.empty() && cur.back() == '^';
        if ((ch == '+' || ch == '-') && depth == 0 && !exponent_sign && !cur.empty() && cur != "-" && cur != "+") {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(ch);
    }
    if (!cur.empty()) terms.push_back(cur);
    return terms;
}

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// A term "coef*v1^e1*v2^e2" with optional leading sign and implicit
/// coefficient. Returns the coefficient and (name, exponent) factors.
inline std::pair<Rational, std::vector<std::pair<std::string, unsigned>>> parse_term(const std::string& term) {
    std::string t = term;
    int sign = 1;
    while (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        if (t[0] == '-') sign = -sign;
        t.erase(0, 1);
    }
    if (t.empty()) throw ParseError("empty term in polynomial '" + term + "'");
    Rational coef(sign);
    std::vector<std::pair<std::string, unsigned>> vars;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t star = t.find('*', pos);
        std::string factor = t.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        if (factor.empty()) throw ParseError("empty factor in term '" + term + "'");
        if (factor.front() == '(' && factor.back() == ')') factor = factor.substr(1, factor.size() - 2);
        if (is_ident_start(factor[0])) {
            std::size_t e = 0;
            while (e < factor.size() && is_ident_char(factor[e])) ++e;
            std::string name = factor.substr(0, e);
            unsigned exp = 1;
            if (e < factor.size()) {
                if (factor[e] != '^') throw ParseError("bad factor '" + factor + "'");
                std::string es = factor.substr(e + 1);
                if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos)
                    throw ParseError("bad exponent in '" + factor + "'");
                exp = static_cast<unsigned>(std::stoul(es));
            }
            vars.emplace_back(name, exp);
        } else {
            coef *= Rational::parse(factor);
        }
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return {coef, vars};
}

}  // namespace detail

/// Accepts the grammar printed by to_string, with any single variable name.
inline UPoly UPoly::parse(std::string_view text, std::string* var_out) {
    std::string var;
    std::vector<Rational> coeffs;
    auto terms = detail::split_terms(text);
    if (terms.empty()) throw ParseError("empty polynomial");
    for (const auto& t : terms) {
        auto [coef, vars] = detail::parse_term(t);
        unsigned deg = 0;
        for (const auto& [name, e] : vars) {
            if (var.empty()) var = name;
            if (name != var) throw ParseError("polynomial mixes variables '" + var + "' and '" + name + "'");
            deg += e;
        }
        if (coeffs.size() <= deg) coeffs.resize(deg + 1);
        coeffs[deg] += coef;
    }
    if (var_out) *var_out = var.empty() ? "x" : var;
    return UPoly(std::move(coeffs));
}

}  // namespace algne
