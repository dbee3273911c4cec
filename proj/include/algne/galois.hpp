#pragma once

// Polynomials over prime fields, Frobenius cycle types from distinct-degree
// factorization, and sufficient-condition certificates that a Galois group
// is the full symmetric group.

#include <algne/algebraic.hpp>

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace algne {

/// Polynomial over Z/pZ, coefficients low to high, no trailing zeros.
class ModPoly {
public:
    explicit ModPoly(std::uint64_t p, std::vector<std::uint64_t> c = {}) : p_(p), c_(std::move(c)) {
        for (auto& x : c_) x %= p_;
        trim();
    }

    static ModPoly x(std::uint64_t p) { return ModPoly(p, {0, 1}); }

    std::uint64_t modulus() const { return p_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    friend bool operator==(const ModPoly&, const ModPoly&) = default;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
        return ModPoly(a.p_, std::move(r));
    }

    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
        return ModPoly(a.p_, std::move(r));
    }

    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
        std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
        }
        return ModPoly(a.p_, std::move(r));
    }

    ModPoly derivative() const {
        std::vector<std::uint64_t> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(mulmod(c_[i], i % p_, p_));
        return ModPoly(p_, std::move(r));
    }

    ModPoly monic() const {
        if (is_zero()) return *this;
        const std::uint64_t inv = powmod(leading(), p_ - 2, p_);
        std::vector<std::uint64_t> r(c_);
        for (auto& x : r) x = mulmod(x, inv, p_);
        return ModPoly(p_, std::move(r));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (!c_[i]) continue;
            if (!first) os << " + ";
            first = false;
            if (c_[i] != 1 || i == 0) os << c_[i];
            if (i > 0) os << (c_[i] != 1 ? "*x" : "x");
            if (i > 1) os << '^' << i;
        }
        os << " mod " << p_;
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

inline std::pair<ModPoly, ModPoly> poly_divrem(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero mod p");
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {ModPoly(p), a};
    std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const std::uint64_t inv = powmod(b.leading(), p - 2, p);
    for (int i = a.degree(); i >= db; --i) {
        const std::uint64_t c = mulmod(r[static_cast<std::size_t>(i)], inv, p);
        if (!c) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(i - db + j)];
            slot = (slot + p - mulmod(c, b.coeffs()[static_cast<std::size_t>(j)], p)) % p;
        }
    }
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

inline ModPoly poly_rem(const ModPoly& a, const ModPoly& b) { return poly_divrem(a, b).second; }

/// Monic gcd.
inline ModPoly poly_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// base^e mod m by square-and-multiply.
inline ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& m) {
    ModPoly r = poly_rem(ModPoly(base.modulus(), {1}), m);
    const ModPoly b = poly_rem(base, m);
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        r = poly_rem(r * r, m);
        if (mpz_tstbit(e.raw().get_mpz_t(), i)) r = poly_rem(r * b, m);
    }
    return r;
}

/// Coefficientwise reduction of the integer-cleared form. Throws BadPrime
/// when p divides a denominator of f or the cleared leading coefficient.
inline ModPoly reduce_mod_p(const UPoly& f, std::uint64_t p) {
    if (f.is_zero()) throw DomainError("reduce_mod_p of the zero polynomial");
    if (!is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
    for (const auto& c : f.coeffs())
        if (c.den().mod_u64(p) == 0) throw BadPrime(std::to_string(p) + " divides a denominator");
    std::vector<std::uint64_t> r;
    for (const auto& c : f.integer_coeffs()) {
        std::uint64_t m = c.abs().mod_u64(p);
        r.push_back(c.sign() < 0 && m ? p - m : m);
    }
    if (r.back() == 0) throw BadPrime(std::to_string(p) + " divides the leading coefficient");
    return ModPoly(p, std::move(r));
}

/// Multiset of factor degrees, descending.
using CycleType = std::vector<int>;

inline std::string cycle_type_string(const CycleType& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

struct NotSquarefree {};

/// Distinct-degree factorization: degrees of the irreducible factors.
inline std::variant<CycleType, NotSquarefree> degree_pattern(const ModPoly& f) {
    if (f.is_zero()) throw DomainError("degree_pattern of the zero polynomial");
    if (poly_gcd(f, f.derivative()).degree() > 0) return NotSquarefree{};
    const std::uint64_t p = f.modulus();
    const BigInt bp(p);
    CycleType parts;
    ModPoly rest = f.monic();
    ModPoly h = ModPoly::x(p);
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod(h, bp, rest);
        ModPoly g = poly_gcd(rest, h - ModPoly::x(p));
        if (g.degree() > 0) {
            for (int k = 0; k < g.degree() / d; ++k) parts.push_back(d);
            rest = poly_divrem(rest, g).first;
            h = poly_rem(h, rest);
        }
    }
    if (rest.degree() > 0) parts.push_back(rest.degree());
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

namespace detail {

/// Second pass for certificate checking: deg gcd(f, x^(p^d) - x) counts the
/// roots in GF(p^d), computed with a direct big-exponent power, then the
/// factor counts per degree come from inclusion over divisors.
inline std::optional<CycleType> degree_pattern_direct(const ModPoly& f) {
    if (poly_gcd(f, f.derivative()).degree() > 0) return std::nullopt;
    const std::uint64_t p = f.modulus();
    const int n = f.degree();
    std::vector<int> count(static_cast<std::size_t>(n + 1), 0);
    for (int d = 1; d <= n; ++d) {
        BigInt e = BigInt::pow(BigInt(p), static_cast<unsigned long>(d));
        ModPoly g = poly_gcd(f, powmod(ModPoly::x(p), e, f) - ModPoly::x(p));
        int roots = g.degree();
        for (int e2 = 1; e2 < d; ++e2)
            if (d % e2 == 0) roots -= e2 * count[static_cast<std::size_t>(e2)];
        count[static_cast<std::size_t>(d)] = roots / d;
    }
    CycleType parts;
    for (int d = n; d >= 1; --d)
        for (int k = 0; k < count[static_cast<std::size_t>(d)]; ++k) parts.push_back(d);
    return parts;
}

inline bool is_n_minus_1_cycle(const CycleType& c, int n) { return c.size() == 2 && c[0] == n - 1 && c[1] == 1; }

inline bool is_transposition(const CycleType& c, int n) {
    return static_cast<int>(c.size()) == n - 1 && c[0] == 2 && (c.size() < 2 || c[1] == 1);
}

/// A prime l <= n - 3 occurring exactly once with no other part divisible
/// by l: a suitable power of this element is an l-cycle.
inline std::optional<int> prime_cycle_part(const CycleType& c, int n) {
    for (int l : c) {
        if (l < 2 || l > n - 3 || !is_prime_u64(static_cast<std::uint64_t>(l))) continue;
        int hits = 0;
        for (int x : c) hits += x % l == 0;
        if (hits == 1) return l;
    }
    return std::nullopt;
}

inline bool is_odd_permutation(const CycleType& c, int n) {
    return (n - static_cast<int>(c.size())) % 2 == 1;
}

}  // namespace detail

/// Witness prime with the Frobenius cycle type it exhibits.
struct PrimeWitness {
    std::uint64_t prime = 0;
    CycleType pattern;
};

/// Evidence that Gal(f) = S_n for an irreducible f of degree n.
///  Classical: an (n-1)-cycle and a transposition.
///  Jordan: an (n-1)-cycle (so the group is 2-transitive, hence
///  primitive), an element whose power is an l-cycle for a prime
///  l <= n - 3 (so the group contains A_n), and an odd permutation.
struct SnCertificate {
    enum class Method { Classical, Jordan };
    int degree = 0;
    Method method = Method::Classical;
    IrreducibilityCertificate irreducibility;
    PrimeWitness ncycle_minus1;
    std::optional<PrimeWitness> transposition;
    std::optional<PrimeWitness> prime_cycle;
    std::optional<PrimeWitness> odd;
    std::size_t primes_scanned = 0;
    std::size_t primes_skipped = 0;

    std::vector<PrimeWitness> witnesses() const {
        std::vector<PrimeWitness> w{ncycle_minus1};
        for (const auto* o : {&transposition, &prime_cycle, &odd})
            if (*o) w.push_back(**o);
        return w;
    }
};

inline std::string method_name(SnCertificate::Method m) {
    return m == SnCertificate::Method::Classical ? "classical" : "jordan";
}

struct IrreducibilitySearch {
    std::uint64_t prime_bound = 100000;
    std::optional<BigInt> murty_max_n;
};

/// Checks a certificate from scratch with the direct-power pattern pass.
inline bool verify_sn_certificate(const UPoly& f, const SnCertificate& c) {
    const int n = f.degree();
    if (n != c.degree || n < 3) return false;
    auto pattern = [&](const PrimeWitness& w) -> std::optional<CycleType> {
        try {
            return detail::degree_pattern_direct(reduce_mod_p(f, w.prime));
        } catch (const BadPrime&) {
            return std::nullopt;
        }
    };
    auto p1 = pattern(c.ncycle_minus1);
    if (!p1 || *p1 != c.ncycle_minus1.pattern || !detail::is_n_minus_1_cycle(*p1, n)) return false;
    if (c.method == SnCertificate::Method::Classical) {
        if (!c.transposition) return false;
        auto p2 = pattern(*c.transposition);
        return p2 && *p2 == c.transposition->pattern && detail::is_transposition(*p2, n);
    }
    if (!c.prime_cycle || !c.odd) return false;
    auto p3 = pattern(*c.prime_cycle);
    auto p4 = pattern(*c.odd);
    return p3 && *p3 == c.prime_cycle->pattern && detail::prime_cycle_part(*p3, n) && p4 &&
           *p4 == c.odd->pattern && detail::is_odd_permutation(*p4, n);
}

/// Scans primes below prime_bound in increasing order. The classical
/// criterion is used up to degree 7; above that transpositions are too rare
/// (density 1/(2(n-2)!)) and the Jordan criterion is used. nullopt means
/// inconclusive, never "not S_n".
inline std::optional<SnCertificate> sn_certificate(const UPoly& f, const IrreducibilityCertificate& irreducible,
                                                  std::uint64_t prime_bound = 100000) {
    const int n = f.degree();
    if (n < 3) return std::nullopt;
    SnCertificate c;
    c.degree = n;
    c.irreducibility = irreducible;
    const bool jordan = n >= 8;
    c.method = jordan ? SnCertificate::Method::Jordan : SnCertificate::Method::Classical;
    std::optional<PrimeWitness> ncycle;
    for (std::uint64_t p = 2; p < prime_bound; p = next_prime(p)) {
        ModPoly fp(p);
        try {
            fp = reduce_mod_p(f, p);
        } catch (const BadPrime&) {
            ++c.primes_skipped;
            continue;
        }
        auto pat = degree_pattern(fp);
        ++c.primes_scanned;
        if (std::holds_alternative<NotSquarefree>(pat)) {
            ++c.primes_skipped;
            continue;
        }
        const CycleType& t = std::get<CycleType>(pat);
        if (!ncycle && detail::is_n_minus_1_cycle(t, n)) ncycle = PrimeWitness{p, t};
        if (!jordan) {
            if (!c.transposition && detail::is_transposition(t, n)) c.transposition = PrimeWitness{p, t};
            if (ncycle && c.transposition) break;
        } else {
            if (!c.prime_cycle && detail::prime_cycle_part(t, n)) c.prime_cycle = PrimeWitness{p, t};
            if (!c.odd && detail::is_odd_permutation(t, n)) c.odd = PrimeWitness{p, t};
            if (ncycle && c.prime_cycle && c.odd) break;
        }
    }
    if (!ncycle) return std::nullopt;
    if (!jordan && !c.transposition) return std::nullopt;
    if (jordan && !(c.prime_cycle && c.odd)) return std::nullopt;
    c.ncycle_minus1 = *ncycle;
    if (!verify_sn_certificate(f, c)) throw Error("S_n certificate failed its independent re-check");
    return c;
}

/// First prime below prime_bound modulo which f stays irreducible of full
/// degree; such f is irreducible over the rationals.
inline std::optional<IrreducibilityCertificate> modp_irreducibility(const UPoly& f, std::uint64_t prime_bound = 100000) {
    const int n = f.degree();
    for (std::uint64_t p = 2; p < prime_bound; p = next_prime(p)) {
        try {
            auto pat = degree_pattern(reduce_mod_p(f, p));
            if (auto* t = std::get_if<CycleType>(&pat); t && t->size() == 1 && (*t)[0] == n)
                return IrreducibilityCertificate{IrreducibilityCertificate::Kind::ModPrime, std::nullopt, p};
        } catch (const BadPrime&) {
        }
    }
    return std::nullopt;
}

inline bool verify_irreducibility(const UPoly& f, const IrreducibilityCertificate& c) {
    switch (c.kind) {
        case IrreducibilityCertificate::Kind::Linear: return f.degree() == 1;
        case IrreducibilityCertificate::Kind::NoRationalRoots:
            return (f.degree() == 2 || f.degree() == 3) && rational_roots(f).empty();
        case IrreducibilityCertificate::Kind::Murty: return c.murty && verify_murty(f, *c.murty);
        case IrreducibilityCertificate::Kind::ModPrime:
            try {
                auto pat = detail::degree_pattern_direct(reduce_mod_p(f, c.prime));
                return pat && pat->size() == 1 && (*pat)[0] == f.degree();
            } catch (const BadPrime&) {
                return false;
            }
    }
    return false;
}

/// Linear, no rational roots (degree <= 3), Murty when the prime values
/// stay in the deterministic Miller-Rabin range, otherwise irreducible mod a
/// prime.
inline std::optional<IrreducibilityCertificate> certify_irreducible(const UPoly& f, const IrreducibilitySearch& opt = {}) {
    using Kind = IrreducibilityCertificate::Kind;
    const int n = f.degree();
    if (n < 1) throw DomainError("irreducibility of a constant");
    if (n == 1) return IrreducibilityCertificate{Kind::Linear, std::nullopt, 0};
    if (n <= 3) {
        if (rational_roots(f).empty()) return IrreducibilityCertificate{Kind::NoRationalRoots, std::nullopt, 0};
        return std::nullopt;
    }
    static const BigInt kDeterministic = BigInt::parse("3317044064679887385961981");
    const UPoly g = f.integer_cleared();
    const BigInt start = Rational::ceil(murty_height(g)) + BigInt(2);
    if (g.eval(Rational(start)).abs() < Rational(kDeterministic)) {
        if (auto m = murty_certificate(g, opt.murty_max_n); m && m->value < kDeterministic)
            return IrreducibilityCertificate{Kind::Murty, m, 0};
    }
    return modp_irreducibility(f, opt.prime_bound);
}

enum class Radicality { Irradical, RadicalExpressible, Unknown };

inline std::string radicality_name(Radicality r) {
    switch (r) {
        case Radicality::Irradical: return "irradical";
        case Radicality::RadicalExpressible: return "radical-expressible";
        case Radicality::Unknown: return "unknown";
    }
    return "?";
}

struct IrradicalityVerdict {
    Radicality verdict = Radicality::Unknown;
    std::string evidence;
    std::optional<SnCertificate> sn;
    std::optional<QuadraticSurd> closed_form;
};

/// Degree <= 4 is solvable by radicals; degree >= 5 with Gal = S_n is not.
inline IrradicalityVerdict irradicality_verdict(const AlgebraicNumber& a, std::uint64_t prime_bound = 100000) {
    if (!a.certificate()) throw DomainError("irradicality_verdict needs an irreducibility certificate");
    IrradicalityVerdict v;
    const int n = a.degree();
    if (n <= 4) {
        v.verdict = Radicality::RadicalExpressible;
        v.evidence = "degree " + std::to_string(n) + " <= 4";
        if (n <= 2) {
            v.closed_form = radical_form_deg2(a);
            v.evidence += ", " + v.closed_form->to_string();
        }
        return v;
    }
    v.sn = sn_certificate(a.defining(), *a.certificate(), prime_bound);
    if (v.sn) {
        v.verdict = Radicality::Irradical;
        v.evidence = "Galois group S_" + std::to_string(n) + " (" + method_name(v.sn->method) + ")";
    } else {
        v.evidence = "no S_" + std::to_string(n) + " certificate below " + std::to_string(prime_bound);
    }
    return v;
}

/// Irreducibility, S_n and radicality evidence for one defining polynomial.
struct PolyCertificate {
    UPoly poly;
    std::optional<IrreducibilityCertificate> irreducibility;
    std::optional<SnCertificate> sn;
    Radicality verdict = Radicality::Unknown;

    /// Line-oriented "key: value" block.
    std::string to_text() const {
        std::ostringstream os;
        os << "polynomial: " << poly.to_string("y") << '\n';
        os << "degree: " << poly.degree() << '\n';
        os << "irreducible: " << (irreducibility ? irreducibility->describe() : "unknown") << '\n';
        if (sn) {
            os << "galois: S_" << sn->degree << '\n';
            os << "method: " << method_name(sn->method) << '\n';
            os << "ncycle_minus1: p=" << sn->ncycle_minus1.prime << " pattern=" << cycle_type_string(sn->ncycle_minus1.pattern) << '\n';
            if (sn->transposition)
                os << "transposition: p=" << sn->transposition->prime << " pattern=" << cycle_type_string(sn->transposition->pattern) << '\n';
            if (sn->prime_cycle)
                os << "prime_cycle: p=" << sn->prime_cycle->prime << " pattern=" << cycle_type_string(sn->prime_cycle->pattern) << '\n';
            if (sn->odd) os << "odd: p=" << sn->odd->prime << " pattern=" << cycle_type_string(sn->odd->pattern) << '\n';
        } else {
            os << "galois: unknown\n";
        }
        os << "verdict: " << radicality_name(verdict) << '\n';
        return os.str();
    }
};

inline PolyCertificate certify(const UPoly& f, std::uint64_t prime_bound = 100000) {
    PolyCertificate c{f.integer_cleared(), std::nullopt, std::nullopt, Radicality::Unknown};
    c.irreducibility = certify_irreducible(c.poly, {prime_bound, std::nullopt});
    if (!c.irreducibility) return c;
    if (c.poly.degree() <= 4) {
        c.verdict = Radicality::RadicalExpressible;
        return c;
    }
    c.sn = sn_certificate(c.poly, *c.irreducibility, prime_bound);
    if (c.sn) c.verdict = Radicality::Irradical;
    return c;
}

/// The same number carrying an irreducibility certificate of its defining
/// polynomial (nullopt when none is found).
inline std::optional<AlgebraicNumber> with_irreducibility(const AlgebraicNumber& a, std::uint64_t prime_bound = 100000) {
    if (auto c = certify_irreducible(a.defining(), {prime_bound, std::nullopt})) return a.with_certificate(*c);
    return std::nullopt;
}

}  // namespace algne
