#pragma once

// Rational roots and Murty's prime-value irreducibility criterion.

#include <algne/sturm.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace algne {

namespace detail {

/// All positive divisors of |n| by trial division, or nullopt when |n| has a
/// cofactor above 10^12 that trial division up to 10^6 cannot split.
inline std::optional<std::vector<BigInt>> small_divisors(const BigInt& n) {
    BigInt m = n.abs();
    if (m.is_zero()) return std::nullopt;
    std::vector<std::pair<BigInt, unsigned>> fac;
    for (long p = 2; p <= 1000000 && BigInt(p) * BigInt(p) <= m; ++p) {
        if (m.mod_u64(static_cast<std::uint64_t>(p)) != 0) continue;
        unsigned e = 0;
        while (m.mod_u64(static_cast<std::uint64_t>(p)) == 0) {
            m = BigInt::divexact(m, BigInt(p));
            ++e;
        }
        fac.emplace_back(BigInt(p), e);
    }
    if (m > BigInt(1)) {
        if (m > BigInt(1000000000000LL) && !is_prime(m)) return std::nullopt;
        fac.emplace_back(m, 1);
    }
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        BigInt pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace detail

/// All rational roots of f, ascending. Candidates p/q with p | a_0 and
/// q | a_d when both coefficients factor by trial division; otherwise each
/// isolated real root is refined until a_d * root is pinned to one integer.
inline std::vector<Rational> rational_roots(const UPoly& f) {
    if (f.is_zero()) throw DomainError("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    UPoly g = f.integer_cleared();
    std::size_t low = 0;
    while (g.coeff(low).is_zero()) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        std::vector<Rational> shifted(g.coeffs().begin() + static_cast<long>(low), g.coeffs().end());
        g = UPoly(std::move(shifted));
    }
    if (g.degree() <= 0) return roots;
    const BigInt lead = g.leading().num(), trail = g.coeff(0).num();
    auto ps = detail::small_divisors(trail);
    auto qs = detail::small_divisors(lead);
    if (ps && qs) {
        std::vector<Rational> cand;
        for (const auto& p : *ps)
            for (const auto& q : *qs) {
                cand.emplace_back(p, q);
                cand.emplace_back(-p, q);
            }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (const auto& c : cand)
            if (g.eval(c).is_zero()) roots.push_back(c);
    } else {
        SturmChain chain(squarefree_part(g));
        const Rational scale(lead.abs());
        for (auto iv : isolate_roots(g)) {
            while (iv.width() * scale >= Rational(1)) {
                Rational mid = iv.midpoint();
                if (chain_count(chain, iv.lo, mid) == 1) iv.hi = mid;
                else iv.lo = mid;
            }
            Rational k(Rational::floor(iv.hi * scale));
            Rational cand = k / scale;
            if (cand > iv.lo && g.eval(cand).is_zero()) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// f(n) prime for an integer n >= H + 2, H = max_{i<d} |a_i| / |a_d|.
struct MurtyCertificate {
    BigInt n;
    BigInt value;
    Rational H;
};

/// H = max_{i<d} |a_i| / |a_d| of the integer-cleared form.
inline Rational murty_height(const UPoly& f) {
    UPoly g = f.integer_cleared();
    Rational h;
    for (int i = 0; i < g.degree(); ++i) h = std::max(h, g.coeff(i).abs() / g.leading().abs());
    return h;
}

/// Checks a claimed witness from scratch.
inline bool verify_murty(const UPoly& f, const MurtyCertificate& c) {
    if (f.degree() < 1) return false;
    UPoly g = f.integer_cleared();
    Rational h = murty_height(g);
    if (h != c.H) return false;
    if (Rational(c.n) < h + Rational(2)) return false;
    Rational v = g.eval(Rational(c.n));
    return v == Rational(c.value) && v.sign() > 0 && is_prime(c.value);
}

/// Searches n = ceil(H)+2, ceil(H)+3, ... up to max_n (default
/// ceil(H) + 2 + 10000) for a prime value. nullopt means inconclusive.
inline std::optional<MurtyCertificate> murty_certificate(const UPoly& f, std::optional<BigInt> max_n = std::nullopt) {
    if (f.degree() < 1) throw DomainError("murty_certificate needs degree >= 1");
    UPoly g = f.integer_cleared();
    Rational h = murty_height(g);
    BigInt start = Rational::ceil(h) + BigInt(2);
    BigInt stop = max_n ? *max_n : start + BigInt(10000);
    for (BigInt n = start; n <= stop; n += BigInt(1)) {
        Rational v = g.eval(Rational(n));
        if (v.sign() > 0 && is_prime(v.num())) return MurtyCertificate{n, v.num(), h};
    }
    return std::nullopt;
}

/// Evidence that a defining polynomial is irreducible over the rationals.
struct IrreducibilityCertificate {
    enum class Kind {
        Linear,           ///< degree 1
        NoRationalRoots,  ///< degree 2 or 3 without rational roots
        Murty,            ///< prime value at a large enough integer
        ModPrime,         ///< stays irreducible modulo a prime not dividing a_d
    };
    Kind kind;
    std::optional<MurtyCertificate> murty;
    std::uint64_t prime = 0;

    std::string describe() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::Linear: os << "linear"; break;
            case Kind::NoRationalRoots: os << "no rational roots (degree <= 3)"; break;
            case Kind::Murty:
                os << "murty n=" << murty->n << " value=" << murty->value << " H=" << murty->H;
                break;
            case Kind::ModPrime: os << "irreducible mod " << prime; break;
        }
        return os.str();
    }
};

}  // namespace algne
