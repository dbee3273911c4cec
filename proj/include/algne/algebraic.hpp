#pragma once

// Real algebraic numbers: squarefree defining polynomial plus an isolating
// interval, refined by Sturm-guided bisection.

#include <algne/interval.hpp>
#include <algne/irreducibility.hpp>

#include <cmath>
#include <memory>
#include <optional>
#include <string>

namespace algne {

class AlgebraicNumber {
public:
    /// The unique root of f in (iv.lo, iv.hi]. f is replaced by its
    /// integer-cleared squarefree part.
    AlgebraicNumber(const UPoly& f, IsolatingInterval iv) : iv_(std::move(iv)) {
        if (f.degree() < 1) throw DomainError("algebraic number needs a nonconstant defining polynomial");
        if (!(iv_.lo < iv_.hi)) throw DomainError("isolating interval must satisfy lo < hi");
        f_ = squarefree_part(f);
        chain_ = std::make_shared<const SturmChain>(f_);
        if (chain_count(*chain_, iv_.lo, iv_.hi) != 1)
            throw DomainError("interval does not isolate exactly one root of " + f_.to_string());
    }

    static AlgebraicNumber from_rational(const Rational& r) {
        return AlgebraicNumber(UPoly{-r, Rational(1)}, {r - Rational(1), r});
    }

    const UPoly& defining() const { return f_; }
    const IsolatingInterval& interval() const { return iv_; }
    const SturmChain& chain() const { return *chain_; }
    int degree() const { return f_.degree(); }
    const std::optional<IrreducibilityCertificate>& certificate() const { return cert_; }

    AlgebraicNumber with_certificate(IrreducibilityCertificate c) const {
        AlgebraicNumber r = *this;
        r.cert_ = std::move(c);
        return r;
    }

    /// The exact value when the number is rational (degree 1 or the
    /// isolated root is a rational root of the defining polynomial hit by
    /// an endpoint).
    std::optional<Rational> as_rational() const {
        if (f_.degree() == 1) return -f_.coeff(0) / f_.coeff(1);
        if (f_.sign_at(iv_.hi) == 0) return iv_.hi;
        return std::nullopt;
    }

    /// One bisection step; the root stays isolated.
    AlgebraicNumber bisected() const {
        AlgebraicNumber r = *this;
        r.bisect_in_place();
        return r;
    }

    /// Interval width <= width (same root).
    AlgebraicNumber refined(const Rational& width) const {
        if (width.sign() <= 0) throw DomainError("refinement width must be positive");
        AlgebraicNumber r = *this;
        while (r.iv_.width() > width) r.bisect_in_place();
        return r;
    }

    /// Sign compared with a rational: -1, 0, +1 for (this < q, ==, >).
    int compare(const Rational& q) const {
        AlgebraicNumber r = *this;
        for (;;) {
            if (q <= r.iv_.lo) return 1;
            if (q > r.iv_.hi) return -1;
            if (q == r.iv_.hi) {
                if (r.f_.sign_at(q) == 0) return 0;
                return -1;
            }
            // lo < q < hi
            if (r.f_.sign_at(q) == 0) return 0;
            if (chain_count(*r.chain_, r.iv_.lo, q) == 1) return -1;
            return 1;
        }
    }

    std::string to_string() const {
        return "root of " + f_.to_string() + " in (" + iv_.lo.to_string() + ", " + iv_.hi.to_string() + "]";
    }

private:
    void bisect_in_place() {
        Rational mid = iv_.midpoint();
        int smid = f_.sign_at(mid);
        if (smid == 0) {
            // the isolated root is exactly mid
            Rational w = iv_.width() / Rational(4);
            iv_ = {mid - w, mid};
            return;
        }
        int slo = f_.sign_at(iv_.lo);
        bool left;
        if (slo != 0) {
            left = slo != smid;
        } else {
            left = chain_count(*chain_, iv_.lo, mid) == 1;
        }
        if (left) iv_.hi = mid;
        else iv_.lo = mid;
    }

    UPoly f_;
    IsolatingInterval iv_;
    std::shared_ptr<const SturmChain> chain_;
    std::optional<IrreducibilityCertificate> cert_;
};

/// Refined copy with interval width at most `width`.
inline AlgebraicNumber refine_root(const AlgebraicNumber& a, const Rational& width) { return a.refined(width); }

/// Real roots of f in (lo, hi] as algebraic numbers, ascending.
inline std::vector<AlgebraicNumber> real_roots(const UPoly& f, const ExtRational& lo = ExtRational::neg_inf(),
                                               const ExtRational& hi = ExtRational::pos_inf()) {
    std::vector<AlgebraicNumber> out;
    UPoly g = squarefree_part(f);
    for (const auto& iv : isolate_roots(g, lo, hi)) out.emplace_back(g, iv);
    return out;
}

/// Exact sign of h at the algebraic number a. Interval evaluation over a
/// shrinking isolating interval settles nonzero signs; zero is detected
/// through gcd(h, defining) having a root inside the interval, so no
/// irreducibility certificate is needed.
inline int sign_at(const UPoly& h, const AlgebraicNumber& a) {
    if (auto q = a.as_rational()) return h.sign_at(*q);
    const UPoly& m = a.defining();
    UPoly r = poly_rem(h, m);
    if (r.is_zero()) return 0;
    if (r.degree() == 0) return r.leading().sign();
    AlgebraicNumber b = a;
    for (int step = 0;; ++step) {
        const int s = eval_interval(r, Interval{b.interval().lo, b.interval().hi}).certain_sign();
        if (s) return s;
        if (step == 8) {
            UPoly g = poly_gcd(r, m);
            if (g.degree() >= 1 && count_real_roots(g, b.interval().lo, b.interval().hi) >= 1) return 0;
        }
        b = b.bisected();
    }
}

/// Whether two algebraic numbers are the same real number.
inline bool algebraic_equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    Rational lo = std::max(a.interval().lo, b.interval().lo), hi = std::min(a.interval().hi, b.interval().hi);
    if (!(lo < hi)) return false;
    UPoly g = poly_gcd(a.defining(), b.defining());
    if (g.degree() < 1) return false;
    return count_real_roots(g, lo, hi) >= 1;
}

/// p + q * sqrt(c): exact closed form of a root of a degree <= 2 polynomial.
struct QuadraticSurd {
    Rational p;
    Rational q;
    BigInt c;

    std::string to_string() const {
        if (q.is_zero()) return p.to_string();
        return "(" + p.to_string() + ") + (" + q.to_string() + ")*sqrt(" + c.to_string() + ")";
    }
    double approx() const;
};

namespace detail {

/// d = s^2 * c with c squarefree (c carries the sign of d).
inline std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& d) {
    BigInt m = d.abs(), s(1), c(d.sign() < 0 ? -1 : 1);
    for (long p = 2; p <= 1000000 && BigInt(p) * BigInt(p) <= m; ++p) {
        const BigInt bp(p), bp2 = bp * bp;
        while ((m % bp2).is_zero()) {
            m = BigInt::divexact(m, bp2);
            s *= bp;
        }
        if ((m % bp).is_zero()) {
            m = BigInt::divexact(m, bp);
            c *= bp;
        }
    }
    BigInt r = BigInt::isqrt(m);
    if (r * r == m) {
        s *= r;
    } else {
        if (m >= BigInt::pow(BigInt(10), 18))
            throw Unsupported("cannot certify squarefree part of " + d.to_string());
        c *= m;
    }
    return {s, c};
}

}  // namespace detail

/// Closed form of a degree <= 2 algebraic number, choosing the branch that
/// lies in the isolating interval. Degree 1 (or a rational root) returns
/// q = 0, c = 0.
inline QuadraticSurd radical_form_deg2(const AlgebraicNumber& a) {
    const UPoly& f = a.defining();
    if (f.degree() > 2) throw Unsupported("radical_form_deg2 needs degree <= 2, got " + std::to_string(f.degree()));
    if (auto r = a.as_rational()) return {*r, Rational(0), BigInt(0)};
    UPoly g = f.integer_cleared();
    const BigInt A = g.coeff(2).num(), B = g.coeff(1).num(), C = g.coeff(0).num();
    BigInt disc = B * B - BigInt(4) * A * C;
    auto [s, c] = detail::squarefree_decompose(disc);
    if (c == BigInt(1)) {
        // rational roots after all
        for (const auto& root : rational_roots(g))
            if (a.compare(root) == 0) return {root, Rational(0), BigInt(0)};
    }
    const Rational p(-B, BigInt(2) * A);
    const Rational q(s, BigInt(2) * A);
    // the two roots are p - |q| sqrt(c) < p + |q| sqrt(c); p is strictly between
    int side = a.compare(p);
    Rational qq = q.abs();
    if (side < 0) qq = -qq;
    return {p, qq, c};
}

inline double QuadraticSurd::approx() const { return p.to_double() + q.to_double() * std::sqrt(c.to_double()); }

}  // namespace algne
