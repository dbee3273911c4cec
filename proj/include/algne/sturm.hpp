#pragma once

// Sturm chains and real-root counting / isolation for rational polynomials.

#include <algne/upoly.hpp>

#include <optional>
#include <vector>

namespace algne {

/// A rational or one of the two infinities.
class ExtRational {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtRational(const Rational& v) : kind_(Kind::Finite), v_(v) {}
    ExtRational(int v) : kind_(Kind::Finite), v_(v) {}
    static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }
    static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const Rational& value() const { return v_; }

    std::string to_string() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "inf";
            default: return v_.to_string();
        }
    }

private:
    explicit ExtRational(Kind k) : kind_(k) {}
    Kind kind_;
    Rational v_;
};

/// Half-open interval (lo, hi].
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// p_0 = f, p_1 = f', p_{k+1} = -rem(p_{k-1}, p_k), stopping before the first
/// zero remainder. Entries are stored unscaled.
class SturmChain {
public:
    explicit SturmChain(const UPoly& f) {
        if (f.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
        polys_.push_back(f);
        UPoly d = f.derivative();
        if (d.is_zero()) return;
        polys_.push_back(d);
        for (;;) {
            UPoly r = poly_rem(polys_[polys_.size() - 2], polys_.back());
            if (r.is_zero()) break;
            polys_.push_back(-r);
        }
    }

    const std::vector<UPoly>& polys() const { return polys_; }
    std::size_t size() const { return polys_.size(); }
    const UPoly& operator[](std::size_t i) const { return polys_[i]; }
    /// Last entry: a nonzero constant iff p_0 is squarefree.
    const UPoly& last() const { return polys_.back(); }

private:
    std::vector<UPoly> polys_;
};

namespace detail {

inline int sign_at_ext(const UPoly& p, const ExtRational& a) {
    switch (a.kind()) {
        case ExtRational::Kind::PosInf: return p.leading().sign();
        case ExtRational::Kind::NegInf: return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign();
        default: return p.sign_at(a.value());
    }
}

inline unsigned count_changes(const std::vector<int>& signs) {
    unsigned changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace detail

/// V(a): sign alternations of the chain at a, zeros skipped.
inline unsigned sign_changes_at(const SturmChain& chain, const ExtRational& a) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain.polys()) signs.push_back(detail::sign_at_ext(p, a));
    return detail::count_changes(signs);
}

/// Number of distinct real roots of a chain's p_0 in (lo, hi].
inline unsigned chain_count(const SturmChain& chain, const ExtRational& lo, const ExtRational& hi) {
    unsigned vl = sign_changes_at(chain, lo), vh = sign_changes_at(chain, hi);
    return vl >= vh ? vl - vh : 0;
}

/// Exact number of distinct real roots of f in (lo, hi].
inline unsigned count_real_roots(const UPoly& f, const ExtRational& lo, const ExtRational& hi) {
    if (f.is_zero()) throw DomainError("count_real_roots of the zero polynomial");
    if (f.degree() == 0) return 0;
    return chain_count(SturmChain(squarefree_part(f)), lo, hi);
}

/// 1 + max |a_i / a_d|; every complex root has modulus below it.
inline Rational cauchy_bound(const UPoly& f) {
    Rational m;
    for (int i = 0; i < f.degree(); ++i) {
        Rational r = (f.coeff(i) / f.leading()).abs();
        if (r > m) m = r;
    }
    return m + Rational(1);
}

namespace detail {

/// A split point strictly inside (lo, hi) that is not a root of f.
inline Rational split_point(const UPoly& f, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / Rational(2);
    if (f.sign_at(mid) != 0) return mid;
    mid = (lo + Rational(2) * hi) / Rational(3);
    for (int k = 4; f.sign_at(mid) == 0; ++k) mid = lo + (hi - lo) * Rational(k - 1) / Rational(k);
    return mid;
}

inline void isolate_rec(const SturmChain& chain, const Rational& lo, const Rational& hi, unsigned vlo, unsigned vhi,
                        std::vector<IsolatingInterval>& out) {
    unsigned n = vlo >= vhi ? vlo - vhi : 0;
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rational mid = split_point(chain[0], lo, hi);
    unsigned vmid = sign_changes_at(chain, mid);
    isolate_rec(chain, lo, mid, vlo, vmid, out);
    isolate_rec(chain, mid, hi, vmid, vhi, out);
}

}  // namespace detail

/// Disjoint (lo, hi] intervals, one per distinct real root of f in the given
/// range, in increasing order.
inline std::vector<IsolatingInterval> isolate_roots(const UPoly& f, const ExtRational& lo = ExtRational::neg_inf(),
                                                    const ExtRational& hi = ExtRational::pos_inf()) {
    if (f.is_zero()) throw DomainError("isolate_roots of the zero polynomial");
    std::vector<IsolatingInterval> out;
    if (f.degree() == 0) return out;
    UPoly g = squarefree_part(f);
    SturmChain chain(g);
    Rational b = cauchy_bound(g);
    Rational a = lo.finite() ? std::max(lo.value(), -b) : -b;
    Rational c = hi.finite() ? std::min(hi.value(), b) : b;
    if (lo.kind() == ExtRational::Kind::PosInf || hi.kind() == ExtRational::Kind::NegInf || !(a < c)) return out;
    detail::isolate_rec(chain, a, c, sign_changes_at(chain, a), sign_changes_at(chain, c), out);
    return out;
}

}  // namespace algne
