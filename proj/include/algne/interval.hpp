#pragma once

// Closed rational intervals with outward-exact arithmetic.

#include <algne/mpoly.hpp>

#include <algorithm>

namespace algne {

struct Interval {
    Rational lo;
    Rational hi;

    static Interval point(const Rational& v) { return {v, v}; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    /// +1 / -1 when every point is positive / negative, 0 otherwise.
    int certain_sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }

    friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
    }
    friend Interval operator*(const Rational& s, const Interval& a) {
        return s.sign() >= 0 ? Interval{s * a.lo, s * a.hi} : Interval{s * a.hi, s * a.lo};
    }
};

/// [a,b]^e (exact range, even powers straddling 0 start at 0).
inline Interval ipow(const Interval& a, unsigned e) {
    if (e == 0) return Interval::point(Rational(1));
    Rational l = Rational::pow(a.lo, e), h = Rational::pow(a.hi, e);
    if (e % 2 == 1) return {l, h};
    if (a.lo.sign() >= 0) return {l, h};
    if (a.hi.sign() <= 0) return {h, l};
    return {Rational(0), std::max(l, h)};
}

/// Horner-free enclosure of f over a box of per-variable intervals.
inline Interval eval_interval(const MPoly& f, const std::vector<Interval>& box) {
    if (box.size() != f.nvars() && !f.is_zero()) throw DomainError("box dimension mismatch");
    Interval acc = Interval::point(Rational(0));
    for (const auto& t : f.terms()) {
        Interval v = Interval::point(t.coef);
        for (std::size_t i = 0; i < f.nvars(); ++i)
            if (t.mono[i]) v = v * ipow(box[i], t.mono[i]);
        acc = acc + v;
    }
    return acc;
}

/// Enclosure of a univariate polynomial over an interval (Horner form).
inline Interval eval_interval(const UPoly& f, const Interval& x) {
    Interval acc = Interval::point(Rational(0));
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + Interval::point(f.coeff(i));
    return acc;
}

}  // namespace algne
