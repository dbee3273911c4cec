#pragma once

// Exact scalars: arbitrary-precision integers and rationals, word-size prime
// fields and Miller-Rabin primality.

#include <algne/error.hpp>

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

namespace algne {

/// Arbitrary-precision signed integer. Canonical by construction (GMP keeps
/// no leading zero limbs and zero has sign 0).
class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : v_(v) {}
    BigInt(long v) : v_(v) {}
    BigInt(long long v) : v_(static_cast<long>(v)) {}
    BigInt(unsigned v) : v_(v) {}
    BigInt(unsigned long v) : v_(v) {}
    BigInt(unsigned long long v) : v_(static_cast<unsigned long>(v)) {}
    explicit BigInt(const mpz_class& v) : v_(v) {}
    explicit BigInt(mpz_class&& v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal integer.
    static BigInt parse(std::string_view s) {
        std::string t(trim(s));
        if (t.empty()) throw ParseError("empty integer literal");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw ParseError("bad integer literal '" + t + "'");
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') throw ParseError("bad integer literal '" + t + "'");
        if (t[0] == '+') t.erase(0, 1);
        return BigInt(mpz_class(t, 10));
    }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    bool fits_u64() const { return sign() >= 0 && mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64; }
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const { return v_.get_si(); }
    std::uint64_t to_u64() const {
        std::uint64_t out = 0;
        mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v_.get_mpz_t());
        return out;
    }
    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }
    /// Residue in [0, m) for a positive machine modulus.
    std::uint64_t mod_u64(std::uint64_t m) const {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v_.get_mpz_t(), BigInt(m).v_.get_mpz_t());
        return BigInt(r).to_u64();
    }
    double to_double() const { return v_.get_d(); }

    std::string to_string() const { return v_.get_str(10); }
    const mpz_class& raw() const { return v_; }
    mpz_class& raw() { return v_; }

    BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }
    BigInt operator-() const { return BigInt(mpz_class(-v_)); }

    BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
    BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
    BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
    /// Truncating division; throws on a zero divisor.
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw DivisionByZero("integer division by zero");
        return BigInt(mpz_class(a.v_ / b.v_));
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw DivisionByZero("integer remainder by zero");
        return BigInt(mpz_class(a.v_ % b.v_));
    }
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.to_string(); }

    /// Exact quotient; caller guarantees b | a.
    static BigInt divexact(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw DivisionByZero("exact division by zero");
        BigInt r;
        mpz_divexact(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return r;
    }
    static BigInt pow(const BigInt& b, unsigned long e) {
        BigInt r;
        mpz_pow_ui(r.v_.get_mpz_t(), b.v_.get_mpz_t(), e);
        return r;
    }
    /// Integer square root (floor); requires a >= 0.
    static BigInt isqrt(const BigInt& a) {
        if (a.sign() < 0) throw DomainError("isqrt of a negative integer");
        BigInt r;
        mpz_sqrt(r.v_.get_mpz_t(), a.v_.get_mpz_t());
        return r;
    }

private:
    static std::string_view trim(std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    }

    mpz_class v_;
};

/// Nonnegative greatest common divisor; gcd(0, 0) = 0.
inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.raw().get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return r;
}

inline BigInt lcm_int(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.raw().get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return r;
}

/// Exact rational num/den with den > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(const BigInt& n) : v_(n.raw()) {}
    Rational(const BigInt& n, const BigInt& d) {
        if (d.is_zero()) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(n.raw(), d.raw());
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "a" or "a/b" (optionally signed, whitespace tolerant) and
    /// decimals such as "0.3".
    static Rational parse(std::string_view s) {
        std::string t;
        for (char c : s)
            if (c != ' ' && c != '\t' && c != '\r' && c != '\n') t.push_back(c);
        if (t.empty()) throw ParseError("empty rational literal");
        auto slash = t.find('/');
        if (slash != std::string::npos)
            return Rational(BigInt::parse(t.substr(0, slash)), BigInt::parse(t.substr(slash + 1)));
        auto dot = t.find('.');
        if (dot != std::string::npos) {
            std::string digits = t.substr(0, dot) + t.substr(dot + 1);
            std::size_t frac = t.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad decimal literal '" + t + "'");
            return Rational(BigInt::parse(digits), BigInt::pow(BigInt(10), frac));
        }
        return Rational(BigInt::parse(t));
    }

    BigInt num() const { return BigInt(v_.get_num()); }
    BigInt den() const { return BigInt(v_.get_den()); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    std::string to_string() const { return v_.get_str(10); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        Rational r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { Rational r; r.v_ = a.v_ + b.v_; return r; }
    friend Rational operator-(const Rational& a, const Rational& b) { Rational r; r.v_ = a.v_ - b.v_; return r; }
    friend Rational operator*(const Rational& a, const Rational& b) { Rational r; r.v_ = a.v_ * b.v_; return r; }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("rational division by zero");
        Rational r;
        r.v_ = a.v_ / b.v_;
        return r;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

    static Rational pow(const Rational& b, unsigned e) {
        Rational r(1);
        Rational base = b;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return r;
    }
    /// Largest integer <= r.
    static BigInt floor(const Rational& r) {
        BigInt q;
        mpz_fdiv_q(q.raw().get_mpz_t(), r.v_.get_num_mpz_t(), r.v_.get_den_mpz_t());
        return q;
    }
    static BigInt ceil(const Rational& r) {
        BigInt q;
        mpz_cdiv_q(q.raw().get_mpz_t(), r.v_.get_num_mpz_t(), r.v_.get_den_mpz_t());
        return q;
    }

private:
    mpq_class v_;
};

// ---------------------------------------------------------------------------
// Word-size modular arithmetic

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1u) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1u;
    }
    return r;
}

/// Element of Z/pZ for a word-size prime p.
class PrimeField {
public:
    PrimeField(std::uint64_t value, std::uint64_t modulus) : p_(modulus), v_(value % modulus) {
        if (modulus < 2) throw DomainError("prime field modulus must be >= 2");
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend PrimeField operator+(PrimeField a, PrimeField b) {
        check(a, b);
        std::uint64_t s = a.v_ + b.v_;
        return {s >= a.p_ ? s - a.p_ : s, a.p_};
    }
    friend PrimeField operator-(PrimeField a, PrimeField b) {
        check(a, b);
        return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_};
    }
    friend PrimeField operator*(PrimeField a, PrimeField b) {
        check(a, b);
        return {mulmod(a.v_, b.v_, a.p_), a.p_};
    }
    PrimeField inverse() const {
        if (v_ == 0) throw DivisionByZero("inverse of zero in prime field");
        return {powmod(v_, p_ - 2, p_), p_};
    }
    friend bool operator==(PrimeField a, PrimeField b) { return a.p_ == b.p_ && a.v_ == b.v_; }

private:
    static void check(PrimeField a, PrimeField b) {
        if (a.p_ != b.p_) throw DomainError("prime field modulus mismatch");
    }

    std::uint64_t p_;
    std::uint64_t v_;
};

/// base^exp by square-and-multiply with a big exponent.
inline PrimeField mod_pow(PrimeField base, const BigInt& exp) {
    if (exp.sign() < 0) throw DomainError("negative exponent in mod_pow");
    PrimeField r(1, base.modulus());
    for (std::size_t i = exp.bit_length(); i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(exp.raw().get_mpz_t(), i)) r = r * base;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Primality

namespace detail {

inline constexpr std::array<std::uint64_t, 12> kMillerRabinBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

inline bool mr_round_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline bool mr_round_big(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
    mpz_class nm1 = n - 1;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == nm1) return true;
    }
    return false;
}

}  // namespace detail

/// Miller-Rabin with the first twelve prime bases, which is deterministic for
/// n < 3.3e24. Larger inputs additionally run 64 rounds with pseudo-random
/// bases from a fixed seed.
inline bool is_prime(const BigInt& n) {
    if (n.sign() < 0) throw DomainError("is_prime requires n >= 0");
    if (n < BigInt(2)) return false;
    for (std::uint64_t p : detail::kMillerRabinBases) {
        if (n == BigInt(p)) return true;
        if (n.mod_u64(p) == 0) return false;
    }
    if (n.fits_u64()) {
        std::uint64_t m = n.to_u64();
        std::uint64_t d = m - 1;
        int s = 0;
        while ((d & 1u) == 0) { d >>= 1u; ++s; }
        for (std::uint64_t a : detail::kMillerRabinBases)
            if (!detail::mr_round_u64(m, a, d, s)) return false;
        return true;
    }
    const mpz_class& m = n.raw();
    mpz_class d = m - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (std::uint64_t a : detail::kMillerRabinBases)
        if (!detail::mr_round_big(m, mpz_class(static_cast<unsigned long>(a)), d, s)) return false;
    static const BigInt kDeterministicLimit = BigInt::parse("3317044064679887385961981");
    if (n < kDeterministicLimit) return true;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eed);
    mpz_class range = m - 4;
    for (int round = 0; round < 64; ++round) {
        mpz_class a = rng.get_z_range(range) + 2;
        if (!detail::mr_round_big(m, a, d, s)) return false;
    }
    return true;
}

inline bool is_prime_u64(std::uint64_t n) { return is_prime(BigInt(n)); }

/// Smallest prime strictly greater than n (word size).
inline std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime_u64(c)) ++c;
    return c;
}

}  // namespace algne

template <>
struct std::hash<algne::BigInt> {
    std::size_t operator()(const algne::BigInt& b) const noexcept {
        return std::hash<std::string>{}(b.to_string());
    }
};
