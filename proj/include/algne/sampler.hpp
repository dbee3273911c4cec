#pragma once

// Exact Bernoulli draws with algebraic success probabilities: the uniform
// variate is revealed bit by bit and compared against an isolating
// interval of p, refining whichever interval is wider.

#include <algne/solver.hpp>

#include <random>
#include <string>
#include <variant>

namespace algne {

/// Fair bits from a seeded mt19937_64, optionally preceded by a fixed
/// script of bits.
class BitSource {
public:
    explicit BitSource(std::uint64_t seed = 1) : rng_(seed) {}

    static BitSource scripted(std::string bits, std::uint64_t seed = 1) {
        for (char c : bits)
            if (c != '0' && c != '1') throw DomainError("scripted bits must be 0 or 1");
        BitSource s(seed);
        s.script_ = std::move(bits);
        return s;
    }

    int next() {
        ++consumed_;
        if (pos_ < script_.size()) return script_[pos_++] - '0';
        if (left_ == 0) {
            word_ = rng_();
            left_ = 64;
        }
        --left_;
        const int b = static_cast<int>(word_ & 1u);
        word_ >>= 1u;
        return b;
    }

    std::size_t consumed() const { return consumed_; }

private:
    std::mt19937_64 rng_;
    std::string script_;
    std::size_t pos_ = 0;
    std::uint64_t word_ = 0;
    int left_ = 0;
    std::size_t consumed_ = 0;
};

struct SampleTrace {
    std::size_t bits = 0;
    int action = 0;  ///< 0 iff U < p
    std::size_t refinements = 0;
};

using Probability = std::variant<Rational, AlgebraicNumber>;

namespace detail {

inline void check_probability(const Probability& p) {
    if (const auto* q = std::get_if<Rational>(&p)) {
        if (q->sign() < 0 || *q > Rational(1)) throw DomainError("probability " + q->to_string() + " is outside [0,1]");
        return;
    }
    const auto& a = std::get<AlgebraicNumber>(p);
    if (a.compare(Rational(0)) < 0 || a.compare(Rational(1)) > 0)
        throw DomainError("probability " + a.to_string() + " is outside [0,1]");
}

}  // namespace detail

/// Returns action 0 with probability exactly p. U's dyadic interval
/// [m/2^k, (m+1)/2^k) and p's interval are compared until disjoint; p is
/// bisected only when it is the wider of the two.
inline std::pair<int, SampleTrace> bernoulli(const Probability& p, BitSource& src) {
    detail::check_probability(p);
    SampleTrace t;
    std::optional<AlgebraicNumber> alg;
    Rational plo, phi;
    if (const auto* q = std::get_if<Rational>(&p)) {
        plo = phi = *q;
    } else if (auto r = std::get<AlgebraicNumber>(p).as_rational()) {
        plo = phi = *r;
    } else {
        alg = std::get<AlgebraicNumber>(p);
        plo = alg->interval().lo;
        phi = alg->interval().hi;
    }
    BigInt m(0);
    Rational width(1);
    for (;;) {
        m = m * BigInt(2) + BigInt(src.next());
        width = width / Rational(2);
        ++t.bits;
        const Rational ulo = Rational(m) * width, uhi = ulo + width;
        for (;;) {
            if (uhi <= plo) {
                t.action = 0;
                return {0, t};
            }
            if (ulo >= phi) {
                t.action = 1;
                return {1, t};
            }
            if (!alg || phi - plo <= width) break;
            *alg = alg->bisected();
            plo = alg->interval().lo;
            phi = alg->interval().hi;
            ++t.refinements;
        }
    }
}

/// Independent draws for every player of a single equilibrium. The
/// probabilities are pre-refined once so that draws rarely bisect.
class ProfileSampler {
public:
    explicit ProfileSampler(const EquilibriumReport& report) {
        if (report.equilibrium_count() != 1) throw DomainError("sampling needs a report with exactly one equilibrium");
        if (!report.pure_nes.empty()) {
            for (int a : report.pure_nes.front()) probs_.emplace_back(Rational(a == 0 ? 1 : 0));
            return;
        }
        for (const auto& x : report.mixed_nes.front().x) {
            if (auto q = x.as_rational()) probs_.emplace_back(*q);
            else probs_.emplace_back(x.refined(Rational(BigInt(1), BigInt::pow(BigInt(2), 40))));
        }
    }

    explicit ProfileSampler(std::vector<Probability> probs) : probs_(std::move(probs)) {
        for (const auto& p : probs_) detail::check_probability(p);
    }

    const std::vector<Probability>& probabilities() const { return probs_; }

    Profile draw(BitSource& src, std::size_t* bits = nullptr) const {
        Profile a;
        for (const auto& p : probs_) {
            auto [action, trace] = bernoulli(p, src);
            a.push_back(action);
            if (bits) *bits += trace.bits;
        }
        return a;
    }

private:
    std::vector<Probability> probs_;
};

inline Profile sample_profile(const EquilibriumReport& report, BitSource& src) { return ProfileSampler(report).draw(src); }

}  // namespace algne
