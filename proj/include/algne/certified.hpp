#pragma once

// Equilibria with per-coordinate certificates, and G_n reports assembled
// from the solved factors of its recipe.

#include <algne/constructions.hpp>
#include <algne/galois.hpp>
#include <algne/solver.hpp>

#include <map>

namespace algne {

struct CoordinateReport {
    std::size_t player = 0;
    AlgebraicNumber x = AlgebraicNumber::from_rational(Rational(0));
    PolyCertificate certificate;
    std::optional<std::size_t> mirrors;  ///< earlier player with the same value
    std::optional<QuadraticSurd> closed_form;
};

/// Certificates keyed by the integer-cleared polynomial text.
class CertificateCache {
public:
    explicit CertificateCache(std::uint64_t prime_bound = 100000) : bound_(prime_bound) {}

    const PolyCertificate& get(const UPoly& f) {
        const UPoly g = f.integer_cleared();
        auto key = g.to_string();
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, certify(g, bound_)).first;
        return it->second;
    }

private:
    std::uint64_t bound_;
    std::map<std::string, PolyCertificate> cache_;
};

inline std::vector<CoordinateReport> certify_profile(const MixedProfile& x, CertificateCache& cache) {
    std::vector<CoordinateReport> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        CoordinateReport c;
        c.player = i;
        c.certificate = cache.get(x[i].defining());
        c.x = c.certificate.irreducibility ? x[i].with_certificate(*c.certificate.irreducibility) : x[i];
        for (std::size_t j = 0; j < i && !c.mirrors; ++j)
            if (out[j].certificate.poly == c.certificate.poly && algebraic_equal(out[j].x, x[i])) c.mirrors = j;
        if (c.x.degree() <= 2) c.closed_form = radical_form_deg2(c.x);
        out.push_back(std::move(c));
    }
    return out;
}

struct FactorReport {
    Factor factor;
    std::size_t offset = 0;  ///< index of the factor's first player
    std::shared_ptr<const EquilibriumReport> report;
};

/// Solved factors shared between recipes.
class FactorCache {
public:
    explicit FactorCache(SolveOptions opt = {}) : opt_(opt) {}

    std::shared_ptr<const EquilibriumReport> get(Factor f) {
        auto it = cache_.find(f);
        if (it == cache_.end())
            it = cache_.emplace(f, std::make_shared<const EquilibriumReport>(solve_all_ne(make_factor(f), opt_))).first;
        return it->second;
    }

private:
    SolveOptions opt_;
    std::map<Factor, std::shared_ptr<const EquilibriumReport>> cache_;
};

/// The equilibrium of G_n put together factor by factor. With more than one
/// factor the verdict rests on NE(A x B) = NE(A) x NE(B) rather than on
/// enumerating all 3^n faces; `exhaustive` records which case applies.
struct ComposedReport {
    GnRecipe recipe;
    std::vector<FactorReport> factors;
    MixedProfile x;
    std::vector<CoordinateReport> coordinates;
    Uniqueness uniqueness = Uniqueness::Unresolved;
    bool exhaustive = false;
};

inline ComposedReport compose_gn(std::size_t n, FactorCache& factors, CertificateCache& certs) {
    ComposedReport r;
    r.recipe = gn_recipe(n);
    r.exhaustive = r.recipe.factors.size() == 1;
    r.uniqueness = Uniqueness::Unique;
    std::size_t offset = 0;
    for (auto f : r.recipe.factors) {
        auto rep = factors.get(f);
        r.factors.push_back({f, offset, rep});
        offset += factor_players(f);
        if (rep->uniqueness != Uniqueness::Unique) {
            r.uniqueness = rep->uniqueness;
            r.x.clear();
            continue;
        }
        if (r.uniqueness != Uniqueness::Unique) continue;
        auto px = rep->profiles().front();
        r.x.insert(r.x.end(), px.begin(), px.end());
    }
    if (r.uniqueness == Uniqueness::Unique) r.coordinates = certify_profile(r.x, certs);
    return r;
}

}  // namespace algne
