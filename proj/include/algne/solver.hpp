#pragma once

// Equilibria by support enumeration: every support in {0, 1, mixed}^n is a
// face whose polynomial system is solved exactly, then the sign conditions
// of the pure players are checked at each solution.

#include <algne/game.hpp>
#include <algne/zerodim.hpp>

#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace algne {

enum class Play { Zero, One, Mixed };
using Support = std::vector<Play>;

inline char play_char(Play p) { return p == Play::Zero ? '0' : p == Play::One ? '1' : 'M'; }

inline std::string support_code(const Support& s) {
    std::string c;
    for (Play p : s) c += play_char(p);
    return c;
}

inline Support parse_support(std::string_view code) {
    Support s;
    for (char c : code) {
        if (c == '0') s.push_back(Play::Zero);
        else if (c == '1') s.push_back(Play::One);
        else if (c == 'M' || c == 'm') s.push_back(Play::Mixed);
        else throw ParseError("support codes use 0, 1 and M");
    }
    return s;
}

/// Probability of action 0 per player.
using MixedProfile = std::vector<AlgebraicNumber>;

inline MixedProfile rational_profile(const std::vector<Rational>& x) {
    MixedProfile p;
    for (const auto& v : x) p.push_back(AlgebraicNumber::from_rational(v));
    return p;
}

/// f_i <= 0 (required = -1) or f_i >= 0 (required = +1) for a pure player.
struct SignCondition {
    std::size_t player;
    int required;
    MPoly poly;
};

struct FaceSystem {
    Support support;
    std::vector<std::size_t> mixed;
    std::vector<MPoly> equations;  ///< nonzero, over the mixed variables
    std::vector<SignCondition> conditions;
};

/// Pure players (x_i = 0 for Zero, x_i = 1 for One) are substituted; each
/// mixed player contributes f_i = 0, each pure player a sign condition.
inline FaceSystem face_system(const std::vector<MPoly>& ap, const Support& s) {
    if (ap.size() != s.size()) throw DomainError("support length differs from the player count");
    FaceSystem fs{s, {}, {}, {}};
    auto substituted = [&](MPoly f) {
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s[j] != Play::Mixed) f = f.substitute(j, Rational(s[j] == Play::Zero ? 0 : 1));
        return f;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        MPoly f = substituted(ap[i]);
        if (s[i] == Play::Mixed) {
            fs.mixed.push_back(i);
            if (!f.is_zero()) fs.equations.push_back(std::move(f));
        } else {
            fs.conditions.push_back({i, s[i] == Play::Zero ? -1 : 1, std::move(f)});
        }
    }
    return fs;
}

/// A solved connected component of a face.
struct SolvedBlock {
    std::vector<MPoly> equations;
    BlockPoint point;
};

/// An accepted point together with the exact data behind it.
struct Equilibrium {
    Support support;
    MixedProfile x;
    std::vector<UPoly> defining;  ///< integer-cleared, per player
    std::vector<SolvedBlock> blocks;
};

enum class FaceStatus { NoSolution, Points, PositiveDimensional };
enum class RejectReason { NoSolution, OutsideBox, SignViolation };
enum class FamilyVerdict { NoEquilibrium, HasEquilibria, Unresolved };

inline std::string reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::NoSolution: return "no-solution";
        case RejectReason::OutsideBox: return "outside-box";
        case RejectReason::SignViolation: return "sign-violation";
    }
    return "?";
}

inline std::string verdict_name(FamilyVerdict v) {
    switch (v) {
        case FamilyVerdict::NoEquilibrium: return "no-equilibrium";
        case FamilyVerdict::HasEquilibria: return "has-equilibria";
        case FamilyVerdict::Unresolved: return "unresolved";
    }
    return "?";
}

struct Rejection {
    RejectReason reason;
    std::string detail;
};

struct FaceResult {
    Support support;
    FaceStatus status = FaceStatus::NoSolution;
    std::vector<Equilibrium> accepted;
    std::vector<Rejection> rejected;
    // positive-dimensional faces only
    std::optional<GroebnerBasis> basis;
    FamilyVerdict family = FamilyVerdict::NoEquilibrium;
    std::optional<Equilibrium> witness;
};

struct SolveOptions {
    std::size_t max_players = 12;
    unsigned refine_budget = 256;
    unsigned witness_attempts = 24;
    std::uint64_t seed = 1;
};

namespace detail {

inline bool sign_to_required_ok(int sign, int required) { return sign * required >= 0; }

inline std::string condition_text(const SignCondition& c, int sign) {
    const char* rel = sign > 0 ? "> 0" : sign < 0 ? "< 0" : "= 0";
    return "f" + std::to_string(c.player + 1) + " " + rel + " but x" + std::to_string(c.player + 1) + " = " +
           (c.required < 0 ? "0" : "1");
}

/// Memo of block solutions keyed by the block's equations.
class BlockCache {
public:
    struct Entry {
        bool positive_dimensional = false;
        ZeroDimStats stats;
        std::vector<BlockPoint> points;
    };

    const Entry& solve(const std::vector<MPoly>& eqs, const std::vector<std::size_t>& vars) {
        std::string key;
        for (auto v : vars) key += std::to_string(v) + ",";
        key += "|";
        std::vector<std::string> es;
        for (const auto& e : eqs) es.push_back(e.monic().to_string());
        std::sort(es.begin(), es.end());
        for (const auto& e : es) key += e + ";";
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Entry e;
        try {
            e.points = solve_zero_dimensional(eqs, vars, true, &e.stats);
        } catch (const PositiveDimensional&) {
            e.positive_dimensional = true;
        }
        return memo_.emplace(key, std::move(e)).first->second;
    }

private:
    std::map<std::string, Entry> memo_;
};

/// Variables joined by shared equations.
inline std::vector<std::vector<std::size_t>> components(const std::vector<std::size_t>& vars,
                                                       const std::vector<MPoly>& eqs,
                                                       std::vector<std::vector<std::size_t>>* eq_of_block) {
    std::map<std::size_t, std::size_t> parent;
    for (auto v : vars) parent[v] = v;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : eqs) {
        auto used = e.used_vars();
        for (std::size_t k = 1; k < used.size(); ++k) parent[find(used[k])] = find(used[0]);
    }
    std::map<std::size_t, std::size_t> root_index;
    std::vector<std::vector<std::size_t>> blocks;
    for (auto v : vars) {
        auto r = find(v);
        auto [it, fresh] = root_index.emplace(r, blocks.size());
        if (fresh) blocks.emplace_back();
        blocks[it->second].push_back(v);
    }
    eq_of_block->assign(blocks.size(), {});
    for (std::size_t k = 0; k < eqs.size(); ++k) {
        auto used = eqs[k].used_vars();
        (*eq_of_block)[root_index.at(find(used.front()))].push_back(k);
    }
    return blocks;
}

/// Closed box [0,1] in the listed variables, points elsewhere.
inline std::vector<Interval> unit_box(std::size_t n) {
    return std::vector<Interval>(n, Interval{Rational(0), Rational(1)});
}

inline bool has_certain_sign_on_box(const MPoly& f, const std::vector<Interval>& box) {
    return eval_interval(f, box).certain_sign() != 0;
}

/// Sign of q (pure players already substituted) at the point spread over
/// the given blocks.
inline int sign_over_blocks(const MPoly& q, const std::vector<SolvedBlock>& blocks, unsigned budget) {
    if (q.is_constant()) return q.is_zero() ? 0 : q.leading_coeff().sign();
    auto used = q.used_vars();
    std::vector<std::size_t> involved;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (auto v : blocks[b].point.vars)
            if (std::find(used.begin(), used.end(), v) != used.end()) {
                involved.push_back(b);
                break;
            }
    if (involved.size() == 1) return sign_at(blocks[involved[0]].point, q);
    std::vector<std::vector<AlgebraicNumber>> coords;
    for (auto b : involved) coords.push_back(blocks[b].point.coords);
    std::vector<Interval> box(q.nvars(), Interval::point(Rational(0)));
    for (unsigned step = 0; step <= budget; ++step) {
        for (std::size_t k = 0; k < involved.size(); ++k) {
            const auto& vars = blocks[involved[k]].point.vars;
            for (std::size_t j = 0; j < vars.size(); ++j)
                box[vars[j]] = Interval{coords[k][j].interval().lo, coords[k][j].interval().hi};
        }
        if (int s = eval_interval(q, box).certain_sign()) return s;
        for (auto& cs : coords)
            for (auto& c : cs) c = c.bisected();
    }
    // the value may be exactly zero: solve the joined blocks together
    std::vector<MPoly> eqs;
    std::vector<std::size_t> vars;
    std::vector<std::pair<std::size_t, const AlgebraicNumber*>> want;
    for (auto b : involved) {
        eqs.insert(eqs.end(), blocks[b].equations.begin(), blocks[b].equations.end());
        for (std::size_t j = 0; j < blocks[b].point.vars.size(); ++j) {
            vars.push_back(blocks[b].point.vars[j]);
            want.emplace_back(vars.size() - 1, &blocks[b].point.coords[j]);
        }
    }
    for (const auto& p : solve_zero_dimensional(eqs, vars, true)) {
        bool same = true;
        for (const auto& [j, c] : want) same = same && algebraic_equal(p.coords[j], *c);
        if (same) return sign_at(p, q);
    }
    throw Error("joined blocks lost the point");
}

inline Equilibrium make_equilibrium(const Support& s, std::vector<SolvedBlock> blocks) {
    Equilibrium e{s, {}, {}, std::move(blocks)};
    const std::size_t n = s.size();
    std::vector<std::optional<AlgebraicNumber>> x(n);
    for (std::size_t i = 0; i < n; ++i)
        if (s[i] != Play::Mixed) x[i] = AlgebraicNumber::from_rational(Rational(s[i] == Play::Zero ? 0 : 1));
    for (const auto& b : e.blocks)
        for (std::size_t j = 0; j < b.point.vars.size(); ++j) x[b.point.vars[j]] = b.point.coords[j];
    for (std::size_t i = 0; i < n; ++i) {
        if (!x[i]) throw Error("player without a coordinate");
        e.x.push_back(*x[i]);
        e.defining.push_back(x[i]->defining().integer_cleared());
    }
    return e;
}

/// Rational stand-ins for witness search.
inline std::vector<Rational> witness_values(std::mt19937_64& rng, unsigned attempt, std::size_t count) {
    static const Rational base[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4),
                                    Rational(3, 4), Rational(2, 5), Rational(3, 5), Rational(1, 5)};
    std::vector<Rational> v;
    for (std::size_t k = 0; k < count; ++k) {
        if (attempt < 8) {
            v.push_back(base[(attempt + k) % 8]);
        } else {
            long d = 7 + static_cast<long>(rng() % 97);
            v.emplace_back(BigInt(1 + static_cast<long>(rng() % static_cast<std::uint64_t>(d - 1))), BigInt(d));
        }
    }
    return v;
}

}  // namespace detail

/// Decides every sign condition at an isolated point; the first violated
/// condition is returned.
inline std::optional<Rejection> check_sign_conditions(const FaceSystem& fs, const std::vector<SolvedBlock>& blocks,
                                                      unsigned budget = 256) {
    for (const auto& c : fs.conditions) {
        int s = detail::sign_over_blocks(c.poly, blocks, budget);
        if (!detail::sign_to_required_ok(s, c.required))
            return Rejection{RejectReason::SignViolation, detail::condition_text(c, s)};
    }
    return std::nullopt;
}

namespace detail {

inline MPoly partial(const MPoly& f, std::size_t v) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        const unsigned e = t.mono[v];
        if (!e) continue;
        Monomial m = t.mono;
        m.set(v, e - 1);
        ts.push_back({m, t.coef * Rational(static_cast<long>(e))});
    }
    return MPoly::from_terms(f.vars(), f.order(), std::move(ts));
}

inline MPoly det(const std::vector<std::vector<MPoly>>& m) {
    if (m.size() == 1) return m[0][0];
    MPoly acc(m[0][0].vars(), m[0][0].order());
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MPoly>> minor;
        for (std::size_t i = 1; i < m.size(); ++i) {
            std::vector<MPoly> row;
            for (std::size_t k = 0; k < m.size(); ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MPoly t = m[0][j] * det(minor);
        acc = j % 2 ? acc - t : acc + t;
    }
    return acc;
}

/// All maximal minors of the Jacobian of eqs with respect to cols.
inline std::vector<MPoly> jacobian_minors(const std::vector<MPoly>& eqs, const std::vector<std::size_t>& cols) {
    const std::size_t r = cols.size();
    std::vector<MPoly> out;
    if (r == 0 || eqs.size() < r) return out;
    std::vector<bool> pick(eqs.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(r), true);
    do {
        std::vector<std::vector<MPoly>> m;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (!pick[i]) continue;
            std::vector<MPoly> row;
            for (auto c : cols) row.push_back(partial(eqs[i], c));
            m.push_back(std::move(row));
        }
        MPoly d = det(m);
        if (!d.is_zero()) out.push_back(std::move(d));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

/// -1, 0, +1 for a < b, a == b, a > b.
inline int compare_algebraic(AlgebraicNumber a, AlgebraicNumber b) {
    if (algebraic_equal(a, b)) return 0;
    for (;;) {
        if (a.interval().hi < b.interval().lo) return -1;
        if (b.interval().hi < a.interval().lo) return 1;
        a = a.bisected();
        b = b.bisected();
    }
}

/// A rational strictly between a < b.
inline Rational rational_between(AlgebraicNumber a, AlgebraicNumber b) {
    for (;;) {
        if (a.interval().hi < b.interval().lo) return (a.interval().hi + b.interval().lo) / Rational(2);
        a = a.bisected();
        b = b.bisected();
    }
}

inline bool uses_any(const MPoly& f, const std::vector<std::size_t>& vars) {
    for (auto v : f.used_vars())
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) return true;
    return false;
}

/// Conditions of `conds` hold at the point.
inline bool conditions_hold(const std::vector<const SignCondition*>& conds, const std::vector<SolvedBlock>& blocks,
                            unsigned budget) {
    for (const auto* c : conds)
        if (!sign_to_required_ok(sign_over_blocks(c->poly, blocks, budget), c->required)) return false;
    return true;
}

struct FamilyGroup {
    std::vector<std::size_t> vars;
    std::vector<MPoly> eqs;
    std::vector<const SignCondition*> conds;
};

struct GroupOutcome {
    FamilyVerdict verdict = FamilyVerdict::Unresolved;
    std::vector<MPoly> pins;
};

/// Exact decision for a one-parameter family: the sign pattern of every
/// condition and the set of fibre points can only change at finitely many
/// critical parameter values, so checking those values and one rational
/// between each consecutive pair is complete.
inline GroupOutcome decide_curve(const FamilyGroup& grp, const std::vector<MPoly>& context_eqs,
                                 const std::vector<std::size_t>& context_vars,
                                 const std::vector<const SignCondition*>& context_conds, std::size_t n,
                                 unsigned budget) {
    GroupOutcome res;
    const VarNames names = indexed_vars(n);
    const MonomialOrder ord = MonomialOrder::lex(n);
    auto var_poly = [&](std::size_t v, const Rational& c) {
        return MPoly::from_terms(names, ord, {{Monomial::var(v), Rational(1)}, {Monomial(), -c}});
    };
    std::vector<MPoly> base = grp.eqs;
    base.insert(base.end(), context_eqs.begin(), context_eqs.end());
    std::vector<std::size_t> all_vars = grp.vars;
    all_vars.insert(all_vars.end(), context_vars.begin(), context_vars.end());
    std::sort(all_vars.begin(), all_vars.end());
    std::vector<const SignCondition*> conds = grp.conds;
    conds.insert(conds.end(), context_conds.begin(), context_conds.end());
    // a parameter whose value pins the family down
    std::optional<std::size_t> param;
    for (auto v : grp.vars) {
        auto e = grp.eqs;
        e.push_back(var_poly(v, Rational(3, 7)));
        std::vector<std::size_t> vs = grp.vars;
        try {
            solve_zero_dimensional(e, vs, false);
            param = v;
            break;
        } catch (const PositiveDimensional&) {
        }
    }
    if (!param) return res;
    const std::size_t v = *param;
    std::vector<std::size_t> others;
    for (auto w : grp.vars)
        if (w != v) others.push_back(w);
    // critical values of the parameter
    std::vector<std::vector<MPoly>> systems;
    for (const auto* c : conds) {
        auto e = base;
        e.push_back(c->poly);
        systems.push_back(std::move(e));
    }
    for (auto w : others)
        for (int b = 0; b < 2; ++b) {
            auto e = grp.eqs;
            e.push_back(var_poly(w, Rational(b)));
            systems.push_back(std::move(e));
        }
    if (!others.empty()) {
        auto minors = jacobian_minors(grp.eqs, others);
        auto e = grp.eqs;
        e.insert(e.end(), minors.begin(), minors.end());
        if (minors.empty()) return res;
        systems.push_back(std::move(e));
    }
    std::vector<AlgebraicNumber> crit;
    for (const auto& sys : systems) {
        if (sys.empty()) continue;
        UPoly u;
        try {
            u = eliminate_to_univariate(sys, v);
        } catch (const PositiveDimensional&) {
            // a condition vanishing on a whole component is satisfied there
            continue;
        }
        if (u.degree() < 1) continue;
        for (auto& r : real_roots(u, Rational(0), Rational(1)))
            if (r.compare(Rational(1)) < 0) crit.push_back(r);
    }
    std::sort(crit.begin(), crit.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return compare_algebraic(a, b) < 0;
    });
    std::vector<AlgebraicNumber> uniq;
    for (auto& c : crit)
        if (uniq.empty() || compare_algebraic(uniq.back(), c) != 0) uniq.push_back(c);
    std::vector<MPoly> pins;
    AlgebraicNumber prev = AlgebraicNumber::from_rational(Rational(0));
    for (const auto& c : uniq) {
        pins.push_back(var_poly(v, rational_between(prev, c)));
        if (auto q = c.as_rational()) pins.push_back(var_poly(v, *q));
        else pins.push_back(MPoly::from_upoly(c.defining(), names, ord, v));
        prev = c;
    }
    pins.push_back(var_poly(v, rational_between(prev, AlgebraicNumber::from_rational(Rational(1)))));
    for (const auto& pin : pins) {
        auto e = base;
        e.push_back(pin);
        std::vector<BlockPoint> pts;
        try {
            pts = solve_zero_dimensional(e, all_vars, true);
        } catch (const PositiveDimensional&) {
            return res;
        }
        for (const auto& p : pts) {
            std::vector<SolvedBlock> joint{{e, p}};
            if (conditions_hold(conds, joint, budget)) {
                res.verdict = FamilyVerdict::HasEquilibria;
                res.pins = {pin};
                return res;
            }
        }
    }
    res.verdict = FamilyVerdict::NoEquilibrium;
    return res;
}

/// Positive-dimensional part of a face: decide whether some point of the
/// family satisfies the sign conditions.
inline void resolve_family(FaceResult& out, const FaceSystem& fs, const std::vector<std::vector<std::size_t>>& pos_blocks,
                           const std::vector<std::vector<MPoly>>& pos_eqs,
                           const std::vector<std::vector<std::size_t>>& zero_vars,
                           const std::vector<std::vector<MPoly>>& zero_eqs,
                           const std::vector<std::vector<SolvedBlock>>& combos, const SolveOptions& opt) {
    const std::size_t n = fs.support.size();
    std::vector<std::size_t> pos_vars;
    for (const auto& b : pos_blocks) pos_vars.insert(pos_vars.end(), b.begin(), b.end());
    auto reject = [&](RejectReason r, std::string why) {
        out.family = FamilyVerdict::NoEquilibrium;
        out.rejected.push_back({r, std::move(why)});
    };
    // families without real points in the box
    for (std::size_t b = 0; b < pos_blocks.size(); ++b) {
        if (pos_eqs[b].empty()) continue;
        for (auto v : pos_blocks[b]) {
            UPoly e;
            try {
                e = eliminate_to_univariate(pos_eqs[b], v);
            } catch (const PositiveDimensional&) {
                continue;
            }
            if (e.degree() < 1 || count_real_roots(e, Rational(0), Rational(1)) - (e.sign_at(Rational(1)) == 0 ? 1 : 0) == 0)
                return reject(RejectReason::OutsideBox, "x" + std::to_string(v + 1) + " has no admissible value");
        }
    }
    std::vector<const SignCondition*> fixed, pending;
    for (const auto& c : fs.conditions) (uses_any(c.poly, pos_vars) ? pending : fixed).push_back(&c);
    // conditions that never see the family's variables
    std::vector<std::vector<SolvedBlock>> viable;
    std::optional<Rejection> first;
    for (const auto& blocks : combos) {
        bool ok = true;
        for (const auto* c : fixed) {
            int s = sign_over_blocks(c->poly, blocks, opt.refine_budget);
            if (!sign_to_required_ok(s, c->required)) {
                if (!first) first = Rejection{RejectReason::SignViolation, condition_text(*c, s)};
                ok = false;
                break;
            }
        }
        if (ok) viable.push_back(blocks);
    }
    if (viable.empty()) return reject(first->reason, first->detail);
    // constant normal forms and enclosures over the box
    std::vector<std::optional<GroebnerBasis>> pos_gb(pos_blocks.size());
    for (std::size_t b = 0; b < pos_blocks.size(); ++b)
        if (!pos_eqs[b].empty()) pos_gb[b] = buchberger(pos_eqs[b], MonomialOrder::grevlex(n));
    for (const auto* c : pending) {
        MPoly nf = c->poly;
        for (std::size_t b = 0; b < pos_blocks.size(); ++b)
            if (pos_gb[b]) nf = normal_form(nf.with_order(pos_gb[b]->order), *pos_gb[b]);
        if (nf.is_constant()) {
            int s = nf.is_zero() ? 0 : nf.leading_coeff().sign();
            if (!sign_to_required_ok(s, c->required)) return reject(RejectReason::SignViolation, condition_text(*c, s));
            continue;
        }
        bool refuted_everywhere = true;
        int s = 0;
        for (const auto& blocks : viable) {
            std::vector<Interval> box(n, Interval{Rational(0), Rational(1)});
            for (const auto& sb : blocks)
                for (std::size_t j = 0; j < sb.point.vars.size(); ++j) {
                    auto a = sb.point.coords[j].refined(Rational(BigInt(1), BigInt::pow(BigInt(2), 40)));
                    box[sb.point.vars[j]] = Interval{a.interval().lo, a.interval().hi};
                }
            s = eval_interval(c->poly, box).certain_sign();
            if (!s || sign_to_required_ok(s, c->required)) refuted_everywhere = false;
        }
        if (refuted_everywhere) return reject(RejectReason::SignViolation, condition_text(*c, s) + " on the whole family");
    }
    // groups of family blocks coupled by conditions
    std::vector<std::size_t> group_of(pos_blocks.size());
    std::iota(group_of.begin(), group_of.end(), 0);
    auto root = [&](std::size_t b) {
        while (group_of[b] != b) b = group_of[b];
        return b;
    };
    auto block_of = [&](std::size_t v) -> std::optional<std::size_t> {
        for (std::size_t b = 0; b < pos_blocks.size(); ++b)
            if (std::find(pos_blocks[b].begin(), pos_blocks[b].end(), v) != pos_blocks[b].end()) return b;
        return std::nullopt;
    };
    for (const auto* c : pending) {
        std::optional<std::size_t> first_block;
        for (auto v : c->poly.used_vars())
            if (auto b = block_of(v)) {
                if (!first_block) first_block = b;
                else group_of[root(*b)] = root(*first_block);
            }
    }
    std::map<std::size_t, FamilyGroup> groups;
    for (std::size_t b = 0; b < pos_blocks.size(); ++b) {
        auto& g = groups[root(b)];
        g.vars.insert(g.vars.end(), pos_blocks[b].begin(), pos_blocks[b].end());
        g.eqs.insert(g.eqs.end(), pos_eqs[b].begin(), pos_eqs[b].end());
    }
    for (const auto* c : pending)
        for (auto v : c->poly.used_vars())
            if (auto b = block_of(v)) {
                groups[root(*b)].conds.push_back(c);
                break;
            }
    std::vector<MPoly> pins;
    bool undecided = false;
    for (auto& [key, grp] : groups) {
        // zero-dimensional blocks seen by this group's conditions
        std::vector<MPoly> ctx_eqs;
        std::vector<std::size_t> ctx_vars;
        std::vector<const SignCondition*> ctx_conds;
        for (std::size_t z = 0; z < zero_vars.size(); ++z) {
            bool seen = false;
            for (const auto* c : grp.conds) seen = seen || uses_any(c->poly, zero_vars[z]);
            if (!seen) continue;
            ctx_eqs.insert(ctx_eqs.end(), zero_eqs[z].begin(), zero_eqs[z].end());
            ctx_vars.insert(ctx_vars.end(), zero_vars[z].begin(), zero_vars[z].end());
        }
        for (const auto* c : fixed)
            if (std::all_of(c->poly.used_vars().begin(), c->poly.used_vars().end(), [&](std::size_t v) {
                    return std::find(ctx_vars.begin(), ctx_vars.end(), v) != ctx_vars.end();
                }) && !c->poly.used_vars().empty())
                ctx_conds.push_back(c);
        GroupOutcome g = grp.conds.empty() && grp.eqs.empty()
                             ? GroupOutcome{FamilyVerdict::HasEquilibria, {}}
                             : decide_curve(grp, ctx_eqs, ctx_vars, ctx_conds, n, opt.refine_budget);
        if (g.verdict == FamilyVerdict::NoEquilibrium)
            return reject(RejectReason::SignViolation, "no point of the family satisfies the sign conditions");
        if (g.verdict == FamilyVerdict::Unresolved) undecided = true;
        pins.insert(pins.end(), g.pins.begin(), g.pins.end());
    }
    // a witness: pin the family, fill in remaining freedom with rationals
    std::mt19937_64 rng(opt.seed);
    const VarNames names = indexed_vars(n);
    const MonomialOrder ord = MonomialOrder::lex(n);
    for (unsigned attempt = 0; attempt < opt.witness_attempts; ++attempt) {
        auto vals = witness_values(rng, attempt, pos_vars.size());
        std::vector<MPoly> eqs = fs.equations;
        eqs.insert(eqs.end(), pins.begin(), pins.end());
        std::optional<std::vector<BlockPoint>> pts;
        for (std::size_t k = 0; k <= pos_vars.size() && !pts; ++k) {
            if (k > 0)
                eqs.push_back(MPoly::from_terms(names, ord, {{Monomial::var(pos_vars[k - 1]), Rational(1)}, {Monomial(), -vals[k - 1]}}));
            if (eqs.empty()) continue;
            try {
                pts = solve_zero_dimensional(eqs, fs.mixed, true);
            } catch (const PositiveDimensional&) {
            }
        }
        if (!pts) continue;
        for (const auto& p : *pts) {
            std::vector<SolvedBlock> joint{{eqs, p}};
            if (!check_sign_conditions(fs, joint, opt.refine_budget)) {
                out.family = FamilyVerdict::HasEquilibria;
                out.witness = make_equilibrium(fs.support, std::move(joint));
                return;
            }
        }
        if (pins.empty() && !undecided && attempt > 8) break;
    }
    out.family = FamilyVerdict::Unresolved;
}

}  // namespace detail

/// Solves one face and sorts its candidate points into equilibria and
/// rejections.
inline FaceResult solve_face(const std::vector<MPoly>& ap, const Support& s, const SolveOptions& opt = {},
                             detail::BlockCache* shared_cache = nullptr) {
    detail::BlockCache local;
    detail::BlockCache& cache = shared_cache ? *shared_cache : local;
    const std::size_t n = s.size();
    FaceSystem fs = face_system(ap, s);
    FaceResult out{s, FaceStatus::NoSolution, {}, {}, std::nullopt, FamilyVerdict::NoEquilibrium, std::nullopt};
    auto box = detail::unit_box(n);
    for (const auto& e : fs.equations) {
        if (e.is_constant() || detail::has_certain_sign_on_box(e, box)) {
            out.rejected.push_back({RejectReason::NoSolution, "equation " + e.to_string() + " has no root in the box"});
            return out;
        }
    }
    std::vector<std::vector<std::size_t>> eq_idx;
    auto blocks = detail::components(fs.mixed, fs.equations, &eq_idx);
    std::vector<std::vector<BlockPoint>> zero_points;
    std::vector<std::vector<MPoly>> zero_eqs;
    std::vector<std::vector<std::size_t>> zero_vars;
    std::vector<std::size_t> pos_vars;
    std::vector<std::vector<std::size_t>> pos_blocks;
    std::vector<std::vector<MPoly>> pos_eqs;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<MPoly> eqs;
        for (auto k : eq_idx[b]) eqs.push_back(fs.equations[k]);
        const detail::BlockCache::Entry* entry = eqs.empty() ? nullptr : &cache.solve(eqs, blocks[b]);
        if (!entry || entry->positive_dimensional) {
            pos_vars.insert(pos_vars.end(), blocks[b].begin(), blocks[b].end());
            pos_blocks.push_back(blocks[b]);
            pos_eqs.push_back(std::move(eqs));
            continue;
        }
        if (entry->points.empty()) {
            out.status = FaceStatus::NoSolution;
            if (entry->stats.inconsistent)
                out.rejected.push_back({RejectReason::NoSolution, "inconsistent equations"});
            else
                out.rejected.push_back({RejectReason::OutsideBox, "no solution inside (0,1)"});
            return out;
        }
        zero_points.push_back(entry->points);
        zero_eqs.push_back(std::move(eqs));
        zero_vars.push_back(blocks[b]);
    }
    // every combination of block points
    std::vector<std::vector<SolvedBlock>> combos{{}};
    for (std::size_t b = 0; b < zero_points.size(); ++b) {
        std::vector<std::vector<SolvedBlock>> next;
        for (const auto& c : combos)
            for (const auto& p : zero_points[b]) {
                auto d = c;
                d.push_back({zero_eqs[b], p});
                next.push_back(std::move(d));
            }
        combos = std::move(next);
    }
    if (pos_vars.empty()) {
        out.status = FaceStatus::Points;
        for (auto& c : combos) {
            if (auto r = check_sign_conditions(fs, c, opt.refine_budget)) out.rejected.push_back(*r);
            else out.accepted.push_back(detail::make_equilibrium(s, std::move(c)));
        }
        return out;
    }
    out.status = FaceStatus::PositiveDimensional;
    if (!fs.equations.empty()) out.basis = groebner_basis(fs.equations, MonomialOrder::lex(n));
    else out.basis = GroebnerBasis{indexed_vars(n), MonomialOrder::lex(n), {}, true};
    detail::resolve_family(out, fs, pos_blocks, pos_eqs, zero_vars, zero_eqs, combos, opt);
    return out;
}

enum class Uniqueness { Unique, NotUnique, Unresolved };

inline std::string uniqueness_name(Uniqueness u) {
    switch (u) {
        case Uniqueness::Unique: return "unique";
        case Uniqueness::NotUnique: return "not-unique";
        case Uniqueness::Unresolved: return "unresolved";
    }
    return "?";
}

struct EquilibriumReport {
    std::size_t players = 0;
    std::vector<Profile> pure_nes;
    DeviationTable deviations;
    std::vector<Equilibrium> mixed_nes;
    std::vector<FaceResult> positive_dimensional_faces;
    std::vector<std::pair<Support, Rejection>> rejections;
    std::size_t faces = 0;
    Uniqueness uniqueness = Uniqueness::Unresolved;

    std::size_t equilibrium_count() const { return pure_nes.size() + mixed_nes.size(); }

    /// Every isolated equilibrium as a profile, pure ones first.
    std::vector<MixedProfile> profiles() const {
        std::vector<MixedProfile> out;
        for (const auto& p : pure_nes) {
            std::vector<Rational> x;
            for (int a : p) x.emplace_back(a == 0 ? 1 : 0);
            out.push_back(rational_profile(x));
        }
        for (const auto& e : mixed_nes) out.push_back(e.x);
        return out;
    }
};

/// All 3^n faces, pure ones through the deviation table.
inline EquilibriumReport solve_all_ne(const Game& g, const SolveOptions& opt = {}) {
    const std::size_t n = g.players();
    if (n > opt.max_players) throw DomainError("solve_all_ne: " + std::to_string(n) + " players exceed the bound of " +
                                               std::to_string(opt.max_players));
    EquilibriumReport rep;
    rep.players = n;
    auto pure = pure_ne(g);
    rep.pure_nes = pure.equilibria;
    rep.deviations = pure.table;
    const auto ap = advantage_polys(g);
    detail::BlockCache cache;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    bool open = false, family = false;
    for (std::size_t code = 0; code < total; ++code) {
        Support s(n);
        bool any_mixed = false;
        for (std::size_t i = 0, c = code; i < n; ++i, c /= 3) {
            s[n - 1 - i] = static_cast<Play>(c % 3);
            any_mixed = any_mixed || s[n - 1 - i] == Play::Mixed;
        }
        ++rep.faces;
        if (!any_mixed) continue;
        FaceResult fr = solve_face(ap, s, opt, &cache);
        for (auto& r : fr.rejected) rep.rejections.emplace_back(s, r);
        for (auto& e : fr.accepted) rep.mixed_nes.push_back(std::move(e));
        if (fr.status == FaceStatus::PositiveDimensional) {
            if (fr.family == FamilyVerdict::HasEquilibria) family = true;
            if (fr.family == FamilyVerdict::Unresolved) open = true;
            fr.accepted.clear();
            fr.rejected.clear();
            rep.positive_dimensional_faces.push_back(std::move(fr));
        }
    }
    const std::size_t count = rep.equilibrium_count();
    if (count >= 2 || family) rep.uniqueness = Uniqueness::NotUnique;
    else if (count == 1 && !open) rep.uniqueness = Uniqueness::Unique;
    else rep.uniqueness = Uniqueness::Unresolved;
    return rep;
}

/// The integer-cleared eliminant of each variable in the all-mixed system.
inline std::vector<UPoly> minimal_polys_per_variable(const Game& g) {
    auto ap = advantage_polys(g);
    std::vector<MPoly> F;
    for (auto& f : ap)
        if (!f.is_zero()) F.push_back(f);
    if (F.empty()) throw PositiveDimensional("all advantage polynomials vanish");
    const std::size_t n = g.players();
    MonomialOrder grl = MonomialOrder::grevlex(n);
    for (auto& f : F) f = f.with_order(grl);
    GroebnerBasis gb = buchberger(F, grl);
    if (gb.is_unit()) throw DomainError("the all-mixed system has no solutions");
    if (!gb.is_zero_dimensional()) throw PositiveDimensional("the all-mixed system is positive-dimensional");
    QuotientRing A(std::move(gb));
    std::vector<UPoly> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(A.eliminant(i).integer_cleared());
    return out;
}

/// Round-half-even decimal with `digits` fractional digits; every printed
/// digit is certified by the isolating interval.
inline std::string approx_decimal(const AlgebraicNumber& a, unsigned digits) {
    const Rational scale(BigInt::pow(BigInt(10), digits));
    BigInt k;
    if (auto q = a.as_rational()) {
        Rational s = *q * scale;
        BigInt f = Rational::floor(s);
        Rational frac = s - Rational(f);
        if (frac > Rational(1, 2) || (frac == Rational(1, 2) && (f % BigInt(2)) != BigInt(0))) f += BigInt(1);
        k = f;
    } else {
        AlgebraicNumber b = a;
        for (;;) {
            Rational lo = b.interval().lo * scale, hi = b.interval().hi * scale;
            BigInt c = Rational::floor(lo + Rational(1, 2));
            // irrational values never sit on a tie
            if (Rational(c) - Rational(1, 2) < lo && hi < Rational(c) + Rational(1, 2)) {
                k = c;
                break;
            }
            b = b.refined(b.interval().width() / Rational(2));
        }
    }
    const bool neg = k.sign() < 0;
    std::string s = k.abs().to_string();
    if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    std::string out = s.substr(0, s.size() - digits);
    if (digits) out += "." + s.substr(s.size() - digits);
    return (neg ? "-" : "") + out;
}

inline std::vector<std::string> approx_profile(const MixedProfile& x, unsigned digits) {
    std::vector<std::string> out;
    for (const auto& a : x) out.push_back(approx_decimal(a, digits));
    return out;
}

enum class NeVerdict { Equilibrium, NotEquilibrium, Undetermined };

struct NeCheck {
    NeVerdict verdict;
    std::string explanation;
};

namespace detail {

/// Sign of f at independent algebraic coordinates: exact when every
/// coordinate is rational or the joint tower is small, otherwise interval
/// refinement within the budget.
inline std::optional<int> sign_at_profile(const MPoly& f, const MixedProfile& x, unsigned budget) {
    MPoly q = f;
    std::vector<std::size_t> alg;
    for (auto v : f.used_vars()) {
        if (auto r = x[v].as_rational()) q = q.substitute(v, *r);
        else alg.push_back(v);
    }
    if (q.is_constant()) return q.is_zero() ? 0 : q.leading_coeff().sign();
    std::vector<Interval> box(q.nvars(), Interval::point(Rational(0)));
    std::vector<AlgebraicNumber> c;
    for (auto v : alg) c.push_back(x[v]);
    for (unsigned step = 0; step <= budget; ++step) {
        for (std::size_t k = 0; k < alg.size(); ++k) box[alg[k]] = Interval{c[k].interval().lo, c[k].interval().hi};
        if (int s = eval_interval(q, box).certain_sign()) return s;
        if (step == 16) break;
        for (auto& a : c) a = a.bisected();
    }
    // exact route: the coordinates are one point of the product system
    std::size_t dim = 1;
    for (const auto& a : c) dim *= static_cast<std::size_t>(a.degree());
    if (dim <= 256) {
        std::vector<MPoly> eqs;
        for (std::size_t k = 0; k < alg.size(); ++k)
            eqs.push_back(MPoly::from_upoly(c[k].defining(), q.vars(), q.order(), alg[k]));
        for (const auto& p : solve_zero_dimensional(eqs, alg, false)) {
            bool same = true;
            for (std::size_t k = 0; k < alg.size() && same; ++k) same = algebraic_equal(p.coords[k], c[k]);
            if (same) return sign_at(p, q);
        }
        throw Error("profile point not found in its own product system");
    }
    for (unsigned step = 17; step <= budget; ++step) {
        for (std::size_t k = 0; k < alg.size(); ++k) box[alg[k]] = Interval{c[k].interval().lo, c[k].interval().hi};
        if (int s = eval_interval(q, box).certain_sign()) return s;
        for (auto& a : c) a = a.bisected();
    }
    return std::nullopt;
}

inline NeCheck judge(std::size_t n, const MixedProfile& x, const std::function<std::optional<int>(std::size_t)>& sign) {
    for (std::size_t i = 0; i < n; ++i) {
        const bool zero = x[i].compare(Rational(0)) == 0, one = x[i].compare(Rational(1)) == 0;
        auto s = sign(i);
        const std::string who = "player " + std::to_string(i + 1);
        if (!s) return {NeVerdict::Undetermined, "sign of f" + std::to_string(i + 1) + " undetermined"};
        if (*s > 0 && !one) return {NeVerdict::NotEquilibrium, who + " gains by playing 0 (f" + std::to_string(i + 1) + " > 0)"};
        if (*s < 0 && !zero) return {NeVerdict::NotEquilibrium, who + " gains by playing 1 (f" + std::to_string(i + 1) + " < 0)"};
    }
    return {NeVerdict::Equilibrium, "every player is indifferent or plays a best response"};
}

}  // namespace detail

inline NeCheck verify_ne(const Game& g, const MixedProfile& x, unsigned budget = 256) {
    const std::size_t n = g.players();
    if (x.size() != n) throw DomainError("profile length differs from the player count");
    for (const auto& a : x)
        if (a.compare(Rational(0)) < 0 || a.compare(Rational(1)) > 0) throw DomainError("probabilities must lie in [0,1]");
    auto ap = advantage_polys(g);
    return detail::judge(n, x, [&](std::size_t i) { return detail::sign_at_profile(ap[i], x, budget); });
}

/// Exact check of a reported equilibrium through its block representation.
inline NeCheck verify_ne(const Game& g, const Equilibrium& e, unsigned budget = 256) {
    const std::size_t n = g.players();
    auto ap = advantage_polys(g);
    return detail::judge(n, e.x, [&](std::size_t i) -> std::optional<int> {
        MPoly f = ap[i];
        for (std::size_t j = 0; j < n; ++j)
            if (e.support[j] != Play::Mixed) f = f.substitute(j, Rational(e.support[j] == Play::Zero ? 0 : 1));
        return detail::sign_over_blocks(f, e.blocks, budget);
    });
}

}  // namespace algne
