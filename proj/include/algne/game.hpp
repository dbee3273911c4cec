#pragma once

// Normal-form games where every player has actions 0 and 1.

#include <algne/mpoly.hpp>

#include <json.hpp>

#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace algne {

/// Pure action profile; entry i is player i's action (0 or 1).
using Profile = std::vector<int>;

class Game {
public:
    Game() = default;

    /// Payoff rows indexed by profile in lexicographic order (player 1 is the
    /// most significant bit).
    Game(std::size_t players, std::vector<std::vector<Rational>> rows) : n_(players), rows_(std::move(rows)) {
        if (n_ == 0 || n_ > 20) throw DomainError("player count must be in 1..20");
        if (rows_.size() != (std::size_t{1} << n_)) throw DomainError("payoff table needs 2^n rows");
        for (const auto& r : rows_)
            if (r.size() != n_) throw DomainError("every payoff row needs n entries");
    }

    std::size_t players() const { return n_; }
    std::size_t profiles() const { return rows_.size(); }

    std::size_t index(const Profile& a) const {
        if (a.size() != n_) throw DomainError("profile length differs from the player count");
        std::size_t k = 0;
        for (int ai : a) {
            if (ai != 0 && ai != 1) throw DomainError("actions are 0 or 1");
            k = k << 1 | static_cast<std::size_t>(ai);
        }
        return k;
    }

    Profile profile(std::size_t k) const {
        Profile a(n_);
        for (std::size_t i = 0; i < n_; ++i) a[i] = static_cast<int>(k >> (n_ - 1 - i) & 1u);
        return a;
    }

    /// Payoff of player i at row k.
    const Rational& payoff(std::size_t k, std::size_t i) const { return rows_[k][i]; }
    const std::vector<Rational>& row(std::size_t k) const { return rows_[k]; }
    const std::vector<Rational>& row(const Profile& a) const { return rows_[index(a)]; }

    friend bool operator==(const Game&, const Game&) = default;

    /// "players: n" followed by 2^n lines "a_1 ... a_n | u_1 ... u_n".
    std::string to_text() const {
        std::ostringstream os;
        os << "players: " << n_ << '\n';
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Profile a = profile(k);
            for (std::size_t i = 0; i < n_; ++i) os << (i ? " " : "") << a[i];
            os << " |";
            for (const auto& u : rows_[k]) os << ' ' << u;
            os << '\n';
        }
        return os.str();
    }

    static Game parse_text(std::istream& in) {
        std::string line;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream ls(line);
            std::string key;
            ls >> key;
            if (key != "players:" || !(ls >> n)) throw ParseError("expected 'players: n', got '" + line + "'");
            break;
        }
        if (n == 0 || n > 20) throw ParseError("player count must be in 1..20");
        std::vector<std::vector<Rational>> rows(std::size_t{1} << n);
        std::vector<bool> seen(rows.size(), false);
        std::size_t count = 0;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            auto bar = line.find('|');
            if (bar == std::string::npos) throw ParseError("missing '|' in '" + line + "'");
            std::istringstream lhs(line.substr(0, bar)), rhs(line.substr(bar + 1));
            std::size_t k = 0, na = 0;
            std::string tok;
            while (lhs >> tok) {
                if (tok != "0" && tok != "1") throw ParseError("action must be 0 or 1, got '" + tok + "'");
                k = k << 1 | (tok == "1" ? 1u : 0u);
                ++na;
            }
            if (na != n) throw ParseError("profile length differs from the player count in '" + line + "'");
            while (rhs >> tok) rows[k].push_back(Rational::parse(tok));
            if (rows[k].size() != n) throw ParseError("payoff count differs from the player count in '" + line + "'");
            if (seen[k]) throw ParseError("duplicate profile in '" + line + "'");
            seen[k] = true;
            ++count;
        }
        if (count != rows.size()) throw ParseError("expected " + std::to_string(rows.size()) + " payoff rows");
        return Game(n, std::move(rows));
    }

    static Game parse_text(const std::string& text) {
        std::istringstream in(text);
        return parse_text(in);
    }

    nlohmann::json to_json() const {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            nlohmann::json u = nlohmann::json::array();
            for (const auto& x : rows_[k]) u.push_back(x.to_string());
            rows.push_back({{"profile", profile(k)}, {"payoffs", u}});
        }
        return {{"players", n_}, {"rows", rows}};
    }

    static Game from_json(const nlohmann::json& j) {
        try {
            const std::size_t n = j.at("players").get<std::size_t>();
            if (n == 0 || n > 20) throw ParseError("player count must be in 1..20");
            std::vector<std::vector<Rational>> rows(std::size_t{1} << n);
            Game shape;
            shape.n_ = n;
            for (const auto& r : j.at("rows")) {
                std::size_t k = shape.index(r.at("profile").get<Profile>());
                if (!rows[k].empty()) throw ParseError("duplicate profile in JSON game");
                for (const auto& u : r.at("payoffs"))
                    rows[k].push_back(u.is_string() ? Rational::parse(u.get<std::string>()) : Rational(u.get<long>()));
            }
            return Game(n, std::move(rows));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed JSON game: ") + e.what());
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<Rational>> rows_;
};

/// f_i = E[u_i | i plays 0] - E[u_i | i plays 1], multilinear in the other
/// players' probabilities of action 0.
inline std::vector<MPoly> advantage_polys(const Game& g) {
    const std::size_t n = g.players();
    VarNames vars = indexed_vars(n);
    MonomialOrder ord = MonomialOrder::lex(n);
    std::vector<MPoly> out;
    const std::size_t m = n - 1, size = std::size_t{1} << m;
    for (std::size_t i = 0; i < n; ++i) {
        // value at the vertex where the players of mask S play 0, others 1
        std::vector<Rational> c(size);
        for (std::size_t S = 0; S < size; ++S) {
            Profile a(n, 1);
            for (std::size_t b = 0, j = 0; j < n; ++j) {
                if (j == i) continue;
                if (S >> b & 1u) a[j] = 0;
                ++b;
            }
            a[i] = 0;
            Rational d = g.row(a)[i];
            a[i] = 1;
            c[S] = d - g.row(a)[i];
        }
        // Moebius inversion turns vertex values into monomial coefficients
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t S = 0; S < size; ++S)
                if (S >> b & 1u) c[S] -= c[S ^ (std::size_t{1} << b)];
        std::vector<Term> ts;
        for (std::size_t S = 0; S < size; ++S) {
            if (c[S].is_zero()) continue;
            Monomial mono;
            for (std::size_t b = 0, j = 0; j < n; ++j) {
                if (j == i) continue;
                if (S >> b & 1u) mono.set(j, 1);
                ++b;
            }
            ts.push_back({mono, c[S]});
        }
        out.push_back(MPoly::from_terms(vars, ord, std::move(ts)));
    }
    return out;
}

/// Expected payoffs at a profile of rational probabilities of action 0.
inline std::vector<Rational> expected_payoffs(const Game& g, const std::vector<Rational>& x) {
    const std::size_t n = g.players();
    if (x.size() != n) throw DomainError("profile length differs from the player count");
    for (const auto& xi : x)
        if (xi.sign() < 0 || xi > Rational(1)) throw DomainError("probabilities must lie in [0,1]");
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < g.profiles(); ++k) {
        Profile a = g.profile(k);
        Rational w(1);
        for (std::size_t j = 0; j < n && !w.is_zero(); ++j) w *= a[j] == 0 ? x[j] : Rational(1) - x[j];
        if (w.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) out[i] += w * g.payoff(k, i);
    }
    return out;
}

/// Players with a strictly profitable unilateral deviation, per profile.
struct DeviationTable {
    std::vector<std::set<std::size_t>> unsatisfied;  ///< indexed like the game's rows

    bool is_pure_ne(std::size_t k) const { return unsatisfied[k].empty(); }
};

struct PureNeResult {
    std::vector<Profile> equilibria;
    DeviationTable table;
};

inline PureNeResult pure_ne(const Game& g) {
    const std::size_t n = g.players();
    PureNeResult r;
    r.table.unsatisfied.resize(g.profiles());
    for (std::size_t k = 0; k < g.profiles(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t flipped = k ^ (std::size_t{1} << (n - 1 - i));
            if (g.payoff(flipped, i) > g.payoff(k, i)) r.table.unsatisfied[k].insert(i);
        }
        if (r.table.unsatisfied[k].empty()) r.equilibria.push_back(g.profile(k));
    }
    return r;
}

/// The game with x_i fixed to `value`: 1 pins player i to action 0, 0 pins
/// it to action 1. The remaining players keep their order.
inline Game restrict(const Game& g, std::size_t player, int value) {
    const std::size_t n = g.players();
    if (n < 2) throw DomainError("restrict needs at least 2 players");
    if (player >= n) throw DomainError("player index out of range");
    if (value != 0 && value != 1) throw DomainError("a pure probability is 0 or 1");
    const int action = 1 - value;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0; k < g.profiles(); ++k) {
        if (g.profile(k)[player] != action) continue;
        std::vector<Rational> r;
        for (std::size_t i = 0; i < n; ++i)
            if (i != player) r.push_back(g.payoff(k, i));
        rows.push_back(std::move(r));
    }
    return Game(n - 1, std::move(rows));
}

}  // namespace algne
