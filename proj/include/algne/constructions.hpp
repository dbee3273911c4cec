#pragma once

// The named games and the operators that compose them into larger ones.

#include <algne/game.hpp>

#include <string_view>

namespace algne {

namespace detail {

inline Game game_from_digits(std::size_t n, std::initializer_list<std::string_view> rows) {
    std::vector<std::vector<Rational>> out;
    for (auto r : rows) {
        std::vector<Rational> u;
        for (char c : r) u.emplace_back(c - '0');
        out.push_back(std::move(u));
    }
    return Game(n, std::move(out));
}

}  // namespace detail

inline Game make_g3() {
    return detail::game_from_digits(3, {"002", "100", "010", "001", "000", "011", "110", "101"});
}

inline Game make_g4() {
    return detail::game_from_digits(4, {"0001", "1000", "0010", "0100", "0002", "1100", "1010", "1001",
                                        "0000", "0111", "1011", "1101", "1100", "0011", "0110", "0101"});
}

inline Game make_g5() {
    return detail::game_from_digits(
        5, {"10001", "11000", "10010", "00100", "10002", "01100", "11010", "01001",
            "10000", "00111", "11011", "01101", "11100", "10101", "10211", "00101",
            "00001", "01010", "00010", "10100", "00002", "11100", "11010", "01001",
            "00000", "10111", "01011", "11101", "01100", "10011", "00110", "10101"});
}

inline Game make_h3() {
    return detail::game_from_digits(3, {"011", "011", "010", "001", "001", "000", "010", "000"});
}

/// Named games: "G3", "G4", "G5", "H3".
inline Game make_named(std::string_view name) {
    if (name == "G3") return make_g3();
    if (name == "G4") return make_g4();
    if (name == "G5") return make_g5();
    if (name == "H3") return make_h3();
    throw DomainError("unknown game name '" + std::string(name) + "'");
}

/// Player-disjoint juxtaposition: the first game's players come first.
inline Game product(const Game& a, const Game& b) {
    const std::size_t na = a.players(), nb = b.players();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(a.profiles() * b.profiles());
    for (std::size_t ka = 0; ka < a.profiles(); ++ka)
        for (std::size_t kb = 0; kb < b.profiles(); ++kb) {
            std::vector<Rational> r = a.row(ka);
            r.insert(r.end(), b.row(kb).begin(), b.row(kb).end());
            rows.push_back(std::move(r));
        }
    return Game(na + nb, std::move(rows));
}

/// Appends two players who play the last two roles of H3 against the last
/// player of g; the original players ignore them.
inline Game circ_h3(const Game& g) {
    const Game h = make_h3();
    const std::size_t n = g.players();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(g.profiles() * 4);
    for (std::size_t k = 0; k < g.profiles(); ++k) {
        const int last = g.profile(k)[n - 1];
        for (std::size_t tail = 0; tail < 4; ++tail) {
            std::vector<Rational> r = g.row(k);
            const std::size_t hk = static_cast<std::size_t>(last) << 2 | tail;
            r.push_back(h.payoff(hk, 1));
            r.push_back(h.payoff(hk, 2));
            rows.push_back(std::move(r));
        }
    }
    return Game(n + 2, std::move(rows));
}

enum class Factor { G3, G4, G5, G4H3, G5H3 };

inline std::size_t factor_players(Factor f) {
    switch (f) {
        case Factor::G3: return 3;
        case Factor::G4: return 4;
        case Factor::G5: return 5;
        case Factor::G4H3: return 6;
        case Factor::G5H3: return 7;
    }
    return 0;
}

inline std::string factor_name(Factor f) {
    switch (f) {
        case Factor::G3: return "G3";
        case Factor::G4: return "G4";
        case Factor::G5: return "G5";
        case Factor::G4H3: return "G4oH3";
        case Factor::G5H3: return "G5oH3";
    }
    return "?";
}

inline Game make_factor(Factor f) {
    switch (f) {
        case Factor::G3: return make_g3();
        case Factor::G4: return make_g4();
        case Factor::G5: return make_g5();
        case Factor::G4H3: return circ_h3(make_g4());
        case Factor::G5H3: return circ_h3(make_g5());
    }
    throw DomainError("unknown factor");
}

/// n = 4q + r and the product factors in player order.
struct GnRecipe {
    std::size_t n = 0;
    std::size_t q = 0;
    std::size_t r = 0;
    std::vector<Factor> factors;

    std::string describe() const {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + factor_name(factors[i]);
        return s;
    }
};

inline GnRecipe gn_recipe(std::size_t n) {
    if (n < 3) throw DomainError("G_n needs n >= 3");
    GnRecipe rec{n, n / 4, n % 4, {}};
    if (n == 3) {
        rec.factors = {Factor::G3};
        return rec;
    }
    if (n == 5) {
        rec.factors = {Factor::G5};
        return rec;
    }
    for (std::size_t i = 0; i + 1 < rec.q; ++i) rec.factors.push_back(Factor::G4);
    switch (rec.r) {
        case 0: rec.factors.push_back(Factor::G4); break;
        case 1: rec.factors.push_back(Factor::G5); break;
        case 2: rec.factors.push_back(Factor::G4H3); break;
        case 3: rec.factors.push_back(Factor::G5H3); break;
    }
    return rec;
}

/// The full payoff table is built only up to 20 players.
inline std::pair<Game, GnRecipe> make_gn(std::size_t n) {
    GnRecipe rec = gn_recipe(n);
    if (n > 20) throw Unsupported("payoff tables above 20 players are not materialized");
    Game g = make_factor(rec.factors.front());
    for (std::size_t i = 1; i < rec.factors.size(); ++i) g = product(g, make_factor(rec.factors[i]));
    return {std::move(g), std::move(rec)};
}

}  // namespace algne
