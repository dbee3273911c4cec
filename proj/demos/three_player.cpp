// Solve the three-player game and print the mixed equilibrium in closed form.
#include <algne/certified.hpp>

#include <iostream>

using namespace algne;

int main() {
    const Game game = make_g3();
    std::cout << game.to_text() << '\n';

    const EquilibriumReport rep = solve_all_ne(game);
    std::cout << "faces: " << rep.faces << ", pure: " << rep.pure_nes.size()
              << ", mixed: " << rep.mixed_nes.size() << ", " << uniqueness_name(rep.uniqueness) << '\n';

    CertificateCache certs;
    for (const auto& eq : rep.mixed_nes)
        for (const auto& c : certify_profile(eq.x, certs))
            std::cout << "player " << c.player + 1 << ": " << approx_decimal(c.x, 12) << " = "
                      << (c.closed_form ? c.closed_form->to_string() : "?") << '\n';
}
