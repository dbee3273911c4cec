// Draw action profiles from the four-player equilibrium using fair coin flips
// only. Each Bernoulli draw compares a growing dyadic interval against the
// isolating interval of an algebraic probability, refining on demand.
#include <algne/constructions.hpp>
#include <algne/sampler.hpp>

#include <cstdlib>
#include <iostream>

using namespace algne;

int main(int argc, char** argv) {
    const int draws = argc > 1 ? std::atoi(argv[1]) : 20000;
    const EquilibriumReport rep = solve_all_ne(make_g4());
    ProfileSampler sampler(rep);
    BitSource bits(7);

    std::vector<int> zeros(rep.players);
    for (int i = 0; i < draws; ++i) {
        const Profile a = sampler.draw(bits);
        for (std::size_t j = 0; j < a.size(); ++j) zeros[j] += a[j] == 0;
    }
    for (std::size_t j = 0; j < zeros.size(); ++j)
        std::cout << "player " << j + 1 << ": empirical " << zeros[j] / double(draws) << ", exact "
                  << approx_decimal(rep.mixed_nes.front().x[j], 8) << '\n';
    std::cout << "random bits per coordinate: " << bits.consumed() / double(draws * zeros.size()) << '\n';
}
