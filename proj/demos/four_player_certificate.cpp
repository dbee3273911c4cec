// Solve the four-player game, then certify every coordinate: irreducible
// minimal polynomial, Galois group S_n from Frobenius cycle types, and so
// not expressible in radicals.
#include <algne/certified.hpp>

#include <iostream>

using namespace algne;

int main() {
    const EquilibriumReport rep = solve_all_ne(make_g4());
    std::cout << "equilibria: " << rep.equilibrium_count() << " (" << uniqueness_name(rep.uniqueness) << ")\n";
    if (rep.mixed_nes.empty()) return 1;

    CertificateCache certs;
    for (const auto& c : certify_profile(rep.mixed_nes.front().x, certs)) {
        std::cout << "\nplayer " << c.player + 1 << " plays 0 with probability " << approx_decimal(c.x, 16) << '\n';
        std::cout << c.certificate.to_text();
        // independent re-check of the stored witnesses
        if (c.certificate.sn) std::cout << "recheck: " << (verify_sn_certificate(c.certificate.poly, *c.certificate.sn) ? "ok" : "FAILED") << '\n';
    }
}
