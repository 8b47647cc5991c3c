// Finds an optimal CAC(L,3), doubles it, and checks that the image is an
// SCAC(2L,3) on which every user keeps at least one packet in the worst case.

#include <cstdlib>
#include <iostream>

#include <scac/scac.hpp>

int main(int argc, char** argv) {
    const int L = argc > 1 ? std::atoi(argv[1]) : 12;
    if (L < 3) {
        std::cerr << "usage: doubling_demo [L >= 3]\n";
        return 2;
    }
    const auto cac = scac::max_code(L, 3, scac::Mode::cac);
    std::cout << "M(" << L << ",3) = " << cac.optimum << "  " << to_string(cac.witness) << '\n';

    const auto doubled = scac::double_code(cac.witness);
    std::cout << "doubled        " << to_string(doubled) << "  scac=" << scac::is_scac(doubled) << '\n';

    for (std::size_t v = 0; v < doubled.size(); ++v)
        std::cout << "  user " << v << " worst-case sigma " << scac::worst_case_sigma(doubled, v).sigma << '\n';

    const auto b = scac::ms_exact(2 * L);
    std::cout << "M_S(" << 2 * L << ",3): " << to_string(b.kind) << " [" << b.lo << "," << b.hi << "] via "
              << b.provenance << '\n';
}
