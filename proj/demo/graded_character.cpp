// Prints the graded character table of the local module attached to a
// partition, then the two worked coinvariant series.

#include <cstdio>

#include <weylpoly/coinvariants.hpp>
#include <weylpoly/weylchar.hpp>

using namespace weylpoly;

int main() {
    Composition lambda({3, 1, 1});
    CharacterTable table = weyl_graded_character(lambda);
    std::printf("lambda = (%s)\n", lambda.str().c_str());
    for (const CharacterEntry& e : table.entries)
        std::printf("  nu = (%-7s)  dim = %s\n", e.nu.str().c_str(),
                    e.dim.str().c_str());

    Composition l1({5, 2, 1, 1}), n1({3, 1, 2, 3});
    std::printf("\ncoinvariants (%s) / (%s):\n  linear  %s\n  formula %s\n",
                l1.str().c_str(), n1.str().c_str(),
                coinv_graded_dim_linear(l1, n1).str().c_str(),
                coinv_graded_dim_formula(l1, n1).str().c_str());
    return 0;
}
