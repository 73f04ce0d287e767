// Applies lowering/raising generators to weight vectors and prints the
// resulting composition and polynomial at each step.

#include <cstdio>

#include <weylpoly/current.hpp>
#include <weylpoly/expr.hpp>

using namespace weylpoly;

static void show(const char* label, const WeightVector& v) {
    if (v.is_zero()) {
        std::printf("%-16s 0\n", label);
        return;
    }
    std::printf("%-16s (%s)  %s\n", label, v.nu.str().c_str(),
                render_poly(v.p).c_str());
}

int main() {
    Composition nu({2, 1});
    WeightVector v{nu, parse_poly("e(1,1)", nu).poly};
    show("start", v);

    WeightVector f = apply_generator({'F', 1, 0}, v);
    show("F_{1,0}", f);
    WeightVector fe = apply_generator({'E', 1, 1}, f);
    show("E_{1,1} F_{1,0}", fe);
    WeightVector h = apply_generator({'H', 1, 1}, v);
    show("H_{1,1}", h);
    return 0;
}
