// Prints both sides of n! V_n(alpha_1, ..., alpha_n) = alpha (alpha + n.alpha)^{n-1}
// for generic moments, then specializes alpha to theta-bar to recover PF_n.

#include <iostream>

#include "umbracomb/umbracomb.hpp"

int main() {
    using namespace umbracomb;
    for (unsigned n = 1; n <= 4; ++n) {
        UmbraRegistry registry;
        UmbraRef alpha = registry.new_umbra(MomentSeq::generic(Family::a, n));
        GradedPoly lhs = volume_umbral(n, VolumeKind::A, *alpha.moments) * Rational(factorial(n));
        UmbralExpr abel = UmbralExpr(alpha) *
                          pow(UmbralExpr(alpha) + UmbralExpr(registry.dot(static_cast<int>(n), alpha)), n - 1);
        std::cout << "n=" << n << "\n  n! V_n      = " << to_string(lhs) << "\n  Abel side   = " << to_string(eval(abel))
                  << '\n';

        UmbraRef theta = registry.special(SpecialUmbra::theta_bar, n);
        std::cout << "  V_n(theta)  = " << to_string(volume_umbral(n, VolumeKind::A, *theta.moments)) << '\n';
    }
}
