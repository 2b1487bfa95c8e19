// Walkthrough: where can a parameter lambda sit, 2-adically, if the seed
// alpha = 1 is torsion for y^2 = x^3 + lambda? Builds the level-3
// torsion pair, reads the answer off Newton polygons, classifies a few
// concrete parameters and runs their exact orbits.

#include <padic_lattes/newton_polygon.hpp>
#include <padic_lattes/weierstrass.hpp>

#include <iostream>

using namespace padic_lattes;

int main() {
  const Rat alpha(1);
  const auto& tp = weierstrass::torsion_pair(alpha, 3);
  std::cout << "deg A_3 = deg B_3 = " << tp.A.degree() << "\n\n";

  std::cout << "valuations of parameters whose orbit hits 0 (roots of A_3):\n  "
            << root_valuations(tp.A, 2).str() << "\n";
  std::cout << "valuations of parameters whose orbit hits inf (roots of B_3):\n  "
            << root_valuations(tp.B, 2).str() << "\n\n";

  for (const Rat& lambda :
       {Rat(-1), Rat(BigInt(1), BigInt(8)), Rat(BigInt(-1), BigInt(4)), Rat(3)}) {
    const auto cls = weierstrass::trichotomy_classify(val_of(alpha, 2),
                                                      val_of(lambda, 2));
    const auto rec = orbit(weierstrass::family_map(lambda), ProjPoint(alpha), 8,
                           weierstrass::make_orbit_predicate(lambda));
    std::cout << "lambda = " << lambda << ": class " << cls.str()
              << ", orbit " << rec.status_str() << "\n";
  }
  return 0;
}
