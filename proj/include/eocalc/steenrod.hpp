#pragma once

// Milnor-basis conjugation data for truncated polynomial subalgebras of the
// mod-2 dual Steenrod algebra, and the finite quotient presentation it cuts
// out.  Generators xi_1..xi_m carry halved degrees 2^i - 1; the conjugates
// zeta_k satisfy the antipode recursion sum_{i+j=k} xi_i^{2^j} zeta_j = 0
// with xi_0 = zeta_0 = 1 and xi_k := 0 for k > m.

#include <vector>

#include "eocalc/f2poly.hpp"

namespace eocalc::f2poly {

// table with generators xi1..xim
GeneratorTable steenrod_table(int m);

// zeta_1 .. zeta_{2m} in steenrod_table(m); entry k-1 holds zeta_k.
// Every zeta_k is homogeneous of degree 2^k - 1 (asserted).
std::vector<Polynomial> steenrod_conjugates(int m);

// finite quotient F2[xi1..xim] / (zeta_{m+1}, ..., zeta_{2m})
IdealSpec c4_mod2_presentation(int m);

} // namespace eocalc::f2poly
