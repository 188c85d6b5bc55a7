#pragma once

#include <map>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/subalgebra.hpp"
#include "lnd/symmetry.hpp"
#include "lnd/weights.hpp"

// Worked examples: the rings, derivations and algebras used by the
// builtin check files, the acceptance program and the tests.
namespace lnd::catalog {

struct Example {
  RingPtr ring;
  Derivation d;
  std::vector<NamedPoly> algebra;
};

/// Q[x,s,t,u,v], D = x^3 d/ds + s d/dt + t d/du + x^2 d/dv, f1..f6.
Example df5();

/// Q[x1,x2,x3,y1,y2,y3,v], D(y_i) = x_i^(m+1), D(v) = (x1 x2 x3)^m.
/// Algebra x1, x2, x3, phi1..phi6 (m >= 2).
Example roberts(unsigned m);
/// The same algebra without phi4.
std::vector<NamedPoly> roberts_without_phi4(unsigned m);

/// Q[x,y,s,t,u,v], D = x^3 d/ds + y^3 s d/dt + y^3 t d/du + x^2 y^2 d/dv, g1..g6.
Example f6();

/// Q[x1,x2,x3,y1,y2,y3,v], D(y_i) = x_i^a, D(v) = (y1 y2 y3)^b, with
/// algebra x_i, p12, p13, p23 and h1, h2, h3 (h_i from the slice y_i).
Example new7(unsigned a, unsigned b);

/// Z^3 weights of the G_m^3 action commuting with new7's D.
WeightSystem new7_torus(const RingPtr& ring, unsigned a, unsigned b);
/// The same weights read modulo the diagonal (the subtorus H).
WeightSystem new7_subtorus(const RingPtr& ring, unsigned a, unsigned b);
PermAction new7_s3(const RingPtr& ring);
/// Monomial generators of the H-invariants.
std::vector<NamedPoly> new7_h_invariants(const RingPtr& ring, unsigned a);
/// Polynomials identifying the variables x,y,z,u,w of the five-variable
/// example with invariants in new7.
std::map<std::string, Poly> new7_dictionary(const RingPtr& ring, unsigned a, unsigned b);

/// Q[x,y,z,u,w], D = x^a d/dy + y d/dz + z d/du + u^b d/dw.
Derivation maubach(unsigned a, unsigned b);
/// Q[y,z,u,w], D = y d/dz + z d/du + u^b d/dw.
Derivation maubach_prime(unsigned b);

}  // namespace lnd::catalog
