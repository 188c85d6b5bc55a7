#pragma once

#include <optional>
#include <vector>

#include "lnd/groebner.hpp"
#include "lnd/poly.hpp"

namespace lnd {

/// Ideal of a polynomial ring given by generators. Zero generators are
/// dropped on construction; generator order carries no meaning.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
};

struct IdealOptions {
  std::size_t step_limit = kDefaultGroebnerSteps;
};

/// Reduced basis for an explicit order (the ideal's ring order by default).
GroebnerBasis groebner(const Ideal& ideal, const IdealOptions& opts = {});
GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order, const IdealOptions& opts = {});

bool ideal_member(const Poly& p, const Ideal& ideal, const IdealOptions& opts = {});

/// p vanishes on V(I): 1 is in I + (1 - z p) over the ring extended by z.
bool radical_member(const Poly& p, const Ideal& ideal, const IdealOptions& opts = {});

/// (I : f^infinity), via elimination of a tag variable from I + (1 - z f).
/// Returned generators form the reduced basis in the ring's order.
Ideal saturation(const Ideal& ideal, const Poly& f, const IdealOptions& opts = {});

/// arity - dim(R/I), with the dimension read off the leading-term ideal as
/// the largest set of variables containing no leading monomial's support.
/// Throws UnitIdeal when 1 is in I.
unsigned height(const Ideal& ideal, const IdealOptions& opts = {});

/// Krull dimension of R/I; same method as `height`.
unsigned dimension(const Ideal& ideal, const IdealOptions& opts = {});

/// sqrt(I) == sqrt(J), generator by generator.
bool radical_equal(const Ideal& a, const Ideal& b, const IdealOptions& opts = {});

/// The constant c with p - c in I, when the normal form of p is constant.
std::optional<Rat> const_plus_ideal_member(const Poly& p, const Ideal& ideal,
                                           const IdealOptions& opts = {});

/// Product ideal (pairwise generator products).
Ideal product(const Ideal& a, const Ideal& b);

/// Fresh variable name not present in `ring`.
std::string fresh_variable(const Ring& ring, const std::string& stem);

}  // namespace lnd
