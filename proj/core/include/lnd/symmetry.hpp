#pragma once

#include <map>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/weights.hpp"

namespace lnd {

/// 0-based permutation: sigma(i) = perm[i].
using Permutation = std::vector<std::size_t>;

/// All n! permutations in lexicographic order (identity first).
std::vector<Permutation> all_permutations(std::size_t n);

/// S_n acting on tuples of indexed variables, x_i -> x_{sigma(i)} in every
/// tuple; variables outside the tuples are fixed.
class PermAction {
 public:
  PermAction(RingPtr ring, std::vector<std::vector<std::string>> orbits);

  const RingPtr& ring() const { return ring_; }
  std::size_t degree() const { return degree_; }
  const std::vector<std::vector<std::size_t>>& orbits() const { return orbits_; }

 private:
  RingPtr ring_;
  std::size_t degree_ = 0;
  std::vector<std::vector<std::size_t>> orbits_;
};

Poly perm_image(const Poly& p, const Permutation& sigma, const PermAction& act);

/// Product of the images of p under every group element (with multiplicity).
Poly orbit_product(const Poly& p, const PermAction& act);

bool invariance_check(const Poly& p, const PermAction& act);
/// Every monomial has weight zero (modulo the diagonal when flagged).
bool invariance_check(const Poly& p, const WeightSystem& w);

struct PullbackEntry {
  std::string var;  // small-ring variable
  Poly lhs;         // D(dict(var))
  Poly rhs;         // dict(Delta(var))
  bool ok = false;
};

struct PullbackResult {
  std::vector<PullbackEntry> entries;
  bool ok = false;
};

/// Whether the dictionary R -> B (variables of Delta's ring to polynomials
/// of D's ring) intertwines Delta and D.
PullbackResult pullback_check(const Derivation& d, const std::map<std::string, Poly>& dict,
                              const Derivation& delta);

}  // namespace lnd
