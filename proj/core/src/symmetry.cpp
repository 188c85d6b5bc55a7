#include "lnd/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lnd/errors.hpp"

namespace lnd {

std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

PermAction::PermAction(RingPtr ring, std::vector<std::vector<std::string>> orbits)
    : ring_(std::move(ring)) {
  std::set<std::size_t> seen;
  for (const auto& orbit : orbits) {
    if (orbits_.empty())
      degree_ = orbit.size();
    else if (orbit.size() != degree_)
      throw ArityMismatch("orbit tuples must have equal length");
    std::vector<std::size_t> idx;
    for (const auto& name : orbit) {
      std::size_t i = ring_->require_index(name);
      if (!seen.insert(i).second)
        throw std::invalid_argument("variable " + name + " appears in two orbits");
      idx.push_back(i);
    }
    orbits_.push_back(std::move(idx));
  }
}

Poly perm_image(const Poly& p, const Permutation& sigma, const PermAction& act) {
  if (sigma.size() != act.degree()) throw ArityMismatch("permutation degree does not match");
  const RingPtr& ring = act.ring();
  std::vector<std::optional<Poly>> images(ring->arity());
  for (std::size_t i = 0; i < ring->arity(); ++i) images[i] = Poly::variable(ring, i);
  for (const auto& orbit : act.orbits())
    for (std::size_t i = 0; i < orbit.size(); ++i)
      images[orbit[i]] = Poly::variable(ring, orbit[sigma[i]]);
  return substitute(p.in_ring(ring), images, ring);
}

Poly orbit_product(const Poly& p, const PermAction& act) {
  Poly out = Poly::constant(act.ring(), Rat(1));
  for (const auto& sigma : all_permutations(act.degree())) out *= perm_image(p, sigma, act);
  return out;
}

bool invariance_check(const Poly& p, const PermAction& act) {
  // a transposition and an n-cycle generate S_n
  const std::size_t n = act.degree();
  if (n < 2) return true;
  Permutation swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  Poly q = p.in_ring(act.ring());
  return perm_image(q, swap, act) == q && perm_image(q, cycle, act) == q;
}

bool invariance_check(const Poly& p, const WeightSystem& w) {
  const WeightVector zero = w.zero();
  const Poly q = p.in_ring(w.ring());
  for (const auto& t : q.terms())
    if (w.normalize(w.of(t.monomial)) != zero) return false;
  return true;
}

PullbackResult pullback_check(const Derivation& d, const std::map<std::string, Poly>& dict,
                              const Derivation& delta) {
  const RingPtr& small = delta.ring();
  const RingPtr& big = d.ring();
  for (const auto& name : small->variables())
    if (!dict.count(name)) throw UnknownVariable("dictionary has no entry for " + name);
  std::map<std::string, Poly> images;
  for (const auto& [name, poly] : dict) {
    if (!small->index_of(name)) throw UnknownVariable("dictionary key " + name + " not in ring");
    images.emplace(name, poly.in_ring(big));
  }
  PullbackResult out;
  out.ok = true;
  for (std::size_t i = 0; i < small->arity(); ++i) {
    const std::string& name = small->name(i);
    PullbackEntry e;
    e.var = name;
    e.lhs = d.apply(images.at(name));
    e.rhs = substitute(delta.image(i), images, big);
    e.ok = e.lhs == e.rhs;
    out.ok &= e.ok;
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace lnd
