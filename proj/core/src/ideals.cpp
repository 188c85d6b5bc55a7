#include "lnd/ideals.hpp"

#include <algorithm>
#include <functional>

#include "lnd/errors.hpp"

namespace lnd {

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    gens_.push_back(g.in_ring(ring_));
  }
}

GroebnerBasis groebner(const Ideal& ideal, const IdealOptions& opts) {
  return groebner(ideal.ring(), ideal.generators(), opts.step_limit);
}

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order, const IdealOptions& opts) {
  return groebner(with_order(ideal.ring(), order), ideal.generators(), opts.step_limit);
}

bool ideal_member(const Poly& p, const Ideal& ideal, const IdealOptions& opts) {
  if (p.is_zero()) return true;
  return normal_form(p, groebner(ideal, opts)).is_zero();
}

std::string fresh_variable(const Ring& ring, const std::string& stem) {
  std::string name = stem;
  for (int k = 1; ring.index_of(name); ++k) name = stem + std::to_string(k);
  return name;
}

namespace {

// Ring with one extra variable placed first, plus the handle to it.
RingPtr extend_front(const Ring& ring, const std::string& name, MonomialOrder order) {
  std::vector<std::string> names;
  names.push_back(name);
  names.insert(names.end(), ring.variables().begin(), ring.variables().end());
  return Ring::make(std::move(names), std::move(order));
}

}  // namespace

bool radical_member(const Poly& p, const Ideal& ideal, const IdealOptions& opts) {
  if (p.is_zero()) return true;
  const Ring& ring = *ideal.ring();
  RingPtr ext = extend_front(ring, fresh_variable(ring, "z_"), MonomialOrder::grevlex());
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ext));
  Poly z = Poly::variable(ext, 0);
  gens.push_back(Poly::constant(ext, Rat(1)) - z * p.in_ring(ext));
  Buchberger b(ext, gens, opts.step_limit);
  b.run();
  return b.found_unit();
}

Ideal saturation(const Ideal& ideal, const Poly& f, const IdealOptions& opts) {
  if (f.is_zero()) throw std::domain_error("saturation by the zero polynomial");
  const Ring& ring = *ideal.ring();
  MonomialOrder elim = MonomialOrder::grevlex();
  elim.elimination_block = 1;
  RingPtr ext = extend_front(ring, fresh_variable(ring, "z_"), elim);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ext));
  Poly z = Poly::variable(ext, 0);
  gens.push_back(Poly::constant(ext, Rat(1)) - z * f.in_ring(ext));
  GroebnerBasis gb = groebner(ext, gens, opts.step_limit);
  std::vector<Poly> kept;
  for (const auto& g : gb.basis)
    if (!g.uses_variable(0)) kept.push_back(g.in_ring(ideal.ring()));
  std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
    return ring.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return Ideal(ideal.ring(), std::move(kept));
}

unsigned dimension(const Ideal& ideal, const IdealOptions& opts) {
  GroebnerBasis gb = groebner(ideal, opts);
  if (gb.is_unit()) throw UnitIdeal("dimension of the unit ideal is undefined");
  const std::size_t n = ideal.ring()->arity();
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.basis) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.leading_monomial()[i] != 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  // Largest variable set S with no leading-monomial support inside S.
  unsigned best = 0;
  std::function<void(std::size_t, std::uint32_t, unsigned)> search = [&](std::size_t i,
                                                                          std::uint32_t set,
                                                                          unsigned size) {
    if (size + (n - i) <= best) return;
    if (i == n) {
      best = std::max(best, size);
      return;
    }
    std::uint32_t with = set | (1u << i);
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~with) == 0; });
    if (independent) search(i + 1, with, size + 1);
    search(i + 1, set, size);
  };
  search(0, 0, 0);
  return best;
}

unsigned height(const Ideal& ideal, const IdealOptions& opts) {
  return static_cast<unsigned>(ideal.ring()->arity()) - dimension(ideal, opts);
}

bool radical_equal(const Ideal& a, const Ideal& b, const IdealOptions& opts) {
  require_same_ring(a.ring(), b.ring());
  for (const auto& g : a.generators())
    if (!radical_member(g, b, opts)) return false;
  for (const auto& g : b.generators())
    if (!radical_member(g, a, opts)) return false;
  return true;
}

std::optional<Rat> const_plus_ideal_member(const Poly& p, const Ideal& ideal,
                                           const IdealOptions& opts) {
  GroebnerBasis gb = groebner(ideal, opts);
  if (gb.is_unit()) return Rat(0);
  Poly r = normal_form(p, gb);
  if (!r.is_constant()) return std::nullopt;
  return r.constant_term();
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Poly> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace lnd
