#include "lnd/derivation.hpp"

#include <algorithm>

#include "lnd/errors.hpp"

namespace lnd {

Derivation::Derivation(RingPtr ring, std::vector<Poly> images) : ring_(std::move(ring)) {
  if (images.size() != ring_->arity()) throw ArityMismatch("derivation needs one image per variable");
  images_.reserve(images.size());
  for (auto& p : images) images_.push_back(p.is_zero() ? Poly(ring_) : p.in_ring(ring_));
}

Derivation Derivation::from_map(RingPtr ring, const std::map<std::string, Poly>& images) {
  std::vector<Poly> all(ring->arity(), Poly(ring));
  for (const auto& [name, p] : images) all[ring->require_index(name)] = p;
  return Derivation(std::move(ring), std::move(all));
}

bool Derivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly Derivation::apply(const Poly& p) const {
  if (p.is_zero()) return Poly(ring_);
  require_same_ring(p.ring(), ring_);
  Poly out(ring_);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].is_zero() || !p.uses_variable(i)) continue;
    out += images_[i] * p.derivative(i);
  }
  return out;
}

std::optional<NilpotencyCert> certify_lnd(const Derivation& d, unsigned bound) {
  if (bound < 1) throw std::invalid_argument("nilpotency bound must be at least 1");
  NilpotencyCert cert;
  cert.bound_used = bound;
  for (std::size_t i = 0; i < d.ring()->arity(); ++i) {
    Poly cur = Poly::variable(d.ring(), i);
    unsigned k = 0;
    while (!cur.is_zero() && k < bound) {
      cur = d.apply(cur);
      ++k;
    }
    if (!cur.is_zero()) return std::nullopt;
    cert.index.push_back(k);
  }
  return cert;
}

TPoly theta(const Derivation& d, const Poly& p, unsigned max_iterations) {
  TPoly out;
  Poly cur = p.is_zero() ? Poly(d.ring()) : p.in_ring(d.ring());
  Integer fact = 1;
  unsigned k = 0;
  while (!cur.is_zero()) {
    if (k > max_iterations)
      throw NotLocallyNilpotent("exponential map did not terminate within the iteration guard");
    if (k > 0) fact *= k;
    out.coeffs.push_back(cur * Rat(Integer(1), fact));
    cur = d.apply(cur);
    ++k;
  }
  out.trim();
  return out;
}

bool in_kernel(const Derivation& d, const Poly& p) { return d.apply(p).is_zero(); }

std::optional<Derivation> induced_on_quotient(const Derivation& d,
                                              const std::vector<std::string>& kill) {
  const Ring& ring = *d.ring();
  std::vector<std::size_t> killed;
  for (const auto& name : kill) killed.push_back(ring.require_index(name));
  for (auto v : killed)
    if (!set_to_zero(d.image(v), killed).is_zero()) return std::nullopt;

  std::vector<std::string> names;
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (std::find(killed.begin(), killed.end(), i) != killed.end()) continue;
    names.push_back(ring.name(i));
    weights.push_back(ring.weight(i));
  }
  MonomialOrder order = ring.order();
  order.elimination_block = 0;
  if (order.kind == OrderKind::WeightedGrevlex) order.weights = weights;
  RingPtr small = Ring::make(names, order);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (std::find(killed.begin(), killed.end(), i) != killed.end()) continue;
    images.push_back(set_to_zero(d.image(i), killed).in_ring(small));
  }
  return Derivation(small, std::move(images));
}

std::optional<std::vector<std::size_t>> elementary_kernel_check(const Derivation& d) {
  std::optional<std::size_t> active;
  for (std::size_t i = 0; i < d.images().size(); ++i) {
    if (d.image(i).is_zero()) continue;
    if (active) return std::nullopt;
    active = i;
  }
  if (!active || d.image(*active).uses_variable(*active)) return std::nullopt;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < d.images().size(); ++i)
    if (i != *active) rest.push_back(i);
  return rest;
}

std::optional<WeightVector> graded_degree(const Derivation& d, const WeightSystem& w) {
  require_same_ring(d.ring(), w.ring());
  std::optional<WeightVector> shift;
  for (std::size_t i = 0; i < d.images().size(); ++i) {
    const Poly& img = d.image(i);
    if (img.is_zero()) continue;
    auto wi = weight(img, w);
    if (!wi) return std::nullopt;
    WeightVector delta = w.normalize(*wi - w.normalize(w.of(i)));
    if (shift && *shift != delta) return std::nullopt;
    shift = std::move(delta);
  }
  if (!shift) return w.zero();
  return shift;
}

std::string to_string(const Derivation& d, const std::string& name) {
  std::string out = name + " { ";
  bool first = true;
  for (std::size_t i = 0; i < d.images().size(); ++i) {
    if (d.image(i).is_zero()) continue;
    if (!first) out += ", ";
    first = false;
    out += d.ring()->name(i) + " -> " + to_string(d.image(i));
  }
  out += first ? "}" : " }";
  return out;
}

}  // namespace lnd
