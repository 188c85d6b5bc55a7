#include "lnd/weights.hpp"

#include <algorithm>

#include "lnd/errors.hpp"

namespace lnd {

WeightSystem::WeightSystem(RingPtr ring, std::vector<WeightVector> weights, bool modulo_diagonal)
    : ring_(std::move(ring)), weights_(std::move(weights)), modulo_diagonal_(modulo_diagonal) {
  if (weights_.size() != ring_->arity())
    throw ArityMismatch("weight system needs one vector per variable");
  dim_ = weights_.empty() ? 0 : weights_.front().size();
  for (const auto& w : weights_)
    if (w.size() != dim_) throw std::invalid_argument("weight vectors must share one length");
  if (modulo_diagonal_ && dim_ == 0)
    throw std::invalid_argument("diagonal quotient needs weight vectors of positive length");
}

WeightVector WeightSystem::of(const Monomial& m) const {
  WeightVector out(dim_, 0);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) out[k] += weights_[i][k] * m[i];
  }
  return normalize(std::move(out));
}

WeightVector WeightSystem::normalize(WeightVector w) const {
  if (modulo_diagonal_ && !w.empty()) {
    std::int64_t shift = w.back();
    for (auto& x : w) x -= shift;
  }
  return w;
}

std::optional<WeightVector> weight(const Poly& p, const WeightSystem& w) {
  if (p.is_zero()) return std::nullopt;
  require_same_ring(p.ring(), w.ring());
  WeightVector first = w.of(p.leading_monomial());
  for (const auto& t : p.terms())
    if (w.of(t.monomial) != first) return std::nullopt;
  return first;
}

Poly homogeneous_component(const Poly& p, const WeightSystem& w, const WeightVector& d) {
  require_same_ring(p.ring(), w.ring());
  WeightVector target = w.normalize(d);
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (w.of(t.monomial) == target) kept.push_back(t);
  return Poly::from_terms(p.ring(), std::move(kept));
}

std::vector<WeightVector> occurring_weights(const Poly& p, const WeightSystem& w) {
  std::vector<WeightVector> out;
  for (const auto& t : p.terms()) {
    WeightVector v = w.of(t.monomial);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw ArityMismatch("weight vectors of different length");
  WeightVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

WeightVector operator-(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw ArityMismatch("weight vectors of different length");
  WeightVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace lnd
