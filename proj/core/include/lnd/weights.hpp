#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lnd/poly.hpp"

namespace lnd {

using WeightVector = std::vector<std::int64_t>;

/// Integer weight vectors (all of one length) attached to the variables of
/// a ring; the grading induced by a torus action. With `modulo_diagonal`
/// weights are read in Z^k / Z(1,...,1), which realises the grading of the
/// subtorus where the product of the coordinates is 1.
class WeightSystem {
 public:
  WeightSystem(RingPtr ring, std::vector<WeightVector> weights, bool modulo_diagonal = false);

  const RingPtr& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  bool modulo_diagonal() const { return modulo_diagonal_; }
  const WeightVector& of(std::size_t var) const { return weights_.at(var); }

  WeightVector of(const Monomial& m) const;
  /// Canonical representative: identity, or shifted so the last entry is 0
  /// when working modulo the diagonal.
  WeightVector normalize(WeightVector w) const;
  WeightVector zero() const { return WeightVector(dim_, 0); }

 private:
  RingPtr ring_;
  std::size_t dim_;
  std::vector<WeightVector> weights_;
  bool modulo_diagonal_;
};

/// Common weight of every term, or nullopt when p is not homogeneous. The
/// zero polynomial has no weight.
std::optional<WeightVector> weight(const Poly& p, const WeightSystem& w);

/// Sum of the terms of weight exactly d (d is normalized first).
Poly homogeneous_component(const Poly& p, const WeightSystem& w, const WeightVector& d);

/// Distinct weights occurring in p, in first-occurrence order.
std::vector<WeightVector> occurring_weights(const Poly& p, const WeightSystem& w);

WeightVector operator+(const WeightVector& a, const WeightVector& b);
WeightVector operator-(const WeightVector& a, const WeightVector& b);

}  // namespace lnd
