#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lnd/poly.hpp"
#include "lnd/weights.hpp"

namespace lnd {

inline constexpr unsigned kDefaultNilpotencyBound = 16;

/// Q-linear derivation of a polynomial ring, determined by the images of
/// the variables and extended by the Leibniz rule.
class Derivation {
 public:
  Derivation() = default;  // detached placeholder
  /// One image per variable; zero polynomials allowed.
  Derivation(RingPtr ring, std::vector<Poly> images);
  /// Unlisted variables map to zero.
  static Derivation from_map(RingPtr ring, const std::map<std::string, Poly>& images);

  const RingPtr& ring() const { return ring_; }
  const Poly& image(std::size_t var) const { return images_.at(var); }
  const std::vector<Poly>& images() const { return images_; }
  bool is_zero() const;

  Poly apply(const Poly& p) const;
  Poly operator()(const Poly& p) const { return apply(p); }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return same_ring(a.ring_, b.ring_) && a.images_ == b.images_;
  }

 private:
  RingPtr ring_;
  std::vector<Poly> images_;
};

/// Per variable, the least k with D^k(v) = 0.
struct NilpotencyCert {
  std::vector<unsigned> index;
  unsigned bound_used = 0;
};

/// Nilpotency of every variable certifies local nilpotency, because the
/// D-nilpotent elements form a subalgebra. nullopt means some variable
/// survived `bound` applications: inconclusive, not a proof of failure.
std::optional<NilpotencyCert> certify_lnd(const Derivation& d,
                                          unsigned bound = kDefaultNilpotencyBound);

/// Thrown by `theta` when the iteration guard is exceeded.
class NotLocallyNilpotent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponential map: the coefficient of T^k is D^k(p)/k!.
TPoly theta(const Derivation& d, const Poly& p, unsigned max_iterations = 4096);

bool in_kernel(const Derivation& d, const Poly& p);

/// Induced derivation on R/(kill) = Q[remaining variables], or nullopt
/// when the ideal generated by the `kill` variables is not D-stable.
std::optional<Derivation> induced_on_quotient(const Derivation& d,
                                              const std::vector<std::string>& kill);

/// If exactly one variable has a non-zero image g and g does not involve
/// that variable, the kernel is generated by the other variables; returns
/// their indices.
std::optional<std::vector<std::size_t>> elementary_kernel_check(const Derivation& d);

/// The common shift delta with weight(D(v)) = weight(v) + delta for every
/// variable with D(v) != 0; nullopt when D is not homogeneous. A zero
/// derivation has shift zero.
std::optional<WeightVector> graded_degree(const Derivation& d, const WeightSystem& w);

std::string to_string(const Derivation& d, const std::string& name = "D");

}  // namespace lnd
