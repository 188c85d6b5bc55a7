#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lnd/poly.hpp"

namespace lnd {

inline constexpr std::size_t kDefaultGroebnerSteps = 200000;

struct GroebnerBasis {
  RingPtr ring;  // carries the monomial order the basis is reduced for
  std::vector<Poly> basis;
  bool reduced = false;

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties broken lexicographically on the lcm) and the
/// Gebauer-Moller installation of both Buchberger criteria.
///
/// The state can be advanced in degree slices: for an ideal that is
/// homogeneous with respect to the ring's degree, `run(d)` leaves a basis
/// that is correct for every polynomial of degree <= d.
class Buchberger {
 public:
  Buchberger(RingPtr ring, const std::vector<Poly>& generators,
             std::size_t step_limit = kDefaultGroebnerSteps);

  /// Processes pending pairs whose lcm degree is <= degree_limit (all pairs
  /// when absent). Throws ResourceLimitExceeded past the step ceiling.
  void run(std::optional<std::int64_t> degree_limit = std::nullopt);

  bool complete() const { return pairs_.empty(); }
  bool found_unit() const { return unit_; }
  std::size_t steps() const { return steps_; }

  /// Full reduction of p by the current (possibly partial) basis.
  Poly reduce(const Poly& p) const;

  /// Reduced basis; requires `complete()`.
  GroebnerBasis reduced_basis() const;

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::int64_t degree;
  };

  void install(Poly h);
  Poly spoly(const Pair& p) const;
  std::optional<std::size_t> find_divisor(const Monomial& m) const;

  RingPtr ring_;
  std::vector<Poly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t step_limit_;
  std::size_t steps_ = 0;
  bool unit_ = false;
};

/// Reduced Groebner basis of the ideal generated by `generators` with
/// respect to the order of `ring` (generators are moved into `ring`).
GroebnerBasis groebner(const RingPtr& ring, const std::vector<Poly>& generators,
                       std::size_t step_limit = kDefaultGroebnerSteps);

/// Remainder of full reduction; zero iff p lies in the ideal.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

}  // namespace lnd
