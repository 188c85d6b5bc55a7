#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lnd/rational.hpp"
#include "lnd/ring.hpp"

namespace lnd {

struct Term {
  Monomial monomial;
  Rat coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over Q. Terms are stored strictly
/// decreasing in the ring's monomial order with no zero coefficients, so
/// structural equality is mathematical equality.
class Poly {
 public:
  Poly() = default;  // detached zero; only useful as a placeholder
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rat& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly variable(RingPtr ring, const std::string& name);
  static Poly term(RingPtr ring, const Monomial& m, const Rat& c);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rat constant_term() const;

  /// Caller guarantees non-zero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rat& leading_coeff() const { return terms_.front().coeff; }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;
  /// Indices of variables that occur.
  std::vector<std::size_t> support() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  /// `this * c * m`; order is preserved because monomial orders are
  /// multiplicative.
  Poly mul_term(const Monomial& m, const Rat& c) const;
  /// `this - c * m * other` in one merge pass.
  Poly sub_mul_term(const Monomial& m, const Rat& c, const Poly& other) const;

  /// Copy without the leading term.
  Poly tail() const;

  Poly pow(unsigned exponent) const;
  Poly monic() const;
  Poly derivative(std::size_t var) const;

  /// Same polynomial in another ring with the same variable names (in any
  /// order) or a superset of them.
  Poly in_ring(const RingPtr& target) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_ring(const Poly& other) const;
  void sort_and_combine();

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Canonical rendering: terms in decreasing order, `a/b` coefficients,
/// explicit `*`, `^` for powers.
std::string to_string(const Poly& p);
std::string to_string(const Monomial& m, const Ring& ring);

enum class ArithOp { Add, Sub, Mul, Pow };
/// For `Pow`, `q` must be a non-negative integer constant.
Poly arith(const Poly& p, const Poly& q, ArithOp op);

/// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<Poly> exact_div(const Poly& p, const Poly& q);

/// Largest t such that f^t divides p.
unsigned max_power_dividing(const Poly& p, const Poly& f);

/// Ring homomorphism determined by images of variables (by index, all in
/// `target`). `images[i]` may be empty only if variable i does not occur.
Poly substitute(const Poly& p, std::span<const std::optional<Poly>> images, const RingPtr& target);
/// Name-keyed assignment; every occurring variable must be mapped.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignment,
                const RingPtr& target);
/// Sets the listed variables to zero, staying in the same ring.
Poly set_to_zero(const Poly& p, std::span<const std::size_t> vars);

Rat evaluate(const Poly& p, std::span<const Rat> point);

/// Polynomial in a formal variable T with coefficients in a ring.
/// Trailing zero coefficients are trimmed.
struct TPoly {
  std::vector<Poly> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  void trim();
  /// Substitutes T := t.
  Poly at(const Poly& t) const;

  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs == b.coeffs; }
};

std::string to_string(const TPoly& p);

}  // namespace lnd
