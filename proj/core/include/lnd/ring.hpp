#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lnd {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector. Entries past the ring arity are always zero, so the
/// arithmetic never needs to know the arity.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() { exps_.fill(0); }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);

  unsigned total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Caller guarantees `divisor.divides(*this)`.
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  /// Plain lexicographic comparison of exponent vectors; used only for
  /// deterministic tie breaking, never as a term order.
  friend bool lex_less(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::array<Exponent, kMaxVars> exps_;
};

enum class OrderKind { Lex, Grevlex, WeightedGrevlex };

/// Monomial order tag. Graded orders may be split into an elimination
/// block: the first `elimination_block` variables are compared first (by
/// weighted degree, then reverse lex), then the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<std::int64_t> weights;  // WeightedGrevlex only; strictly positive
  std::size_t elimination_block = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, {}, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::Grevlex, {}, 0}; }
  static MonomialOrder weighted(std::vector<std::int64_t> w) {
    return {OrderKind::WeightedGrevlex, std::move(w), 0};
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring over Q: ordered, distinct variable names plus a
/// monomial order. Immutable once built.
class Ring {
 public:
  Ring(std::vector<std::string> variables, MonomialOrder order = {});

  static RingPtr make(std::vector<std::string> variables, MonomialOrder order = {});

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& variables() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require_index(const std::string& name) const;
  const MonomialOrder& order() const { return order_; }

  /// Three-way comparison under the ring's order: >0 means `a` is larger.
  int compare(const Monomial& a, const Monomial& b) const;

  /// Degree used by graded algorithms: weighted degree for weighted
  /// orders, total degree otherwise.
  std::int64_t degree(const Monomial& m) const;
  std::int64_t weight(std::size_t var) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  int compare_graded(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  std::vector<std::string> names_;
  MonomialOrder order_;
};

/// Same variables, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

/// True when both pointers denote the same ring (pointer or structural).
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace lnd
