#include "lnd/ring.hpp"

#include <algorithm>
#include <set>

#include "lnd/errors.hpp"

namespace lnd {

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
  if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
  exps_[i] = static_cast<Exponent>(e);
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    out.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    out.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Ring::Ring(std::vector<std::string> variables, MonomialOrder order)
    : names_(std::move(variables)), order_(std::move(order)) {
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("too many variables (limit " + std::to_string(kMaxVars) + ")");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name: " + n);
  }
  if (order_.kind == OrderKind::WeightedGrevlex) {
    if (order_.weights.size() != names_.size())
      throw std::invalid_argument("weight vector length does not match ring arity");
    for (auto w : order_.weights)
      if (w <= 0) throw std::invalid_argument("monomial order weights must be strictly positive");
  } else {
    order_.weights.clear();
  }
  if (order_.elimination_block > names_.size())
    throw std::invalid_argument("elimination block larger than ring");
}

RingPtr Ring::make(std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(variables), std::move(order));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Ring::require_index(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw UnknownVariable("unknown variable: " + name);
  return *i;
}

std::int64_t Ring::weight(std::size_t var) const {
  return order_.kind == OrderKind::WeightedGrevlex ? order_.weights[var] : 1;
}

std::int64_t Ring::degree(const Monomial& m) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += weight(i) * m[i];
  return d;
}

int Ring::compare_graded(const Monomial& a, const Monomial& b, std::size_t lo,
                         std::size_t hi) const {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += weight(i) * a[i];
    db += weight(i) * b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = names_.size();
  if (order_.kind == OrderKind::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  const std::size_t k = order_.elimination_block;
  if (k > 0 && k < n) {
    if (int c = compare_graded(a, b, 0, k)) return c;
    return compare_graded(a, b, k, n);
  }
  return compare_graded(a, b, 0, n);
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return Ring::make(ring->variables(), std::move(order));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch("operands belong to different rings");
}

}  // namespace lnd
