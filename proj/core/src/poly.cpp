#include "lnd/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lnd/errors.hpp"

namespace lnd {

namespace {

// Merges two decreasing term lists; b's coefficients are scaled by `sign`.
std::vector<Term> merge_terms(const Ring& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rat s = sign < 0 ? Rat(a[i].coeff - b[j].coeff) : Rat(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

std::vector<Term> merge_all(const Ring& ring, std::vector<std::vector<Term>>& rows, std::size_t lo,
                            std::size_t hi) {
  if (hi - lo == 1) return std::move(rows[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  auto left = merge_all(ring, rows, lo, mid);
  auto right = merge_all(ring, rows, mid, hi);
  return merge_terms(ring, left, right, 1);
}

}  // namespace

Poly Poly::constant(RingPtr ring, const Rat& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return term(std::move(ring), m, Rat(1));
}

Poly Poly::variable(RingPtr ring, const std::string& name) {
  auto i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Poly Poly::term(RingPtr ring, const Monomial& m, const Rat& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  p.sort_and_combine();
  return p;
}

void Poly::sort_and_combine() {
  const Ring& ring = *ring_;
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rat Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rat(0);
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.monomial[var]);
  return d;
}

bool Poly::uses_variable(std::size_t var) const { return degree_in(var) > 0; }

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  if (!ring_) return out;
  for (std::size_t i = 0; i < ring_->arity(); ++i)
    if (uses_variable(i)) out.push_back(i);
  return out;
}

void Poly::check_ring(const Poly& other) const {
  if (!ring_ || !other.ring_) {
    if (ring_ || other.ring_) throw RingMismatch("operation with a detached polynomial");
    return;
  }
  require_same_ring(ring_, other.ring_);
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  check_ring(other);
  if (other.is_zero()) return *this;
  terms_ = merge_terms(*ring_, terms_, other.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_ring(other);
  if (other.is_zero()) return *this;
  terms_ = merge_terms(*ring_, terms_, other.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return large.mul_term(small.terms_[0].monomial, small.terms_[0].coeff);
  std::vector<std::vector<Term>> rows;
  rows.reserve(small.size());
  for (const auto& t : small.terms_) rows.push_back(large.mul_term(t.monomial, t.coeff).terms_);
  Poly out(a.ring_);
  out.terms_ = merge_all(*a.ring_, rows, 0, rows.size());
  return out;
}

Poly Poly::mul_term(const Monomial& m, const Rat& c) const {
  Poly out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff * c});
  return out;
}

Poly Poly::sub_mul_term(const Monomial& m, const Rat& c, const Poly& other) const {
  check_ring(other);
  const Ring& ring = *ring_;
  Poly out(ring_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial bm;
  bool have_b = false;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (!have_b && j < other.terms_.size()) {
      bm = other.terms_[j].monomial * m;
      have_b = true;
    }
    int cmp;
    if (i >= terms_.size())
      cmp = -1;
    else if (!have_b)
      cmp = 1;
    else
      cmp = ring.compare(terms_[i].monomial, bm);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back({bm, -(other.terms_[j].coeff * c)});
      ++j;
      have_b = false;
    } else {
      Rat s = terms_[i].coeff - other.terms_[j].coeff * c;
      if (s != 0) out.terms_.push_back({bm, std::move(s)});
      ++i;
      ++j;
      have_b = false;
    }
  }
  return out;
}

Poly Poly::tail() const {
  Poly out(ring_);
  if (terms_.size() > 1) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(ring_, Rat(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading_coeff();
  return *this * inv;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Lowering one exponent can reorder terms under graded orders.
  return from_terms(ring_, std::move(out));
}

Poly Poly::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Poly out = *this;
    out.ring_ = target;
    return out;
  }
  if (!ring_) return Poly(target);
  std::vector<std::size_t> map(ring_->arity());
  bool identity = ring_->arity() == target->arity();
  for (std::size_t i = 0; i < ring_->arity(); ++i) {
    auto j = target->index_of(ring_->name(i));
    if (!j) {
      if (uses_variable(i))
        throw UnknownVariable("variable " + ring_->name(i) + " not present in target ring");
      map[i] = kMaxVars;
      identity = false;
      continue;
    }
    map[i] = *j;
    if (*j != i) identity = false;
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (identity) {
      terms.push_back(t);
      continue;
    }
    Monomial m;
    for (std::size_t i = 0; i < ring_->arity(); ++i)
      if (t.monomial[i] != 0) m.set(map[i], t.monomial[i]);
    terms.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(terms));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (!same_ring(a.ring_, b.ring_)) return false;
  return a.terms_ == b.terms_;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    Rat mag = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(t.monomial, *p.ring());
    } else {
      out += to_string(mag) + '*' + to_string(t.monomial, *p.ring());
    }
  }
  return out;
}

Poly arith(const Poly& p, const Poly& q, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
    case ArithOp::Pow: {
      Rat e = q.constant_term();
      if (!q.is_constant() || e < 0 || e.get_den() != 1 || !e.get_num().fits_uint_p())
        throw std::invalid_argument("exponent must be a non-negative integer constant");
      return p.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
  }
  throw std::logic_error("unknown arithmetic operation");
}

std::optional<Poly> exact_div(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw DivisionByZero("division by the zero polynomial");
  require_same_ring(p.ring(), q.ring());
  Poly remainder = p;
  std::vector<Term> quotient;
  const Monomial& lq = q.leading_monomial();
  Rat inv = 1 / q.leading_coeff();
  while (!remainder.is_zero()) {
    const Term& lt = remainder.leading_term();
    if (!lq.divides(lt.monomial)) return std::nullopt;
    Monomial m = lt.monomial.quotient(lq);
    Rat c = lt.coeff * inv;
    remainder = remainder.sub_mul_term(m, c, q);
    quotient.push_back({m, std::move(c)});
  }
  return Poly::from_terms(p.ring(), std::move(quotient));
}

unsigned max_power_dividing(const Poly& p, const Poly& f) {
  if (p.is_zero()) throw std::domain_error("max_power_dividing: p is zero");
  if (f.is_constant()) throw std::domain_error("max_power_dividing: f must be non-constant");
  unsigned t = 0;
  Poly cur = p;
  while (auto q = exact_div(cur, f)) {
    cur = std::move(*q);
    ++t;
  }
  return t;
}

Poly substitute(const Poly& p, std::span<const std::optional<Poly>> images, const RingPtr& target) {
  const std::size_t n = p.ring()->arity();
  if (images.size() != n) throw ArityMismatch("substitution needs one image per variable");
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.uses_variable(i)) continue;
    if (!images[i]) throw UnknownVariable("unmapped variable in substitution: " + p.ring()->name(i));
    if (!images[i]->is_zero()) require_same_ring(images[i]->ring(), target);
  }
  std::vector<std::vector<Poly>> powers(n);
  auto power_of = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, Rat(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]->in_ring(target));
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Poly prod = Poly::constant(target, t.coeff);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i)
      if (t.monomial[i] != 0) prod = prod * power_of(i, t.monomial[i]);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Poly::from_terms(target, std::move(acc));
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignment,
                const RingPtr& target) {
  std::vector<std::optional<Poly>> images(p.ring()->arity());
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto it = assignment.find(p.ring()->name(i));
    if (it != assignment.end()) images[i] = it->second.is_zero() ? Poly(target) : it->second;
  }
  return substitute(p, images, target);
}

Poly set_to_zero(const Poly& p, std::span<const std::size_t> vars) {
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    bool zero = std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return t.monomial[v] != 0; });
    if (!zero) kept.push_back(t);
  }
  return Poly::from_terms(p.ring(), std::move(kept));
}

Rat evaluate(const Poly& p, std::span<const Rat> point) {
  if (point.size() != p.ring()->arity()) throw ArityMismatch("evaluation point has wrong arity");
  Rat sum = 0;
  for (const auto& t : p.terms()) {
    Rat v = t.coeff;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i)
      if (t.monomial[i] != 0) v *= power(point[i], t.monomial[i]);
    sum += v;
  }
  return sum;
}

void TPoly::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Poly TPoly::at(const Poly& t) const {
  if (coeffs.empty()) return Poly(t.ring());
  Poly result = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) result = result * t + coeffs[k];
  return result;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly out;
  if (a.coeffs.empty() || b.coeffs.empty()) return out;
  const RingPtr& ring = a.coeffs.front().ring();
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Poly(ring));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  out.trim();
  return out;
}

std::string to_string(const TPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.coeffs[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << to_string(p.coeffs[k]);
    } else {
      os << '(' << to_string(p.coeffs[k]) << ")*T";
      if (k > 1) os << '^' << k;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace lnd
