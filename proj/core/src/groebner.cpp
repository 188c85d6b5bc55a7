#include "lnd/groebner.hpp"

#include <algorithm>

#include "lnd/errors.hpp"

namespace lnd {

namespace {

// Full reduction; `divisor` returns a monic basis element whose leading
// monomial divides the argument, or nullptr.
template <typename FindDivisor>
Poly reduce_with(const Poly& p, FindDivisor&& divisor) {
  Poly r = p;
  std::vector<Term> remainder;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (const Poly* g = divisor(lt.monomial)) {
      Monomial m = lt.monomial.quotient(g->leading_monomial());
      Rat c = lt.coeff / g->leading_coeff();
      r = r.sub_mul_term(m, c, *g);
    } else {
      remainder.push_back(lt);
      r = r.tail();
    }
  }
  return Poly::from_terms(p.ring(), std::move(remainder));
}

}  // namespace

Buchberger::Buchberger(RingPtr ring, const std::vector<Poly>& generators, std::size_t step_limit)
    : ring_(std::move(ring)), step_limit_(step_limit) {
  for (const auto& g : generators) {
    if (unit_) break;
    Poly h = reduce(g.in_ring(ring_));
    if (!h.is_zero()) install(h.monic());
  }
}

std::optional<std::size_t> Buchberger::find_divisor(const Monomial& m) const {
  for (std::size_t i = 0; i < polys_.size(); ++i)
    if (active_[i] && polys_[i].leading_monomial().divides(m)) return i;
  return std::nullopt;
}

Poly Buchberger::reduce(const Poly& p) const {
  return reduce_with(p.in_ring(ring_), [&](const Monomial& m) -> const Poly* {
    auto i = find_divisor(m);
    return i ? &polys_[*i] : nullptr;
  });
}

Poly Buchberger::spoly(const Pair& p) const {
  const Poly& f = polys_[p.i];
  const Poly& g = polys_[p.j];
  Poly a = f.mul_term(p.lcm.quotient(f.leading_monomial()), Rat(1) / f.leading_coeff());
  return a.sub_mul_term(p.lcm.quotient(g.leading_monomial()), Rat(1) / g.leading_coeff(), g);
}

void Buchberger::install(Poly h) {
  if (h.is_constant()) {
    unit_ = true;
    pairs_.clear();
    std::fill(active_.begin(), active_.end(), false);
    polys_.push_back(std::move(h));
    active_.push_back(true);
    return;
  }
  const std::size_t k = polys_.size();
  const Monomial& lh = h.leading_monomial();

  struct Candidate {
    std::size_t i;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Candidate> fresh;
  for (std::size_t i = 0; i < k; ++i) {
    if (!active_[i]) continue;
    const Monomial& li = polys_[i].leading_monomial();
    fresh.push_back({i, lcm(li, lh), li.coprime(lh)});
  }

  // Chain criterion among the new pairs: keep (g,h) only if no other new
  // pair has an lcm dividing its lcm; ties keep the last survivor.
  std::vector<Candidate> kept;
  for (std::size_t c = 0; c < fresh.size(); ++c) {
    const auto& cand = fresh[c];
    bool drop = false;
    if (!cand.coprime) {
      for (std::size_t o = c + 1; o < fresh.size() && !drop; ++o)
        if (fresh[o].lcm.divides(cand.lcm)) drop = true;
      for (std::size_t o = 0; o < kept.size() && !drop; ++o)
        if (kept[o].lcm.divides(cand.lcm)) drop = true;
    }
    if (!drop) kept.push_back(cand);
  }

  // Old pairs made redundant by h.
  std::vector<Pair> survivors;
  survivors.reserve(pairs_.size());
  for (auto& p : pairs_) {
    bool redundant = lh.divides(p.lcm) &&
                     !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                     !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
    if (!redundant) survivors.push_back(std::move(p));
  }
  pairs_ = std::move(survivors);

  // Coprime leading monomials: first criterion, the S-polynomial reduces to 0.
  for (const auto& cand : kept)
    if (!cand.coprime) pairs_.push_back({cand.i, k, cand.lcm, ring_->degree(cand.lcm)});

  for (std::size_t i = 0; i < k; ++i)
    if (active_[i] && lh.divides(polys_[i].leading_monomial())) active_[i] = false;

  polys_.push_back(std::move(h));
  active_.push_back(true);
}

void Buchberger::run(std::optional<std::int64_t> degree_limit) {
  while (!pairs_.empty() && !unit_) {
    std::size_t best = pairs_.size();
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const Pair& c = pairs_[p];
      if (degree_limit && c.degree > *degree_limit) continue;
      if (best == pairs_.size()) {
        best = p;
        continue;
      }
      const Pair& b = pairs_[best];
      if (c.degree != b.degree) {
        if (c.degree < b.degree) best = p;
      } else if (!(c.lcm == b.lcm)) {
        if (lex_less(c.lcm, b.lcm)) best = p;
      } else if (std::tie(c.i, c.j) < std::tie(b.i, b.j)) {
        best = p;
      }
    }
    if (best == pairs_.size()) return;
    Pair pair = pairs_[best];
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    if (++steps_ > step_limit_)
      throw ResourceLimitExceeded("Groebner basis step ceiling (" + std::to_string(step_limit_) +
                                  " pairs) exceeded");
    Poly h = reduce(spoly(pair));
    if (!h.is_zero()) install(h.monic());
  }
}

GroebnerBasis Buchberger::reduced_basis() const {
  if (!complete() && !unit_)
    throw std::logic_error("reduced_basis requires a completed Buchberger run");
  GroebnerBasis out;
  out.ring = ring_;
  out.reduced = true;
  if (unit_) {
    out.basis.push_back(Poly::constant(ring_, Rat(1)));
    return out;
  }
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (!active_[i]) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
      if (j == i || !active_[j]) continue;
      const auto& lj = polys_[j].leading_monomial();
      const auto& li = polys_[i].leading_monomial();
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(polys_[i]);
  }
  std::vector<Poly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    const Poly& g = minimal[i];
    Poly tail = reduce_with(g.tail(), [&](const Monomial& m) -> const Poly* {
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i && minimal[j].leading_monomial().divides(m)) return &minimal[j];
      return nullptr;
    });
    Poly lead = Poly::term(ring_, g.leading_monomial(), g.leading_coeff());
    reduced.push_back((lead + tail).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return ring_->compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  out.basis = std::move(reduced);
  return out;
}

GroebnerBasis groebner(const RingPtr& ring, const std::vector<Poly>& generators,
                       std::size_t step_limit) {
  Buchberger b(ring, generators, step_limit);
  b.run();
  return b.reduced_basis();
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  Poly r = reduce_with(p.in_ring(gb.ring), [&](const Monomial& m) -> const Poly* {
    for (const auto& g : gb.basis)
      if (g.leading_monomial().divides(m)) return &g;
    return nullptr;
  });
  return p.ring() ? r.in_ring(p.ring()) : r;
}

}  // namespace lnd
