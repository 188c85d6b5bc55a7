#include "lnd/subalgebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lnd/errors.hpp"
#include "lnd/ideals.hpp"

namespace lnd {

SubalgebraPresentation::SubalgebraPresentation(RingPtr ring, std::vector<NamedPoly> generators)
    : ring_(std::move(ring)) {
  std::set<std::string> seen;
  for (auto& g : generators) {
    if (!seen.insert(g.name).second)
      throw std::invalid_argument("duplicate generator name: " + g.name);
    gens_.push_back({g.name, g.poly.in_ring(ring_)});
  }
}

std::vector<Poly> SubalgebraPresentation::polys() const {
  std::vector<Poly> out;
  for (const auto& g : gens_) out.push_back(g.poly);
  return out;
}

namespace {

Poly drop_constant(const Poly& p) {
  return p - Poly::constant(p.ring(), p.constant_term());
}

// Rational nullspace basis of the rows, returned with the pivot layout
// so callers can parametrise by free columns.
struct Nullspace {
  std::vector<std::vector<Rat>> rref;  // one row per pivot
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free;
};

Nullspace nullspace(std::vector<std::vector<Rat>> rows, std::size_t n) {
  Nullspace ns;
  std::size_t r = 0;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rat inv = Rat(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      Rat f = rows[o][c];
      for (std::size_t k = 0; k < n; ++k) rows[o][k] -= f * rows[r][k];
    }
    ns.pivots.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  rows.resize(r);
  ns.rref = std::move(rows);
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) ns.free.push_back(c);
  return ns;
}

}  // namespace

std::optional<std::vector<std::int64_t>> positive_grading(const RingPtr& ring,
                                                          const std::vector<Poly>& generators) {
  const std::size_t n = ring->arity();
  std::vector<std::vector<Rat>> rows;
  for (const auto& g0 : generators) {
    Poly g = drop_constant(g0.in_ring(ring));
    if (g.size() < 2) continue;
    const Monomial& first = g.terms().front().monomial;
    for (std::size_t t = 1; t < g.size(); ++t) {
      std::vector<Rat> row(n);
      const Monomial& m = g.terms()[t].monomial;
      for (std::size_t i = 0; i < n; ++i) row[i] = Rat(int(m[i]) - int(first[i]));
      rows.push_back(std::move(row));
    }
  }
  Nullspace ns = nullspace(std::move(rows), n);
  const std::size_t d = ns.free.size();
  if (d == 0) return std::nullopt;

  auto evaluate_choice = [&](const std::vector<unsigned>& c) -> std::optional<std::vector<Rat>> {
    std::vector<Rat> w(n);
    for (std::size_t k = 0; k < d; ++k) w[ns.free[k]] = Rat(c[k]);
    for (std::size_t r = 0; r < ns.pivots.size(); ++r) {
      Rat v = 0;
      for (std::size_t k = 0; k < d; ++k) v -= ns.rref[r][ns.free[k]] * Rat(c[k]);
      if (v <= 0) return std::nullopt;
      w[ns.pivots[r]] = v;
    }
    return w;
  };

  // Choices with entries in 1..K, K growing, capped overall.
  constexpr unsigned kMaxEntry = 6;
  constexpr std::size_t kMaxTries = 200000;
  std::size_t tries = 0;
  for (unsigned top = 1; top <= kMaxEntry; ++top) {
    std::vector<unsigned> c(d, 1);
    while (true) {
      if (*std::max_element(c.begin(), c.end()) == top) {
        if (++tries > kMaxTries) return std::nullopt;
        if (auto w = evaluate_choice(c)) {
          Integer den = 1;
          for (const auto& x : *w) den = lcm(den, Integer(x.get_den()));
          std::vector<Integer> ints;
          Integer g = 0;
          for (const auto& x : *w) {
            Integer v = Integer(x.get_num()) * (den / Integer(x.get_den()));
            g = gcd(g, v);
            ints.push_back(v);
          }
          std::vector<std::int64_t> out;
          for (auto& v : ints) {
            v /= g;
            if (!v.fits_slong_p() || v > 1000000) return std::nullopt;
            out.push_back(v.get_si());
          }
          return out;
        }
      }
      std::size_t k = 0;
      while (k < d && c[k] == top) c[k++] = 1;
      if (k == d) break;
      ++c[k];
    }
  }
  return std::nullopt;
}

MembershipEngine::MembershipEngine(SubalgebraPresentation algebra, std::size_t step_limit)
    : algebra_(std::move(algebra)), step_limit_(step_limit) {
  const RingPtr& ring = algebra_.ring();
  const std::size_t n = ring->arity();
  std::vector<Poly> parts;
  for (std::size_t j = 0; j < algebra_.generators().size(); ++j) {
    Poly g = drop_constant(algebra_.generators()[j].poly);
    if (g.is_zero()) continue;
    used_.push_back(j);
    parts.push_back(std::move(g));
  }
  if (n + used_.size() > kMaxVars)
    throw std::invalid_argument("too many generators for elimination");
  grading_ = positive_grading(ring, parts);

  std::vector<std::string> names = ring->variables();
  for (std::size_t k = 0; k < used_.size(); ++k) {
    std::string stem = "w_" + std::to_string(k);
    while (std::find(names.begin(), names.end(), stem) != names.end()) stem += "_";
    names.push_back(stem);
  }
  MonomialOrder order = MonomialOrder::grevlex();
  if (grading_) {
    std::vector<std::int64_t> w = *grading_;
    for (const auto& g : parts) {
      std::int64_t deg = 0;
      const Monomial& m = g.leading_monomial();
      for (std::size_t i = 0; i < n; ++i) deg += (*grading_)[i] * m[i];
      w.push_back(deg);
    }
    order = MonomialOrder::weighted(std::move(w));
  }
  order.elimination_block = n;
  ext_ = Ring::make(std::move(names), std::move(order));

  std::vector<std::string> expr_names;
  for (const auto& g : algebra_.generators()) expr_names.push_back(g.name);
  expr_ring_ = Ring::make(std::move(expr_names));

  std::vector<Poly> ideal;
  for (std::size_t k = 0; k < parts.size(); ++k)
    ideal.push_back(Poly::variable(ext_, n + k) - parts[k].in_ring(ext_));
  engine_ = std::make_unique<Buchberger>(ext_, ideal, step_limit_);
}

MembershipEngine::~MembershipEngine() = default;
MembershipEngine::MembershipEngine(MembershipEngine&&) noexcept = default;
MembershipEngine& MembershipEngine::operator=(MembershipEngine&&) noexcept = default;

Buchberger& MembershipEngine::engine() { return *engine_; }

std::optional<Poly> MembershipEngine::reduce_to_tags(const Poly& p0) {
  const RingPtr& ring = algebra_.ring();
  const std::size_t n = ring->arity();
  Poly p = p0.in_ring(ring);

  std::vector<Poly> pieces;
  if (grading_) {
    std::map<std::int64_t, std::vector<Term>> by_degree;
    for (const auto& t : p.terms()) {
      std::int64_t deg = 0;
      for (std::size_t i = 0; i < n; ++i) deg += (*grading_)[i] * t.monomial[i];
      by_degree[deg].push_back(t);
    }
    for (auto& [deg, terms] : by_degree) {
      if (deg > reached_) {
        engine().run(deg);
        reached_ = deg;
      }
      pieces.push_back(Poly::from_terms(ring, std::move(terms)));
    }
  } else {
    if (reached_ < 0) {
      engine().run();
      reached_ = 0;
    }
    pieces.push_back(p);
  }

  Poly acc(ext_);
  for (const auto& piece : pieces) {
    Poly r = engine().reduce(piece.in_ring(ext_));
    for (std::size_t i = 0; i < n; ++i)
      if (r.uses_variable(i)) return std::nullopt;
    acc += r;
  }
  return acc;
}

bool MembershipEngine::member(const Poly& p) {
  if (p.is_constant()) return true;
  return reduce_to_tags(p).has_value();
}

std::optional<Poly> MembershipEngine::expression(const Poly& p) {
  auto r = reduce_to_tags(p);
  if (!r) return std::nullopt;
  const std::size_t n = algebra_.ring()->arity();
  std::vector<std::optional<Poly>> images(ext_->arity());
  for (std::size_t k = 0; k < used_.size(); ++k) {
    const Poly& g = algebra_.generators()[used_[k]].poly;
    images[n + k] = Poly::variable(expr_ring_, used_[k]) -
                    Poly::constant(expr_ring_, g.constant_term());
  }
  return substitute(*r, images, expr_ring_);
}

bool member(const Poly& p, const SubalgebraPresentation& a, std::size_t step_limit) {
  if (p.is_constant()) return true;
  MembershipEngine e(a, step_limit);
  return e.member(p);
}

LocalizedMembership localized_member(MembershipEngine& engine, const Poly& p0, const Poly& f0,
                                     unsigned nmax) {
  const RingPtr& ring = engine.algebra().ring();
  Poly p = p0.in_ring(ring);
  Poly f = f0.in_ring(ring);
  if (!engine.member(f)) throw std::invalid_argument("localizing element is not in the algebra");
  LocalizedMembership out;
  out.nmax = nmax;

  std::vector<bool> seen(ring->arity(), false);
  for (const auto& g : engine.algebra().generators())
    for (auto v : g.poly.support()) seen[v] = true;
  for (auto v : p.support())
    if (!seen[v]) {
      out.outcome = LocalizedMembership::Outcome::Refuted;
      return out;
    }

  Poly q = p;
  for (unsigned k = 0; k <= nmax; ++k) {
    if (engine.member(q)) {
      out.outcome = LocalizedMembership::Outcome::Found;
      out.exponent = k;
      return out;
    }
    q = q * f;
  }
  return out;
}

LocalizedMembership localized_member(const Poly& p, const SubalgebraPresentation& a,
                                     const Poly& f, unsigned nmax) {
  MembershipEngine e(a);
  return localized_member(e, p, f, nmax);
}

LocalizedEqualityCert localized_equality(MembershipEngine& engine, const LocalSliceData& sd,
                                         const Derivation& d, unsigned nmax) {
  if (!sd.valid) throw std::invalid_argument("slice data is not a valid local slice");
  LocalizedEqualityCert cert;
  cert.f = sd.plinth;
  cert.slice = sd.slice;
  cert.base = sd.base;

  bool failed = false, open = false;
  for (const auto& g : engine.algebra().generators()) {
    Poly image = d.apply(g.poly.in_ring(d.ring()));
    bool ok = image.is_zero();
    failed |= !ok;
    cert.kernel_checks.push_back({g.name, std::move(image), ok});
  }

  try {
    cert.plinth_in_algebra = engine.member(sd.plinth);
  } catch (const ResourceLimitExceeded&) {
    cert.status = CertStatus::Inconclusive;
    return cert;
  }
  if (!cert.plinth_in_algebra) {
    cert.status = CertStatus::Invalid;
    return cert;
  }

  const unsigned k = sd.base_power;
  for (auto& entry : essen_step1(d, sd)) {
    LocalizedWitness w;
    w.source = entry.source;
    w.element = entry.value;
    // numerator / base^e = c * numerator * base^(k m - e) / f^m
    unsigned m = (entry.value.exponent + k - 1) / k;
    w.target = entry.value.numerator * sd.base.pow(k * m - entry.value.exponent);
    try {
      w.result = localized_member(engine, w.target, sd.plinth, nmax);
    } catch (const ResourceLimitExceeded&) {
      w.resource_exhausted = true;
    }
    if (w.resource_exhausted || w.result.outcome == LocalizedMembership::Outcome::NotFound)
      open = true;
    else if (w.result.outcome == LocalizedMembership::Outcome::Refuted)
      failed = true;
    cert.witnesses.push_back(std::move(w));
  }
  cert.status = failed ? CertStatus::Invalid : open ? CertStatus::Inconclusive : CertStatus::Valid;
  return cert;
}

std::optional<Poly> subring_plus_ideal_member(const Poly& p, const SubalgebraPresentation& c,
                                              const std::vector<std::string>& ideal_vars,
                                              std::size_t step_limit) {
  const RingPtr& ring = c.ring();
  std::vector<std::size_t> idx;
  for (const auto& v : ideal_vars) idx.push_back(ring->require_index(v));
  for (const auto& g : c.generators())
    for (auto i : idx)
      if (g.poly.uses_variable(i))
        throw std::invalid_argument("subring generator " + g.name + " involves ideal variable " +
                                    ring->name(i));
  Poly q = set_to_zero(p.in_ring(ring), idx);
  if (q.is_constant()) return q;
  if (c.generators().empty()) return std::nullopt;
  if (!member(q, c, step_limit)) return std::nullopt;
  return q;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Valid: return "valid";
    case CertStatus::Invalid: return "invalid";
    case CertStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace lnd
