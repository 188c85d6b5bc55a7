#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace lnd::oracle {

namespace {

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_less(a, b); }
};

using Matrix = std::vector<std::vector<Rat>>;

// Row-reduces in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rat inv = 1 / m[row][c];
    for (std::size_t k = c; k < ncols; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (m[row][k] != 0) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Columns are the polynomials, rows the monomials they (and the target) use.
bool solvable(const std::vector<Poly>& cols, const Poly& target) {
  if (target.is_zero()) return true;
  std::map<Monomial, std::size_t, MonoLess> rows;
  auto index = [&](const Monomial& mono) {
    auto [it, fresh] = rows.try_emplace(mono, rows.size());
    (void)fresh;
    return it->second;
  };
  for (const auto& c : cols)
    for (const auto& t : c.terms()) index(t.monomial);
  for (const auto& t : target.terms()) index(t.monomial);
  const std::size_t n = cols.size();
  Matrix m(rows.size(), std::vector<Rat>(n + 1));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& t : cols[j].terms()) m[rows.at(t.monomial)][j] = t.coeff;
  for (const auto& t : target.terms()) m[rows.at(t.monomial)][n] = t.coeff;
  auto piv = rref(m, n + 1);
  return piv.empty() || piv.back() != n;
}

using Weights = std::vector<unsigned>;

unsigned wdeg(const Monomial& m, const Weights& w) {
  unsigned d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * m[i];
  return d;
}

std::optional<unsigned> homogeneous_degree(const Poly& p, const Weights& w) {
  if (p.is_zero()) return std::nullopt;
  const unsigned d = wdeg(p.terms().front().monomial, w);
  for (const auto& t : p.terms())
    if (wdeg(t.monomial, w) != d) return std::nullopt;
  return d;
}

unsigned max_degree(const Poly& p, const Weights& w) {
  unsigned d = 0;
  for (const auto& t : p.terms()) d = std::max(d, wdeg(t.monomial, w));
  return d;
}

// Exhaustive search over weights 1..kMaxWeight on the variables that occur,
// all-ones first, for a grading making every polynomial homogeneous.
constexpr unsigned kMaxWeight = 4;

std::optional<Weights> find_grading(const std::vector<Poly>& ps, std::size_t nvars) {
  std::vector<std::size_t> used;
  for (std::size_t v = 0; v < nvars; ++v)
    for (const auto& p : ps)
      if (p.uses_variable(v)) {
        used.push_back(v);
        break;
      }
  Weights w(nvars, 1);
  while (true) {
    bool ok = true;
    for (const auto& p : ps) ok = ok && (p.is_zero() || homogeneous_degree(p, w));
    if (ok) return w;
    std::size_t k = 0;
    while (k < used.size() && w[used[k]] == kMaxWeight) w[used[k++]] = 1;
    if (k == used.size()) return std::nullopt;
    ++w[used[k]];
  }
}

void enumerate(std::size_t nvars, std::size_t var, unsigned left, Monomial& cur, unsigned lo,
               unsigned used, std::vector<Monomial>& out) {
  if (var == nvars) {
    if (used >= lo) out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    cur.set(var, e);
    enumerate(nvars, var + 1, left - e, cur, lo, used + e, out);
  }
  cur.set(var, 0);
}

}  // namespace

const char* to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

std::vector<Monomial> monomials(std::size_t nvars, unsigned lo, unsigned hi) {
  std::vector<Monomial> out;
  Monomial cur;
  enumerate(nvars, 0, hi, cur, lo, 0, out);
  return out;
}

bool in_span(const Poly& p, const std::vector<Poly>& basis) { return solvable(basis, p); }

Answer brute_ideal_member(const Poly& p, const std::vector<Poly>& gens, unsigned bound) {
  if (p.is_zero()) return Answer::Yes;
  const RingPtr& ring = p.ring();
  const std::size_t n = ring->arity();

  std::vector<Poly> g{p};
  for (const auto& x : gens)
    if (!x.is_zero()) g.push_back(x.in_ring(ring));
  const std::optional<Weights> w = find_grading(g, n);
  const unsigned dp = w ? *homogeneous_degree(p, *w) : 0;

  std::vector<Poly> cols;
  for (std::size_t i = 1; i < g.size(); ++i) {
    std::vector<Monomial> qs = monomials(n, 0, bound);
    if (w) {
      // Only multipliers of the complementary degree can contribute.
      const unsigned dg = *homogeneous_degree(g[i], *w);
      std::erase_if(qs, [&](const Monomial& m) { return dg > dp || wdeg(m, *w) != dp - dg; });
    }
    for (const auto& q : qs) cols.push_back(g[i].mul_term(q, Rat(1)));
  }
  if (solvable(cols, p)) return Answer::Yes;
  // Weights are >= 1, so every needed multiplier has degree <= dp.
  return w && bound >= dp ? Answer::No : Answer::Unknown;
}

Answer brute_subalgebra_member(const Poly& p, const std::vector<Poly>& gens, unsigned bound) {
  const RingPtr& ring = p.ring();
  std::vector<Poly> g;
  for (const auto& x : gens)
    if (!x.is_constant()) g.push_back(x.in_ring(ring));  // constants add nothing

  // Products of k generators with non-decreasing indices, k = 0..bound.
  struct Prod {
    Poly value;
    std::size_t last;
  };
  std::vector<Poly> cols{Poly::constant(ring, Rat(1))};
  std::vector<Prod> layer{{cols.front(), 0}};
  for (unsigned k = 1; k <= bound && !g.empty(); ++k) {
    std::vector<Prod> next;
    for (const auto& pr : layer)
      for (std::size_t i = pr.last; i < g.size(); ++i) next.push_back({pr.value * g[i], i});
    for (const auto& pr : next) cols.push_back(pr.value);
    layer = std::move(next);
  }
  if (solvable(cols, p)) return Answer::Yes;
  if (g.empty()) return Answer::No;  // the algebra is Q

  // With a positive grading, a product of k generators has degree at least
  // k * (smallest generator degree), so longer products cannot reach p.
  const std::optional<Weights> w = find_grading(g, ring->arity());
  if (!w) return Answer::Unknown;
  unsigned lo = ~0u;
  for (const auto& x : g) lo = std::min(lo, *homogeneous_degree(x, *w));
  return bound >= max_degree(p, *w) / lo ? Answer::No : Answer::Unknown;
}

std::vector<Poly> brute_kernel_sample(const Derivation& d, unsigned bound) {
  const RingPtr& ring = d.ring();
  const std::vector<Monomial> dom = monomials(ring->arity(), 0, bound);

  std::vector<Poly> images;
  std::map<Monomial, std::size_t, MonoLess> rows;
  for (const auto& mono : dom) {
    images.push_back(d.apply(Poly::term(ring, mono, Rat(1))));
    for (const auto& t : images.back().terms()) rows.try_emplace(t.monomial, rows.size());
  }
  Matrix m(rows.size(), std::vector<Rat>(dom.size()));
  for (std::size_t j = 0; j < dom.size(); ++j)
    for (const auto& t : images[j].terms()) m[rows.at(t.monomial)][j] = t.coeff;
  const auto piv = rref(m, dom.size());

  std::vector<bool> is_pivot(dom.size(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Poly> out;
  for (std::size_t f = 0; f < dom.size(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Term> terms{{dom[f], Rat(1)}};
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (m[r][f] != 0) terms.push_back({dom[piv[r]], -m[r][f]});
    out.push_back(Poly::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace lnd::oracle
