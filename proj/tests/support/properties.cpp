#include "properties.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "../oracles/oracles.hpp"
#include "lnd/errors.hpp"
#include "lnd/ideals.hpp"
#include "lnd/slices.hpp"
#include "lnd/subalgebra.hpp"
#include "lnd/symmetry.hpp"
#include "lnd/weights.hpp"
#include "random.hpp"

namespace lnd::testing {

namespace {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (first.empty()) first = what;
  }
  void skip() { ++skipped; }

  std::size_t cases = 0, failures = 0, skipped = 0;
  std::string first;
};

template <class Body>
PropertyStats drive(std::string name, std::uint64_t seed, std::size_t cases, Body body) {
  const auto t0 = std::chrono::steady_clock::now();
  Random rng(seed);
  Tally t;
  while (t.cases + t.skipped < cases) {
    try {
      body(rng, t);
    } catch (const ResourceLimitExceeded&) {
      t.skip();
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
  }
  PropertyStats s;
  s.name = std::move(name);
  s.cases = t.cases;
  s.failures = t.failures;
  s.skipped = t.skipped;
  s.first_failure = t.first;
  s.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

RingPtr ring_of(std::size_t n, MonomialOrder order = {}) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
  std::vector<std::string> v(names, names + n);
  return Ring::make(v, order);
}

Poly constant(const RingPtr& r, const Rat& c) { return Poly::constant(r, c); }

std::string show(std::initializer_list<std::pair<const char*, const Poly*>> items) {
  std::ostringstream os;
  for (const auto& [k, p] : items) os << k << " = " << to_string(*p) << "; ";
  return os.str();
}

std::vector<std::string> sorted_strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string summary(const PropertyStats& s) {
  std::ostringstream os;
  os << s.name << ": " << s.cases << " cases, " << s.failures << " failures, " << s.skipped
     << " skipped, " << static_cast<long>(s.ms) << " ms";
  if (!s.first_failure.empty()) os << " (first: " << s.first_failure << ")";
  return os.str();
}

PropertyStats ring_axioms(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(3);
  return drive("ring axioms", seed, cases, [&](Random& g, Tally& t) {
    Poly p = g.poly(r, 3, 4), q = g.poly(r, 3, 4), s = g.poly(r, 2, 3);
    bool ok = (p + q) + s == p + (q + s) && p * q == q * p && p * (q + s) == p * q + p * s &&
              (p * q) * s == p * (q * s) && (p - p).is_zero() && p * constant(r, 1) == p;
    t.check(ok, show({{"p", &p}, {"q", &q}, {"s", &s}}));
  });
}

PropertyStats exact_division(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(3);
  return drive("exact division", seed, cases, [&](Random& g, Tally& t) {
    Poly p = g.poly(r, 3, 4), q = g.poly(r, 2, 3);
    if (q.is_zero()) return;
    auto back = exact_div(p * q, q);
    bool ok = back && *back == p;
    if (!q.is_constant()) {
      ok = ok && !exact_div(p * q + constant(r, g.coeff()), q);
      const unsigned k = static_cast<unsigned>(g.range(1, 3));
      if (!p.is_zero()) ok = ok && max_power_dividing(p * q.pow(k), q) >= k;
    }
    t.check(ok, show({{"p", &p}, {"q", &q}}));
  });
}

PropertyStats substitution_homomorphism(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(3), target = ring_of(2);
  return drive("substitution homomorphism", seed, cases, [&](Random& g, Tally& t) {
    std::vector<std::optional<Poly>> img;
    for (int i = 0; i < 3; ++i) img.emplace_back(g.poly(target, 2, 3));
    Poly p = g.poly(r, 3, 3), q = g.poly(r, 3, 3);
    auto sub = [&](const Poly& x) { return substitute(x, img, target); };
    std::vector<Rat> pt{g.scalar(), g.scalar()};
    std::vector<Rat> img_pt;
    for (const auto& i : img) img_pt.push_back(evaluate(*i, pt));
    bool ok = sub(p * q) == sub(p) * sub(q) && sub(p + q) == sub(p) + sub(q) &&
              evaluate(sub(p), pt) == evaluate(p, img_pt);
    t.check(ok, show({{"p", &p}, {"q", &q}}));
  });
}

PropertyStats leibniz(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(4);
  return drive("Leibniz rule", seed, cases, [&](Random& g, Tally& t) {
    Derivation d = g.derivation(r, 2, 3);
    Poly p = g.poly(r, 3, 4), q = g.poly(r, 3, 4);
    const Rat c = g.scalar();
    bool ok = d(p * q) == p * d(q) + q * d(p) && d(p + c * q) == d(p) + c * d(q) &&
              d(constant(r, c)).is_zero();
    t.check(ok, to_string(d) + "; " + show({{"p", &p}, {"q", &q}}));
  });
}

PropertyStats theta_multiplicative(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(4);
  return drive("theta multiplicative", seed, cases, [&](Random& g, Tally& t) {
    Derivation d = g.triangular(r, 2, 2);
    Poly p = g.poly(r, 2, 3), q = g.poly(r, 2, 3);
    t.check(theta(d, p * q) == theta(d, p) * theta(d, q),
            to_string(d) + "; " + show({{"p", &p}, {"q", &q}}));
  });
}

PropertyStats theta_at_zero(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(4);
  return drive("theta at T=0", seed, cases, [&](Random& g, Tally& t) {
    Derivation d = g.triangular(r, 2, 3);
    Poly p = g.poly(r, 3, 4);
    TPoly th = theta(d, p);
    bool ok = th.at(Poly(r)) == p && (th.coeffs.size() < 2 || th.coeffs[1] == d(p));
    t.check(ok, to_string(d) + "; " + show({{"p", &p}}));
  });
}

PropertyStats flow_law(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(4);
  return drive("flow law", seed, cases, [&](Random& g, Tally& t) {
    Derivation d = g.triangular(r, 2, 2);
    Poly p = g.poly(r, 2, 3);
    const Rat c1 = g.scalar(), c2 = g.scalar();
    Poly once = theta(d, p).at(constant(r, c1));
    Poly twice = theta(d, once).at(constant(r, c2));
    t.check(twice == theta(d, p).at(constant(r, c1 + c2)),
            to_string(d) + "; " + show({{"p", &p}}) + "c1 = " + to_string(c1) +
                ", c2 = " + to_string(c2));
  });
}

PropertyStats groebner_permutation(std::uint64_t seed, std::size_t cases) {
  const RingPtr grevlex = ring_of(3), lex = ring_of(2, MonomialOrder::lex());
  return drive("reduced basis independent of generator order", seed, cases,
               [&](Random& g, Tally& t) {
                 const RingPtr& r = g.range(0, 3) == 0 ? lex : grevlex;
                 std::vector<Poly> gens;
                 const long k = g.range(2, 3);
                 for (long i = 0; i < k; ++i) {
                   Poly p = g.poly(r, 2, 3);
                   if (!p.is_zero()) gens.push_back(p);
                 }
                 if (gens.empty()) return;
                 std::vector<Poly> other = gens;
                 g.shuffle(other);
                 other.push_back(other.front() * g.poly(r, 1, 2) + other.back());
                 g.shuffle(other);
                 GroebnerBasis a = groebner(r, gens), b = groebner(r, other);
                 bool ok = a.reduced && b.reduced && sorted_strings(a.basis) == sorted_strings(b.basis);
                 std::string msg;
                 for (const auto& p : gens) msg += to_string(p) + "; ";
                 t.check(ok, msg);
               });
}

PropertyStats normal_form_idempotent(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(3);
  return drive("normal form idempotent", seed, cases, [&](Random& g, Tally& t) {
    std::vector<Poly> gens;
    for (long i = 0, k = g.range(1, 3); i < k; ++i) gens.push_back(g.poly(r, 2, 3));
    GroebnerBasis gb = groebner(r, gens);
    for (int q = 0; q < 4; ++q) {
      Poly p = g.poly(r, 4, 5);
      Poly nf = normal_form(p, gb);
      bool ok = normal_form(nf, gb) == nf && normal_form(p - nf, gb).is_zero();
      for (const auto& term : nf.terms())
        for (const auto& b : gb.basis) ok = ok && !b.leading_monomial().divides(term.monomial);
      t.check(ok, show({{"p", &p}, {"nf", &nf}}));
    }
  });
}

PropertyStats monomial_height(std::uint64_t seed, std::size_t cases) {
  PropertyStats all;
  all.name = "height of monomial ideals, k = 1..7";
  const std::size_t per_k = (cases + 6) / 7;
  for (std::size_t k = 1; k <= 7; ++k) {
    PropertyStats s = drive("", seed + k, per_k, [&](Random& g, Tally& t) {
      const std::size_t extra = static_cast<std::size_t>(g.range(0, 2));
      const RingPtr r = ring_of(k + extra);
      std::vector<Poly> gens;
      for (std::size_t i = 0; i < k; ++i) {
        Monomial m;
        m.set(i, static_cast<unsigned>(g.range(1, 3)));
        gens.push_back(Poly::term(r, m, Rat(1)));
      }
      for (long j = 0, n = g.range(0, 3); j < n; ++j) {
        Monomial m = g.monomial(k, 4);
        if (!m.is_one()) gens.push_back(Poly::term(r, m, Rat(1)));
      }
      g.shuffle(gens);
      Ideal ideal(r, gens);
      const unsigned h = height(ideal);
      t.check(h == k && dimension(ideal) == extra,
              "k = " + std::to_string(k) + ", height " + std::to_string(h));
    });
    all.cases += s.cases;
    all.failures += s.failures;
    all.skipped += s.skipped;
    all.ms += s.ms;
    if (all.first_failure.empty()) all.first_failure = s.first_failure;
  }
  return all;
}

PropertyStats saturation_contains(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(3);
  return drive("saturation", seed, cases, [&](Random& g, Tally& t) {
    Poly f = g.poly(r, 1, 2);
    if (f.is_zero() || f.is_constant()) return;
    std::vector<Poly> base, multiplied;
    for (long i = 0, k = g.range(1, 2); i < k; ++i) {
      base.push_back(g.poly(r, 2, 2));
      multiplied.push_back(f * base.back());
    }
    Ideal sat = saturation(Ideal(r, multiplied), f);
    bool ok = true;
    for (const auto& p : base) ok = ok && ideal_member(p, sat);
    for (const auto& p : multiplied) ok = ok && ideal_member(p, sat);
    t.check(ok, show({{"f", &f}}));
  });
}

PropertyStats slice_soundness(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(4);
  return drive("slice substitution", seed, cases, [&](Random& g, Tally& t) {
    Derivation tri = g.triangular(r, 2, 2);
    std::vector<Poly> images = tri.images();
    Monomial m;
    m.set(0, static_cast<unsigned>(g.range(0, 2)));
    images[1] = Poly::term(r, m, g.coeff());
    Derivation d(r, images);
    Poly s = Poly::variable(r, 1);
    LocalSliceData sd = local_slice_data(d, s);
    if (!sd.valid) {
      t.check(false, "slice rejected: " + to_string(d));
      return;
    }
    for (std::size_t v = 0; v < r->arity(); ++v) {
      Poly b = Poly::variable(r, v);
      LocalElem e = slice_substitute(d, sd, b);
      TPoly th = theta(d, b);
      const unsigned K = static_cast<unsigned>(th.degree());
      Poly cleared(r);
      for (unsigned k = 0; k <= K; ++k)
        cleared += th.coeffs[k] * (-s).pow(k) * sd.plinth.pow(K - k);
      bool ok = in_kernel(d, e.numerator) &&
                e.numerator * sd.plinth.pow(K) == cleared * e.denominator() &&
                (e.exponent == 0 || !exact_div(e.numerator, e.base));
      t.check(ok, to_string(d) + "; var " + r->name(v));
    }
  });
}

PropertyStats weight_additivity(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(3);
  return drive("weights", seed, cases, [&](Random& g, Tally& t) {
    std::vector<WeightVector> w;
    for (int i = 0; i < 3; ++i) w.push_back({g.range(-2, 2), g.range(-2, 2)});
    WeightSystem ws(r, w, g.coin());
    Poly a = Poly::term(r, g.monomial(3, 3), g.coeff());
    Poly b = Poly::term(r, g.monomial(3, 3), g.coeff());
    bool ok = *weight(a * b, ws) == ws.normalize(*weight(a, ws) + *weight(b, ws));
    Poly p = g.poly(r, 3, 5);
    Poly sum(r);
    for (const auto& d : occurring_weights(p, ws)) {
      Poly c = homogeneous_component(p, ws, d);
      ok = ok && weight(c, ws) == ws.normalize(d);
      sum += c;
    }
    t.check(ok && sum == p, show({{"p", &p}}));
  });
}

PropertyStats orbit_product_invariant(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = Ring::make({"x1", "x2", "x3", "y1", "y2", "y3"});
  const PermAction act(r, {{"x1", "x2", "x3"}, {"y1", "y2", "y3"}});
  return drive("orbit product invariant", seed, cases, [&](Random& g, Tally& t) {
    Poly p = g.poly(r, 2, 2);
    Poly o = orbit_product(p, act);
    bool ok = invariance_check(o, act);
    // sigma then tau agrees with the composite
    auto perms = all_permutations(3);
    const auto& s1 = perms[static_cast<std::size_t>(g.range(0, 5))];
    const auto& s2 = perms[static_cast<std::size_t>(g.range(0, 5))];
    Permutation comp(3);
    for (std::size_t i = 0; i < 3; ++i) comp[i] = s2[s1[i]];
    ok = ok && perm_image(perm_image(p, s1, act), s2, act) == perm_image(p, comp, act);
    t.check(ok, show({{"p", &p}}));
  });
}

PropertyStats oracle_ideal(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(3);
  return drive("oracle agreement: ideal membership", seed, cases, [&](Random& g, Tally& t) {
    std::vector<Poly> gens;
    std::vector<unsigned> deg;
    for (long i = 0, k = g.range(1, 3); i < k; ++i) {
      deg.push_back(static_cast<unsigned>(g.range(1, 2)));
      gens.push_back(g.homogeneous(r, deg.back(), 2));
    }
    Ideal ideal(r, gens);
    for (int q = 0; q < 4; ++q) {
      const unsigned d = static_cast<unsigned>(g.range(1, 3));
      Poly p(r);
      if (q % 2 == 0) {
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (deg[i] <= d) p += g.homogeneous(r, d - deg[i], 2) * gens[i];
      } else {
        p = g.homogeneous(r, d, 3);
      }
      oracle::Answer o = oracle::brute_ideal_member(p, gens, d);
      if (o == oracle::Answer::Unknown) {
        t.skip();
        continue;
      }
      bool engine = ideal_member(p, ideal);
      t.check(engine == (o == oracle::Answer::Yes),
              show({{"p", &p}}) + "oracle " + oracle::to_string(o));
    }
  });
}

PropertyStats oracle_subalgebra(std::uint64_t seed, std::size_t cases) {
  return drive("oracle agreement: subalgebra membership", seed, cases, [&](Random& g, Tally& t) {
    const RingPtr r = ring_of(static_cast<std::size_t>(g.range(2, 3)));
    std::vector<NamedPoly> named;
    std::vector<Poly> gens;
    for (long i = 0, k = g.range(1, 3); i < k; ++i) {
      Poly p = g.homogeneous(r, static_cast<unsigned>(g.range(1, 2)), 2);
      gens.push_back(p);
      named.push_back({"g" + std::to_string(i + 1), p});
    }
    MembershipEngine engine(SubalgebraPresentation(r, named));
    for (int q = 0; q < 4; ++q) {
      Poly p(r);
      if (q % 2 == 0) {
        p = constant(r, g.scalar());
        for (int j = 0; j < 2; ++j) {
          Poly prod = constant(r, g.coeff());
          for (long f = 0, n = g.range(1, 2); f < n; ++f)
            prod *= gens[static_cast<std::size_t>(g.range(0, static_cast<long>(gens.size()) - 1))];
          p += prod;
        }
      } else {
        p = g.homogeneous(r, static_cast<unsigned>(g.range(1, 3)), 3);
      }
      oracle::Answer o = oracle::brute_subalgebra_member(p, gens, p.total_degree());
      if (o == oracle::Answer::Unknown) {
        t.skip();
        continue;
      }
      bool eng = engine.member(p);
      t.check(eng == (o == oracle::Answer::Yes),
              show({{"p", &p}}) + "oracle " + oracle::to_string(o));
    }
  });
}

PropertyStats oracle_kernel(std::uint64_t seed, std::size_t cases) {
  const RingPtr r = ring_of(3);
  constexpr unsigned bound = 3;
  return drive("oracle agreement: kernel sample", seed, cases, [&](Random& g, Tally& t) {
    Derivation d = g.triangular(r, 2, 2);
    std::vector<Poly> sample = oracle::brute_kernel_sample(d, bound);
    bool ok = !sample.empty() && oracle::in_span(constant(r, 1), sample);
    for (const auto& p : sample) ok = ok && !p.is_zero() && in_kernel(d, p);
    if (auto vars = elementary_kernel_check(d)) {
      // kernel = Q[vars]; its piece of degree <= bound has a known size
      std::vector<Poly> mono;
      for (const auto& m : oracle::monomials(vars->size(), 0, bound)) {
        Monomial lifted;
        for (std::size_t i = 0; i < vars->size(); ++i) lifted.set((*vars)[i], m[i]);
        mono.push_back(Poly::term(r, lifted, Rat(1)));
      }
      ok = ok && sample.size() == mono.size();
      for (const auto& p : sample) ok = ok && oracle::in_span(p, mono);
    }
    t.check(ok, to_string(d));
  });
}

std::vector<PropertyStats> acceptance_suites() {
  return {
      leibniz(0x1e1b'0001),
      theta_multiplicative(0x7e7a'0002),
      theta_at_zero(0x7e7a'0003),
      flow_law(0xf10e'0004),
      groebner_permutation(0x6b00'0005),
      normal_form_idempotent(0x0f00'0006),
      monomial_height(0x4e16'0007),
      oracle_ideal(0x0a1d'0008),
      oracle_subalgebra(0x0a1d'0009),
      oracle_kernel(0x0a1d'000a),
  };
}

}  // namespace lnd::testing
