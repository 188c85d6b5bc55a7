#include "lnd/maubach.hpp"

#include <stdexcept>

#include "lnd/catalog.hpp"
#include "lnd/ideals.hpp"
#include "lnd/parse.hpp"
#include "lnd/slices.hpp"
#include "lnd/subalgebra.hpp"

namespace lnd {

AlphaResult alpha(unsigned b) {
  if (b < 1) throw std::invalid_argument("alpha: b must be at least 1");
  AlphaResult r;
  r.summation = 0;
  for (unsigned j = 0; j <= b; ++j) {
    Rat term = Rat(binomial(b, j)) / (Rat(j + b + 1) * power(Rat(2), j));
    if ((j + b + 1) % 2) term = -term;
    r.summation += term;
  }
  r.closed_form = power(Rat(2), b) / Rat(binomial(2 * b + 1, b + 1));
  if (b % 2 == 0) r.closed_form = -r.closed_form;
  r.ratio = r.closed_form / r.summation;
  r.agree = r.closed_form == r.summation;
  return r;
}

std::string to_string(CoefficientReading r) {
  return r == CoefficientReading::AsPrinted ? "as-printed" : "transposed";
}

namespace {

// b! / (k1! k2! k3!), zero when an index is negative.
Rat multinomial(int b, int k1, int k2, int k3) {
  if (k1 < 0 || k2 < 0 || k3 < 0 || k1 + k2 + k3 != b) return Rat(0);
  return Rat(factorial(b)) / Rat(factorial(k1) * factorial(k2) * factorial(k3));
}

Monomial yzu(const Ring& ring, unsigned ey, unsigned ez, unsigned eu) {
  Monomial m;
  m.set(ring.require_index("y"), ey);
  m.set(ring.require_index("z"), ez);
  m.set(ring.require_index("u"), eu);
  return m;
}

}  // namespace

TPoly printed_theta_w(const RingPtr& ring, unsigned b) {
  const int B = static_cast<int>(b);
  TPoly out;
  out.coeffs.assign(2 * b + 2, Poly(ring));
  out.coeffs[0] = Poly::variable(ring, "w");
  for (int l = 1; l <= 2 * B + 1; ++l) {
    for (int m = 0; m <= B; ++m) {
      Rat c = multinomial(B, B - m, 2 * m + 1 - l, l - m - 1);
      if (c == 0) continue;
      c /= Rat(l) * power(Rat(2), static_cast<unsigned>(l - m - 1));
      out.coeffs[l] += Poly::term(ring, yzu(*ring, l - m - 1, 2 * m + 1 - l, B - m), c);
    }
  }
  out.trim();
  return out;
}

Poly printed_h(const RingPtr& ring) { return parse_poly(ring, "y*u - 1/2*z^2"); }

Poly printed_hprime(const RingPtr& ring, unsigned b) {
  const int B = static_cast<int>(b);
  Poly out = parse_poly(ring, "y^" + std::to_string(b + 1) + "*w");
  for (int l = 1; l <= 2 * B + 1; ++l) {
    for (int m = 0; m <= B; ++m) {
      Rat c = multinomial(B, B - m, 2 * m + 1 - l, l - m - 1);
      if (c == 0) continue;
      c /= Rat(l) * power(Rat(2), static_cast<unsigned>(l - m - 1));
      if (l % 2) c = -c;
      out += Poly::term(ring, yzu(*ring, B - m, 2 * m + 1, B - m), c);
    }
  }
  return out;
}

MaubachResult maubach_generators(unsigned b) {
  if (b < 1) throw std::invalid_argument("maubach: b must be at least 1");
  MaubachResult r;
  r.b = b;
  r.delta = catalog::maubach_prime(b);
  const RingPtr& ring = r.delta.ring();
  const std::size_t iy = ring->require_index("y");
  const std::size_t iy_span[] = {iy};
  Poly y = Poly::variable(ring, "y");
  Poly z = Poly::variable(ring, "z");

  LocalSliceData sd = local_slice_data(r.delta, z);
  for (const auto& e : essen_step1(r.delta, sd)) {
    if (e.source == "y") r.y = e.value.numerator;
    if (e.source == "u") r.h = e.value.numerator;
    if (e.source == "w") r.hprime = e.value.numerator;
  }
  r.alpha = alpha(b);
  const Rat& a = r.alpha.summation;
  const Rat two_pow = power(Rat(2), 2 * b + 1);
  const Rat inv_a2 = Rat(1) / (a * a);

  Poly h_pow = r.h.pow(2 * b + 1);
  Poly hp_sq = r.hprime * r.hprime;
  for (auto reading : {CoefficientReading::AsPrinted, CoefficientReading::Transposed}) {
    ReadingAttempt t;
    t.reading = reading;
    t.c_h = reading == CoefficientReading::AsPrinted ? inv_a2 : two_pow;
    t.c_hprime = reading == CoefficientReading::AsPrinted ? two_pow : inv_a2;
    t.combination = t.c_h * h_pow + t.c_hprime * hp_sq;
    t.residue = set_to_zero(t.combination, iy_span);
    if (!t.combination.is_zero()) {
      t.y_power = max_power_dividing(t.combination, y);
      if (t.y_power > 0) {
        Poly q = *exact_div(t.combination, y.pow(t.y_power));
        t.quotient_in_kernel = in_kernel(r.delta, q);
      }
    }
    t.succeeded = t.y_power > 0 && t.quotient_in_kernel;
    r.attempts.push_back(std::move(t));
  }

  int successes = 0;
  for (const auto& t : r.attempts) successes += t.succeeded;
  r.checks.exactly_one_reading = successes == 1;
  for (const auto& t : r.attempts) {
    if (!t.succeeded || r.reading) continue;
    r.reading = t.reading;
    r.n = t.y_power;
    r.hdoubleprime = *exact_div(t.combination, y.pow(t.y_power));
  }

  r.checks.h_in_kernel = in_kernel(r.delta, r.h);
  r.checks.hprime_in_kernel = in_kernel(r.delta, r.hprime);
  if (r.reading) {
    r.checks.hdoubleprime_in_kernel = in_kernel(r.delta, r.hdoubleprime);
    r.checks.n_at_most_2b = r.n <= 2 * b;
    r.checks.n_maximal = max_power_dividing(r.hdoubleprime, y) == 0;
  } else {
    r.hdoubleprime = Poly(ring);
  }
  r.checks.residue_identity =
      set_to_zero(r.hprime - a * z.pow(2 * b + 1), iy_span).is_zero();
  r.checks.matches_printed_generators =
      r.y == y && r.h == printed_h(ring) && r.hprime == printed_hprime(ring, b);
  r.checks.theta_matches_printed =
      theta(r.delta, Poly::variable(ring, "w")) == printed_theta_w(ring, b);

  const MaubachChecks& c = r.checks;
  r.ok = c.h_in_kernel && c.hprime_in_kernel && c.hdoubleprime_in_kernel &&
         c.exactly_one_reading && c.n_at_most_2b && c.n_maximal && c.residue_identity &&
         c.matches_printed_generators && c.theta_matches_printed;

  if (!r.reading) {
    r.diagnostics = "no coefficient reading gives a y-divisible combination with kernel quotient";
  } else {
    r.diagnostics = "h'' from the " + to_string(*r.reading) + " reading, n = " + std::to_string(r.n);
    if (!r.alpha.agree)
      r.diagnostics += "; closed form for alpha differs from the sum by the factor " +
                       to_string(r.alpha.ratio);
  }
  return r;
}

Lemma52Report verify_lemma52(unsigned b) {
  Lemma52Report rep;
  rep.result = maubach_generators(b);
  const MaubachResult& r = rep.result;
  const RingPtr& ring = r.delta.ring();
  Ideal yz(ring, {Poly::variable(ring, "y"), Poly::variable(ring, "z")});
  bool all_zero = true;
  for (const auto& [name, p] : {std::pair<std::string, const Poly*>{"y", &r.y},
                                {"h", &r.h},
                                {"h'", &r.hprime},
                                {"h''", &r.hdoubleprime}}) {
    IdealComponent c{name, const_plus_ideal_member(*p, yz)};
    all_zero &= c.constant && *c.constant == 0;
    rep.in_yz.push_back(std::move(c));
  }
  const std::size_t iz[] = {ring->require_index("z")};
  Ideal y_only(ring, {Poly::variable(ring, "y")});
  rep.mod_z_in_y = r.reading && ideal_member(set_to_zero(r.hdoubleprime, iz), y_only);
  rep.ok = r.ok && all_zero && rep.mod_z_in_y;
  return rep;
}

Lemma51Report verify_lemma51(unsigned a, unsigned b) {
  Lemma51Report rep;
  rep.a = a;
  rep.b = b;
  catalog::Example ex = catalog::new7(a, b);
  rep.induced = induced_on_quotient(ex.d, {"x1", "x2", "x3"});
  if (rep.induced) {
    const RingPtr& small = rep.induced->ring();
    Derivation expected = Derivation::from_map(
        small, {{"v", parse_poly(small, "(y1*y2*y3)^" + std::to_string(b))}});
    rep.induced_matches = *rep.induced == expected;
    if (auto vars = elementary_kernel_check(*rep.induced))
      for (auto i : *vars) rep.kernel_vars.push_back(small->name(i));
    rep.kernel_vars_ok = rep.kernel_vars == std::vector<std::string>{"y1", "y2", "y3"};
  }
  SubalgebraPresentation ys(ex.ring, {{"y1", Poly::variable(ex.ring, "y1")},
                                      {"y2", Poly::variable(ex.ring, "y2")},
                                      {"y3", Poly::variable(ex.ring, "y3")}});
  bool all = true;
  for (const auto& g : ex.algebra) {
    auto c = subring_plus_ideal_member(g.poly, ys, {"x1", "x2", "x3"});
    all &= c.has_value();
    rep.decomposition.push_back({g.name, std::move(c)});
  }
  rep.ok = rep.induced_matches && rep.kernel_vars_ok && all;
  return rep;
}

}  // namespace lnd
