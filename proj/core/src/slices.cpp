#include "lnd/slices.hpp"

#include <stdexcept>

namespace lnd {

namespace {

// f = c * base^k with c a non-zero constant; returns k.
std::optional<unsigned> power_of_base(const Poly& f, const Poly& base) {
  if (base.is_constant()) return std::nullopt;
  unsigned k = max_power_dividing(f, base);
  auto rest = exact_div(f, base.pow(k));
  if (!rest || !rest->is_constant()) return std::nullopt;
  return k;
}

}  // namespace

LocalSliceData local_slice_data(const Derivation& d, const Poly& s, const std::optional<Poly>& base) {
  LocalSliceData sd;
  sd.slice = s.in_ring(d.ring());
  sd.plinth = d.apply(sd.slice);
  sd.valid = !sd.plinth.is_zero() && d.apply(sd.plinth).is_zero();
  sd.base = sd.plinth;
  sd.base_power = 1;
  if (sd.plinth.is_zero()) return sd;

  if (base) {
    Poly b = base->in_ring(d.ring());
    auto k = power_of_base(sd.plinth, b);
    if (!k || *k == 0)
      throw std::invalid_argument("plinth " + to_string(sd.plinth) + " is not a power of " + to_string(b));
    sd.base = b;
    sd.base_power = *k;
    return sd;
  }
  if (sd.plinth.size() == 1) {
    auto vars = sd.plinth.support();
    if (vars.size() == 1) {
      sd.base = Poly::variable(d.ring(), vars.front());
      sd.base_power = sd.plinth.leading_monomial()[vars.front()];
    }
  }
  return sd;
}

LocalElem slice_substitute(const Derivation& d, const LocalSliceData& sd, const Poly& b) {
  if (!sd.valid) throw std::invalid_argument("slice data is not a valid local slice");
  TPoly th = theta(d, b);
  const RingPtr& ring = d.ring();
  LocalElem out{Poly(ring), sd.base, 0};
  if (th.coeffs.empty()) return out;

  // f^K theta(b)|_{T=-s/f} = sum_k c_k (-s)^k f^(K-k).
  const unsigned top = static_cast<unsigned>(th.degree());
  Poly neg_s = -sd.slice;
  std::vector<Poly> f_pows{Poly::constant(ring, Rat(1))};
  for (unsigned k = 1; k <= top; ++k) f_pows.push_back(f_pows.back() * sd.plinth);
  Poly numerator(ring);
  Poly s_pow = Poly::constant(ring, Rat(1));
  for (unsigned k = 0; k <= top; ++k) {
    if (!th.coeffs[k].is_zero()) numerator += th.coeffs[k] * s_pow * f_pows[top - k];
    s_pow = s_pow * neg_s;
  }
  if (numerator.is_zero()) return out;

  // f^K = unit^K * base^(k K); move the unit into the numerator.
  Rat unit = sd.plinth.leading_coeff() / sd.base.pow(sd.base_power).leading_coeff();
  numerator *= Rat(1) / power(unit, top);
  unsigned exponent = sd.base_power * top;
  while (exponent > 0) {
    auto q = exact_div(numerator, sd.base);
    if (!q) break;
    numerator = std::move(*q);
    --exponent;
  }
  out.numerator = std::move(numerator);
  out.exponent = exponent;
  return out;
}

std::vector<EssenEntry> essen_step1(const Derivation& d, const LocalSliceData& sd) {
  if (!sd.valid) throw std::invalid_argument("slice data is not a valid local slice");
  std::vector<EssenEntry> out;
  out.push_back({"plinth", LocalElem{sd.plinth, sd.base, 0}, sd.plinth.is_constant()});
  for (std::size_t i = 0; i < d.ring()->arity(); ++i) {
    LocalElem e = slice_substitute(d, sd, Poly::variable(d.ring(), i));
    bool degenerate = e.numerator.is_constant();
    out.push_back({d.ring()->name(i), std::move(e), degenerate});
  }
  return out;
}

std::string to_string(const LocalElem& e) {
  if (e.exponent == 0) return to_string(e.numerator);
  std::string den = to_string(e.base);
  if (e.base.size() > 1) den = "(" + den + ")";
  if (e.exponent > 1) den += "^" + std::to_string(e.exponent);
  return "(" + to_string(e.numerator) + ")/" + den;
}

}  // namespace lnd
