#include "lnd/rational.hpp"

#include "lnd/errors.hpp"

namespace lnd {

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rat power(const Rat& base, unsigned exponent) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

}  // namespace lnd
