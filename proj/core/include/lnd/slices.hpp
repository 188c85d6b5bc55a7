#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/poly.hpp"

namespace lnd {

/// numerator / base^exponent, with the exponent minimal: base does not
/// divide the numerator whenever exponent > 0.
struct LocalElem {
  Poly numerator;
  Poly base;
  unsigned exponent = 0;

  Poly denominator() const { return base.pow(exponent); }
};

/// A local slice s with plinth f = D(s). Valid when f != 0 and D(f) = 0.
/// `base` is the element the minimal exponents refer to: f = unit * base^base_power.
struct LocalSliceData {
  Poly slice;
  Poly plinth;
  Poly base;
  unsigned base_power = 1;
  bool valid = false;
};

/// Computes f = D(s) and validates it. When `base` is absent and f is a
/// scalar times a power of one variable, that variable becomes the base;
/// otherwise the base is f itself. An explicit base must satisfy
/// f = c * base^k for a constant c.
LocalSliceData local_slice_data(const Derivation& d, const Poly& s,
                                const std::optional<Poly>& base = std::nullopt);

/// base^e * theta(b)|_{T = -s/f} with e minimal. Throws std::invalid_argument
/// for invalid slice data.
LocalElem slice_substitute(const Derivation& d, const LocalSliceData& sd, const Poly& b);

struct EssenEntry {
  std::string source;  // "plinth" or the variable name
  LocalElem value;
  bool degenerate = false;  // constant numerator (including zero)
};

/// First step of van den Essen's algorithm: the plinth followed by
/// slice_substitute of every variable, in ring order. Together with 1/f
/// these generate the kernel localized at f.
std::vector<EssenEntry> essen_step1(const Derivation& d, const LocalSliceData& sd);

std::string to_string(const LocalElem& e);

}  // namespace lnd
