#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"

namespace lnd {

struct AlphaResult {
  Rat summation;     // sum_j (-1)^(j+b+1) binom(b,j) / ((j+b+1) 2^j)
  Rat closed_form;   // (-1)^(b+1) 2^b / binom(2b+1, b+1)
  Rat ratio;         // closed_form / summation
  bool agree = false;
};

AlphaResult alpha(unsigned b);

enum class CoefficientReading { AsPrinted, Transposed };
std::string to_string(CoefficientReading r);

/// One reading of the combination c1 h^(2b+1) + c2 h'^2 defining h''.
struct ReadingAttempt {
  CoefficientReading reading;
  Rat c_h, c_hprime;
  Poly combination;
  Poly residue;      // combination with y = 0
  unsigned y_power = 0;
  bool quotient_in_kernel = false;
  bool succeeded = false;
};

struct MaubachChecks {
  bool h_in_kernel = false;
  bool hprime_in_kernel = false;
  bool hdoubleprime_in_kernel = false;
  bool exactly_one_reading = false;
  bool n_at_most_2b = false;
  bool n_maximal = false;
  bool residue_identity = false;        // h' = alpha z^(2b+1) mod y
  bool matches_printed_generators = false;
  bool theta_matches_printed = false;
};

/// Kernel generators y, h, h', h'' of D' = y d/dz + z d/du + u^b d/dw on
/// Q[y,z,u,w]: the first three from the local slice z, the fourth from
/// whichever coefficient reading leaves a quotient by a power of y.
struct MaubachResult {
  unsigned b = 0;
  Derivation delta;
  Poly y, h, hprime, hdoubleprime;
  AlphaResult alpha;
  unsigned n = 0;
  std::optional<CoefficientReading> reading;
  std::vector<ReadingAttempt> attempts;
  MaubachChecks checks;
  bool ok = false;
  std::string diagnostics;
};

MaubachResult maubach_generators(unsigned b);

/// Closed-form expansions, used only as cross-checks.
TPoly printed_theta_w(const RingPtr& ring, unsigned b);
Poly printed_h(const RingPtr& ring);
Poly printed_hprime(const RingPtr& ring, unsigned b);

struct IdealComponent {
  std::string name;
  std::optional<Rat> constant;  // constant part in Q + (y, z), if a member
};

struct Lemma52Report {
  MaubachResult result;
  std::vector<IdealComponent> in_yz;
  bool mod_z_in_y = false;
  bool ok = false;
};

Lemma52Report verify_lemma52(unsigned b);

struct Lemma51Report {
  unsigned a = 0, b = 0;
  std::optional<Derivation> induced;
  bool induced_matches = false;
  std::vector<std::string> kernel_vars;
  bool kernel_vars_ok = false;
  struct Decomposition {
    std::string name;
    std::optional<Poly> component;  // part in Q[y1,y2,y3]
  };
  std::vector<Decomposition> decomposition;
  bool ok = false;
};

Lemma51Report verify_lemma51(unsigned a, unsigned b);

}  // namespace lnd
