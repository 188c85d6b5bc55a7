#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/groebner.hpp"
#include "lnd/slices.hpp"

namespace lnd {

inline constexpr unsigned kDefaultNmax = 8;

struct NamedPoly {
  std::string name;
  Poly poly;
};

/// Q[g_1, ..., g_k] inside a polynomial ring; names are unique.
class SubalgebraPresentation {
 public:
  SubalgebraPresentation(RingPtr ring, std::vector<NamedPoly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<NamedPoly>& generators() const { return gens_; }
  std::vector<Poly> polys() const;

 private:
  RingPtr ring_;
  std::vector<NamedPoly> gens_;
};

/// Positive integer weights on the ring variables making every generator
/// homogeneous once its constant term is dropped, or nullopt if the search
/// (small coefficient combinations of a nullspace basis) finds none.
std::optional<std::vector<std::int64_t>> positive_grading(const RingPtr& ring,
                                                          const std::vector<Poly>& generators);

/// Subalgebra membership by elimination: adjoin a tag w_j per generator,
/// take the ideal (w_j - g_j) under an order eliminating the original
/// variables, and test whether the normal form involves only tags.
///
/// When a positive grading exists the ideal is homogeneous (tag weights =
/// generator degrees), so the basis is only completed up to the degree of
/// the query; it is cached and extended on demand.
class MembershipEngine {
 public:
  explicit MembershipEngine(SubalgebraPresentation algebra,
                            std::size_t step_limit = kDefaultGroebnerSteps);
  ~MembershipEngine();
  MembershipEngine(MembershipEngine&&) noexcept;
  MembershipEngine& operator=(MembershipEngine&&) noexcept;

  const SubalgebraPresentation& algebra() const { return algebra_; }
  bool graded() const { return grading_.has_value(); }
  const std::optional<std::vector<std::int64_t>>& grading() const { return grading_; }

  /// Throws ResourceLimitExceeded past the step ceiling.
  bool member(const Poly& p);
  /// p as a polynomial in the generators (a ring whose variables are the
  /// generator names), or nullopt when p is not a member.
  std::optional<Poly> expression(const Poly& p);
  const RingPtr& expression_ring() const { return expr_ring_; }

 private:
  std::optional<Poly> reduce_to_tags(const Poly& p);
  Buchberger& engine();

  SubalgebraPresentation algebra_;
  std::size_t step_limit_;
  std::optional<std::vector<std::int64_t>> grading_;
  std::vector<std::size_t> used_;  // generators with non-constant part
  RingPtr ext_;
  RingPtr expr_ring_;
  std::unique_ptr<Buchberger> engine_;
  std::int64_t reached_ = -1;
};

bool member(const Poly& p, const SubalgebraPresentation& a,
            std::size_t step_limit = kDefaultGroebnerSteps);

struct LocalizedMembership {
  enum class Outcome { Found, NotFound, Refuted };
  Outcome outcome = Outcome::NotFound;
  unsigned exponent = 0;  // N, when found
  unsigned nmax = kDefaultNmax;
};

/// Smallest N <= nmax with f^N p in A. NotFound means the search was
/// exhausted (inconclusive). Refuted is reported only when p involves a
/// variable that occurs in no generator, so no power of f can help.
/// Throws std::invalid_argument when f is not in A.
LocalizedMembership localized_member(MembershipEngine& engine, const Poly& p, const Poly& f,
                                     unsigned nmax = kDefaultNmax);
LocalizedMembership localized_member(const Poly& p, const SubalgebraPresentation& a,
                                     const Poly& f, unsigned nmax = kDefaultNmax);

enum class CertStatus { Valid, Invalid, Inconclusive };

struct KernelCheck {
  std::string name;
  Poly image;  // D(g)
  bool ok = false;
};

struct LocalizedWitness {
  std::string source;
  LocalElem element;
  Poly target;  // polynomial whose localized membership is tested
  LocalizedMembership result;
  bool resource_exhausted = false;
};

/// A_f = (ker D)_f: every generator of A is in ker D and every first-step
/// generator of (ker D)_f lies in A_f.
struct LocalizedEqualityCert {
  Poly f;
  Poly slice;
  Poly base;
  std::vector<KernelCheck> kernel_checks;
  bool plinth_in_algebra = false;
  std::vector<LocalizedWitness> witnesses;
  CertStatus status = CertStatus::Inconclusive;
};

LocalizedEqualityCert localized_equality(MembershipEngine& engine, const LocalSliceData& sd,
                                         const Derivation& d, unsigned nmax = kDefaultNmax);

/// C-component of p in C (+) (ideal_vars)B: p with the ideal variables set
/// to zero, when that lies in C. The generators of C must not involve the
/// ideal variables.
std::optional<Poly> subring_plus_ideal_member(const Poly& p, const SubalgebraPresentation& c,
                                              const std::vector<std::string>& ideal_vars,
                                              std::size_t step_limit = kDefaultGroebnerSteps);

std::string to_string(CertStatus s);

}  // namespace lnd
