#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lnd/ideals.hpp"
#include "lnd/subalgebra.hpp"

namespace lnd {

enum class Status { Proven, Failed, Inconclusive };
std::string to_string(Status s);

struct TheoremOptions {
  unsigned nmax = kDefaultNmax;
  std::size_t step_limit = kDefaultGroebnerSteps;
};

/// The invariant ring is the ring of regular functions on
/// Spec(A) \ V(f_1, ..., f_r) once A lies in ker D, each f_i lies in A,
/// A_{f_i} = (ker D)_{f_i}, and (f_1, ..., f_r) has height >= 2.
struct QuasiAffineVerdict {
  std::vector<Poly> loci;
  std::vector<LocalizedEqualityCert> certificates;
  std::vector<bool> locus_in_algebra;
  std::optional<unsigned> height;
  Status status = Status::Inconclusive;
  std::string conclusion;
};

QuasiAffineVerdict verify_quasi_affine(MembershipEngine& engine,
                                       const std::vector<LocalSliceData>& slices,
                                       const Derivation& d, const TheoremOptions& opts = {});
QuasiAffineVerdict verify_quasi_affine(const SubalgebraPresentation& a,
                                       const std::vector<LocalSliceData>& slices,
                                       const Derivation& d, const TheoremOptions& opts = {});

enum class SeparatingMode { Corollary, OnVariety };
enum class SeparatingStatus { ProvenForTestset, Failed, Inconclusive };
std::string to_string(SeparatingStatus s);

struct SeparatingEvidence {
  std::string element;
  std::string piece;       // "" for the corollary mode
  std::optional<Poly> component;  // constant (corollary) or subring part
  bool ok = false;
};

struct PieceCheck {
  std::vector<std::string> vars;
  std::vector<std::string> subring_not_in_algebra;
};

struct SeparatingVerdict {
  SeparatingMode mode = SeparatingMode::Corollary;
  std::vector<SeparatingEvidence> evidence;
  std::vector<PieceCheck> pieces;
  bool cover_ok = true;
  SeparatingStatus status = SeparatingStatus::Inconclusive;
  std::optional<std::string> citation;  // cited-structural when set
  std::optional<std::string> counterexample;
  std::string conclusion;
};

class NotInKernel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks g in Q + (loci) for every test element g (each must be in ker D,
/// else NotInKernel). The universal containment over all invariants is not
/// machine-checkable; a citation marks it as cited.
SeparatingVerdict verify_separating_corollary(const std::vector<Poly>& loci, const Derivation& d,
                                              const std::vector<NamedPoly>& testset,
                                              std::optional<std::string> citation = std::nullopt,
                                              const TheoremOptions& opts = {});

struct CoverPiece {
  std::vector<std::string> vars;    // the piece is V(vars)
  std::vector<NamedPoly> subring;   // C with the claim ker D in C + (vars)B
};

/// Separating on V(loci): the pieces must cover V(loci) (radical equality
/// with the product of the piece ideals), each subring must lie in A, and
/// each test element must lie in C + (vars)B for every piece.
SeparatingVerdict verify_separating_on_variety(MembershipEngine& engine,
                                               const std::vector<Poly>& loci, const Derivation& d,
                                               const std::vector<CoverPiece>& pieces,
                                               const std::vector<NamedPoly>& testset,
                                               std::optional<std::string> citation = std::nullopt,
                                               const TheoremOptions& opts = {});

/// First generator (in list order) taking different values at u and v.
std::optional<NamedPoly> separate_points(const std::vector<NamedPoly>& gens,
                                         const std::vector<Rat>& u, const std::vector<Rat>& v);

}  // namespace lnd
