#include "lnd/theorem.hpp"

#include "lnd/errors.hpp"

namespace lnd {

std::string to_string(Status s) {
  switch (s) {
    case Status::Proven: return "proven";
    case Status::Failed: return "failed";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(SeparatingStatus s) {
  switch (s) {
    case SeparatingStatus::ProvenForTestset: return "proven-for-testset";
    case SeparatingStatus::Failed: return "failed";
    case SeparatingStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::string join_polys(const std::vector<Poly>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + to_string(ps[i]);
  return s;
}

Ideal variable_ideal(const RingPtr& ring, const std::vector<std::string>& vars) {
  std::vector<Poly> gens;
  for (const auto& v : vars) gens.push_back(Poly::variable(ring, v));
  return Ideal(ring, std::move(gens));
}

}  // namespace

QuasiAffineVerdict verify_quasi_affine(MembershipEngine& engine,
                                       const std::vector<LocalSliceData>& slices,
                                       const Derivation& d, const TheoremOptions& opts) {
  QuasiAffineVerdict v;
  bool failed = false, open = false;
  for (const auto& sd : slices) {
    v.loci.push_back(sd.plinth);
    if (!sd.valid) {
      failed = true;
      v.locus_in_algebra.push_back(false);
      continue;
    }
    LocalizedEqualityCert cert = localized_equality(engine, sd, d, opts.nmax);
    v.locus_in_algebra.push_back(cert.plinth_in_algebra);
    if (cert.status == CertStatus::Invalid) failed = true;
    if (cert.status == CertStatus::Inconclusive) open = true;
    v.certificates.push_back(std::move(cert));
  }
  if (slices.empty()) failed = true;
  try {
    if (!v.loci.empty()) {
      v.height = height(Ideal(d.ring(), v.loci), IdealOptions{opts.step_limit});
      if (*v.height < 2) failed = true;
    }
  } catch (const UnitIdeal&) {
    // empty locus; height undefined, leave the verdict open
    open = true;
  } catch (const ResourceLimitExceeded&) {
    open = true;
  }
  v.status = failed ? Status::Failed : open ? Status::Inconclusive : Status::Proven;
  if (v.status == Status::Proven)
    v.conclusion = "ker D = regular functions on Spec(A) \\ V(" + join_polys(v.loci) + ")";
  return v;
}

QuasiAffineVerdict verify_quasi_affine(const SubalgebraPresentation& a,
                                       const std::vector<LocalSliceData>& slices,
                                       const Derivation& d, const TheoremOptions& opts) {
  MembershipEngine engine(a, opts.step_limit);
  return verify_quasi_affine(engine, slices, d, opts);
}

SeparatingVerdict verify_separating_corollary(const std::vector<Poly>& loci, const Derivation& d,
                                              const std::vector<NamedPoly>& testset,
                                              std::optional<std::string> citation,
                                              const TheoremOptions& opts) {
  SeparatingVerdict v;
  v.mode = SeparatingMode::Corollary;
  v.citation = std::move(citation);
  for (const auto& g : testset)
    if (!in_kernel(d, g.poly.in_ring(d.ring())))
      throw NotInKernel("test element " + g.name + " is not in the kernel");

  Ideal ideal(d.ring(), loci);
  bool open = false;
  for (const auto& g : testset) {
    SeparatingEvidence e;
    e.element = g.name;
    bool timed_out = false;
    try {
      if (auto c = const_plus_ideal_member(g.poly.in_ring(d.ring()), ideal,
                                           IdealOptions{opts.step_limit})) {
        e.component = Poly::constant(d.ring(), *c);
        e.ok = true;
      }
    } catch (const ResourceLimitExceeded&) {
      open = timed_out = true;
    }
    if (!e.ok && !timed_out && !v.counterexample) v.counterexample = g.name;
    v.evidence.push_back(std::move(e));
  }
  if (v.counterexample)
    v.status = SeparatingStatus::Failed;
  else
    v.status = open ? SeparatingStatus::Inconclusive : SeparatingStatus::ProvenForTestset;
  if (v.status == SeparatingStatus::ProvenForTestset)
    v.conclusion = "every test element lies in Q + (" + join_polys(loci) + ")";
  return v;
}

SeparatingVerdict verify_separating_on_variety(MembershipEngine& engine,
                                               const std::vector<Poly>& loci, const Derivation& d,
                                               const std::vector<CoverPiece>& pieces,
                                               const std::vector<NamedPoly>& testset,
                                               std::optional<std::string> citation,
                                               const TheoremOptions& opts) {
  SeparatingVerdict v;
  v.mode = SeparatingMode::OnVariety;
  v.citation = std::move(citation);
  const RingPtr& ring = d.ring();
  for (const auto& g : testset)
    if (!in_kernel(d, g.poly.in_ring(ring)))
      throw NotInKernel("test element " + g.name + " is not in the kernel");

  IdealOptions io{opts.step_limit};
  bool open = false;
  if (pieces.empty()) {
    v.cover_ok = false;
  } else {
    Ideal cover = variable_ideal(ring, pieces.front().vars);
    for (std::size_t i = 1; i < pieces.size(); ++i)
      cover = product(cover, variable_ideal(ring, pieces[i].vars));
    try {
      v.cover_ok = radical_equal(Ideal(ring, loci), cover, io);
    } catch (const ResourceLimitExceeded&) {
      v.cover_ok = false;
      open = true;
    }
  }
  if (!v.cover_ok) {
    v.status = open ? SeparatingStatus::Inconclusive : SeparatingStatus::Failed;
    if (!open) v.counterexample = "cover";
    return v;
  }

  for (const auto& piece : pieces) {
    PieceCheck pc;
    pc.vars = piece.vars;
    for (const auto& c : piece.subring) {
      try {
        if (!engine.member(c.poly)) pc.subring_not_in_algebra.push_back(c.name);
      } catch (const ResourceLimitExceeded&) {
        open = true;
      }
    }
    if (!pc.subring_not_in_algebra.empty() && !v.counterexample)
      v.counterexample = pc.subring_not_in_algebra.front();

    SubalgebraPresentation c(ring, piece.subring);
    std::string label = "(";
    for (std::size_t i = 0; i < piece.vars.size(); ++i) label += (i ? ", " : "") + piece.vars[i];
    label += ")";
    for (const auto& g : testset) {
      SeparatingEvidence e;
      e.element = g.name;
      e.piece = label;
      try {
        e.component = subring_plus_ideal_member(g.poly, c, piece.vars, opts.step_limit);
        e.ok = e.component.has_value();
      } catch (const ResourceLimitExceeded&) {
        open = true;
        v.evidence.push_back(std::move(e));
        continue;
      }
      if (!e.ok && !v.counterexample) v.counterexample = g.name;
      v.evidence.push_back(std::move(e));
    }
    v.pieces.push_back(std::move(pc));
  }
  if (v.counterexample)
    v.status = SeparatingStatus::Failed;
  else
    v.status = open ? SeparatingStatus::Inconclusive : SeparatingStatus::ProvenForTestset;
  if (v.status == SeparatingStatus::ProvenForTestset)
    v.conclusion = "A separates points on V(" + join_polys(loci) + ")";
  return v;
}

std::optional<NamedPoly> separate_points(const std::vector<NamedPoly>& gens,
                                         const std::vector<Rat>& u, const std::vector<Rat>& v) {
  if (u.size() != v.size()) throw ArityMismatch("points of different arity");
  for (const auto& g : gens) {
    if (g.poly.ring() && g.poly.ring()->arity() != u.size())
      throw ArityMismatch("point arity does not match the ring");
    if (evaluate(g.poly, u) != evaluate(g.poly, v)) return g;
  }
  return std::nullopt;
}

}  // namespace lnd
