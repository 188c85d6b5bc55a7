#include "lnd/runner.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "lnd/errors.hpp"
#include "lnd/ideals.hpp"
#include "lnd/maubach.hpp"
#include "lnd/slices.hpp"
#include "lnd/symmetry.hpp"
#include "lnd/theorem.hpp"

#ifndef LND_VERSION
#define LND_VERSION "0.0.0"
#endif

namespace lnd::dsl {

const char* tool_version() { return LND_VERSION; }

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::size_t RunReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [o](const auto& r) { return r.status == o; }));
}

int RunReport::exit_code() const {
  if (count(Outcome::Fail)) return 1;
  if (count(Outcome::Inconclusive)) return 2;
  return 0;
}

using lnd::to_string;

namespace {

Outcome from(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

Outcome from(Status s) {
  switch (s) {
    case Status::Proven: return Outcome::Pass;
    case Status::Failed: return Outcome::Fail;
    default: return Outcome::Inconclusive;
  }
}

Outcome from(SeparatingStatus s) {
  switch (s) {
    case SeparatingStatus::ProvenForTestset: return Outcome::Pass;
    case SeparatingStatus::Failed: return Outcome::Fail;
    default: return Outcome::Inconclusive;
  }
}

std::string str(const Poly& p) { return to_string(p); }

std::string str(const WeightVector& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + std::to_string(w[i]);
  return out + ")";
}

std::vector<Poly> values(const std::vector<Expr>& es) {
  std::vector<Poly> out;
  for (const auto& e : es) out.push_back(e.value);
  return out;
}

class Runner {
 public:
  Runner(const CheckFile& f, const RunOptions& opts) : f_(f), opts_(opts) {}

  void execute(const Check& c, CheckResult& r) {
    r.kind = kind(c);
    r.name = describe(c);
    std::visit([&](const auto& body) { check(body, r); }, c.body);
  }

 private:
  IdealOptions ideal_opts() const { return {opts_.gb_steps}; }
  TheoremOptions theorem_opts() const { return {opts_.nmax, opts_.gb_steps}; }

  MembershipEngine& engine(const std::string& algebra) {
    auto it = engines_.find(algebra);
    if (it == engines_.end())
      it = engines_.emplace(algebra, MembershipEngine(f_.algebras.at(algebra), opts_.gb_steps))
               .first;
    return it->second;
  }

  std::vector<NamedPoly> generators(const Source& s) const {
    if (s.algebra) return f_.algebras.at(*s.algebra).generators();
    std::vector<NamedPoly> out;
    for (const auto& it : s.items) out.push_back({it.name, it.value});
    return out;
  }

  const Derivation& deriv(const std::string& name) const { return f_.derivations.at(name); }

  LocalSliceData slice_data(const Derivation& d, const SliceSpec& s) const {
    std::optional<Poly> base;
    if (s.base) base = s.base->value;
    return local_slice_data(d, s.slice.value, base);
  }

  // ---- individual checks ------------------------------------------------

  void check(const KernelCheck& c, CheckResult& r) {
    const Derivation& d = deriv(c.deriv);
    bool ok = true;
    for (const auto& g : generators(c.what)) {
      Poly img = d(g.poly);
      if (!img.is_zero()) {
        ok = false;
        r.witnesses.emplace_back(c.deriv + "(" + g.name + ")", str(img));
      }
    }
    r.status = from(ok);
    if (!ok) r.message = "not every element lies in the kernel";
  }

  void check(const LndCheck& c, CheckResult& r) {
    const Derivation& d = deriv(c.deriv);
    auto cert = certify_lnd(d, c.bound.value_or(kDefaultNilpotencyBound));
    if (!cert) {
      r.status = Outcome::Inconclusive;
      r.message = "some variable survives the nilpotency bound";
      return;
    }
    for (std::size_t i = 0; i < cert->index.size(); ++i)
      r.witnesses.emplace_back("nilpotency(" + d.ring()->name(i) + ")",
                               std::to_string(cert->index[i]));
    r.status = Outcome::Pass;
  }

  void check(const HeightCheck& c, CheckResult& r) {
    Ideal ideal(f_.rings.at(c.ring), values(c.ideal));
    unsigned h = 0;
    try {
      h = height(ideal, ideal_opts());
    } catch (const UnitIdeal&) {
      r.status = Outcome::Fail;
      r.message = "the ideal is the unit ideal";
      return;
    }
    r.witnesses.emplace_back("height", std::to_string(h));
    r.status = from(c.op == ">=" ? h >= c.value : h == c.value);
  }

  void check(const RadicalEqualCheck& c, CheckResult& r) {
    const RingPtr& ring = f_.rings.at(c.ring);
    r.status = from(radical_equal(Ideal(ring, values(c.a)), Ideal(ring, values(c.b)), ideal_opts()));
  }

  void check(const EssenCheck& c, CheckResult& r) {
    const Derivation& d = deriv(c.deriv);
    LocalSliceData sd = slice_data(d, c.slice);
    if (!sd.valid) {
      r.status = Outcome::Fail;
      r.message = "not a local slice: " + c.deriv + "(" + c.slice.slice.text + ") = " + str(sd.plinth);
      return;
    }
    auto entries = essen_step1(d, sd);
    std::map<std::string, const EssenEntry*> by_source;
    for (const auto& e : entries) {
      by_source[e.source] = &e;
      r.witnesses.emplace_back(e.source == "plinth" ? "plinth" : "theta(" + e.source + ")|",
                               to_string(e.value));
    }
    bool ok = true;
    for (const auto& x : c.expect) {
      const LocalElem& got = by_source.at(x.var)->value;
      Poly den = x.denominator ? x.denominator->value : Poly::constant(d.ring(), 1);
      if (got.numerator * den != x.numerator.value * got.denominator()) {
        ok = false;
        r.message += (r.message.empty() ? "" : "; ") + x.var + ": expected " + x.numerator.text +
                     (x.denominator ? " over " + x.denominator->text : "") + ", got " +
                     to_string(got);
      }
    }
    r.status = from(ok);
  }

  void check(const SliceExponentCheck& c, CheckResult& r) {
    const Derivation& d = deriv(c.deriv);
    LocalSliceData sd = slice_data(d, c.slice);
    LocalElem e = slice_substitute(d, sd, c.of.value);
    r.witnesses.emplace_back("element", to_string(e));
    r.witnesses.emplace_back("exponent", std::to_string(e.exponent));
    r.status = from(e.exponent == c.exponent);
  }

  void check(const MemberCheck& c, CheckResult& r) {
    auto expr = engine(c.algebra).expression(c.poly.value);
    if (expr) r.witnesses.emplace_back("expression", str(*expr));
    r.status = from(expr.has_value() != c.negate);
  }

  void check(const LocalizedMemberCheck& c, CheckResult& r) {
    auto res = localized_member(engine(c.algebra), c.poly.value, c.at.value, opts_.nmax);
    using O = LocalizedMembership::Outcome;
    switch (res.outcome) {
      case O::Found:
        r.witnesses.emplace_back("N", std::to_string(res.exponent));
        r.status = from(!c.expect_n || *c.expect_n == res.exponent);
        break;
      case O::NotFound:
        r.status = Outcome::Inconclusive;
        r.message = "no N <= " + std::to_string(res.nmax) + " found";
        break;
      case O::Refuted:
        r.status = Outcome::Fail;
        r.message = "the element uses a variable absent from every generator";
        break;
    }
  }

  void check(const QuasiAffineCheck& c, CheckResult& r) {
    const Derivation& d = deriv(c.deriv);
    std::vector<LocalSliceData> slices;
    for (const auto& s : c.slices) slices.push_back(slice_data(d, s));
    QuasiAffineVerdict v = verify_quasi_affine(engine(c.algebra), slices, d, theorem_opts());
    if (v.height) r.witnesses.emplace_back("height", std::to_string(*v.height));
    for (const auto& cert : v.certificates) {
      std::string key = "locus " + str(cert.f);
      r.witnesses.emplace_back(key, to_string(cert.status));
      for (const auto& w : cert.witnesses)
        if (w.result.outcome == LocalizedMembership::Outcome::Found && w.result.exponent > 0)
          r.witnesses.emplace_back(key + " N(" + w.source + ")", std::to_string(w.result.exponent));
    }
    r.status = from(v.status);
    r.message = v.conclusion;
  }

  std::optional<std::string> citation(const std::optional<std::string>& name) const {
    if (!name) return std::nullopt;
    return f_.citations.at(*name);
  }

  void report(const SeparatingVerdict& v, CheckResult& r) {
    for (const auto& e : v.evidence)
      r.witnesses.emplace_back(e.piece.empty() ? e.element : e.element + " on " + e.piece,
                               e.component ? str(*e.component) : "none");
    if (v.citation) r.witnesses.emplace_back("cited", *v.citation);
    if (v.counterexample) r.witnesses.emplace_back("counterexample", *v.counterexample);
    r.status = from(v.status);
    r.message = v.conclusion;
  }

  void check(const SeparatingCheck& c, CheckResult& r) {
    report(verify_separating_corollary(values(c.loci), deriv(c.deriv), generators(c.testset),
                                       citation(c.cite), theorem_opts()),
           r);
  }

  void check(const SeparatingVarietyCheck& c, CheckResult& r) {
    std::vector<CoverPiece> pieces;
    for (const auto& p : c.pieces) {
      CoverPiece cp{p.vars, {}};
      for (const auto& it : p.subring) cp.subring.push_back({it.name, it.value});
      pieces.push_back(std::move(cp));
    }
    report(verify_separating_on_variety(engine(c.algebra), values(c.loci), deriv(c.deriv), pieces,
                                        generators(c.testset), citation(c.cite), theorem_opts()),
           r);
  }

  void check(const SeparatePointsCheck& c, CheckResult& r) {
    std::vector<Rat> u, v;
    for (const auto& e : c.u) u.push_back(e.value.constant_term());
    for (const auto& e : c.v) v.push_back(e.value.constant_term());
    auto gens = generators(c.gens);
    auto sep = separate_points(gens, u, v);
    for (const auto& g : gens)
      r.witnesses.emplace_back(g.name + " at first point", to_string(evaluate(g.poly, u)));
    r.witnesses.emplace_back("separated by", sep ? sep->name : "none");
    r.status = from(sep ? sep->name == c.expect : c.expect == "none");
  }

  void check(const ConstPlusIdealCheck& c, CheckResult& r) {
    auto k = const_plus_ideal_member(c.poly.value, Ideal(f_.rings.at(c.ring), values(c.ideal)),
                                     ideal_opts());
    if (!k) {
      r.status = Outcome::Fail;
      r.message = "not a constant modulo the ideal";
      return;
    }
    r.witnesses.emplace_back("constant", to_string(*k));
    r.status = from(!c.constant || Poly::constant(c.poly.value.ring(), *k) == c.constant->value);
  }

  void check(const GradedCheck& c, CheckResult& r) {
    const WeightSystem& w = f_.weights.at(c.weights);
    auto deg = graded_degree(deriv(c.deriv), w);
    if (!deg) {
      r.status = Outcome::Fail;
      r.message = "not homogeneous for " + c.weights;
      return;
    }
    r.witnesses.emplace_back("degree", str(*deg));
    r.status = from(!c.degree || w.normalize(*c.degree) == w.normalize(*deg));
  }

  void check(const InvariantCheck& c, CheckResult& r) {
    bool ok = true;
    for (const auto& g : generators(c.what)) {
      bool inv = f_.weights.count(c.under) ? invariance_check(g.poly, f_.weights.at(c.under))
                                           : invariance_check(g.poly, f_.symmetries.at(c.under));
      if (!inv) {
        ok = false;
        r.witnesses.emplace_back("not invariant", g.name);
      }
    }
    r.status = from(ok);
  }

  void check(const PullbackCheck& c, CheckResult& r) {
    PullbackResult res = pullback_check(deriv(c.deriv), f_.maps.at(c.map), deriv(c.target));
    for (const auto& e : res.entries)
      if (!e.ok)
        r.witnesses.emplace_back(e.var, str(e.lhs) + " != " + str(e.rhs));
    r.status = from(res.ok);
  }

  void check(const IdentityCheck& c, CheckResult& r) {
    Poly diff = c.lhs.value - c.rhs.value;
    if (!diff.is_zero()) r.witnesses.emplace_back("lhs - rhs", str(diff));
    r.status = from(diff.is_zero());
  }

  void check(const ApplyCheck& c, CheckResult& r) {
    Poly img = deriv(c.deriv)(c.arg.value);
    r.witnesses.emplace_back(c.deriv + "(" + c.arg.text + ")", str(img));
    r.status = from(img == c.expected.value);
  }

  void check(const QuotientCheck& c, CheckResult& r) {
    const Derivation& d = deriv(c.deriv);
    auto induced = induced_on_quotient(d, c.kill);
    if (!induced) {
      r.status = Outcome::Fail;
      r.message = "the killed variables do not generate a stable ideal";
      return;
    }
    r.witnesses.emplace_back("induced", to_string(*induced, c.deriv + "bar"));
    std::vector<std::string> found;
    if (auto vars = elementary_kernel_check(*induced))
      for (auto i : *vars) found.push_back(induced->ring()->name(i));
    std::vector<std::string> want = c.kernel;
    std::sort(found.begin(), found.end());
    std::sort(want.begin(), want.end());
    bool ok = found == want;
    if (!ok) r.message = "induced kernel is not generated by the listed variables";
    if (c.decompose) {
      std::vector<NamedPoly> kv;
      for (const auto& v : c.kernel) kv.push_back({v, Poly::variable(d.ring(), v)});
      SubalgebraPresentation sub(d.ring(), std::move(kv));
      for (const auto& g : f_.algebras.at(*c.decompose).generators()) {
        auto comp = subring_plus_ideal_member(g.poly, sub, c.kill, opts_.gb_steps);
        r.witnesses.emplace_back("component(" + g.name + ")", comp ? str(*comp) : "none");
        ok &= comp.has_value();
      }
    }
    r.status = from(ok);
  }

  void check(const MaubachCheck& c, CheckResult& r) {
    Lemma52Report rep = verify_lemma52(c.b);
    const MaubachResult& m = rep.result;
    r.witnesses.emplace_back("alpha", to_string(m.alpha.summation));
    r.witnesses.emplace_back("alpha closed form", to_string(m.alpha.closed_form));
    r.witnesses.emplace_back("alpha ratio", to_string(m.alpha.ratio));
    r.witnesses.emplace_back("reading", m.reading ? to_string(*m.reading) : "none");
    r.witnesses.emplace_back("n", std::to_string(m.n));
    r.witnesses.emplace_back("h''", str(m.hdoubleprime));
    r.status = from(rep.ok);
    r.message = m.diagnostics;
  }

  void check(const Lemma51Check& c, CheckResult& r) {
    Lemma51Report rep = verify_lemma51(c.a, c.b);
    if (rep.induced) r.witnesses.emplace_back("induced", to_string(*rep.induced, "Dbar"));
    std::string kv;
    for (const auto& v : rep.kernel_vars) kv += (kv.empty() ? "" : ", ") + v;
    r.witnesses.emplace_back("kernel", "(" + kv + ")");
    for (const auto& dcmp : rep.decomposition)
      r.witnesses.emplace_back("component(" + dcmp.name + ")",
                               dcmp.component ? str(*dcmp.component) : "none");
    r.status = from(rep.ok);
  }

  const CheckFile& f_;
  RunOptions opts_;
  std::map<std::string, MembershipEngine> engines_;
};

}  // namespace

RunReport run(const CheckFile& f, const RunOptions& opts) {
  using Clock = std::chrono::steady_clock;
  RunReport rep;
  Runner runner(f, opts);
  const auto start = Clock::now();
  std::size_t index = 0;
  for (const Check* c : f.checks()) {
    CheckResult r;
    r.index = index++;
    r.line = c->line;
    const auto t0 = Clock::now();
    try {
      runner.execute(*c, r);
    } catch (const ResourceLimitExceeded& e) {
      r.status = Outcome::Inconclusive;
      r.message = std::string("resource limit: ") + e.what();
    } catch (const std::exception& e) {
      r.status = Outcome::Fail;
      r.message = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    rep.results.push_back(std::move(r));
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rep;
}

}  // namespace lnd::dsl
