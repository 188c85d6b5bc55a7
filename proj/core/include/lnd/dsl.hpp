#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/parse.hpp"
#include "lnd/subalgebra.hpp"
#include "lnd/symmetry.hpp"
#include "lnd/weights.hpp"

// Check files: declarations of rings, derivations, polynomials, algebras,
// gradings and symmetries followed by `check` directives. Grammar in
// docs/dsl.md.
namespace lnd::dsl {

/// An expression as written (normalized spacing) together with its value.
struct Expr {
  Poly value;
  std::string text;
};

struct RingDecl {
  std::string name;
  RingPtr ring;
};

struct DerivationDecl {
  std::string name;
  std::string ring;
  std::vector<std::pair<std::string, Expr>> images;
  Derivation d;
};

struct PolyDecl {
  std::string name;
  std::string ring;
  Expr expr;
};

/// `name` alone refers to a declared polynomial or variable; `name = expr`
/// defines the element inline.
struct Item {
  std::string name;
  std::optional<Expr> expr;  // absent for references
  bool named = false;        // written as `name = expr`
  Poly value;
};

struct AlgebraDecl {
  std::string name;
  std::string ring;
  std::vector<Item> items;
};

struct WeightsDecl {
  std::string name;
  std::string ring;
  std::vector<std::pair<std::string, WeightVector>> entries;
  bool mod_diagonal = false;
};

struct SymmetryDecl {
  std::string name;
  std::string ring;
  std::vector<std::vector<std::string>> orbits;
};

struct MapDecl {
  std::string name;
  std::string from, to;
  std::vector<std::pair<std::string, Expr>> images;
};

struct CiteDecl {
  std::string name;
  std::string text;
};

/// Generators named by an algebra, or listed inline.
struct Source {
  std::optional<std::string> algebra;
  std::vector<Item> items;
  bool bracketed = true;
};

struct SliceSpec {
  Expr slice;
  std::optional<Expr> base;
};

struct ExpectEntry {
  std::string var;
  Expr numerator;
  std::optional<Expr> denominator;
};

struct Piece {
  std::vector<std::string> vars;
  std::vector<Item> subring;
};

struct KernelCheck { std::string deriv; Source what; };
struct LndCheck { std::string deriv; std::optional<unsigned> bound; };
struct HeightCheck { std::string ring; std::vector<Expr> ideal; std::string op; unsigned value; };
struct RadicalEqualCheck { std::string ring; std::vector<Expr> a, b; };
struct EssenCheck { std::string deriv; SliceSpec slice; std::vector<ExpectEntry> expect; };
struct SliceExponentCheck { std::string deriv; SliceSpec slice; Expr of; unsigned exponent; };
struct MemberCheck { std::string algebra; Expr poly; bool negate = false; };
struct LocalizedMemberCheck {
  std::string algebra;
  Expr poly, at;
  std::optional<unsigned> expect_n;
};
struct QuasiAffineCheck { std::string algebra, deriv; std::vector<SliceSpec> slices; };
struct SeparatingCheck {
  std::string algebra, deriv;
  std::vector<Expr> loci;
  Source testset;
  std::optional<std::string> cite;
};
struct SeparatingVarietyCheck {
  std::string algebra, deriv;
  std::vector<Expr> loci;
  std::vector<Piece> pieces;
  Source testset;
  std::optional<std::string> cite;
};
struct SeparatePointsCheck {
  std::string ring;
  Source gens;
  std::vector<Expr> u, v;
  std::string expect;  // "none" or a generator name
};
struct ConstPlusIdealCheck {
  std::string ring;
  Expr poly;
  std::vector<Expr> ideal;
  std::optional<Expr> constant;
};
struct GradedCheck { std::string deriv, weights; std::optional<WeightVector> degree; };
struct InvariantCheck { std::string ring; Source what; std::string under; };
struct PullbackCheck { std::string deriv, map, target; };
struct IdentityCheck { std::string ring; Expr lhs, rhs; };
struct ApplyCheck { std::string deriv; Expr arg, expected; };
struct QuotientCheck {
  std::string deriv;
  std::vector<std::string> kill, kernel;
  std::optional<std::string> decompose;
};
struct MaubachCheck { unsigned b; };
struct Lemma51Check { unsigned a, b; };

using CheckBody =
    std::variant<KernelCheck, LndCheck, HeightCheck, RadicalEqualCheck, EssenCheck,
                 SliceExponentCheck, MemberCheck, LocalizedMemberCheck, QuasiAffineCheck,
                 SeparatingCheck, SeparatingVarietyCheck, SeparatePointsCheck, ConstPlusIdealCheck,
                 GradedCheck, InvariantCheck, PullbackCheck, IdentityCheck, ApplyCheck, QuotientCheck,
                 MaubachCheck, Lemma51Check>;

struct Check {
  int line = 0;
  CheckBody body;
};

using Statement = std::variant<RingDecl, DerivationDecl, PolyDecl, AlgebraDecl, WeightsDecl,
                               SymmetryDecl, MapDecl, CiteDecl, Check>;

/// Parsed file with symbol tables. Names share one namespace.
struct CheckFile {
  std::vector<Statement> statements;

  std::map<std::string, RingPtr> rings;
  std::map<std::string, Derivation> derivations;
  std::map<std::string, Poly> polys;
  std::map<std::string, SubalgebraPresentation> algebras;
  std::map<std::string, WeightSystem> weights;
  std::map<std::string, PermAction> symmetries;
  std::map<std::string, std::map<std::string, Poly>> maps;
  std::map<std::string, std::string> citations;

  std::vector<const Check*> checks() const;
};

/// Syntax errors carry position and expected tokens; semantic errors
/// (unknown names, arity) are reported as ParseError at the offending token.
CheckFile parse(std::string_view text);

/// Canonical rendering; parse(print(f)) reproduces f.
std::string print(const CheckFile& f);

/// Short kind name of a check (`kernel`, `radical-equal`, ...).
std::string kind(const Check& c);
/// The directive as printed, without the leading `check`.
std::string describe(const Check& c);

/// `D { v -> expr, ... }` (leading name optional) over the given ring.
Derivation parse_derivation(const RingPtr& ring, std::string_view text);

}  // namespace lnd::dsl
