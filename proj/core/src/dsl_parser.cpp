#include <set>
#include <stdexcept>

#include "lnd/dsl.hpp"
#include "lnd/errors.hpp"

namespace lnd::dsl {

std::vector<const Check*> CheckFile::checks() const {
  std::vector<const Check*> out;
  for (const auto& s : statements)
    if (auto c = std::get_if<Check>(&s)) out.push_back(c);
  return out;
}

namespace {

using Kind = Token::Kind;

class Parser {
 public:
  explicit Parser(std::string_view text) : cur_(tokenize(text)) {}

  CheckFile run() {
    for (;;) {
      skip_newlines();
      if (cur_.peek().kind == Kind::End) break;
      const Token start = cur_.peek();
      try {
        statement();
      } catch (const ParseError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw ParseError(start.line, start.column, e.what());
      } catch (const std::domain_error& e) {
        throw ParseError(start.line, start.column, e.what());
      }
      end_of_statement();
    }
    return std::move(f_);
  }

 private:
  // ---- token helpers ----------------------------------------------------

  void skip_newlines() {
    while (cur_.peek().kind == Kind::Newline) cur_.next();
  }

  void end_of_statement() {
    const Token& t = cur_.peek();
    if (t.kind == Kind::Newline || t.kind == Kind::End) {
      cur_.next();
      return;
    }
    cur_.fail(t, "unexpected " + t.text + " at end of statement", {"end of line"});
  }

  static bool adjacent(const Token& a, const Token& b) {
    return a.line == b.line && a.column + static_cast<int>(a.text.size()) == b.column;
  }

  // identifier, joined with `-ident` pieces written without spaces
  std::string keyword() {
    const Token& first = cur_.expect_kind(Kind::Ident, "keyword");
    std::string word = first.text;
    Token last = first;
    while (cur_.peek().kind == Kind::Symbol && cur_.peek().text == "-" &&
           adjacent(last, cur_.peek()) && cur_.peek(1).kind == Kind::Ident &&
           adjacent(cur_.peek(), cur_.peek(1))) {
      cur_.next();
      last = cur_.next();
      word += "-" + last.text;
    }
    return word;
  }

  std::string ident(std::string_view what) { return cur_.expect_kind(Kind::Ident, what).text; }

  unsigned natural() {
    const Token& t = cur_.expect_kind(Kind::Number, "non-negative integer");
    try {
      unsigned long v = std::stoul(t.text);
      if (v > 1000000) throw std::out_of_range("");
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      cur_.fail(t, "integer out of range");
    }
  }

  std::int64_t integer() {
    bool neg = cur_.accept_symbol("-");
    const Token& t = cur_.expect_kind(Kind::Number, "integer");
    try {
      std::int64_t v = std::stoll(t.text);
      return neg ? -v : v;
    } catch (const std::exception&) {
      cur_.fail(t, "integer out of range");
    }
  }

  void open(std::string_view s) {
    cur_.expect_symbol(s);
    ++cur_.bracket_depth();
  }
  void close(std::string_view s) {
    --cur_.bracket_depth();
    cur_.expect_symbol(s);
  }

  // ---- names ------------------------------------------------------------

  void declare(const Token& at, const std::string& name) {
    if (!names_.insert(name).second) cur_.fail(at, "name '" + name + "' is already declared");
  }

  template <typename Map>
  std::string lookup_name(const Map& table, std::string_view what) {
    const Token& t = cur_.expect_kind(Kind::Ident, std::string(what) + " name");
    if (!table.count(t.text)) cur_.fail(t, "unknown " + std::string(what) + " '" + t.text + "'");
    return t.text;
  }

  std::string ring_clause() {
    if (cur_.accept_ident("on")) return lookup_name(f_.rings, "ring");
    if (current_ring_.empty()) cur_.fail(cur_.peek(), "no ring declared yet");
    return current_ring_;
  }

  const RingPtr& ring(const std::string& name) { return f_.rings.at(name); }
  std::string ring_of_derivation(const std::string& d) { return deriv_ring_.at(d); }
  std::string ring_of_algebra(const std::string& a) { return alg_ring_.at(a); }

  // ---- expressions ------------------------------------------------------

  Expr expr(const std::string& ring_name) {
    const RingPtr& r = ring(ring_name);
    const std::size_t from = cur_.mark();
    NameLookup lookup = [&](const std::string& name) -> std::optional<Poly> {
      auto it = f_.polys.find(name);
      if (it == f_.polys.end()) return std::nullopt;
      for (auto v : it->second.support())
        if (!r->index_of(it->second.ring()->name(v))) return std::nullopt;
      return it->second.in_ring(r);
    };
    Poly value = parse_expression(cur_, r, lookup);
    return {std::move(value), render_tokens(cur_.between(from, cur_.mark()))};
  }

  std::vector<Expr> expr_tuple(const std::string& ring_name) {
    std::vector<Expr> out;
    open("(");
    if (!cur_.at_symbol(")")) {
      do out.push_back(expr(ring_name));
      while (cur_.accept_symbol(","));
    }
    close(")");
    return out;
  }

  std::vector<std::string> var_tuple(const std::string& ring_name) {
    std::vector<std::string> out;
    open("(");
    do {
      const Token& t = cur_.expect_kind(Kind::Ident, "variable");
      if (!ring(ring_name)->index_of(t.text)) cur_.fail(t, "unknown variable '" + t.text + "'");
      out.push_back(t.text);
    } while (cur_.accept_symbol(","));
    close(")");
    return out;
  }

  Item item(const std::string& ring_name) {
    Item it;
    if (cur_.peek().kind == Kind::Ident && cur_.peek(1).kind == Kind::Symbol &&
        cur_.peek(1).text == "=") {
      it.name = cur_.next().text;
      cur_.next();
      it.named = true;
      it.expr = expr(ring_name);
      it.value = it.expr->value;
      return it;
    }
    const Token first = cur_.peek();
    Expr e = expr(ring_name);
    if (first.kind == Kind::Ident && e.text == first.text) {
      it.name = first.text;
    } else {
      it.name = e.text;
      it.expr = e;
    }
    it.value = std::move(e.value);
    return it;
  }

  std::vector<Item> item_list(const std::string& ring_name) {
    std::vector<Item> out;
    open("[");
    if (!cur_.at_symbol("]")) {
      do out.push_back(item(ring_name));
      while (cur_.accept_symbol(","));
    }
    close("]");
    return out;
  }

  Source source(const std::string& ring_name) {
    Source s;
    if (cur_.at_symbol("[")) {
      s.items = item_list(ring_name);
      return s;
    }
    const Token& t = cur_.peek();
    if (t.kind == Kind::Ident && f_.algebras.count(t.text)) {
      s.algebra = cur_.next().text;
      return s;
    }
    s.bracketed = false;
    s.items.push_back(item(ring_name));
    return s;
  }

  SliceSpec slice_spec(const std::string& ring_name) {
    SliceSpec s{expr(ring_name), std::nullopt};
    if (cur_.accept_ident("base")) s.base = expr(ring_name);
    return s;
  }

  // ---- statements -------------------------------------------------------

  void statement() {
    const Token& t = cur_.peek();
    if (t.kind != Kind::Ident)
      cur_.fail(t, "expected a declaration or check",
                {"ring", "derivation", "poly", "algebra", "weights", "symmetry", "map", "cite",
                 "check"});
    const std::string word = t.text;
    if (word == "ring") return ring_decl();
    if (word == "derivation") return derivation_decl();
    if (word == "poly") return poly_decl();
    if (word == "algebra") return algebra_decl();
    if (word == "weights") return weights_decl();
    if (word == "symmetry") return symmetry_decl();
    if (word == "map") return map_decl();
    if (word == "cite") return cite_decl();
    if (word == "check") return check();
    cur_.fail(t, "unknown statement '" + word + "'",
              {"ring", "derivation", "poly", "algebra", "weights", "symmetry", "map", "cite",
               "check"});
  }

  void ring_decl() {
    cur_.next();
    const Token name = cur_.expect_kind(Kind::Ident, "ring name");
    declare(name, name.text);
    std::vector<std::string> vars;
    open("(");
    do vars.push_back(ident("variable name"));
    while (cur_.accept_symbol(","));
    close(")");
    MonomialOrder order = MonomialOrder::grevlex();
    if (cur_.accept_ident("order")) {
      const Token& o = cur_.expect_kind(Kind::Ident, "order");
      if (o.text == "lex")
        order = MonomialOrder::lex();
      else if (o.text != "grevlex")
        cur_.fail(o, "unknown order '" + o.text + "'", {"grevlex", "lex"});
    }
    RingPtr r = Ring::make(std::move(vars), order);
    f_.rings.emplace(name.text, r);
    current_ring_ = name.text;
    f_.statements.push_back(RingDecl{name.text, r});
  }

  void derivation_decl() {
    cur_.next();
    const Token name = cur_.expect_kind(Kind::Ident, "derivation name");
    declare(name, name.text);
    DerivationDecl d;
    d.name = name.text;
    d.ring = ring_clause();
    d.images = image_block(d.ring, d.ring);
    std::map<std::string, Poly> m;
    for (const auto& [v, e] : d.images) m.emplace(v, e.value);
    d.d = Derivation::from_map(ring(d.ring), m);
    f_.derivations.emplace(d.name, d.d);
    deriv_ring_.emplace(d.name, d.ring);
    f_.statements.push_back(std::move(d));
  }

  // { var -> expr, ... } with keys from `key_ring` and values in `value_ring`
  std::vector<std::pair<std::string, Expr>> image_block(const std::string& key_ring,
                                                        const std::string& value_ring) {
    std::vector<std::pair<std::string, Expr>> out;
    std::set<std::string> seen;
    open("{");
    if (!cur_.at_symbol("}")) {
      do {
        const Token& v = cur_.expect_kind(Kind::Ident, "variable");
        if (!ring(key_ring)->index_of(v.text)) cur_.fail(v, "unknown variable '" + v.text + "'");
        if (!seen.insert(v.text).second) cur_.fail(v, "variable '" + v.text + "' listed twice");
        std::string var = v.text;
        cur_.expect_symbol("->");
        out.emplace_back(var, expr(value_ring));
      } while (cur_.accept_symbol(","));
    }
    close("}");
    return out;
  }

  void poly_decl() {
    cur_.next();
    const Token name = cur_.expect_kind(Kind::Ident, "polynomial name");
    declare(name, name.text);
    PolyDecl p;
    p.name = name.text;
    p.ring = ring_clause();
    if (ring(p.ring)->index_of(p.name))
      cur_.fail(name, "'" + p.name + "' is a variable of ring " + p.ring);
    cur_.expect_symbol("=");
    p.expr = expr(p.ring);
    f_.polys.emplace(p.name, p.expr.value);
    f_.statements.push_back(std::move(p));
  }

  void algebra_decl() {
    cur_.next();
    const Token name = cur_.expect_kind(Kind::Ident, "algebra name");
    declare(name, name.text);
    AlgebraDecl a;
    a.name = name.text;
    a.ring = ring_clause();
    cur_.expect_symbol("=");
    a.items = item_list(a.ring);
    std::vector<NamedPoly> gens;
    for (const auto& it : a.items) gens.push_back({it.name, it.value});
    f_.algebras.emplace(a.name, SubalgebraPresentation(ring(a.ring), std::move(gens)));
    alg_ring_.emplace(a.name, a.ring);
    f_.statements.push_back(std::move(a));
  }

  void weights_decl() {
    cur_.next();
    const Token name = cur_.expect_kind(Kind::Ident, "weights name");
    declare(name, name.text);
    WeightsDecl w;
    w.name = name.text;
    w.ring = ring_clause();
    const RingPtr& r = ring(w.ring);
    std::vector<std::optional<WeightVector>> by_var(r->arity());
    open("{");
    do {
      const Token& v = cur_.expect_kind(Kind::Ident, "variable");
      auto i = r->index_of(v.text);
      if (!i) cur_.fail(v, "unknown variable '" + v.text + "'");
      if (by_var[*i]) cur_.fail(v, "variable '" + v.text + "' listed twice");
      std::string var = v.text;
      cur_.expect_symbol("->");
      WeightVector vec;
      open("(");
      do vec.push_back(integer());
      while (cur_.accept_symbol(","));
      close(")");
      by_var[*i] = vec;
      w.entries.emplace_back(var, std::move(vec));
    } while (cur_.accept_symbol(","));
    close("}");
    for (std::size_t i = 0; i < r->arity(); ++i)
      if (!by_var[i]) cur_.fail(name, "weights " + w.name + " give no weight for " + r->name(i));
    if (cur_.peek().kind == Kind::Ident && cur_.peek().text == "mod") {
      const Token at = cur_.peek();
      if (keyword() != "mod-diagonal") cur_.fail(at, "expected mod-diagonal", {"mod-diagonal"});
      w.mod_diagonal = true;
    }
    std::vector<WeightVector> vecs;
    for (auto& v : by_var) vecs.push_back(*v);
    f_.weights.emplace(w.name, WeightSystem(r, std::move(vecs), w.mod_diagonal));
    f_.statements.push_back(std::move(w));
  }

  void symmetry_decl() {
    cur_.next();
    const Token name = cur_.expect_kind(Kind::Ident, "symmetry name");
    declare(name, name.text);
    SymmetryDecl s;
    s.name = name.text;
    s.ring = ring_clause();
    open("{");
    do s.orbits.push_back(var_tuple(s.ring));
    while (cur_.accept_symbol(","));
    close("}");
    f_.symmetries.emplace(s.name, PermAction(ring(s.ring), s.orbits));
    f_.statements.push_back(std::move(s));
  }

  void map_decl() {
    cur_.next();
    const Token name = cur_.expect_kind(Kind::Ident, "map name");
    declare(name, name.text);
    MapDecl m;
    m.name = name.text;
    cur_.expect_ident("from");
    m.from = lookup_name(f_.rings, "ring");
    cur_.expect_ident("to");
    m.to = lookup_name(f_.rings, "ring");
    m.images = image_block(m.from, m.to);
    std::map<std::string, Poly> dict;
    for (const auto& [v, e] : m.images) dict.emplace(v, e.value);
    for (const auto& v : ring(m.from)->variables())
      if (!dict.count(v)) cur_.fail(name, "map " + m.name + " gives no image for " + v);
    f_.maps.emplace(m.name, std::move(dict));
    f_.statements.push_back(std::move(m));
  }

  void cite_decl() {
    cur_.next();
    const Token name = cur_.expect_kind(Kind::Ident, "citation name");
    declare(name, name.text);
    const Token& text = cur_.expect_kind(Kind::String, "quoted citation text");
    f_.citations.emplace(name.text, text.text);
    f_.statements.push_back(CiteDecl{name.text, text.text});
  }

  std::optional<std::string> cite_clause() {
    if (!cur_.accept_ident("cite")) return std::nullopt;
    return lookup_name(f_.citations, "citation");
  }

  // ---- checks -----------------------------------------------------------

  void check() {
    const Token& at = cur_.next();
    Check c;
    c.line = at.line;
    const Token kw = cur_.peek();
    const std::string k = keyword();
    if (k == "kernel") {
      KernelCheck b;
      b.deriv = lookup_name(f_.derivations, "derivation");
      b.what = source(ring_of_derivation(b.deriv));
      c.body = std::move(b);
    } else if (k == "lnd") {
      LndCheck b;
      b.deriv = lookup_name(f_.derivations, "derivation");
      if (cur_.accept_ident("bound")) b.bound = natural();
      c.body = std::move(b);
    } else if (k == "height") {
      HeightCheck b;
      b.ring = ring_clause();
      b.ideal = expr_tuple(b.ring);
      if (cur_.accept_symbol(">="))
        b.op = ">=";
      else if (cur_.accept_symbol("=="))
        b.op = "==";
      else
        cur_.fail(cur_.peek(), "expected comparison", {"'>='", "'=='"});
      b.value = natural();
      c.body = std::move(b);
    } else if (k == "radical-equal") {
      RadicalEqualCheck b;
      b.ring = ring_clause();
      b.a = expr_tuple(b.ring);
      b.b = expr_tuple(b.ring);
      c.body = std::move(b);
    } else if (k == "essen") {
      EssenCheck b;
      b.deriv = lookup_name(f_.derivations, "derivation");
      const std::string r = ring_of_derivation(b.deriv);
      cur_.expect_ident("slice");
      b.slice = slice_spec(r);
      if (cur_.accept_ident("expect")) {
        open("{");
        do {
          const Token& v = cur_.expect_kind(Kind::Ident, "variable");
          if (!ring(r)->index_of(v.text)) cur_.fail(v, "unknown variable '" + v.text + "'");
          ExpectEntry e;
          e.var = v.text;
          cur_.expect_symbol("->");
          e.numerator = expr(r);
          if (cur_.accept_ident("over")) e.denominator = expr(r);
          b.expect.push_back(std::move(e));
        } while (cur_.accept_symbol(","));
        close("}");
      }
      c.body = std::move(b);
    } else if (k == "slice-exponent") {
      SliceExponentCheck b;
      b.deriv = lookup_name(f_.derivations, "derivation");
      const std::string r = ring_of_derivation(b.deriv);
      cur_.expect_ident("slice");
      b.slice = slice_spec(r);
      cur_.expect_ident("of");
      b.of = expr(r);
      cur_.expect_symbol("==");
      b.exponent = natural();
      c.body = std::move(b);
    } else if (k == "member" || k == "non-member") {
      MemberCheck b;
      b.negate = k == "non-member";
      b.algebra = lookup_name(f_.algebras, "algebra");
      b.poly = expr(ring_of_algebra(b.algebra));
      c.body = std::move(b);
    } else if (k == "localized-member") {
      LocalizedMemberCheck b;
      b.algebra = lookup_name(f_.algebras, "algebra");
      const std::string r = ring_of_algebra(b.algebra);
      b.poly = expr(r);
      cur_.expect_ident("at");
      b.at = expr(r);
      if (cur_.accept_symbol("==")) b.expect_n = natural();
      c.body = std::move(b);
    } else if (k == "quasiaffine") {
      QuasiAffineCheck b;
      b.algebra = lookup_name(f_.algebras, "algebra");
      b.deriv = lookup_name(f_.derivations, "derivation");
      const std::string r = ring_of_derivation(b.deriv);
      cur_.expect_ident("slices");
      open("[");
      do b.slices.push_back(slice_spec(r));
      while (cur_.accept_symbol(","));
      close("]");
      c.body = std::move(b);
    } else if (k == "separating") {
      SeparatingCheck b;
      b.algebra = lookup_name(f_.algebras, "algebra");
      b.deriv = lookup_name(f_.derivations, "derivation");
      const std::string r = ring_of_derivation(b.deriv);
      cur_.expect_ident("loci");
      b.loci = expr_tuple(r);
      cur_.expect_ident("testset");
      b.testset = source(r);
      b.cite = cite_clause();
      c.body = std::move(b);
    } else if (k == "separating-variety") {
      SeparatingVarietyCheck b;
      b.algebra = lookup_name(f_.algebras, "algebra");
      b.deriv = lookup_name(f_.derivations, "derivation");
      const std::string r = ring_of_derivation(b.deriv);
      cur_.expect_ident("loci");
      b.loci = expr_tuple(r);
      cur_.expect_ident("pieces");
      open("{");
      do {
        Piece p;
        p.vars = var_tuple(r);
        cur_.expect_symbol("->");
        p.subring = item_list(r);
        b.pieces.push_back(std::move(p));
      } while (cur_.accept_symbol(","));
      close("}");
      cur_.expect_ident("testset");
      b.testset = source(r);
      b.cite = cite_clause();
      c.body = std::move(b);
    } else if (k == "separate-points") {
      SeparatePointsCheck b;
      b.ring = ring_clause();
      b.gens = source(b.ring);
      if (b.gens.algebra) b.ring = ring_of_algebra(*b.gens.algebra);
      b.u = expr_tuple(b.ring);
      b.v = expr_tuple(b.ring);
      for (const auto* pt : {&b.u, &b.v}) {
        if (pt->size() != ring(b.ring)->arity())
          cur_.fail(kw, "point arity does not match ring " + b.ring);
        for (const auto& e : *pt)
          if (!e.value.is_constant()) cur_.fail(kw, "point coordinates must be constants");
      }
      cur_.expect_ident("expect");
      b.expect = ident("'none' or a generator name");
      c.body = std::move(b);
    } else if (k == "const-plus-ideal") {
      ConstPlusIdealCheck b;
      b.ring = ring_clause();
      b.poly = expr(b.ring);
      cur_.expect_ident("in");
      b.ideal = expr_tuple(b.ring);
      if (cur_.accept_symbol("==")) b.constant = expr(b.ring);
      c.body = std::move(b);
    } else if (k == "graded") {
      GradedCheck b;
      b.deriv = lookup_name(f_.derivations, "derivation");
      b.weights = lookup_name(f_.weights, "weights");
      if (cur_.accept_symbol("==")) {
        WeightVector v;
        open("(");
        do v.push_back(integer());
        while (cur_.accept_symbol(","));
        close(")");
        b.degree = std::move(v);
      }
      c.body = std::move(b);
    } else if (k == "invariant") {
      InvariantCheck b;
      b.ring = ring_clause();
      b.what = source(b.ring);
      if (b.what.algebra) b.ring = ring_of_algebra(*b.what.algebra);
      cur_.expect_ident("under");
      const Token& u = cur_.expect_kind(Kind::Ident, "weights or symmetry name");
      if (!f_.weights.count(u.text) && !f_.symmetries.count(u.text))
        cur_.fail(u, "unknown weights or symmetry '" + u.text + "'");
      b.under = u.text;
      c.body = std::move(b);
    } else if (k == "pullback") {
      PullbackCheck b;
      b.deriv = lookup_name(f_.derivations, "derivation");
      b.map = lookup_name(f_.maps, "map");
      b.target = lookup_name(f_.derivations, "derivation");
      c.body = std::move(b);
    } else if (k == "identity") {
      IdentityCheck b;
      b.ring = ring_clause();
      b.lhs = expr(b.ring);
      cur_.expect_symbol("==");
      b.rhs = expr(b.ring);
      c.body = std::move(b);
    } else if (k == "apply") {
      ApplyCheck b;
      b.deriv = lookup_name(f_.derivations, "derivation");
      const std::string r = ring_of_derivation(b.deriv);
      b.arg = expr(r);
      cur_.expect_symbol("==");
      b.expected = expr(r);
      c.body = std::move(b);
    } else if (k == "quotient") {
      QuotientCheck b;
      b.deriv = lookup_name(f_.derivations, "derivation");
      const std::string r = ring_of_derivation(b.deriv);
      cur_.expect_ident("kill");
      b.kill = var_tuple(r);
      cur_.expect_ident("kernel");
      b.kernel = var_tuple(r);
      if (cur_.accept_ident("decompose")) b.decompose = lookup_name(f_.algebras, "algebra");
      c.body = std::move(b);
    } else if (k == "maubach") {
      cur_.expect_ident("b");
      cur_.expect_symbol("=");
      unsigned b = natural();
      if (b < 1) cur_.fail(kw, "maubach needs b >= 1");
      c.body = MaubachCheck{b};
    } else if (k == "lemma51") {
      cur_.expect_ident("a");
      cur_.expect_symbol("=");
      unsigned a = natural();
      cur_.expect_ident("b");
      cur_.expect_symbol("=");
      unsigned b = natural();
      if (a < 1 || b < 1) cur_.fail(kw, "lemma51 needs a, b >= 1");
      c.body = Lemma51Check{a, b};
    } else {
      cur_.fail(kw, "unknown check '" + k + "'",
                {"kernel", "lnd", "height", "radical-equal", "essen", "slice-exponent", "member",
                 "non-member", "localized-member", "quasiaffine", "separating",
                 "separating-variety", "separate-points", "const-plus-ideal", "graded",
                 "invariant", "pullback", "identity", "apply", "quotient", "maubach", "lemma51"});
    }
    f_.statements.push_back(std::move(c));
  }

  TokenCursor cur_;
  CheckFile f_;
  std::set<std::string> names_;
  std::string current_ring_;
  std::map<std::string, std::string> deriv_ring_, alg_ring_;
};

}  // namespace

CheckFile parse(std::string_view text) { return Parser(text).run(); }

Derivation parse_derivation(const RingPtr& ring, std::string_view text) {
  std::string src = "ring R_ (";
  for (std::size_t i = 0; i < ring->arity(); ++i) src += (i ? ", " : "") + ring->name(i);
  src += ")\nderivation ";
  std::string body(text);
  std::size_t brace = body.find('{');
  if (brace == std::string::npos) throw ParseError(1, 1, "expected '{' in derivation", {"'{'"});
  std::string head = body.substr(0, brace);
  bool named = head.find_first_not_of(" \t") != std::string::npos;
  src += named ? head : "D_ ";
  src += body.substr(brace) + "\n";
  CheckFile f = parse(src);
  Derivation d = f.derivations.begin()->second;
  std::vector<Poly> images;
  for (const auto& p : d.images()) images.push_back(p.in_ring(ring));
  return Derivation(ring, std::move(images));
}

}  // namespace lnd::dsl
