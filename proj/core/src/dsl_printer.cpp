#include <sstream>

#include "lnd/dsl.hpp"

namespace lnd::dsl {

namespace {

constexpr std::size_t kLineWidth = 80;

template <typename... F>
struct Overload : F... {
  using F::operator()...;
};
template <typename... F>
Overload(F...) -> Overload<F...>;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple(const std::vector<std::string>& parts) { return "(" + join(parts, ", ") + ")"; }

std::string tuple(const std::vector<Expr>& es) {
  std::vector<std::string> parts;
  for (const auto& e : es) parts.push_back(e.text);
  return tuple(parts);
}

std::string tuple(const WeightVector& w) {
  std::vector<std::string> parts;
  for (auto v : w) parts.push_back(std::to_string(v));
  return tuple(parts);
}

// `{ a }` for a single entry; one entry per line otherwise (unless flat).
std::string block(const std::vector<std::string>& entries, bool flat) {
  if (entries.empty()) return "{}";
  if (flat || entries.size() == 1) return "{ " + join(entries, ", ") + " }";
  return "{\n  " + join(entries, ",\n  ") + "\n}";
}

std::string list(const std::vector<std::string>& entries, std::size_t prefix, bool flat) {
  std::string one = "[" + join(entries, ", ") + "]";
  if (flat || entries.size() < 2 || prefix + one.size() <= kLineWidth) return one;
  return "[\n  " + join(entries, ",\n  ") + "\n]";
}

std::string item(const Item& it) {
  if (!it.expr) return it.name;
  if (it.named) return it.name + " = " + it.expr->text;
  return it.expr->text;
}

std::vector<std::string> items(const std::vector<Item>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(item(x));
  return out;
}

std::string source(const Source& s, std::size_t prefix, bool flat) {
  if (s.algebra) return *s.algebra;
  if (!s.bracketed && s.items.size() == 1) return item(s.items.front());
  return list(items(s.items), prefix, flat);
}

std::string slice(const SliceSpec& s) {
  return s.base ? s.slice.text + " base " + s.base->text : s.slice.text;
}

std::string on(const std::string& ring, const std::string& current) {
  return ring == current ? "" : " on " + ring;
}

std::string images(const std::vector<std::pair<std::string, Expr>>& xs, bool flat) {
  std::vector<std::string> entries;
  for (const auto& [v, e] : xs) entries.push_back(v + " -> " + e.text);
  return block(entries, flat);
}

// Body of a check directive, after `check `.
std::string render(const CheckBody& body, const std::string& current, bool flat) {
  return std::visit(
      Overload{
          [&](const KernelCheck& c) {
            std::string head = "kernel " + c.deriv + " ";
            return head + source(c.what, head.size() + 6, flat);
          },
          [&](const LndCheck& c) {
            return "lnd " + c.deriv + (c.bound ? " bound " + std::to_string(*c.bound) : "");
          },
          [&](const HeightCheck& c) {
            return "height" + on(c.ring, current) + " " + tuple(c.ideal) + " " + c.op + " " +
                   std::to_string(c.value);
          },
          [&](const RadicalEqualCheck& c) {
            return "radical-equal" + on(c.ring, current) + " " + tuple(c.a) + " " + tuple(c.b);
          },
          [&](const EssenCheck& c) {
            std::string s = "essen " + c.deriv + " slice " + slice(c.slice);
            if (!c.expect.empty()) {
              std::vector<std::string> entries;
              for (const auto& e : c.expect)
                entries.push_back(e.var + " -> " + e.numerator.text +
                                  (e.denominator ? " over " + e.denominator->text : ""));
              s += " expect " + block(entries, flat);
            }
            return s;
          },
          [&](const SliceExponentCheck& c) {
            return "slice-exponent " + c.deriv + " slice " + slice(c.slice) + " of " + c.of.text +
                   " == " + std::to_string(c.exponent);
          },
          [&](const MemberCheck& c) {
            return std::string(c.negate ? "non-member " : "member ") + c.algebra + " " +
                   c.poly.text;
          },
          [&](const LocalizedMemberCheck& c) {
            return "localized-member " + c.algebra + " " + c.poly.text + " at " + c.at.text +
                   (c.expect_n ? " == " + std::to_string(*c.expect_n) : "");
          },
          [&](const QuasiAffineCheck& c) {
            std::vector<std::string> parts;
            for (const auto& s : c.slices) parts.push_back(slice(s));
            std::string head = "quasiaffine " + c.algebra + " " + c.deriv + " slices ";
            return head + list(parts, head.size() + 6, flat);
          },
          [&](const SeparatingCheck& c) {
            std::string head =
                "separating " + c.algebra + " " + c.deriv + " loci " + tuple(c.loci) + " testset ";
            return head + source(c.testset, head.size() + 6, flat) +
                   (c.cite ? " cite " + *c.cite : "");
          },
          [&](const SeparatingVarietyCheck& c) {
            std::vector<std::string> entries;
            for (const auto& p : c.pieces)
              entries.push_back(tuple(p.vars) + " -> " + list(items(p.subring), 0, true));
            return "separating-variety " + c.algebra + " " + c.deriv + " loci " + tuple(c.loci) +
                   " pieces " + block(entries, flat) + " testset " +
                   source(c.testset, 0, true) + (c.cite ? " cite " + *c.cite : "");
          },
          [&](const SeparatePointsCheck& c) {
            return "separate-points" + on(c.ring, current) + " " + source(c.gens, 0, true) +
                   " " + tuple(c.u) + " " + tuple(c.v) + " expect " + c.expect;
          },
          [&](const ConstPlusIdealCheck& c) {
            return "const-plus-ideal" + on(c.ring, current) + " " + c.poly.text + " in " +
                   tuple(c.ideal) + (c.constant ? " == " + c.constant->text : "");
          },
          [&](const GradedCheck& c) {
            return "graded " + c.deriv + " " + c.weights +
                   (c.degree ? " == " + tuple(*c.degree) : "");
          },
          [&](const InvariantCheck& c) {
            std::string head = "invariant" + on(c.ring, current) + " ";
            return head + source(c.what, head.size() + 6, flat) + " under " + c.under;
          },
          [&](const PullbackCheck& c) {
            return "pullback " + c.deriv + " " + c.map + " " + c.target;
          },
          [&](const IdentityCheck& c) {
            return "identity" + on(c.ring, current) + " " + c.lhs.text + " == " + c.rhs.text;
          },
          [&](const ApplyCheck& c) {
            return "apply " + c.deriv + " " + c.arg.text + " == " + c.expected.text;
          },
          [&](const QuotientCheck& c) {
            return "quotient " + c.deriv + " kill " + tuple(c.kill) + " kernel " +
                   tuple(c.kernel) + (c.decompose ? " decompose " + *c.decompose : "");
          },
          [&](const MaubachCheck& c) { return "maubach b = " + std::to_string(c.b); },
          [&](const Lemma51Check& c) {
            return "lemma51 a = " + std::to_string(c.a) + " b = " + std::to_string(c.b);
          },
      },
      body);
}

}  // namespace

std::string kind(const Check& c) {
  return std::visit(
      Overload{
          [](const KernelCheck&) -> std::string { return "kernel"; },
          [](const LndCheck&) -> std::string { return "lnd"; },
          [](const HeightCheck&) -> std::string { return "height"; },
          [](const RadicalEqualCheck&) -> std::string { return "radical-equal"; },
          [](const EssenCheck&) -> std::string { return "essen"; },
          [](const SliceExponentCheck&) -> std::string { return "slice-exponent"; },
          [](const MemberCheck& m) -> std::string { return m.negate ? "non-member" : "member"; },
          [](const LocalizedMemberCheck&) -> std::string { return "localized-member"; },
          [](const QuasiAffineCheck&) -> std::string { return "quasiaffine"; },
          [](const SeparatingCheck&) -> std::string { return "separating"; },
          [](const SeparatingVarietyCheck&) -> std::string { return "separating-variety"; },
          [](const SeparatePointsCheck&) -> std::string { return "separate-points"; },
          [](const ConstPlusIdealCheck&) -> std::string { return "const-plus-ideal"; },
          [](const GradedCheck&) -> std::string { return "graded"; },
          [](const InvariantCheck&) -> std::string { return "invariant"; },
          [](const PullbackCheck&) -> std::string { return "pullback"; },
          [](const IdentityCheck&) -> std::string { return "identity"; },
          [](const ApplyCheck&) -> std::string { return "apply"; },
          [](const QuotientCheck&) -> std::string { return "quotient"; },
          [](const MaubachCheck&) -> std::string { return "maubach"; },
          [](const Lemma51Check&) -> std::string { return "lemma51"; },
      },
      c.body);
}

// One line, with `on R` always spelled out for ring-based checks so the
// text stands alone.
std::string describe(const Check& c) { return render(c.body, "", true); }

std::string print(const CheckFile& f) {
  std::ostringstream out;
  std::string current;
  int last_category = -1;
  for (const auto& st : f.statements) {
    const int category = static_cast<int>(st.index());
    if (last_category >= 0 && category != last_category) out << '\n';
    last_category = category;
    std::visit(
        Overload{
            [&](const RingDecl& r) {
              out << "ring " << r.name << " " << tuple(r.ring->variables());
              if (r.ring->order().kind == OrderKind::Lex) out << " order lex";
              current = r.name;
            },
            [&](const DerivationDecl& d) {
              out << "derivation " << d.name << on(d.ring, current) << " "
                  << images(d.images, false);
            },
            [&](const PolyDecl& p) {
              out << "poly " << p.name << on(p.ring, current) << " = " << p.expr.text;
            },
            [&](const AlgebraDecl& a) {
              std::string head = "algebra " + a.name + on(a.ring, current) + " = ";
              out << head << list(items(a.items), head.size(), false);
            },
            [&](const WeightsDecl& w) {
              std::vector<std::string> entries;
              for (const auto& [v, vec] : w.entries) entries.push_back(v + " -> " + tuple(vec));
              out << "weights " << w.name << on(w.ring, current) << " " << block(entries, false);
              if (w.mod_diagonal) out << " mod-diagonal";
            },
            [&](const SymmetryDecl& s) {
              std::vector<std::string> entries;
              for (const auto& o : s.orbits) entries.push_back(tuple(o));
              out << "symmetry " << s.name << on(s.ring, current) << " " << block(entries, false);
            },
            [&](const MapDecl& m) {
              out << "map " << m.name << " from " << m.from << " to " << m.to << " "
                  << images(m.images, false);
            },
            [&](const CiteDecl& c) { out << "cite " << c.name << " \"" << c.text << "\""; },
            [&](const Check& c) { out << "check " << render(c.body, current, false); },
        },
        st);
    out << '\n';
  }
  return out.str();
}

}  // namespace lnd::dsl
