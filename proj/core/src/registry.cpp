#include "lnd/registry.hpp"

#include <stdexcept>

#include "lnd/catalog.hpp"
#include "lnd/maubach.hpp"

namespace lnd::dsl {

namespace {

// Replaces every `{key}` in `text`; `^{key}` disappears when the value is 1.
std::string subst(std::string text, const std::map<std::string, std::string>& vars) {
  for (const auto& [k, v] : vars) {
    if (v != "1") continue;
    const std::string pat = "^{" + k + "}";
    for (std::size_t at = text.find(pat); at != std::string::npos; at = text.find(pat, at))
      text.erase(at, pat.size());
  }
  for (const auto& [k, v] : vars) {
    const std::string pat = "{" + k + "}";
    for (std::size_t at = text.find(pat); at != std::string::npos;
         at = text.find(pat, at + v.size()))
      text.replace(at, pat.size(), v);
  }
  return text;
}

const char* const kCorollaryCite =
    "\"invariants lying in Q + (loci) separate points on V(loci); cited, not machine-checked\"";

std::string df5_text() {
  return std::string(R"(# Five-dimensional triangular example: x^3 d/ds + s d/dt + t d/du + x^2 d/dv
ring B (x, s, t, u, v)
derivation D { s -> x^3, t -> s, u -> t, v -> x^2 }
poly f1 = x
poly f2 = 2*x^3*t - s^2
poly f3 = 3*x^6*u - 3*x^3*t*s + s^3
poly f4 = x*v - s
poly f5 = x^2*t*s - s^2*v + 2*x^3*t*v - 3*x^5*u
poly f6 = -18*x^3*t*s*u + 9*x^6*u^2 + 8*x^3*t^3 + 6*s^3*u - 3*t^2*s^2
algebra A = [f1, f2, f3, f4, f5, f6]
algebra A0 = [f1, f2, f4, f5]
algebra P = [f1, f2]
cite corollary )") + kCorollaryCite + R"(
check lnd D
check kernel D A
check identity f3 == -f1*f5 + f2*f4
check member A0 f3
check non-member P s
check essen D slice s expect { x -> f1, s -> 0, t -> f2/2 over x^3, u -> f3/3 over x^6, v -> f4 over x }
check essen D slice 3*x^3*u - s*t expect { x -> f1, s -> -f3 over f2, t -> x^3*f6/2 over f2^2, u -> -f6*f3/6 over f2^3, v -> f5 over f2 }
check height (x, f2) == 2
check radical-equal (x, f2) (x, s)
check quasiaffine A D slices [s, 3*x^3*u - s*t]
check separating A D loci (x, s) testset A cite corollary
check const-plus-ideal f6 in (x, s) == 0
check localized-member A x^3*f4 at x == 0
)";
}

std::string roberts_text(long m) {
  return subst(std::string(R"(# Roberts-type derivation in seven variables, m = {m}
ring B (x1, x2, x3, y1, y2, y3, v)
derivation D { y1 -> x1^{e}, y2 -> x2^{e}, y3 -> x3^{e}, v -> (x1*x2*x3)^{m} }
poly phi1 = x1^{e}*y2 - x2^{e}*y1
poly phi2 = x1^{e}*y3 - x3^{e}*y1
poly phi3 = x2^{e}*y3 - x3^{e}*y2
poly phi4 = (x1*x2)^{m}*y3 - x3*v
poly phi5 = (x1*x3)^{m}*y2 - x2*v
poly phi6 = (x2*x3)^{m}*y1 - x1*v
algebra A = [x1, x2, x3, phi1, phi2, phi3, phi4, phi5, phi6]
algebra Aprime = [x1, x2, x3, phi1, phi2, phi3, phi5, phi6]
cite corollary )") + kCorollaryCite + R"(
check lnd D
check kernel D A
check essen D slice y1 expect { y2 -> phi1 over x1^{e}, y3 -> phi2 over x1^{e}, v -> -phi6 over x1 }
check essen D slice y2 expect { y1 -> -phi1 over x2^{e}, y3 -> phi3 over x2^{e}, v -> -phi5 over x2 }
check essen D slice y3 expect { y1 -> -phi2 over x3^{e}, y2 -> -phi3 over x3^{e}, v -> -phi4 over x3 }
check height (x1, x2, x3) == 3
check height (x1, x2) == 2
check quasiaffine A D slices [y1, y2, y3]
check quasiaffine Aprime D slices [y1, y2]
check separating A D loci (x1, x2, x3) testset A cite corollary
check separate-points Aprime (0, 0, 1, 0, 0, 0, 1) (0, 0, 1, 0, 0, 0, 0) expect none
check separate-points [phi4] (0, 0, 1, 0, 0, 0, 1) (0, 0, 1, 0, 0, 0, 0) expect phi4
check separate-points Aprime (0, 0, 1, 0, 0, 0, 1) (0, 0, 0, 0, 0, 0, 0) expect x3
)",
               {{"m", std::to_string(m)}, {"e", std::to_string(m + 1)}});
}

std::string f6_text() {
  return std::string(R"(# Six-dimensional example with two non-principal loci pieces
ring B (x, y, s, t, u, v)
derivation D { s -> x^3, t -> y^3*s, u -> y^3*t, v -> x^2*y^2 }
poly g3 = -y^2*s + x*v
poly g4 = -1/2*y^3*s^2 + x^3*t
poly g5 = -x^2*y^3*s*t + 3*x^5*u + y^4*s^2*v - 2*x^3*y*t*v
poly g6 = -3/2*y^6*s^2*t^2 + 4*x^3*y^3*t^3 + 3*y^6*s^3*u - 9*x^3*y^3*s*t*u + 9/2*x^6*u^2
poly r = 2*x^3*y^3*t - y^6*s^2
algebra A = [g1 = x, g2 = y, g3, g4, g5, g6]
cite variety "invariants in C + (piece)B agree on each piece of V(loci); cited, not machine-checked"
check lnd D
check kernel D A
check apply D 3*x^3*u - y^3*s*t == r
check radical-equal (x, r) (x, y*s)
check height (x, r) == 2
check quasiaffine A D slices [s, 3*x^3*u - y^3*s*t]
check separating-variety A D loci (x, r) pieces { (x, y) -> [], (x, s) -> [y] } testset A cite variety
)");
}

std::string new7_text(long a, long b) {
  catalog::Example ex = catalog::new7(static_cast<unsigned>(a), static_cast<unsigned>(b));
  std::map<std::string, std::string> vars{{"a", std::to_string(a)},
                                          {"b", std::to_string(b)},
                                          {"ab", std::to_string(a * b)},
                                          {"exp", std::to_string((2 * b + 1) * a)}};
  for (const auto& g : ex.algebra) vars[g.name] = to_string(g.poly);
  Integer six_b = 1;
  for (long k = 0; k < b; ++k) six_b *= 6;
  vars["sixb"] = six_b.get_str();
  return subst(std::string(R"(# Seven-dimensional example, a = {a}, b = {b}
ring B (x1, x2, x3, y1, y2, y3, v)
derivation D { y1 -> x1^{a}, y2 -> x2^{a}, y3 -> x3^{a}, v -> (y1*y2*y3)^{b} }
poly p12 = x1^{a}*y2 - x2^{a}*y1
poly p13 = x1^{a}*y3 - x3^{a}*y1
poly p23 = x2^{a}*y3 - x3^{a}*y2
poly h1 = {h1}
poly h2 = {h2}
poly h3 = {h3}
algebra A = [x1, x2, x3, p12, p13, p23, h1, h2, h3]
weights omega { x1 -> (1, 0, 0), x2 -> (0, 1, 0), x3 -> (0, 0, 1), y1 -> ({a}, 0, 0), y2 -> (0, {a}, 0), y3 -> (0, 0, {a}), v -> ({ab}, {ab}, {ab}) }
weights H { x1 -> (1, 0, 0), x2 -> (0, 1, 0), x3 -> (0, 0, 1), y1 -> ({a}, 0, 0), y2 -> (0, {a}, 0), y3 -> (0, 0, {a}), v -> ({ab}, {ab}, {ab}) } mod-diagonal
symmetry S3 { (x1, x2, x3), (y1, y2, y3) }
cite corollary )") + kCorollaryCite + R"(
check lnd D
check kernel D A
check graded D omega == (0, 0, 0)
check height (x1, x2, x3) == 3
check slice-exponent D slice y1 of v == {exp}
check slice-exponent D slice y2 of v == {exp}
check slice-exponent D slice y3 of v == {exp}
check quasiaffine A D slices [y1, y2, y3]
check separating A D loci (x1, x2, x3) testset A cite corollary
check invariant [m1 = x1*x2*x3, m2 = x1^{a}*y2*y3, m3 = x2^{a}*y1*y3, m4 = x3^{a}*y1*y2, m5 = x1^{a}*x2^{a}*y3, m6 = x1^{a}*x3^{a}*y2, m7 = x2^{a}*x3^{a}*y1, m8 = y1*y2*y3, m9 = v] under H
check quotient D kill (x1, x2, x3) kernel (y1, y2, y3) decompose A
check lemma51 a = {a} b = {b}
ring R (x, y, z, u, w)
derivation Delta { y -> x^{a}, z -> y, u -> z, w -> u^{b} }
map Phi from R to B { x -> x1*x2*x3, y -> (x1^{a}*x2^{a}*y3 + x1^{a}*x3^{a}*y2 + x2^{a}*x3^{a}*y1)/3, z -> (x1^{a}*y2*y3 + x2^{a}*y1*y3 + x3^{a}*y1*y2)/6, u -> y1*y2*y3/6, w -> v/{sixb} }
check pullback D Phi Delta
check invariant on B [x1*x2*x3, x1^{a}*x2^{a}*y3 + x1^{a}*x3^{a}*y2 + x2^{a}*x3^{a}*y1, x1^{a}*y2*y3 + x2^{a}*y1*y3 + x3^{a}*y1*y2, y1*y2*y3, v] under H
check invariant on B [x1*x2*x3, x1^{a}*x2^{a}*y3 + x1^{a}*x3^{a}*y2 + x2^{a}*x3^{a}*y1, x1^{a}*y2*y3 + x2^{a}*y1*y3 + x3^{a}*y1*y2, y1*y2*y3, v] under S3
)",
               vars);
}

std::string maubach_text(long b) {
  const RingPtr ring = catalog::maubach_prime(static_cast<unsigned>(b)).ring();
  return subst(std::string(R"(# Four-variable derivation y d/dz + z d/du + u^{b} d/dw
ring Rp (y, z, u, w)
derivation Dp { z -> y, u -> z, w -> u^{b} }
poly h = y*u - 1/2*z^2
poly hp = {hp}
check lnd Dp
check kernel Dp [y, h, hp]
check essen Dp slice z expect { y -> y, z -> 0, u -> h over y, w -> hp over y^{b1} }
check const-plus-ideal y in (y, z) == 0
check const-plus-ideal h in (y, z) == 0
check const-plus-ideal hp in (y, z) == 0
check maubach b = {b}
)"),
               {{"b", std::to_string(b)},
                {"b1", std::to_string(b + 1)},
                {"hp", to_string(printed_hprime(ring, static_cast<unsigned>(b)))}});
}

void require_range(std::string_view example, const std::string& key, long v, long lo, long hi) {
  if (v < lo || v > hi)
    throw std::invalid_argument(std::string(example) + ": " + key + " must lie in [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                                std::to_string(v));
}

Params resolve(std::string_view name, const Params& given) {
  Params p = builtin_defaults(name);
  for (const auto& [k, v] : given) {
    if (!p.count(k))
      throw std::invalid_argument(std::string(name) + ": unknown parameter '" + k + "'");
    p[k] = v;
  }
  return p;
}

}  // namespace

std::vector<std::string> builtin_names() { return {"df5", "roberts", "f6", "new7", "maubach"}; }

Params builtin_defaults(std::string_view name) {
  if (name == "df5" || name == "f6") return {};
  if (name == "roberts") return {{"m", 2}};
  if (name == "new7") return {{"a", 1}, {"b", 1}};
  if (name == "maubach") return {{"b", 1}};
  throw std::invalid_argument("unknown example '" + std::string(name) +
                              "' (known: df5, roberts, f6, new7, maubach)");
}

std::string builtin_text(std::string_view name, const Params& params) {
  const Params p = resolve(name, params);
  std::string raw;
  // Upper bounds keep generated files and run times reasonable.
  if (name == "df5") {
    raw = df5_text();
  } else if (name == "roberts") {
    require_range(name, "m", p.at("m"), 2, 12);
    raw = roberts_text(p.at("m"));
  } else if (name == "f6") {
    raw = f6_text();
  } else if (name == "new7") {
    require_range(name, "a", p.at("a"), 1, 6);
    require_range(name, "b", p.at("b"), 1, 6);
    raw = new7_text(p.at("a"), p.at("b"));
  } else {
    require_range(name, "b", p.at("b"), 1, 8);
    raw = maubach_text(p.at("b"));
  }
  return print(parse(raw));
}

CheckFile builtin(std::string_view name, const Params& params) {
  return parse(builtin_text(name, params));
}

std::string builtin_file_name(std::string_view name, const Params& params) {
  const Params p = resolve(name, params);
  std::string out(name);
  for (const auto& [k, v] : p) out += "_" + k + std::to_string(v);
  return out + ".lnd";
}

}  // namespace lnd::dsl
