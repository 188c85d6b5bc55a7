#include "lnd/catalog.hpp"

#include <stdexcept>

#include "lnd/parse.hpp"
#include "lnd/slices.hpp"

namespace lnd::catalog {

namespace {

std::string str(unsigned k) { return std::to_string(k); }

std::vector<NamedPoly> named(const RingPtr& ring,
                             const std::vector<std::pair<std::string, std::string>>& defs) {
  std::vector<NamedPoly> out;
  for (const auto& [name, text] : defs) out.push_back({name, parse_poly(ring, text)});
  return out;
}

Derivation derivation(const RingPtr& ring, const std::map<std::string, std::string>& images) {
  std::map<std::string, Poly> m;
  for (const auto& [v, text] : images) m.emplace(v, parse_poly(ring, text));
  return Derivation::from_map(ring, m);
}

const std::vector<std::string> kSeven{"x1", "x2", "x3", "y1", "y2", "y3", "v"};

}  // namespace

Example df5() {
  RingPtr ring = Ring::make({"x", "s", "t", "u", "v"});
  Derivation d = derivation(ring, {{"s", "x^3"}, {"t", "s"}, {"u", "t"}, {"v", "x^2"}});
  auto gens = named(ring, {
      {"f1", "x"},
      {"f2", "2*x^3*t - s^2"},
      {"f3", "3*x^6*u - 3*x^3*t*s + s^3"},
      {"f4", "x*v - s"},
      {"f5", "x^2*t*s - s^2*v + 2*x^3*t*v - 3*x^5*u"},
      {"f6", "-18*x^3*t*s*u + 9*x^6*u^2 + 8*x^3*t^3 + 6*s^3*u - 3*t^2*s^2"},
  });
  return {ring, d, gens};
}

namespace {

std::vector<std::pair<std::string, std::string>> roberts_defs(unsigned m) {
  const std::string e = str(m + 1), k = str(m);
  return {
      {"x1", "x1"},
      {"x2", "x2"},
      {"x3", "x3"},
      {"phi1", "x1^" + e + "*y2 - x2^" + e + "*y1"},
      {"phi2", "x1^" + e + "*y3 - x3^" + e + "*y1"},
      {"phi3", "x2^" + e + "*y3 - x3^" + e + "*y2"},
      {"phi4", "(x1*x2)^" + k + "*y3 - x3*v"},
      {"phi5", "(x1*x3)^" + k + "*y2 - x2*v"},
      {"phi6", "(x2*x3)^" + k + "*y1 - x1*v"},
  };
}

}  // namespace

Example roberts(unsigned m) {
  if (m < 2) throw std::invalid_argument("roberts: m must be at least 2");
  RingPtr ring = Ring::make(kSeven);
  const std::string e = str(m + 1);
  Derivation d = derivation(ring, {{"y1", "x1^" + e},
                                   {"y2", "x2^" + e},
                                   {"y3", "x3^" + e},
                                   {"v", "(x1*x2*x3)^" + str(m)}});
  return {ring, d, named(ring, roberts_defs(m))};
}

std::vector<NamedPoly> roberts_without_phi4(unsigned m) {
  Example ex = roberts(m);
  std::vector<NamedPoly> out;
  for (auto& g : ex.algebra)
    if (g.name != "phi4") out.push_back(std::move(g));
  return out;
}

Example f6() {
  RingPtr ring = Ring::make({"x", "y", "s", "t", "u", "v"});
  Derivation d =
      derivation(ring, {{"s", "x^3"}, {"t", "y^3*s"}, {"u", "y^3*t"}, {"v", "x^2*y^2"}});
  auto gens = named(ring, {
      {"g1", "x"},
      {"g2", "y"},
      {"g3", "-y^2*s + x*v"},
      {"g4", "-1/2*y^3*s^2 + x^3*t"},
      {"g5", "-x^2*y^3*s*t + 3*x^5*u + y^4*s^2*v - 2*x^3*y*t*v"},
      {"g6", "-3/2*y^6*s^2*t^2 + 4*x^3*y^3*t^3 + 3*y^6*s^3*u - 9*x^3*y^3*s*t*u + 9/2*x^6*u^2"},
  });
  return {ring, d, gens};
}

Example new7(unsigned a, unsigned b) {
  if (a < 1 || b < 1) throw std::invalid_argument("new7: a and b must be at least 1");
  RingPtr ring = Ring::make(kSeven);
  const std::string ea = str(a);
  Derivation d = derivation(ring, {{"y1", "x1^" + ea},
                                   {"y2", "x2^" + ea},
                                   {"y3", "x3^" + ea},
                                   {"v", "(y1*y2*y3)^" + str(b)}});
  auto gens = named(ring, {
      {"x1", "x1"},
      {"x2", "x2"},
      {"x3", "x3"},
      {"p12", "x1^" + ea + "*y2 - x2^" + ea + "*y1"},
      {"p13", "x1^" + ea + "*y3 - x3^" + ea + "*y1"},
      {"p23", "x2^" + ea + "*y3 - x3^" + ea + "*y2"},
  });
  Poly v = Poly::variable(ring, "v");
  for (int i = 1; i <= 3; ++i) {
    std::string yi = "y" + std::to_string(i);
    LocalSliceData sd = local_slice_data(d, Poly::variable(ring, yi));
    gens.push_back({"h" + std::to_string(i), slice_substitute(d, sd, v).numerator});
  }
  return {ring, d, gens};
}

namespace {

std::vector<WeightVector> torus_weights(unsigned a, unsigned b) {
  const std::int64_t A = a, AB = std::int64_t(a) * b;
  return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {A, 0, 0}, {0, A, 0}, {0, 0, A}, {AB, AB, AB}};
}

}  // namespace

WeightSystem new7_torus(const RingPtr& ring, unsigned a, unsigned b) {
  return WeightSystem(ring, torus_weights(a, b), false);
}

WeightSystem new7_subtorus(const RingPtr& ring, unsigned a, unsigned b) {
  return WeightSystem(ring, torus_weights(a, b), true);
}

PermAction new7_s3(const RingPtr& ring) {
  return PermAction(ring, {{"x1", "x2", "x3"}, {"y1", "y2", "y3"}});
}

std::vector<NamedPoly> new7_h_invariants(const RingPtr& ring, unsigned a) {
  const std::string ea = str(a);
  return named(ring, {
      {"m1", "x1*x2*x3"},
      {"m2", "x1^" + ea + "*y2*y3"},
      {"m3", "x2^" + ea + "*y1*y3"},
      {"m4", "x3^" + ea + "*y1*y2"},
      {"m5", "x1^" + ea + "*x2^" + ea + "*y3"},
      {"m6", "x1^" + ea + "*x3^" + ea + "*y2"},
      {"m7", "x2^" + ea + "*x3^" + ea + "*y1"},
      {"m8", "y1*y2*y3"},
      {"m9", "v"},
  });
}

std::map<std::string, Poly> new7_dictionary(const RingPtr& ring, unsigned a, unsigned b) {
  const std::string ea = str(a);
  Integer six_b = 1;
  for (unsigned k = 0; k < b; ++k) six_b *= 6;
  std::map<std::string, Poly> out;
  out.emplace("x", parse_poly(ring, "x1*x2*x3"));
  out.emplace("y", parse_poly(ring, "(x1^" + ea + "*x2^" + ea + "*y3 + x1^" + ea + "*x3^" + ea +
                                        "*y2 + x2^" + ea + "*x3^" + ea + "*y1)/3"));
  out.emplace("z", parse_poly(ring, "(x1^" + ea + "*y2*y3 + x2^" + ea + "*y1*y3 + x3^" + ea +
                                        "*y1*y2)/6"));
  out.emplace("u", parse_poly(ring, "y1*y2*y3/6"));
  out.emplace("w", parse_poly(ring, "v/" + six_b.get_str()));
  return out;
}

Derivation maubach(unsigned a, unsigned b) {
  RingPtr ring = Ring::make({"x", "y", "z", "u", "w"});
  return derivation(ring, {{"y", "x^" + str(a)}, {"z", "y"}, {"u", "z"}, {"w", "u^" + str(b)}});
}

Derivation maubach_prime(unsigned b) {
  RingPtr ring = Ring::make({"y", "z", "u", "w"});
  return derivation(ring, {{"z", "y"}, {"u", "z"}, {"w", "u^" + str(b)}});
}

}  // namespace lnd::catalog
