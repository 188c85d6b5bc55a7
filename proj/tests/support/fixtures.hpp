#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lnd/catalog.hpp"
#include "lnd/parse.hpp"

namespace lnd::testing {

inline Poly P(const RingPtr& ring, std::string_view text) { return parse_poly(ring, text); }

inline Poly gen(const std::vector<NamedPoly>& gens, const std::string& name) {
  for (const auto& g : gens)
    if (g.name == name) return g.poly;
  throw std::out_of_range("no generator " + name);
}

inline Poly gen(const catalog::Example& ex, const std::string& name) { return gen(ex.algebra, name); }

inline std::vector<Poly> polys(const std::vector<NamedPoly>& gens) {
  std::vector<Poly> out;
  for (const auto& g : gens) out.push_back(g.poly);
  return out;
}

}  // namespace lnd::testing
