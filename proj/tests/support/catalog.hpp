#pragma once

// Shared classes, shorthand builders and the catalog of infinitesimal
// parameters exercised by the property and acceptance suites.

#include <string>
#include <tuple>
#include <vector>

#include "pya/core.hpp"

namespace pyatest {

pya::RhoClass triv();        // trivial, orthogonal, dim 1
pya::RhoClass chi();         // another orthogonal character
pya::RhoClass tau();         // symplectic, dim 2
pya::RhoClass sigma();       // non-selfdual, paired with sigma_dual
pya::RhoClass sigma_dual();

/// Segment from half-integer literals, e.g. seg("-1/2", "3/2").
pya::Segment seg(const std::string& b, const std::string& e, const pya::RhoClass& rho = triv());

/// Multi-segment from (b, e, multiplicity) literals over one class.
pya::MultiSegment mseg(std::initializer_list<std::tuple<const char*, const char*, int>> items,
                       const pya::RhoClass& rho = triv());

/// Infinitesimal parameter from (exponent, multiplicity) literals.
pya::InfinitesimalParameter support(std::initializer_list<std::pair<const char*, int>> items,
                                    const pya::RhoClass& rho = triv());

struct CatalogEntry {
  std::string name;
  pya::InfinitesimalParameter lambda;
  pya::GroupType group;
};

/// Classical catalog: at least thirty (lambda, group) pairs mixing good,
/// bad and non-selfdual lines; at most ten exponents per line.
std::vector<CatalogEntry> classical_catalog();

/// The same infinitesimal parameters viewed in GL_N.
std::vector<CatalogEntry> gl_catalog();

}  // namespace pyatest
