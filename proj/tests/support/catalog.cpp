#include "catalog.hpp"

#include <map>

namespace pyatest {

using pya::GroupKind;
using pya::GroupType;
using pya::HalfInt;
using pya::InfinitesimalParameter;

pya::RhoClass triv() { return pya::RhoClass::trivial(); }
pya::RhoClass chi() { return pya::RhoClass::selfdual_class("chi", 1, pya::Duality::orthogonal); }
pya::RhoClass tau() { return pya::RhoClass::selfdual_class("tau", 2, pya::Duality::symplectic); }
pya::RhoClass sigma() { return pya::RhoClass::paired_class("sigma", "sigma_v"); }
pya::RhoClass sigma_dual() { return pya::RhoClass::paired_class("sigma_v", "sigma"); }

pya::Segment seg(const std::string& b, const std::string& e, const pya::RhoClass& rho) {
  return pya::Segment(rho, HalfInt::parse(b), HalfInt::parse(e));
}

pya::MultiSegment mseg(std::initializer_list<std::tuple<const char*, const char*, int>> items, const pya::RhoClass& rho) {
  pya::MultiSegment m;
  for (const auto& [b, e, k] : items) m.add(seg(b, e, rho), k);
  return m;
}

InfinitesimalParameter support(std::initializer_list<std::pair<const char*, int>> items, const pya::RhoClass& rho) {
  InfinitesimalParameter lambda;
  for (const auto& [a, k] : items) lambda.add({rho, HalfInt::parse(a)}, k);
  return lambda;
}

namespace {

using Support = InfinitesimalParameter;

// Selfdual line supports.
const std::map<std::string, std::vector<std::pair<const char*, int>>>& selfdual_supports() {
  static const std::map<std::string, std::vector<std::pair<const char*, int>>> table = {
      {"a", {{"0", 1}}},
      {"b", {{"0", 2}}},
      {"c", {{"1", 1}, {"0", 4}, {"-1", 1}}},
      {"d", {{"1", 1}, {"0", 1}, {"-1", 1}}},
      {"e", {{"1/2", 1}, {"-1/2", 1}}},
      {"f", {{"1/2", 2}, {"-1/2", 2}}},
      {"g", {{"3/2", 1}, {"1/2", 1}, {"-1/2", 1}, {"-3/2", 1}}},
      {"h", {{"1", 2}, {"0", 2}, {"-1", 2}}},
      {"i", {{"2", 1}, {"1", 1}, {"0", 1}, {"-1", 1}, {"-2", 1}}},
      {"j", {{"3/2", 1}, {"1/2", 2}, {"-1/2", 2}, {"-3/2", 1}}},
      {"k", {{"1", 1}, {"0", 2}, {"-1", 1}}},
  };
  return table;
}

// Halves of paired lines, on sigma; the sigma_dual half is the mirror image.
const std::map<std::string, std::vector<std::pair<const char*, int>>>& paired_halves() {
  static const std::map<std::string, std::vector<std::pair<const char*, int>>> table = {
      {"p", {{"0", 1}}},
      {"q", {{"0", 1}, {"1", 1}}},
      {"r", {{"0", 2}, {"1", 1}}},
      {"s", {{"1/2", 1}, {"3/2", 1}}},
  };
  return table;
}

Support line(const std::string& key, const pya::RhoClass& rho) {
  Support out;
  if (rho.is_selfdual()) {
    for (const auto& [a, k] : selfdual_supports().at(key)) out.add({rho, HalfInt::parse(a)}, k);
    return out;
  }
  for (const auto& [a, k] : paired_halves().at(key)) {
    out.add({rho, HalfInt::parse(a)}, k);
    out.add({rho.dual(), -HalfInt::parse(a)}, k);
  }
  return out;
}

struct Combo {
  std::vector<std::pair<pya::RhoClass, std::string>> lines;
};

std::vector<std::pair<std::string, Support>> combos() {
  const std::vector<Combo> list = {
      {{{triv(), "c"}}},
      {{{triv(), "d"}}},
      {{{triv(), "e"}}},
      {{{triv(), "f"}}},
      {{{triv(), "g"}}},
      {{{triv(), "h"}}},
      {{{triv(), "i"}}},
      {{{triv(), "j"}}},
      {{{triv(), "k"}}},
      {{{triv(), "a"}, {triv(), "e"}}},
      {{{triv(), "d"}, {triv(), "f"}}},
      {{{tau(), "b"}}},
      {{{tau(), "e"}}},
      {{{triv(), "b"}, {sigma(), "q"}}},
      {{{triv(), "e"}, {sigma(), "p"}}},
      {{{chi(), "b"}, {triv(), "d"}}},
      {{{chi(), "e"}, {triv(), "e"}}},
      {{{tau(), "b"}, {triv(), "c"}}},
      {{{sigma(), "r"}}},
      {{{sigma(), "s"}, {triv(), "a"}}},
      {{{triv(), "g"}, {chi(), "a"}}},
  };
  std::vector<std::pair<std::string, Support>> out;
  for (const auto& c : list) {
    std::string name;
    Support lambda;
    for (const auto& [rho, key] : c.lines) {
      name += (name.empty() ? "" : "+") + rho.label + "." + key;
      lambda += line(key, rho);
    }
    out.emplace_back(name, lambda);
  }
  return out;
}

int dimension(const Support& lambda) {
  int d = 0;
  for (const auto& [x, k] : lambda) d += x.rho.dim * k;
  return d;
}

}  // namespace

std::vector<CatalogEntry> classical_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& [name, lambda] : combos()) {
    const int n = dimension(lambda);
    if (n % 2 == 1) {
      out.push_back({name + "@Sp", lambda, GroupType{GroupKind::Sp, (n - 1) / 2}});
    } else {
      out.push_back({name + "@SO", lambda, GroupType{GroupKind::SO_odd, n / 2}});
      out.push_back({name + "@O", lambda, GroupType{GroupKind::O_even, n / 2}});
    }
  }
  return out;
}

std::vector<CatalogEntry> gl_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& [name, lambda] : combos()) out.push_back({name + "@GL", lambda, GroupType{GroupKind::GL, dimension(lambda)}});
  return out;
}

}  // namespace pyatest
