#pragma once

// Exhaustive enumeration of the parameters with a fixed infinitesimal
// parameter, their closure poset, and the involution-uniqueness checker.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pya/core.hpp"

namespace pya {

struct EnumOptions {
  int cap = 12;        // maximum support size per line
  bool force = false;  // ignore the cap
};

/// Splits an infinitesimal parameter by single-class line.
std::map<LineKey, InfinitesimalParameter, LineKeyOrder> decompose_lines(const InfinitesimalParameter& lambda);

/// All multi-segments on one class line whose exponents, counted with
/// multiplicity, are exactly `support`. Sorted canonically, no duplicates.
/// DomainError on mixed classes or grids, or when the cap is exceeded.
std::vector<MultiSegment> enum_line(const InfinitesimalParameter& support, const EnumOptions& options = {});

/// All parameters of `group` with infinitesimal parameter lambda: GL takes
/// every product of line enumerations; classical groups keep selfdual
/// lines (with the even-multiplicity rule on bad-parity lines) and build
/// paired lines as m1 + dual(m1). DomainError if lambda is not selfdual
/// (classical) or its dimension does not match the group.
std::vector<LParameter> enum_classical(const InfinitesimalParameter& lambda, const GroupType& group,
                                       const EnumOptions& options = {});

struct ParameterPoset {
  std::vector<LParameter> nodes;
  std::vector<std::vector<bool>> leq;             // leq[i][j]: nodes[i] <=_C nodes[j]
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // covering pairs (smaller, larger)

  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> maximum() const;
  /// Index of a node equal to p, if any.
  std::optional<std::size_t> find(const LParameter& p) const;
};

/// Pairwise closure comparison and transitive reduction. DomainError if the
/// nodes do not share group and infinitesimal parameter.
ParameterPoset build_poset(std::vector<LParameter> params);

/// Node map induced by a function on parameters; std::logic_error if an
/// image is not a node.
std::vector<std::size_t> induced_map(const ParameterPoset& poset, const std::function<LParameter(const LParameter&)>& fn);

/// True iff iota1 == iota2. DomainError when either map is not an
/// involution of the node set. If iota1(s) >= iota2(s) for every s the two
/// maps must coincide; std::logic_error signals a counterexample.
bool check_dominating_involutions(const ParameterPoset& poset, const std::vector<std::size_t>& iota1,
                                  const std::vector<std::size_t>& iota2);

/// Graphviz digraph; nodes labeled by canonical multi-segment strings, Hasse
/// edges from smaller to larger.
std::string dot_export(const ParameterPoset& poset);

}  // namespace pya
