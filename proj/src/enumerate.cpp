#include "pya/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pya/errors.hpp"
#include "pya/rankmat.hpp"

namespace pya {

namespace {

using Support = std::map<HalfInt, int>;  // exponent -> multiplicity

class LineEnumerator {
 public:
  explicit LineEnumerator(RhoClass rho) : rho_(std::move(rho)) {}

  const std::set<MultiSegment>& run(const Support& support) {
    auto it = memo_.find(support);
    if (it != memo_.end()) return it->second;

    std::set<MultiSegment> out;
    if (support.empty()) {
      out.insert(MultiSegment{});
    } else {
      // Every multi-segment has a segment ending at the largest exponent.
      const HalfInt top = support.rbegin()->first;
      Support rest = support;
      for (HalfInt b = top;; b -= 1) {
        auto at = rest.find(b);
        if (at == rest.end()) break;
        if (--at->second == 0) rest.erase(at);
        const Segment s(rho_, b, top);
        for (const MultiSegment& tail : run(rest)) {
          MultiSegment m = tail;
          m.add(s);
          out.insert(std::move(m));
        }
      }
    }
    return memo_.emplace(support, std::move(out)).first->second;
  }

 private:
  RhoClass rho_;
  std::map<Support, std::set<MultiSegment>> memo_;
};

std::vector<MultiSegment> cartesian(const std::vector<std::vector<MultiSegment>>& factors) {
  std::vector<MultiSegment> out{MultiSegment{}};
  for (const auto& choices : factors) {
    std::vector<MultiSegment> next;
    next.reserve(out.size() * choices.size());
    for (const auto& prefix : out) {
      for (const auto& c : choices) next.push_back(prefix + c);
    }
    out = std::move(next);
  }
  return out;
}

std::int64_t lambda_dimension(const InfinitesimalParameter& lambda) {
  std::int64_t d = 0;
  for (const auto& [x, k] : lambda) d += static_cast<std::int64_t>(x.rho.dim) * k;
  return d;
}

}  // namespace

std::map<LineKey, InfinitesimalParameter, LineKeyOrder> decompose_lines(const InfinitesimalParameter& lambda) {
  std::map<LineKey, InfinitesimalParameter, LineKeyOrder> out;
  for (const auto& [x, k] : lambda) out[class_line_key(Segment(x.rho, x.a, x.a))].add(x, k);
  return out;
}

std::vector<MultiSegment> enum_line(const InfinitesimalParameter& support, const EnumOptions& options) {
  if (support.empty()) throw DomainError("enum_line needs a nonempty support");
  const Exponent& first = support.begin()->first;
  const LineKey key = class_line_key(Segment(first.rho, first.a, first.a));
  Support exps;
  for (const auto& [x, k] : support) {
    if (!(class_line_key(Segment(x.rho, x.a, x.a)) == key)) {
      throw DomainError("enum_line support mixes lines: " + support.to_string());
    }
    exps[x.a] += k;
  }
  if (!options.force && support.size() > options.cap) {
    throw DomainError("support of size " + std::to_string(support.size()) + " exceeds the cap " +
                      std::to_string(options.cap) + " (use force to override)");
  }
  LineEnumerator e(first.rho);
  const auto& found = e.run(exps);
  return {found.begin(), found.end()};
}

std::vector<LParameter> enum_classical(const InfinitesimalParameter& lambda, const GroupType& group,
                                       const EnumOptions& options) {
  if (lambda_dimension(lambda) != group.std_dim()) {
    throw DomainError("infinitesimal parameter of dimension " + std::to_string(lambda_dimension(lambda)) +
                      " does not fit " + group.name());
  }
  std::vector<std::vector<MultiSegment>> factors;

  if (!group.is_classical()) {
    for (const auto& [key, part] : decompose_lines(lambda)) factors.push_back(enum_line(part, options));
  } else {
    if (!(dual(lambda) == lambda)) throw DomainError("infinitesimal parameter " + lambda.to_string() + " is not selfdual");
    for (const auto& [key, part] : decompose_lines(lambda)) {
      const RhoClass& rho = key.rho;
      if (!rho.is_selfdual()) {
        // Paired lines are determined by their half on the smaller label.
        if (rho.label > rho.dual_label) continue;
        std::vector<MultiSegment> choices;
        for (const auto& half : enum_line(part, options)) choices.push_back(half + dual(half));
        factors.push_back(std::move(choices));
        continue;
      }
      const bool bad = line_parity(line_key(Segment(rho, key.delta, key.delta)), group) == Parity::bad;
      std::vector<MultiSegment> choices;
      for (auto& m : enum_line(part, options)) {
        if (!is_selfdual(m)) continue;
        if (bad && !is_valid_bad_line(m)) continue;
        choices.push_back(std::move(m));
      }
      factors.push_back(std::move(choices));
    }
  }

  std::vector<MultiSegment> products = cartesian(factors);
  std::sort(products.begin(), products.end());
  std::vector<LParameter> out;
  out.reserve(products.size());
  for (auto& m : products) {
    LParameter p{group, std::move(m)};
    if (!validate(p).empty()) throw std::logic_error("enumerated an invalid parameter " + p.mseg.to_string());
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<std::size_t> ParameterPoset::minimum() const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (std::all_of(leq[i].begin(), leq[i].end(), [](bool b) { return b; })) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> ParameterPoset::maximum() const {
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    bool top = true;
    for (std::size_t i = 0; i < nodes.size() && top; ++i) top = leq[i][j];
    if (top) return j;
  }
  return std::nullopt;
}

std::optional<std::size_t> ParameterPoset::find(const LParameter& p) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == p) return i;
  }
  return std::nullopt;
}

ParameterPoset build_poset(std::vector<LParameter> params) {
  ParameterPoset poset;
  const std::size_t n = params.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (!(params[i].group == params[0].group) || !(infinitesimal(params[i].mseg) == infinitesimal(params[0].mseg))) {
      throw DomainError("poset nodes must share group and infinitesimal parameter");
    }
  }
  poset.nodes = std::move(params);
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) poset.leq[i][j] = closure_leq(poset.nodes[i], poset.nodes[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !poset.leq[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (k != i && k != j && poset.leq[i][k] && poset.leq[k][j]) covered = false;
      }
      if (covered) poset.hasse.emplace_back(i, j);
    }
  }
  return poset;
}

std::vector<std::size_t> induced_map(const ParameterPoset& poset, const std::function<LParameter(const LParameter&)>& fn) {
  std::vector<std::size_t> out;
  for (const auto& p : poset.nodes) {
    const auto image = poset.find(fn(p));
    if (!image) throw std::logic_error("image of " + p.mseg.to_string() + " is not a node of the poset");
    out.push_back(*image);
  }
  return out;
}

bool check_dominating_involutions(const ParameterPoset& poset, const std::vector<std::size_t>& iota1,
                                  const std::vector<std::size_t>& iota2) {
  const std::size_t n = poset.nodes.size();
  for (const auto* iota : {&iota1, &iota2}) {
    if (iota->size() != n) throw DomainError("map size does not match the poset");
    for (std::size_t s = 0; s < n; ++s) {
      if ((*iota)[s] >= n || (*iota)[(*iota)[s]] != s) throw DomainError("map is not an involution of the node set");
    }
  }
  bool dominates = true;
  for (std::size_t s = 0; s < n && dominates; ++s) dominates = poset.leq[iota2[s]][iota1[s]];
  const bool equal = iota1 == iota2;
  if (dominates && !equal) throw std::logic_error("two distinct involutions with iota1 >= iota2 everywhere");
  return equal;
}

std::string dot_export(const ParameterPoset& poset) {
  std::string out = "digraph poset {\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + poset.nodes[i].mseg.to_string() + "\"];\n";
  }
  for (const auto& [a, b] : poset.hasse) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace pya
