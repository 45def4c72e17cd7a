#include "fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "pya/duality.hpp"
#include "pya/enumerate.hpp"
#include "pya/errors.hpp"
#include "pya/field.hpp"
#include "pya/vogan_oracle.hpp"

namespace pya::cli {

namespace {

// Shorthand used throughout the corpus: the example of dimension 6 over the
// trivial class, in GL_6 and SO_7.
const char* const kCorpus = R"json([
 {"name": "gl6-count", "kind": "enumerate_count", "tags": ["gl", "example"],
  "group": {"type": "GL", "n": 6},
  "support": [{"rho": "1", "a": "1"}, {"rho": "1", "a": "0", "mult": 4}, {"rho": "1", "a": "-1"}],
  "expected_count": 5},
 {"name": "so7-count", "kind": "enumerate_count", "tags": ["bad-parity", "example"],
  "group": {"type": "SO_odd", "n": 3},
  "support": [{"rho": "1", "a": "1"}, {"rho": "1", "a": "0", "mult": 4}, {"rho": "1", "a": "-1"}],
  "expected_count": 2},
 {"name": "o2-half-count", "kind": "enumerate_count", "tags": ["bad-parity"],
  "group": {"type": "O_even", "n": 1},
  "support": [{"rho": "1", "a": "1/2"}, {"rho": "1", "a": "-1/2"}],
  "expected_count": 1},
 {"name": "gl6-dual-phi0", "kind": "dual", "tags": ["gl", "example"],
  "group": {"type": "GL", "n": 6},
  "segments": [{"rho": "1", "b": "-1", "e": "1"}, {"rho": "1", "b": "0", "e": "0", "mult": 3}],
  "expected": [{"rho": "1", "b": "1", "e": "1"}, {"rho": "1", "b": "0", "e": "0", "mult": 4}, {"rho": "1", "b": "-1", "e": "-1"}]},
 {"name": "gl6-dual-phi1", "kind": "dual", "tags": ["gl", "example"],
  "group": {"type": "GL", "n": 6},
  "segments": [{"rho": "1", "b": "0", "e": "1"}, {"rho": "1", "b": "-1", "e": "0"}, {"rho": "1", "b": "0", "e": "0", "mult": 2}],
  "expected": [{"rho": "1", "b": "0", "e": "1"}, {"rho": "1", "b": "-1", "e": "0"}, {"rho": "1", "b": "0", "e": "0", "mult": 2}]},
 {"name": "gl6-dual-phi2", "kind": "dual", "tags": ["gl", "example"],
  "group": {"type": "GL", "n": 6},
  "segments": [{"rho": "1", "b": "0", "e": "1"}, {"rho": "1", "b": "-1", "e": "-1"}, {"rho": "1", "b": "0", "e": "0", "mult": 3}],
  "expected": [{"rho": "1", "b": "1", "e": "1"}, {"rho": "1", "b": "-1", "e": "0"}, {"rho": "1", "b": "0", "e": "0", "mult": 3}]},
 {"name": "gl6-dual-phi4", "kind": "dual", "tags": ["gl", "involution"],
  "group": {"type": "GL", "n": 6},
  "segments": [{"rho": "1", "b": "1", "e": "1"}, {"rho": "1", "b": "0", "e": "0", "mult": 4}, {"rho": "1", "b": "-1", "e": "-1"}],
  "expected": [{"rho": "1", "b": "-1", "e": "1"}, {"rho": "1", "b": "0", "e": "0", "mult": 3}]},
 {"name": "so7-dual-phi1", "kind": "dual", "tags": ["bad-parity", "example"],
  "group": {"type": "SO_odd", "n": 3},
  "segments": [{"rho": "1", "b": "0", "e": "1"}, {"rho": "1", "b": "-1", "e": "0"}, {"rho": "1", "b": "0", "e": "0", "mult": 2}],
  "expected": [{"rho": "1", "b": "1", "e": "1"}, {"rho": "1", "b": "0", "e": "0", "mult": 4}, {"rho": "1", "b": "-1", "e": "-1"}]},
 {"name": "so7-dual-phi4", "kind": "dual", "tags": ["bad-parity", "example", "involution"],
  "group": {"type": "SO_odd", "n": 3},
  "segments": [{"rho": "1", "b": "1", "e": "1"}, {"rho": "1", "b": "0", "e": "0", "mult": 4}, {"rho": "1", "b": "-1", "e": "-1"}],
  "expected": [{"rho": "1", "b": "0", "e": "1"}, {"rho": "1", "b": "-1", "e": "0"}, {"rho": "1", "b": "0", "e": "0", "mult": 2}]},
 {"name": "so7-rank-phi1", "kind": "rank", "tags": ["rank"],
  "group": {"type": "SO_odd", "n": 3},
  "segments": [{"rho": "1", "b": "0", "e": "1"}, {"rho": "1", "b": "-1", "e": "0"}, {"rho": "1", "b": "0", "e": "0", "mult": 2}],
  "expected": [[1, 0], [0, 1]]},
 {"name": "so7-closed-below-open", "kind": "le", "tags": ["bad-parity", "example"],
  "group": {"type": "SO_odd", "n": 3},
  "a": [{"rho": "1", "b": "1", "e": "1"}, {"rho": "1", "b": "0", "e": "0", "mult": 4}, {"rho": "1", "b": "-1", "e": "-1"}],
  "b": [{"rho": "1", "b": "0", "e": "1"}, {"rho": "1", "b": "-1", "e": "0"}, {"rho": "1", "b": "0", "e": "0", "mult": 2}],
  "le": true, "ge": false},
 {"name": "bad-open-1/2-0", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "1/2", "r": 0},
 {"name": "bad-open-1/2-1", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "1/2", "r": 1},
 {"name": "bad-open-1-0", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "1", "r": 0},
 {"name": "bad-open-1-1", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "1", "r": 1},
 {"name": "bad-open-1-2", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "1", "r": 2},
 {"name": "bad-open-3/2-0", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "3/2", "r": 0},
 {"name": "bad-open-3/2-1", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "3/2", "r": 1},
 {"name": "bad-open-3/2-2", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "3/2", "r": 2},
 {"name": "bad-open-3/2-3", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "3/2", "r": 3},
 {"name": "bad-open-2-0", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "2", "r": 0},
 {"name": "bad-open-2-1", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "2", "r": 1},
 {"name": "bad-open-2-2", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "2", "r": 2},
 {"name": "bad-open-2-3", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "2", "r": 3},
 {"name": "bad-open-2-4", "kind": "bad_open", "tags": ["bad-parity", "bad-open"], "d": "2", "r": 4},
 {"name": "involution-so7", "kind": "involution", "tags": ["involution", "bad-parity"],
  "group": {"type": "SO_odd", "n": 3},
  "support": [{"rho": "1", "a": "1"}, {"rho": "1", "a": "0", "mult": 4}, {"rho": "1", "a": "-1"}]},
 {"name": "involution-gl6", "kind": "involution", "tags": ["involution", "gl"],
  "group": {"type": "GL", "n": 6},
  "support": [{"rho": "1", "a": "1"}, {"rho": "1", "a": "0", "mult": 4}, {"rho": "1", "a": "-1"}]},
 {"name": "involution-sp4-good", "kind": "involution", "tags": ["involution", "good-parity"],
  "group": {"type": "Sp", "n": 2},
  "support": [{"rho": "1", "a": "1"}, {"rho": "1", "a": "0", "mult": 3}, {"rho": "1", "a": "-1"}]},
 {"name": "involution-mixed", "kind": "involution", "tags": ["involution", "nonselfdual", "good-parity"],
  "group": {"type": "SO_odd", "n": 4},
  "rho_classes": [{"label": "1", "dim": 1, "selfdual": "orthogonal"},
                  {"label": "s", "dim": 1, "selfdual": "none", "dual_label": "t"}],
  "support": [{"rho": "1", "a": "1/2", "mult": 2}, {"rho": "1", "a": "-1/2", "mult": 2},
              {"rho": "s", "a": "0"}, {"rho": "s", "a": "1"}, {"rho": "t", "a": "0"}, {"rho": "t", "a": "-1"}]},
 {"name": "verify-so7-phi1", "kind": "verify", "tags": ["oracle", "bad-parity", "example"],
  "group": {"type": "SO_odd", "n": 3},
  "segments": [{"rho": "1", "b": "0", "e": "1"}, {"rho": "1", "b": "-1", "e": "0"}, {"rho": "1", "b": "0", "e": "0", "mult": 2}]},
 {"name": "verify-gl4", "kind": "verify", "tags": ["oracle", "gl"],
  "group": {"type": "GL", "n": 4},
  "segments": [{"rho": "1", "b": "-3/2", "e": "-1/2"}, {"rho": "1", "b": "1/2", "e": "3/2"}]},
 {"name": "verify-bad-open-3/2-2", "kind": "verify_all", "tags": ["oracle", "bad-parity", "bad-open"],
  "group": {"type": "O_even", "n": 3},
  "support": [{"rho": "1", "a": "3/2"}, {"rho": "1", "a": "1/2"}, {"rho": "1", "a": "-1/2"},
              {"rho": "1", "a": "-3/2"}, {"rho": "1", "a": "1/2"}, {"rho": "1", "a": "-1/2"}]}
])json";

std::string describe(const MultiSegment& got, const MultiSegment& want) {
  return "got " + got.to_string() + ", expected " + want.to_string();
}

std::string check_involution_on(const std::vector<LParameter>& params) {
  if (params.empty()) return "";
  const ParameterPoset poset = build_poset(params);
  const auto iota = induced_map(poset, [](const LParameter& p) { return pyasetskii_dual(p); });
  for (std::size_t s = 0; s < iota.size(); ++s) {
    if (iota[iota[s]] != s) return "dual is not involutive at " + poset.nodes[s].mseg.to_string();
    if (!(infinitesimal(poset.nodes[iota[s]].mseg) == infinitesimal(poset.nodes[s].mseg))) {
      return "dual changed the infinitesimal parameter of " + poset.nodes[s].mseg.to_string();
    }
  }
  if (!check_dominating_involutions(poset, iota, iota)) return "involution checker rejected identical maps";
  const auto lo = poset.minimum();
  const auto hi = poset.maximum();
  if (lo && hi && iota[*lo] != *hi) return "dual of the closed orbit is not the open orbit";
  return "";
}

MultiSegment bad_open_m0(HalfInt d, int r) {
  MultiSegment m;
  const RhoClass one = RhoClass::trivial();
  for (int i = 0; i <= r; ++i) {
    m.add(Segment(one, d - i, d - i));
    m.add(Segment(one, HalfInt(i) - d, HalfInt(i) - d));
  }
  return m;
}

Fixture make_fixture(const json& entry) {
  Fixture fx;
  if (!entry.is_object()) throw ParseError("fixture entries must be objects");
  if (!entry.contains("name") || !entry.at("name").is_string()) throw ParseError("fixture without a name");
  fx.name = entry.at("name").get<std::string>();
  if (!entry.contains("kind") || !entry.at("kind").is_string()) throw ParseError("fixture " + fx.name + " has no kind");
  fx.kind = entry.at("kind").get<std::string>();
  if (entry.contains("tags")) {
    if (!entry.at("tags").is_array()) throw ParseError("fixture " + fx.name + ": tags must be an array");
    for (const auto& t : entry.at("tags")) {
      if (!t.is_string()) throw ParseError("fixture " + fx.name + ": tags must be strings");
      fx.tags.push_back(t.get<std::string>());
    }
  }

  try {
    if (fx.kind == "dual") {
      const ParameterDocument doc = parse_parameter_document(entry);
      const MultiSegment want = parse_segments(entry.at("expected"), doc.classes);
      fx.check = [doc, want] {
        const MultiSegment got = pyasetskii_dual(doc.param).mseg;
        return got == want ? std::string() : describe(got, want);
      };
    } else if (fx.kind == "enumerate_count") {
      const LambdaDocument doc = parse_lambda_document(entry);
      const auto want = entry.at("expected_count").get<std::size_t>();
      fx.check = [doc, want] {
        const auto got = enum_classical(doc.lambda, doc.group).size();
        return got == want ? std::string() : "got " + std::to_string(got) + " parameters, expected " + std::to_string(want);
      };
    } else if (fx.kind == "rank") {
      const ParameterDocument doc = parse_parameter_document(entry);
      const auto want = entry.at("expected").get<std::vector<std::vector<long>>>();
      fx.check = [doc, want] {
        const RankMap ranks = rank_matrices(doc.param.mseg);
        if (ranks.size() != 1) return std::string("expected a single line");
        const RankMatrix& r = ranks.begin()->second;
        std::vector<std::vector<long>> got(static_cast<std::size_t>(r.size()));
        for (Eigen::Index i = 0; i < r.size(); ++i) {
          for (Eigen::Index j = 0; j < r.size(); ++j) got[static_cast<std::size_t>(i)].push_back(r.entries(i, j));
        }
        return got == want ? std::string() : "got " + r.to_string();
      };
    } else if (fx.kind == "le") {
      const ClassTable classes = parse_classes(entry);
      const GroupType group = parse_group(entry.at("group"));
      const LParameter a{group, parse_segments(entry.at("a"), classes)};
      const LParameter b{group, parse_segments(entry.at("b"), classes)};
      const bool le = entry.at("le").get<bool>();
      const bool ge = entry.at("ge").get<bool>();
      fx.check = [a, b, le, ge] {
        const bool got_le = closure_leq(a, b);
        const bool got_ge = closure_leq(b, a);
        if (got_le == le && got_ge == ge) return std::string();
        return "got le=" + std::to_string(got_le) + " ge=" + std::to_string(got_ge);
      };
    } else if (fx.kind == "bad_open") {
      const HalfInt d = parse_halfint(entry.at("d"));
      const int r = entry.at("r").get<int>();
      if (d <= 0 || r < 0 || HalfInt(r) > d + d) throw ParseError("fixture " + fx.name + ": need d > 0 and 0 <= r <= 2d");
      fx.check = [d, r] {
        const MultiSegment m0 = bad_open_m0(d, r);
        const RhoClass one = RhoClass::trivial();
        const MultiSegment want{Segment(one, d - r, d), Segment(one, -d, -d + r)};
        const MultiSegment got = az_bad(m0);
        if (!(got == want)) return describe(got, want);
        const GroupType group{d.is_integer() ? GroupKind::SO_odd : GroupKind::O_even, r + 1};
        const ParameterPoset poset = build_poset(enum_classical(infinitesimal(m0), group));
        const auto lo = poset.minimum();
        const auto hi = poset.maximum();
        if (!lo || !(poset.nodes[*lo].mseg == m0)) return std::string("m0 is not the unique minimum");
        if (!hi || !(poset.nodes[*hi].mseg == want)) return std::string("dual is not the unique maximum");
        return std::string();
      };
    } else if (fx.kind == "involution") {
      const LambdaDocument doc = parse_lambda_document(entry);
      fx.check = [doc] { return check_involution_on(enum_classical(doc.lambda, doc.group)); };
    } else if (fx.kind == "verify" || fx.kind == "verify_all") {
      std::function<std::vector<LParameter>()> source;
      if (fx.kind == "verify") {
        const LParameter p = parse_parameter_document(entry).param;
        source = [p] { return std::vector<LParameter>{p}; };
      } else {
        const LambdaDocument doc = parse_lambda_document(entry);
        source = [doc] { return enum_classical(doc.lambda, doc.group); };
      }
      fx.check = [source] {
        const PrimeScope scope(kDefaultPrime);
        for (const LParameter& p : source()) {
          if (!verify_dual(p).all_match()) return "oracle disagrees on " + p.mseg.to_string();
        }
        return std::string();
      };
    } else {
      throw ParseError("fixture " + fx.name + " has unknown kind \"" + fx.kind + "\"");
    }
  } catch (const json::exception& e) {
    throw ParseError("fixture " + fx.name + ": " + e.what());
  } catch (const DomainError& e) {
    throw ParseError("fixture " + fx.name + ": " + e.what());
  }
  return fx;
}

}  // namespace

const std::string& builtin_fixture_text() {
  static const std::string text = kCorpus;
  return text;
}

std::vector<Fixture> load_fixtures(const json& corpus) {
  if (!corpus.is_array()) throw ParseError("fixture corpus must be a JSON array");
  std::vector<Fixture> out;
  for (const auto& entry : corpus) out.push_back(make_fixture(entry));
  return out;
}

}  // namespace pya::cli
