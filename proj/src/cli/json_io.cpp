#include "json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "pya/errors.hpp"

namespace pya::cli {

namespace {

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

long long require_integer(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return v.get<long long>();
}

int optional_mult(const json& obj) {
  if (!obj.contains("mult")) return 1;
  const long long m = require_integer(obj, "mult");
  if (m < 1 || m > 1000000) throw ParseError("\"mult\" must be a positive integer");
  return static_cast<int>(m);
}

Duality parse_duality(const std::string& s) {
  if (s == "orthogonal") return Duality::orthogonal;
  if (s == "symplectic") return Duality::symplectic;
  if (s == "none") return Duality::none;
  throw ParseError("unknown selfdual kind \"" + s + "\"");
}

std::string duality_name(Duality d) {
  switch (d) {
    case Duality::orthogonal: return "orthogonal";
    case Duality::symplectic: return "symplectic";
    case Duality::none: break;
  }
  return "none";
}

template <class Fn>
auto schema(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

const RhoClass& ClassTable::get(const std::string& label) const {
  auto it = by_label.find(label);
  if (it == by_label.end()) throw ParseError("unknown class \"" + label + "\"");
  return it->second;
}

json ClassTable::to_json() const {
  json arr = json::array();
  for (const auto& [label, rho] : by_label) {
    json c = {{"label", label}, {"dim", rho.dim}, {"selfdual", duality_name(rho.selfdual)}};
    if (!rho.is_selfdual()) c["dual_label"] = rho.dual_label;
    arr.push_back(std::move(c));
  }
  return arr;
}

ClassTable parse_classes(const json& doc) {
  return schema([&] {
    ClassTable table;
    if (!doc.is_object() || !doc.contains("rho_classes")) {
      table.by_label.emplace("1", RhoClass::trivial());
      return table;
    }
    const json& arr = doc.at("rho_classes");
    if (!arr.is_array()) throw ParseError("\"rho_classes\" must be an array");
    for (const json& c : arr) {
      RhoClass rho;
      rho.label = require_string(c, "label");
      const long long dim = c.contains("dim") ? require_integer(c, "dim") : 1;
      if (dim < 1 || dim > 1000000) throw ParseError("class \"" + rho.label + "\" needs a positive dim");
      rho.dim = static_cast<int>(dim);
      rho.selfdual = parse_duality(require_string(c, "selfdual"));
      if (rho.is_selfdual()) {
        if (c.contains("dual_label") && require_string(c, "dual_label") != rho.label) {
          throw ParseError("selfdual class \"" + rho.label + "\" must be its own dual");
        }
        rho.dual_label = rho.label;
      } else {
        rho.dual_label = require_string(c, "dual_label");
      }
      try {
        check_rho_class(rho);
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
      if (!table.by_label.emplace(rho.label, rho).second) throw ParseError("duplicate class \"" + rho.label + "\"");
    }
    // Complete and cross-check non-selfdual pairs.
    for (auto [label, rho] : ClassTable(table).by_label) {
      if (rho.is_selfdual()) continue;
      auto [it, inserted] = table.by_label.emplace(rho.dual_label, rho.dual());
      if (!inserted && !(it->second == rho.dual())) {
        throw ParseError("classes \"" + label + "\" and \"" + rho.dual_label + "\" are not declared as a dual pair");
      }
    }
    return table;
  });
}

void register_classes(ClassTable& table, const MultiSegment& m) {
  for (const auto& [s, k] : m) table.by_label.emplace(s.rho.label, s.rho);
}

GroupType parse_group(const json& j) {
  return schema([&] {
    const std::string type = require_string(j, "type");
    const long long n = require_integer(j, "n");
    if (n < 0 || n > 100000) throw ParseError("group rank out of range");
    GroupType g;
    g.n = static_cast<int>(n);
    if (type == "GL") {
      g.kind = GroupKind::GL;
    } else if (type == "SO_odd") {
      g.kind = GroupKind::SO_odd;
    } else if (type == "Sp") {
      g.kind = GroupKind::Sp;
    } else if (type == "O_even") {
      g.kind = GroupKind::O_even;
    } else {
      throw ParseError("unknown group type \"" + type + "\"");
    }
    return g;
  });
}

json group_to_json(const GroupType& g) { return {{"type", to_string(g.kind)}, {"n", g.n}}; }

HalfInt parse_halfint(const json& j) {
  if (j.is_number_integer()) return HalfInt::from_twice(2 * j.get<std::int64_t>());
  if (j.is_string()) return HalfInt::parse(j.get<std::string>());
  throw ParseError("half-integer must be a string \"k\" or \"k/2\"");
}

json segment_to_json(const Segment& s) {
  return {{"rho", s.rho.label}, {"b", s.b.to_string()}, {"e", s.e.to_string()}};
}

json segments_to_json(const MultiSegment& m) {
  json arr = json::array();
  for (const auto& [s, k] : m) {
    json j = segment_to_json(s);
    j["mult"] = k;
    arr.push_back(std::move(j));
  }
  return arr;
}

MultiSegment parse_segments(const json& arr, const ClassTable& classes) {
  return schema([&] {
    if (!arr.is_array()) throw ParseError("\"segments\" must be an array");
    MultiSegment m;
    for (const json& s : arr) {
      const RhoClass& rho = classes.get(require_string(s, "rho"));
      const HalfInt b = parse_halfint(require(s, "b"));
      const HalfInt e = parse_halfint(require(s, "e"));
      try {
        m.add(Segment(rho, b, e), optional_mult(s));
      } catch (const DomainError& err) {
        throw ParseError(err.what());
      }
    }
    return m;
  });
}

ParameterDocument parse_parameter_document(const json& doc) {
  return schema([&] {
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    ParameterDocument out;
    out.classes = parse_classes(doc);
    out.param.group = parse_group(require(doc, "group"));
    out.param.mseg = parse_segments(require(doc, "segments"), out.classes);
    return out;
  });
}

json parameter_document(const LParameter& p, const ClassTable& classes) {
  ClassTable table = classes;
  register_classes(table, p.mseg);
  return {{"group", group_to_json(p.group)}, {"rho_classes", table.to_json()}, {"segments", segments_to_json(p.mseg)}};
}

LambdaDocument parse_lambda_document(const json& doc) {
  return schema([&] {
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    LambdaDocument out;
    out.classes = parse_classes(doc);
    out.group = parse_group(require(doc, "group"));
    if (doc.contains("support")) {
      const json& arr = doc.at("support");
      if (!arr.is_array()) throw ParseError("\"support\" must be an array");
      for (const json& x : arr) {
        out.lambda.add({out.classes.get(require_string(x, "rho")), parse_halfint(require(x, "a"))}, optional_mult(x));
      }
    } else {
      out.lambda = infinitesimal(parse_segments(require(doc, "segments"), out.classes));
    }
    return out;
  });
}

json lambda_to_json(const InfinitesimalParameter& lambda) {
  json arr = json::array();
  for (const auto& [x, k] : lambda) arr.push_back({{"rho", x.rho.label}, {"a", x.a.to_string()}, {"mult", k}});
  return arr;
}

json rank_matrix_to_json(const RankMatrix& r) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < r.size(); ++j) row.push_back(r.entries(i, j));
    rows.push_back(std::move(row));
  }
  return {{"e_min", r.e_min.to_string()}, {"e_max", r.e_max.to_string()}, {"entries", std::move(rows)}};
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    buffer << in.rdbuf();
  }
  return parse_json_text(buffer.str());
}

}  // namespace pya::cli
