#pragma once

// JSON wire format for parameters, infinitesimal parameters and rank
// matrices. Schema problems raise ParseError; semantic problems are left to
// validate().

#include <map>
#include <string>

#include "json.hpp"
#include "pya/core.hpp"
#include "pya/rankmat.hpp"

namespace pya::cli {

using nlohmann::json;

/// Declared classes by label. Duals of declared non-selfdual classes are
/// added implicitly.
struct ClassTable {
  std::map<std::string, RhoClass> by_label;

  const RhoClass& get(const std::string& label) const;
  json to_json() const;
};

/// Reads "rho_classes" (defaults to the trivial orthogonal class "1").
ClassTable parse_classes(const json& doc);
/// Adds every class used by m that the table lacks.
void register_classes(ClassTable& table, const MultiSegment& m);

GroupType parse_group(const json& j);
json group_to_json(const GroupType& g);

/// Accepts "k", "k/2" or a JSON integer.
HalfInt parse_halfint(const json& j);

json segment_to_json(const Segment& s);
json segments_to_json(const MultiSegment& m);
MultiSegment parse_segments(const json& arr, const ClassTable& classes);

struct ParameterDocument {
  ClassTable classes;
  LParameter param;
};

ParameterDocument parse_parameter_document(const json& doc);
json parameter_document(const LParameter& p, const ClassTable& classes);

struct LambdaDocument {
  ClassTable classes;
  GroupType group;
  InfinitesimalParameter lambda;
};

/// Reads "support": [{"rho", "a", "mult"}]; a parameter document is also
/// accepted, its infinitesimal parameter being used.
LambdaDocument parse_lambda_document(const json& doc);
json lambda_to_json(const InfinitesimalParameter& lambda);

json rank_matrix_to_json(const RankMatrix& r);

/// Parses a file ("-" reads stdin); ParseError on I/O or syntax errors.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);

}  // namespace pya::cli
