#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "fixtures.hpp"
#include "json_io.hpp"
#include "pya/cli.hpp"
#include "pya/duality.hpp"
#include "pya/enumerate.hpp"
#include "pya/errors.hpp"
#include "pya/field.hpp"
#include "pya/vogan_oracle.hpp"

namespace pya::cli {

namespace {

struct Options {
  std::string file;
  std::string file_b;
  bool trace = false;
  bool poset = false;
  bool dot = false;
  int trials = 5;
  std::uint64_t seed = 0;
  std::uint64_t split_seed = 0;
  std::uint64_t prime = kDefaultPrime;
  int cap = 12;
  bool force = false;
  bool inject_mismatch = false;
  std::string filter;
  std::string fixtures;
};

class Validation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_valid(const LParameter& p) {
  const auto violations = validate(p);
  if (violations.empty()) return;
  std::string message = "invalid parameter:";
  for (const auto& v : violations) message += "\n  " + to_string(v.kind) + ": " + v.detail;
  throw Validation(message);
}

bool use_color(bool out_is_tty) {
  const char* env = std::getenv("PYA_COLOR");
  if (env != nullptr && std::string(env) == "0") return false;
  if (env != nullptr && std::string(env) == "1") return true;
  return out_is_tty;
}

json trace_to_json(const std::vector<LineTrace>& trace) {
  json lines = json::array();
  for (const auto& lt : trace) {
    json steps = json::array();
    for (const auto& step : lt.steps) {
      json chain = json::array();
      for (const auto& s : step.chain) chain.push_back(segment_to_json(s));
      steps.push_back({{"d", step.d.to_string()}, {"r", step.r}, {"chain", chain},
                       {"remainder", segments_to_json(step.remainder)}});
    }
    lines.push_back({{"line", lt.line.to_string()}, {"algorithm", lt.algorithm}, {"steps", steps}});
  }
  return lines;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const ParameterDocument doc = parse_parameter_document(read_json_file(o.file));
  require_valid(doc.param);
  std::vector<LineTrace> trace;
  const LParameter d = pyasetskii_dual(doc.param, o.trace ? &trace : nullptr);
  json result = parameter_document(d, doc.classes);
  if (o.trace) result["trace"] = trace_to_json(trace);
  out << result.dump(2) << '\n';
  return kOk;
}

int cmd_rank(const Options& o, std::ostream& out) {
  const ParameterDocument doc = parse_parameter_document(read_json_file(o.file));
  require_valid(doc.param);
  json lines = json::array();
  for (const auto& [key, r] : rank_matrices(doc.param.mseg)) {
    lines.push_back({{"line", key.to_string()}, {"rank_matrix", rank_matrix_to_json(r)}});
  }
  out << json{{"group", group_to_json(doc.param.group)}, {"lines", lines}}.dump(2) << '\n';
  return kOk;
}

int cmd_le(const Options& o, std::ostream& out) {
  const ParameterDocument a = parse_parameter_document(read_json_file(o.file));
  const ParameterDocument b = parse_parameter_document(read_json_file(o.file_b));
  require_valid(a.param);
  require_valid(b.param);
  out << json{{"le", closure_leq(a.param, b.param)}, {"ge", closure_leq(b.param, a.param)}}.dump(2) << '\n';
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const LambdaDocument doc = parse_lambda_document(read_json_file(o.file));
  const std::vector<LParameter> params = enum_classical(doc.lambda, doc.group, {o.cap, o.force});
  ClassTable classes = doc.classes;
  for (const auto& p : params) register_classes(classes, p.mseg);

  if (!o.poset && !o.dot) {
    json list = json::array();
    for (const auto& p : params) list.push_back(segments_to_json(p.mseg));
    out << json{{"group", group_to_json(doc.group)},
                {"rho_classes", classes.to_json()},
                {"infinitesimal", lambda_to_json(doc.lambda)},
                {"count", params.size()},
                {"parameters", list}}
               .dump(2)
        << '\n';
    return kOk;
  }

  const ParameterPoset poset = build_poset(params);
  if (o.dot) {
    out << dot_export(poset);
    return kOk;
  }
  json nodes = json::array();
  for (const auto& p : poset.nodes) nodes.push_back(segments_to_json(p.mseg));
  json hasse = json::array();
  for (const auto& [lo, hi] : poset.hasse) hasse.push_back({lo, hi});
  auto index_or_null = [](const std::optional<std::size_t>& i) { return i ? json(*i) : json(nullptr); };
  out << json{{"group", group_to_json(doc.group)},
              {"rho_classes", classes.to_json()},
              {"nodes", nodes},
              {"hasse", hasse},
              {"minimum", index_or_null(poset.minimum())},
              {"maximum", index_or_null(poset.maximum())}}
             .dump(2)
      << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ParameterDocument doc = parse_parameter_document(read_json_file(o.file));
  require_valid(doc.param);
  const PrimeScope scope(o.prime);
  VerifyReport report = verify_dual(doc.param, {o.trials, o.seed, o.split_seed});

  if (o.inject_mismatch && !report.lines.empty()) {
    // Negative control: corrupt the expected matrix of the first line.
    LineVerification& line = report.lines.front();
    if (line.algorithm.size() > 0) {
      line.algorithm.entries(0, 0) += 1;
    } else {
      line.algorithm = RankMatrix::zero(line.algorithm.e_min - 1, line.algorithm.e_max);
      line.algorithm.entries(0, 0) = 1;
    }
    line.match = line.structure_ok && line.routes_agree && line.algorithm == line.oracle;
  }

  json lines = json::array();
  for (const auto& l : report.lines) {
    lines.push_back({{"line", l.line.to_string()},
                     {"mode", l.mode},
                     {"algorithm_rank_matrix", rank_matrix_to_json(l.algorithm)},
                     {"oracle_rank_matrix", rank_matrix_to_json(l.oracle)},
                     {"match", l.match},
                     {"routes_agree", l.routes_agree},
                     {"structure_ok", l.structure_ok},
                     {"trials", o.trials},
                     {"seed", o.seed},
                     {"split_seed", o.split_seed},
                     {"prime", o.prime}});
  }
  out << json{{"lines", lines}, {"all_match", report.all_match()}}.dump(2) << '\n';
  return report.all_match() ? kOk : kMismatch;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err, bool color) {
  const json corpus = o.fixtures.empty() ? parse_json_text(builtin_fixture_text()) : read_json_file(o.fixtures);
  std::vector<Fixture> fixtures = load_fixtures(corpus);
  if (!o.filter.empty()) {
    std::erase_if(fixtures, [&](const Fixture& f) {
      return f.name != o.filter && f.kind != o.filter && std::find(f.tags.begin(), f.tags.end(), o.filter) == f.tags.end();
    });
    if (fixtures.empty()) throw ParseError("no fixture matches filter \"" + o.filter + "\"");
  }

  const std::string green = color ? "\033[32m" : "";
  const std::string red = color ? "\033[31m" : "";
  const std::string reset = color ? "\033[0m" : "";
  int failed = 0;
  for (const auto& f : fixtures) {
    std::string problem;
    try {
      problem = f.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      out << green << "PASS" << reset << "  " << f.name << '\n';
    } else {
      ++failed;
      out << red << "FAIL" << reset << "  " << f.name << ": " << problem << '\n';
    }
  }
  const auto total = static_cast<int>(fixtures.size());
  out << (total - failed) << "/" << total << " fixtures passed\n";
  if (failed > 0) err << failed << " fixture(s) failed\n";
  return failed == 0 ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_tty) {
  CLI::App app{"Pyasetskii involution on multi-segments: dual, rank matrices, enumeration, oracle verification"};
  app.name("pya");
  app.require_subcommand(1, 1);
  Options o;

  auto* dual = app.add_subcommand("dual", "Dual parameter of a JSON parameter document");
  dual->add_option("file", o.file, "Parameter document, - for stdin")->required();
  dual->add_flag("--trace", o.trace, "Append the extraction steps of every line");

  auto* rank = app.add_subcommand("rank", "Rank matrices of every class line");
  rank->add_option("file", o.file, "Parameter document, - for stdin")->required();

  auto* le = app.add_subcommand("le", "Closure order between two parameters: {le: A <= B, ge: A >= B}");
  le->add_option("a", o.file, "First parameter document")->required();
  le->add_option("b", o.file_b, "Second parameter document")->required();

  auto* enumerate = app.add_subcommand("enumerate", "All parameters with a given infinitesimal parameter");
  enumerate->add_option("file", o.file, "Document with group and support (or segments)")->required();
  enumerate->add_flag("--poset", o.poset, "Emit the closure poset as JSON");
  enumerate->add_flag("--dot", o.dot, "Emit the closure poset as Graphviz");
  enumerate->add_option("--cap", o.cap, "Maximum support size per line")->capture_default_str()->check(CLI::PositiveNumber);
  enumerate->add_flag("--force", o.force, "Ignore the support cap");

  auto* verify = app.add_subcommand("verify-dual", "Check the dual against the commutant oracle");
  verify->add_option("file", o.file, "Parameter document, - for stdin")->required();
  verify->add_option("--trials", o.trials, "Random samples per line")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--prime", o.prime, "Prime modulus below 2^63")->capture_default_str();
  verify->add_option("--split-seed", o.split_seed, "Seed choosing the sign split of self-centered pairs")->capture_default_str();
  verify->add_flag("--inject-mismatch", o.inject_mismatch, "Corrupt the expected matrix of the first line (harness check)");

  auto* selftest = app.add_subcommand("selftest", "Replay the built-in fixture corpus");
  selftest->add_option("--filter", o.filter, "Run only fixtures with this tag, kind or name");
  selftest->add_option("--fixtures", o.fixtures, "Replace the built-in corpus by a JSON file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kParse;
  }

  try {
    if (verify->parsed() && !is_prime(o.prime)) throw ParseError("--prime " + std::to_string(o.prime) + " is not prime");
    if (verify->parsed() && o.prime >= (1ULL << 63U)) throw ParseError("--prime must be below 2^63");
    if (dual->parsed()) return cmd_dual(o, out);
    if (rank->parsed()) return cmd_rank(o, out);
    if (le->parsed()) return cmd_le(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_selftest(o, out, err, use_color(out_is_tty));
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const Validation& e) {
    err << e.what() << '\n';
    return kValidation;
  } catch (const DomainError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace pya::cli
