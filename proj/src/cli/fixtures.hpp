#pragma once

// Self-test corpus: named, tagged checks replayed by `pya selftest`.

#include <functional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace pya::cli {

struct Fixture {
  std::string name;
  std::string kind;
  std::vector<std::string> tags;
  /// Returns an empty string on success, a failure description otherwise.
  std::function<std::string()> check;
};

/// Built-in corpus as JSON text.
const std::string& builtin_fixture_text();

/// Parses and type-checks every fixture up front; ParseError on any
/// malformed entry, so a corrupted corpus fails before anything runs.
std::vector<Fixture> load_fixtures(const json& corpus);

}  // namespace pya::cli
