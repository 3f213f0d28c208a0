#pragma once

// JSON files for forms and point schemes.
//
//   form:   {"surface": "p1xp1"|"f1", "side": "S"|"T", "degree": [a, b],
//            "terms": [{"exp": [e0, e1, e2, e3], "num": "<int>", "den": "<int>"}, ...]}
//   scheme: {"surface": ..., "points": [{"cox": [c0, c1, c2, c3]}, ...]}
//
// Complex terms and coordinates use {"re": x, "im": y} in place of num/den.
// A file is exact when every entry is rational and floating when every entry
// is complex; mixing the two is an error.

#include "apolar/apolarity.hpp"
#include "apolar/multigraded.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace apolar {

/// Syntax or content error, located in the input text (1-based).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

using AnyForm = std::variant<ExactForm, FloatForm>;
using AnyScheme = std::variant<ExactScheme, FloatScheme>;

AnyForm parse_form(const std::string& text);
/// With `expected` set, a scheme on another surface is reported at its
/// "surface" entry.
AnyScheme parse_scheme(const std::string& text, std::optional<SurfaceRing> expected = std::nullopt);

SurfaceRing ring_of(const AnyForm& f);
SurfaceRing ring_of(const AnyScheme& s);

nlohmann::ordered_json to_json(const ExactForm& f);
nlohmann::ordered_json to_json(const FloatForm& f);
nlohmann::ordered_json to_json(const ExactScheme& s);
nlohmann::ordered_json to_json(const FloatScheme& s);
nlohmann::ordered_json to_json(const Complex& z);
nlohmann::ordered_json to_json(const CoxPoint<Complex>& p);

/// Whole file as a string; throws std::runtime_error when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace apolar
