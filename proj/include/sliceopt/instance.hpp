#pragma once

// JSON instance and report files. Integers are decimal strings, rationals
// "p/q" strings and surds {"p": ..., "q": ...}, so every value round-trips
// exactly.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sliceopt/driver.hpp"
#include "sliceopt/linalg.hpp"
#include "sliceopt/polytope.hpp"

namespace sliceopt {

enum class Objective { quadform, motzkin };

struct InstanceFile {
  std::size_t n = 0;
  Objective objective = Objective::quadform;
  std::optional<IntMatrix> q;  // present iff objective is quadform; may be non-symmetric
  IntMatrix a;
  std::vector<Integer> b;
  std::optional<Rational> epsilon;

  Polytope polytope() const { return Polytope(a, b); }
  bool operator==(const InstanceFile&) const = default;
};

/// Malformed input. line/column are 1-based and 0 when the error is not tied
/// to a text position (then `path` names the offending field).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, std::string path = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& inst);

std::string to_string(Objective objective);

/// wall_time_ms is omitted when negative.
std::string serialize_report(const SolveReport& report, double wall_time_ms = -1);
SolveReport parse_report(std::string_view text);

}  // namespace sliceopt
