#include "sliceopt/instance.hpp"

#include <json.hpp>

namespace sliceopt {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column, std::string path)
    : std::runtime_error(message), line_(line), column_(column), path_(std::move(path)) {}

namespace {

// Line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    auto [line, col] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, col);
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw ParseError(message, 0, 0, path); }

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

Integer integer_at(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.dump());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path, "expected an integer as a decimal string");
}

Rational rational_at(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational string \"p/q\"");
}

std::vector<Integer> vector_at(const json& j, std::size_t len, const std::string& path) {
  if (!j.is_array() || j.size() != len) fail(path, "expected an array of length " + std::to_string(len));
  std::vector<Integer> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(integer_at(j[i], path + "/" + std::to_string(i)));
  return out;
}

IntMatrix matrix_at(const json& j, std::optional<std::size_t> rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || (rows && j.size() != *rows))
    fail(path, rows ? "expected " + std::to_string(*rows) + " rows" : "expected an array of rows");
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto row = vector_at(j[i], cols, path + "/" + std::to_string(i));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

json to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

json to_json(const Surd& s) { return json{{"p", to_string(s.p)}, {"q", to_string(s.q)}}; }

json to_json(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  return to_json(std::get<Surd>(v));
}

Surd surd_at(const json& j, const std::string& path) {
  return Surd(integer_at(field(j, "p", path), path + "/p"), integer_at(field(j, "q", path), path + "/q"));
}

Value value_at(const json& j, const std::string& path) {
  if (j.is_object()) return surd_at(j, path);
  return rational_at(j, path);
}

}  // namespace

std::string to_string(Objective objective) { return objective == Objective::quadform ? "quadform" : "motzkin"; }

InstanceFile parse_instance(std::string_view text) {
  json j = parse_json(text);
  InstanceFile inst;
  const json& n = field(j, "n", "");
  if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) fail("/n", "expected a positive integer");
  inst.n = n.get<std::size_t>();

  std::string objective = "quadform";
  if (j.contains("objective")) {
    if (!j["objective"].is_string()) fail("/objective", "expected a string");
    objective = j["objective"].get<std::string>();
  }
  if (objective == "quadform") {
    inst.objective = Objective::quadform;
    inst.q = matrix_at(field(j, "Q", ""), inst.n, inst.n, "/Q");
  } else if (objective == "motzkin") {
    inst.objective = Objective::motzkin;
    if (inst.n != 2) fail("/n", "the motzkin objective is bivariate");
  } else {
    fail("/objective", "unknown objective \"" + objective + "\"");
  }

  inst.a = matrix_at(field(j, "A", ""), std::nullopt, inst.n, "/A");
  inst.b = vector_at(field(j, "b", ""), inst.a.rows(), "/b");
  if (j.contains("epsilon")) {
    inst.epsilon = rational_at(j["epsilon"], "/epsilon");
    if (*inst.epsilon <= 0) fail("/epsilon", "epsilon must be positive");
  }
  return inst;
}

std::string serialize_instance(const InstanceFile& inst) {
  json j;
  j["n"] = inst.n;
  j["objective"] = to_string(inst.objective);
  if (inst.q) j["Q"] = to_json(*inst.q);
  j["A"] = to_json(inst.a);
  j["b"] = to_json(inst.b);
  if (inst.epsilon) j["epsilon"] = to_string(*inst.epsilon);
  return j.dump() + "\n";
}

std::string serialize_report(const SolveReport& report, double wall_time_ms) {
  json j;
  j["status"] = report.status == SolveStatus::solved ? "solved" : "infeasible";
  if (report.status == SolveStatus::solved) {
    j["x"] = to_json(report.x);
    j["value"] = to_json(report.value);
  }
  j["epsilon"] = to_string(report.epsilon);
  j["mode"] = report.mode;
  j["exact"] = report.exact;
  j["cells"] = report.cells;
  j["subproblems"] = report.subproblems;
  if (report.surrogate) j["surrogate"] = to_json(*report.surrogate);
  if (wall_time_ms >= 0) j["wall_time_ms"] = wall_time_ms;
  j["notes"] = report.notes;
  return j.dump() + "\n";
}

SolveReport parse_report(std::string_view text) {
  json j = parse_json(text);
  SolveReport r;
  const json& status = field(j, "status", "");
  if (status == "solved") {
    r.status = SolveStatus::solved;
    const json& x = field(j, "x", "");
    if (!x.is_array()) fail("/x", "expected an array");
    r.x = vector_at(x, x.size(), "/x");
    r.value = value_at(field(j, "value", ""), "/value");
  } else if (status == "infeasible") {
    r.status = SolveStatus::infeasible;
  } else {
    fail("/status", "expected \"solved\" or \"infeasible\"");
  }
  if (j.contains("epsilon")) r.epsilon = rational_at(j["epsilon"], "/epsilon");
  if (j.contains("mode") && j["mode"].is_string()) r.mode = j["mode"].get<std::string>();
  if (j.contains("exact") && j["exact"].is_boolean()) r.exact = j["exact"].get<bool>();
  if (j.contains("cells") && j["cells"].is_number_unsigned()) r.cells = j["cells"].get<std::uint64_t>();
  if (j.contains("subproblems") && j["subproblems"].is_number_unsigned())
    r.subproblems = j["subproblems"].get<std::uint64_t>();
  if (j.contains("surrogate")) r.surrogate = surd_at(j["surrogate"], "/surrogate");
  if (j.contains("notes") && j["notes"].is_array())
    for (const auto& note : j["notes"])
      if (note.is_string()) r.notes.push_back(note.get<std::string>());
  return r;
}

}  // namespace sliceopt
