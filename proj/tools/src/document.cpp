#include "thompson/cli/document.hpp"

#include <fstream>
#include <sstream>

namespace thompson::cli {

using nlohmann::ordered_json;

ordered_json to_json(const PLElement& f) {
  ordered_json doc;
  doc["N"] = f.base();
  ordered_json breaks = ordered_json::array();
  for (const auto& b : f.breaks()) breaks.push_back({{"x", b.x.str()}, {"y", b.y.str()}});
  doc["breaks"] = std::move(breaks);
  return doc;
}

namespace {

Rational coordinate(const ordered_json& point, const char* key) {
  if (!point.is_object() || !point.contains(key) || !point[key].is_string()) {
    throw DocumentParseError(std::string("breakpoint needs a string field '") + key + "'");
  }
  try {
    return Rational::parse(point[key].get<std::string>());
  } catch (const RationalParseError& e) {
    throw DocumentParseError(e.what());
  }
}

}  // namespace

PLElement element_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw DocumentParseError("element document must be a JSON object");
  if (!doc.contains("N") || !doc["N"].is_number_integer()) throw DocumentParseError("missing integer field 'N'");
  if (!doc.contains("breaks") || !doc["breaks"].is_array()) throw DocumentParseError("missing array field 'breaks'");
  const long base = doc["N"].get<long>();
  if (base < 2 || base > 1'000'000) throw DocumentParseError("'N' must be an integer >= 2");
  std::vector<Breakpoint> breaks;
  for (const auto& point : doc["breaks"]) breaks.push_back({coordinate(point, "x"), coordinate(point, "y")});
  return PLElement::validate(std::move(breaks), static_cast<int>(base));
}

std::string serialize(const PLElement& f) { return to_json(f).dump(2) + "\n"; }

PLElement parse_document(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw DocumentParseError(e.what());
  }
  return element_from_json(doc);
}

PLElement read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

Check& Report::add(std::string name, bool passed) {
  checks.push_back({std::move(name), passed, {}});
  return checks.back();
}

ordered_json Report::to_json() const {
  ordered_json doc;
  doc["command"] = command;
  ordered_json in = ordered_json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  doc["inputs"] = std::move(in);
  doc["verdict"] = passed() ? "pass" : "fail";
  std::size_t failed = 0;
  for (const auto& c : checks) failed += c.passed ? 0 : 1;
  doc["summary"] = {{"checks", checks.size()}, {"failed", failed}};
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    ordered_json details = ordered_json::object();
    for (const auto& [k, v] : c.details) details[k] = v;
    entry["details"] = std::move(details);
    list.push_back(std::move(entry));
  }
  doc["details"] = std::move(list);
  return doc;
}

std::string Report::str() const { return to_json().dump(2) + "\n"; }

}  // namespace thompson::cli
