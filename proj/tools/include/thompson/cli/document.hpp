#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "thompson/element.hpp"

namespace thompson::cli {

/// Malformed document text: bad JSON, missing fields, or rational text that
/// is not in canonical form. Validation failures of a well-formed document
/// surface as thompson::ValidationError instead.
class DocumentParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ElementDocument envelope:
//
//   {
//     "N": 2,
//     "breaks": [ {"x": "0", "y": "0"}, {"x": "1/2", "y": "1/4"}, ... ]
//   }
//
// Coordinates are rational strings "m" or "m/n" in lowest terms.

nlohmann::ordered_json to_json(const PLElement& f);
PLElement element_from_json(const nlohmann::ordered_json& doc);

/// Pretty-printed document with a trailing newline.
std::string serialize(const PLElement& f);
PLElement parse_document(const std::string& text);

PLElement read_document_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// One named sub-check of a report, with exact values rendered as strings.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> details;

  Check& detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

/// Machine-readable result of a verification command. The verdict is pass
/// iff every check passed.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Check> checks;

  bool passed() const;
  Check& add(std::string name, bool passed);
  nlohmann::ordered_json to_json() const;
  std::string str() const;
};

}  // namespace thompson::cli
