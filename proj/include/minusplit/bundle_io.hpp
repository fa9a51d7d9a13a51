#pragma once

// JSON bundle files (schema in docs/bundle.schema.json).
//
//   {"variables": 3, "kind": "kernel" | "cokernel",
//    "source_twists": [int], "target_twists": [int],
//    "matrix": [["polynomial", ...], ...]}        rows index the target
//
//   {"left": <bundle>, "right": <bundle>, "gluing": [["polynomial", ...]]}
//
// The gluing is a matrix over x, y from the left degree-0 term to the right
// one. Every error carries a JSON pointer and a 1-based line and column.

#include "minusplit/splitcheck.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace minusplit {

class BundleFileError : public std::runtime_error {
 public:
  BundleFileError(std::string path, std::size_t line, std::size_t column, const std::string& message);

  const std::string& path() const { return path_; }  // JSON pointer, "" for the document
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

FreeComplex parse_bundle(const std::string& text);
WedgeBundle parse_wedge(const std::string& text);

nlohmann::ordered_json bundle_to_json(const FreeComplex& c);
nlohmann::ordered_json wedge_to_json(const WedgeBundle& w);

std::string read_text_file(const std::filesystem::path& path);
FreeComplex load_bundle(const std::filesystem::path& path);
WedgeBundle load_wedge(const std::filesystem::path& path);

}  // namespace minusplit
