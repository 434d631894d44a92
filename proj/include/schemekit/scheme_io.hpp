#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schemekit/configuration.hpp"

namespace schemekit {

/// Malformed scheme text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected, std::string got);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& got() const noexcept { return got_; }

 private:
  std::size_t line_, column_;
  std::string expected_, got_;
};

struct SchemeFile {
  std::string path;                   // empty when parsed from a string
  std::vector<std::string> comments;  // '#' lines without the marker
  std::size_t order = 0;
  std::vector<Color> colors;          // row-major
};

struct ParsedScheme {
  SchemeFile file;
  CoherentConfiguration configuration;
};

/// Grammar: lines whose first non-blank character is '#' are comments; the
/// remaining text is whitespace-separated non-negative integers: n ≥ 1, then
/// n² colors row-major. Colors must be contiguous from 0, and a constant
/// diagonal must be 0. Validation follows immediately (AxiomViolation).
ParsedScheme parse_scheme(std::string_view text, std::string path = {});

/// Reads and parses a file; unreadable files raise std::runtime_error.
ParsedScheme load_scheme(const std::string& path);

std::string write_scheme(const CoherentConfiguration& c,
                         const std::vector<std::string>& comments = {});

}  // namespace schemekit
