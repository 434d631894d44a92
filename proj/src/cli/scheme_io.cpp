#include "schemekit/scheme_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace schemekit {

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected, std::string got)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": expected " + expected + ", got " + got),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      got_(std::move(got)) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t line, column;
};

}  // namespace

ParsedScheme parse_scheme(std::string_view text, std::string path) {
  SchemeFile file;
  file.path = std::move(path);
  std::vector<Token> tokens;
  std::size_t line_no = 0, end_line = 1, end_col = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] == '#') {
      auto body = line.substr(first + 1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      while (!body.empty() && body.back() == '\r') body.remove_suffix(1);
      file.comments.emplace_back(body);
    } else {
      std::size_t i = 0;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
          ++i;
          continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        tokens.push_back({line.substr(start, i - start), line_no, start + 1});
      }
    }
    end_line = line_no;
    end_col = line.size() + 1;
    if (eol == text.size()) break;
    pos = eol + 1;
  }

  auto number = [](const Token& t, const char* what) {
    std::uint64_t v = 0;
    const auto* b = t.text.data();
    const auto* e = b + t.text.size();
    const auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || v > 0xffffffffULL)
      throw ParseError(t.line, t.column, what, "'" + std::string(t.text) + "'");
    return v;
  };

  if (tokens.empty()) throw ParseError(end_line, end_col, "order n", "end of input");
  const auto n = number(tokens[0], "order n");
  if (n == 0) throw ParseError(tokens[0].line, tokens[0].column, "order n >= 1", "0");
  if (n > 4096) throw ParseError(tokens[0].line, tokens[0].column, "order n <= 4096", std::string(tokens[0].text));
  const std::size_t cells = std::size_t(n * n);
  if (tokens.size() < cells + 1)
    throw ParseError(end_line, end_col, std::to_string(cells) + " colors",
                     std::to_string(tokens.size() - 1) + " colors before end of input");
  if (tokens.size() > cells + 1) {
    const auto& t = tokens[cells + 1];
    throw ParseError(t.line, t.column, "end of input", "'" + std::string(t.text) + "'");
  }

  file.order = n;
  file.colors.reserve(cells);
  for (std::size_t k = 0; k < cells; ++k)
    file.colors.push_back(Color(number(tokens[k + 1], "color (non-negative integer)")));

  const Color top = *std::max_element(file.colors.begin(), file.colors.end());
  std::vector<bool> seen(std::size_t(top) + 1, false);
  for (auto c : file.colors) seen[c] = true;
  for (Color c = 0; c <= top; ++c)
    if (!seen[c])
      throw ParseError(end_line, end_col, "colors contiguous from 0",
                       "color " + std::to_string(c) + " missing (max " + std::to_string(top) + ")");

  const Color d = file.colors[0];
  bool constant = true;
  for (std::size_t x = 0; x < n; ++x) constant = constant && file.colors[x * n + x] == d;
  if (constant && d != 0) {
    const auto& t = tokens[1];
    throw ParseError(t.line, t.column, "diagonal color 0", "constant diagonal " + std::to_string(d));
  }

  auto config = CoherentConfiguration::validate(std::size_t(n), file.colors);
  return {std::move(file), std::move(config)};
}

ParsedScheme load_scheme(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scheme(buf.str(), path);
}

std::string write_scheme(const CoherentConfiguration& c, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& line : comments) out << "# " << line << '\n';
  const std::size_t n = c.order();
  out << n << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out << (y ? " " : "") << c.color(Point(x), Point(y));
    out << '\n';
  }
  return out.str();
}

}  // namespace schemekit
