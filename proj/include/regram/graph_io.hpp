#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "regram/graph.hpp"

namespace regram {

enum class GraphFormat { edge_list, graph6 };

/// Malformed graph text. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// File-system failure (missing file, unwritable path).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `# n=<N>` header followed by one `u v` line per edge, u < v, in
/// lexicographic order. Without the header, isolated trailing vertices are
/// lost, so the writer always emits it.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Standard graph6 encoding, one line, no trailing newline.
std::string to_graph6(const Graph& g);
/// Accepts an optional `>>graph6<<` prefix and trailing whitespace.
Graph parse_graph6(std::string_view text);

std::string serialize(const Graph& g, GraphFormat format);

/// graph6 lines start with a byte in 63..126; edge lists start with a digit
/// or `#`. Empty text is an edge list.
GraphFormat sniff_format(std::string_view text);
Graph parse_graph(std::string_view text);

/// Throw IoError when the file cannot be opened, read or written.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

Graph read_graph_file(const std::filesystem::path& path);

}  // namespace regram
