#include "regram/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace regram {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, long long& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

constexpr long long kMaxOrder = 68719476735LL;  // 2^36 - 1, graph6 limit

}  // namespace

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.order() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  long long declared = -1;
  long long max_vertex = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      nl = text.size();
    }
    ++line_no;
    const auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) {
      continue;
    }
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.starts_with("n=")) {
        if (declared >= 0) {
          throw ParseError("repeated '# n=' header", line_no);
        }
        if (!parse_int(trim(body.substr(2)), declared) || declared < 0 || declared > kMaxOrder) {
          throw ParseError("bad vertex count in header", line_no);
        }
      }
      continue;
    }
    const auto tokens = split_ws(line);
    long long a = 0;
    long long b = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      throw ParseError("expected 'u v'", line_no);
    }
    if (a < 0 || b < 0 || a > kMaxOrder || b > kMaxOrder) {
      throw ParseError("vertex index out of range", line_no);
    }
    if (a == b) {
      throw ParseError("self-loop", line_no);
    }
    max_vertex = std::max({max_vertex, a, b});
    edges.push_back(make_edge(static_cast<int>(a), static_cast<int>(b)));
  }
  const long long n = declared >= 0 ? declared : max_vertex + 1;
  if (max_vertex >= n) {
    throw ParseError("edge endpoint exceeds declared vertex count");
  }
  Graph g(static_cast<int>(n));
  for (const Edge& e : edges) {
    if (g.has_edge(e.u, e.v)) {
      throw ParseError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    g.add_edge(e);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) {
    out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  auto s = trim(text);
  if (s.starts_with(">>graph6<<")) {
    s.remove_prefix(10);
  }
  if (s.empty()) {
    throw ParseError("empty graph6 string");
  }
  for (char c : s) {
    if (c < 63 || c > 126) {
      throw ParseError("graph6 byte outside 63..126");
    }
  }
  std::size_t pos = 0;
  auto take6 = [&](int count) {
    long long value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) {
        throw ParseError("truncated graph6 order field");
      }
      value = (value << 6) | (s[pos++] - 63);
    }
    return value;
  };
  long long n = 0;
  if (s[0] != 126) {
    n = take6(1);
  } else if (s.size() > 1 && s[1] != 126) {
    pos = 1;
    n = take6(3);
  } else {
    pos = 2;
    n = take6(6);
  }
  if (n > (1LL << 31) - 1) {
    throw ParseError("graph6 order too large for this library");
  }
  const long long pairs = n * (n - 1) / 2;
  const long long need = (pairs + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != need) {
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                     std::to_string(need));
  }
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        g.add_edge(i, j);
      }
    }
  }
  if (k % 6 != 0) {
    const int byte = s[pos + k / 6] - 63;
    if ((byte & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("graph6 padding bits are not zero");
    }
  }
  return g;
}

std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
}

GraphFormat sniff_format(std::string_view text) {
  const auto s = trim(text);
  if (s.empty() || s.front() == '#' || (s.front() >= '0' && s.front() <= '9')) {
    return GraphFormat::edge_list;
  }
  return GraphFormat::graph6;
}

Graph parse_graph(std::string_view text) {
  return sniff_format(text) == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failed for " + path.string());
  }
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

}  // namespace regram
