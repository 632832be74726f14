#include "tough/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "tough/errors.hpp"

namespace tough {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_id(std::string_view token, int line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int declared = -1;
  bool seen_content = false;
  std::vector<std::pair<Edge, int>> edges;
  int max_id = -1;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) throw ParseError(line_no, "expected two tokens per line");

    if (tokens[0] == "n") {
      if (seen_content) throw ParseError(line_no, "vertex count header must come first");
      declared = parse_id(tokens[1], line_no);
      if (declared > kMaxVertices) {
        throw ParseError(line_no, "at most " + std::to_string(kMaxVertices) + " vertices are supported");
      }
      seen_content = true;
      continue;
    }
    seen_content = true;
    const int u = parse_id(tokens[0], line_no);
    const int v = parse_id(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const int hi = std::max(u, v);
    if (declared >= 0 && hi >= declared) {
      throw ParseError(line_no, "vertex id " + std::to_string(hi) + " >= n = " + std::to_string(declared));
    }
    if (hi >= kMaxVertices) {
      throw ParseError(line_no, "vertex id " + std::to_string(hi) + " exceeds the supported maximum");
    }
    max_id = std::max(max_id, hi);
    edges.emplace_back(Edge(u, v), line_no);
  }

  const int n = declared >= 0 ? declared : max_id + 1;
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& [e, line] : edges) plain.push_back(e);
  return Graph(n, plain);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw ParseError(0, "graph6: empty input");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError(0, "graph6: byte out of range");
  }

  std::size_t cursor = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    cursor = 1;
  } else if (line.size() >= 4 && line[1] != 126) {
    n = (static_cast<long>(line[1] - 63) << 12) | (static_cast<long>(line[2] - 63) << 6) | (line[3] - 63);
    cursor = 4;
  } else {
    throw ParseError(0, "graph6: unsupported vertex count encoding");
  }
  if (n > kMaxVertices) {
    throw ParseError(0, "graph6: " + std::to_string(n) + " vertices exceeds the supported maximum");
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - cursor != bytes) {
    throw ParseError(0, "graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                            std::to_string(line.size() - cursor));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[cursor + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tough
