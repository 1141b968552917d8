#include <string>

#include "hamplane/graph.hpp"
#include "text_lines.hpp"

namespace hamplane {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c, std::size_t pos) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) {
    throw GraphError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) + " at offset " +
                     std::to_string(pos) + " is outside 63..126");
  }
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view record;
  std::size_t records = 0;
  std::size_t record_line = 0;
  for_each_data_line(text, [&](std::string_view line, std::size_t lineno) {
    if (++records == 1) {
      record = line;
      record_line = lineno;
    }
  });
  if (records == 0) throw GraphError("graph6: empty input");
  if (records > 1) throw GraphError("graph6: expected a single graph, found " + std::to_string(records));
  if (record.starts_with(kHeader)) record.remove_prefix(kHeader.size());
  if (record.empty()) throw GraphError("graph6: empty record", record_line);
  if (record[0] == ':' || record[0] == ';' || record[0] == '&') {
    throw GraphError("graph6: sparse6/digraph6 records are not supported", record_line);
  }

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (record[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(record[0], 0));
    pos = 1;
  } else {
    const bool wide = record.size() > 1 && record[1] == '~';
    const std::size_t start = wide ? 2 : 1;
    const std::size_t digits = wide ? 6 : 3;
    if (record.size() < start + digits) throw GraphError("graph6: truncated size header", record_line);
    for (std::size_t k = 0; k < digits; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(record[start + k], start + k));
    if (!wide && n < 63) throw GraphError("graph6: non-canonical size header", record_line);
    if (wide && n < 258048) throw GraphError("graph6: non-canonical size header", record_line);
    pos = start + digits;
  }

  if (n > (std::uint64_t{1} << 22)) throw GraphError("graph6: graph too large (n=" + std::to_string(n) + ")", record_line);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (record.size() - pos != body) {
    throw GraphError("graph6: length mismatch: n=" + std::to_string(n) + " needs " + std::to_string(body) +
                         " data bytes, found " + std::to_string(record.size() - pos),
                     record_line);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      const int byte = sextet(record[pos + k / 6], pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k < body * 6; ++k) {
    if ((sextet(record[pos + k / 6], pos + k / 6) >> (5 - k % 6)) & 1) {
      throw GraphError("graph6: nonzero padding bits", record_line);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  const std::uint64_t bits = n * (n - 1) / 2;
  std::vector<unsigned char> body((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    // Column-major upper triangle: (i, j) with i < j sits at j(j-1)/2 + i.
    const std::uint64_t k = std::uint64_t{e.v} * (e.v - 1) / 2 + e.u;
    body[k / 6] |= static_cast<unsigned char>(1U << (5 - k % 6));
  }
  for (unsigned char c : body) out.push_back(static_cast<char>(c + 63));
  return out;
}

}  // namespace hamplane
