#include "rainbow/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

struct Record {
  int line = 0;
  std::vector<std::string_view> fields;
};

// Splits into whitespace-separated fields, dropping blank and comment lines.
std::vector<Record> records(std::string_view text) {
  std::vector<Record> out;
  int line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    Record r{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) r.fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (r.fields.empty() || r.fields.front().front() == '#') continue;
    out.push_back(std::move(r));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

long long to_int(const Record& r, std::size_t field) {
  std::string_view s = r.fields[field];
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(r.line, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

void expect_shape(const Record& r, std::string_view tag, std::size_t count,
                  std::string_view usage) {
  if (r.fields[0] != tag || r.fields.size() != count) {
    fail(r.line, "expected '" + std::string(usage) + "'");
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto recs = records(text);
  if (recs.empty()) throw InputError(ErrorKind::kParse, "missing 'p edge <n> <m>' header");
  const Record& header = recs.front();
  if (header.fields.size() != 4 || header.fields[0] != "p" || header.fields[1] != "edge") {
    fail(header.line, "expected 'p edge <n> <m>'");
  }
  const long long n = to_int(header, 2);
  const long long m = to_int(header, 3);
  if (n < 1 || n > 1'000'000) fail(header.line, "vertex count out of range");
  if (m < 0) fail(header.line, "negative edge count");
  const long long found = static_cast<long long>(recs.size()) - 1;
  if (found != m) {
    throw InputError(ErrorKind::kParse, "edge count mismatch: header declares " +
                                            std::to_string(m) + ", found " +
                                            std::to_string(found));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  std::map<Edge, int> first_seen;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const Record& r = recs[i];
    expect_shape(r, "e", 3, "e <u> <v>");
    const long long u = to_int(r, 1);
    const long long v = to_int(r, 2);
    if (u < 1 || u > n || v < 1 || v > n) {
      fail(r.line, "endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) fail(r.line, "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    auto [it, fresh] = first_seen.emplace(e, r.line);
    if (!fresh) {
      throw InputError(ErrorKind::kDuplicateEdge,
                       "line " + std::to_string(r.line) + ": duplicate edge " + to_string(e) +
                           " (first on line " + std::to_string(it->second) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

EdgeColoring parse_coloring(std::string_view text, const Graph& g) {
  std::vector<std::pair<Edge, Color>> recs;
  std::vector<int> seen(g.size(), 0);
  for (const Record& r : records(text)) {
    expect_shape(r, "c", 4, "c <u> <v> <color>");
    const long long u = to_int(r, 1);
    const long long v = to_int(r, 2);
    const long long color = to_int(r, 3);
    if (color < 1 || color > INT32_MAX) fail(r.line, "color must be a positive 32-bit integer");
    auto index = g.edge_index(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (u < 1 || v < 1 || u > g.order() || v > g.order() || !index) {
      throw InputError(ErrorKind::kUnknownEdge, "line " + std::to_string(r.line) +
                                                    ": unknown edge (" + std::to_string(u) +
                                                    "," + std::to_string(v) + ")");
    }
    if (seen[*index]) {
      throw InputError(ErrorKind::kDuplicateEdge,
                       "line " + std::to_string(r.line) + ": duplicate record for edge " +
                           to_string(g.edge(*index)) + " (first on line " +
                           std::to_string(seen[*index]) + ")");
    }
    seen[*index] = r.line;
    recs.push_back({g.edge(*index), static_cast<Color>(color)});
  }
  return EdgeColoring::from_assignments(g, recs);
}

std::string serialize_coloring(const Graph& g, const EdgeColoring& c) {
  require_total(g, c);
  std::string out;
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    out += "c " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(c[i]) +
           "\n";
  }
  return out;
}

std::string serialize_provenance(const ReductionOutput& out) {
  std::string text;
  for (std::size_t i = 0; i < out.original_edges.size(); ++i) {
    const Edge& e = out.original_edges[i];
    text += "s " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
            std::to_string(out.subdivision_vertex[i]) + "\n";
  }
  for (std::size_t i = 0; i < out.original_edges.size(); ++i) {
    const Edge& e = out.original_edges[i];
    text += "f " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
            std::to_string(out.fresh_color[i]) + "\n";
  }
  return text;
}

}  // namespace rainbow
