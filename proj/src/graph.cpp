#include "asep/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace asep {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an id outside [0, " +
                       std::to_string(n) + ")");
    }
    if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  neighbors_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbors_[fill[u]++] = v;
    neighbors_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw GraphError("duplicate edge (" + std::to_string(std::min<Vertex>(static_cast<Vertex>(v), *dup)) + ", " +
                       std::to_string(std::max<Vertex>(static_cast<Vertex>(v), *dup)) + ")");
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < static_cast<Vertex>(num_vertices()); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

long long parse_int(std::string_view field, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw GraphError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text, bool one_based) {
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() != 2) {
      throw GraphError("line " + std::to_string(line_no) + ": expected two fields, got " +
                       std::to_string(fields.size()));
    }
    long long a = parse_int(fields[0], line_no);
    long long b = parse_int(fields[1], line_no);
    if (!have_header) {
      if (a < 0 || b < 0) throw GraphError("line " + std::to_string(line_no) + ": negative header value");
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (one_based) {
      --a;
      --b;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex id out of range for n=" + std::to_string(n));
    }
    if (a == b) throw GraphError("line " + std::to_string(line_no) + ": self-loop on vertex " + std::to_string(a));
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw GraphError("missing 'n m' header line");
  if (static_cast<long long>(edges.size()) != m) {
    throw GraphError("header declares m=" + std::to_string(m) + " but " + std::to_string(edges.size()) +
                     " edges were read");
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph load_edge_list(const std::string& path, bool one_based) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str(), one_based);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write " + path);
  out << to_edge_list(g);
}

std::size_t threshold(double alpha, std::size_t n) {
  if (n == 0) throw std::invalid_argument("threshold: empty graph");
  const double scaled = alpha * static_cast<double>(n);
  // Tolerate representation error, e.g. (1.0 / n) * n == 1.0000000000000002.
  constexpr double kSlack = 1e-9;
  if (!(scaled >= 1.0 - kSlack) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in [1/n, 1), got " + std::to_string(alpha));
  }
  return static_cast<std::size_t>(std::ceil(scaled - kSlack));
}

}  // namespace asep
