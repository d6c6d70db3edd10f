#include "bibdopt/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "bibdopt/errors.hpp"
#include "text_lines.hpp"

namespace bibdopt {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges) : v_(vertex_count), edges_(std::move(edges)) {
  if (v_ < 0) throw ValidationError("negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.w) throw ValidationError("loop at vertex " + std::to_string(e.u + 1));
    if (e.u > e.w) std::swap(e.u, e.w);
    if (e.u < 0 || e.w >= v_) throw ValidationError("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
}

IntMatrix Multigraph::laplacian() const {
  IntMatrix l(v_);
  for (const auto& e : edges_) {
    l(e.u, e.u) += 1;
    l(e.w, e.w) += 1;
    l(e.u, e.w) -= 1;
    l(e.w, e.u) -= 1;
  }
  return l;
}

int Multigraph::component_count() const {
  std::vector<int> parent(static_cast<std::size_t>(v_));
  std::iota(parent.begin(), parent.end(), 0);
  int components = v_;
  for (const auto& e : edges_) {
    const int a = find_root(parent, e.u);
    const int b = find_root(parent, e.w);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool Multigraph::is_simple() const { return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(); }

Graph::Graph(int vertex_count) : v_(vertex_count), rows_(static_cast<std::size_t>(std::max(vertex_count, 0)), 0) {
  if (v_ < 0 || v_ > kMaxVertices)
    throw ValidationError("graph vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (const auto& e : edges) {
    if (e.u < 0 || e.w < 0 || e.u >= v_ || e.w >= v_) throw ValidationError("edge endpoint out of range");
    if (e.u == e.w) throw ValidationError("loops are not allowed in a simple graph");
    if (has_edge(e.u, e.w)) throw ValidationError("repeated edge in a simple graph");
    add_edge(e.u, e.w);
  }
}

void Graph::add_edge(int a, int b) {
  if (a == b) throw ValidationError("loop at vertex " + std::to_string(a + 1));
  if (a < 0 || b < 0 || a >= v_ || b >= v_) throw ValidationError("edge endpoint out of range");
  rows_[a] |= std::uint64_t{1} << b;
  rows_[b] |= std::uint64_t{1} << a;
}

void Graph::remove_edge(int a, int b) {
  rows_[a] &= ~(std::uint64_t{1} << b);
  rows_[b] &= ~(std::uint64_t{1} << a);
}

int Graph::degree(int a) const { return std::popcount(rows_[a]); }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < v_; ++i)
    for (int j = i + 1; j < v_; ++j)
      if (has_edge(i, j)) out.push_back({i, j});
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (v_ == 0) return 0;
  const int d = degree(0);
  for (int i = 1; i < v_; ++i)
    if (degree(i) != d) return std::nullopt;
  return d;
}

bool Graph::connected() const {
  if (v_ <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows_[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == v_;
}

IntMatrix Graph::adjacency() const {
  IntMatrix a(v_);
  for (int i = 0; i < v_; ++i)
    for (int j = 0; j < v_; ++j) a(i, j) = has_edge(i, j) ? 1 : 0;
  return a;
}

IntMatrix Graph::laplacian() const {
  IntMatrix l(v_);
  for (int i = 0; i < v_; ++i) {
    l(i, i) = degree(i);
    for (int j = 0; j < v_; ++j)
      if (has_edge(i, j)) l(i, j) = -1;
  }
  return l;
}

Multigraph Graph::as_multigraph() const { return Multigraph(v_, edges()); }

Graph Graph::relabeled(std::span<const int> perm) const {
  Graph out(v_);
  for (int i = 0; i < v_; ++i)
    for (std::uint64_t r = rows_[i]; r != 0; r &= r - 1) {
      const int j = std::countr_zero(r);
      out.rows_[perm[i]] |= std::uint64_t{1} << perm[j];
    }
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ValidationError("empty graph file");
  const auto& header = lines.front();
  int v = 0;
  if (!header.text.starts_with("v=") || !detail::parse_int(header.text.substr(2), v) || v < 0)
    throw ValidationError(detail::at_line(header.number) + "expected header 'v=<int>'");
  if (v > Graph::kMaxVertices)
    throw ValidationError(detail::at_line(header.number) + "too many vertices");
  Graph g(v);
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto tokens = detail::split_ws(lines[n].text);
    int a = 0;
    int b = 0;
    if (tokens.size() != 2 || !detail::parse_int(tokens[0], a) || !detail::parse_int(tokens[1], b))
      throw ValidationError(detail::at_line(lines[n].number) + "expected an edge 'i j'");
    if (a < 1 || b < 1 || a > v || b > v)
      throw ValidationError(detail::at_line(lines[n].number) + "vertex out of range 1.." + std::to_string(v));
    if (a >= b) throw ValidationError(detail::at_line(lines[n].number) + "edge must satisfy i < j");
    if (g.has_edge(a - 1, b - 1)) throw ValidationError(detail::at_line(lines[n].number) + "repeated edge");
    g.add_edge(a - 1, b - 1);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "v=" << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.w + 1 << '\n';
  return out.str();
}

}  // namespace bibdopt
