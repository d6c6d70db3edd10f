#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bibdopt/matrix.hpp"

namespace bibdopt {

struct Edge {
  int u = 0;
  int w = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Loopless graph that may carry parallel edges; the concurrence graph of a
/// binary design. Vertices are 0-based, edges normalized to u < w and sorted.
class Multigraph {
 public:
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return v_; }
  const std::vector<Edge>& edges() const { return edges_; }

  IntMatrix laplacian() const;
  int component_count() const;
  bool connected() const { return component_count() <= 1; }
  bool is_simple() const;

 private:
  int v_;
  std::vector<Edge> edges_;
};

/// Simple graph on at most 64 vertices stored as adjacency bit rows.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return v_; }
  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  bool has_edge(int a, int b) const { return (rows_[a] >> b) & 1U; }
  int degree(int a) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;
  std::uint64_t row(int a) const { return rows_[a]; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  /// The common degree, if every vertex has the same one.
  std::optional<int> regular_degree() const;
  bool connected() const;

  IntMatrix adjacency() const;
  IntMatrix laplacian() const;
  Multigraph as_multigraph() const;

  /// Graph with vertex i renamed to perm[i].
  Graph relabeled(std::span<const int> perm) const;

  auto operator<=>(const Graph&) const = default;

 private:
  int v_;
  std::vector<std::uint64_t> rows_;
};

/// Graph file: `v=<int>` header then one `i j` edge per line, 1-indexed,
/// i < j. Lines starting with `#` are comments.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

}  // namespace bibdopt
