#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bibdopt/graph.hpp"
#include "bibdopt/matrix.hpp"

namespace bibdopt {

/// Treatments of one block, 0-based and strictly increasing.
using Block = std::vector<int>;

/// Binary block design: a multiset of k-subsets of v treatments. Blocks are
/// kept sorted, so two designs with the same multiset compare equal.
class Design {
 public:
  /// Throws ValidationError unless every block holds k distinct treatments
  /// in [0, v) and 1 <= k < v.
  Design(int v, int k, std::vector<Block> blocks);

  int v() const { return v_; }
  int k() const { return k_; }
  int b() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<int>& replications() const { return replications_; }

  bool operator==(const Design&) const = default;

 private:
  int v_;
  int k_;
  std::vector<Block> blocks_;
  std::vector<int> replications_;
};

struct DesignClass {
  bool binary = true;
  bool connected = false;
  bool equireplicate = false;
  std::optional<int> r;
  bool rgd = false;
  std::optional<int> lambda;  // floor(r(k-1)/(v-1)) for an RGD
  std::optional<int> delta;   // residual degree r(k-1) - lambda(v-1)
  bool bibd = false;
  std::optional<int> bibd_lambda;
};

/// Parses the design file format:
///   v=<int> b=<int> k=<int>
///   followed by exactly b lines of k treatments in 1..v.
/// `#` starts a comment line. Errors name the offending line.
Design parse_design(std::string_view text);

/// Writes the design file format with blocks sorted within and across.
std::string format_design(const Design& d);

/// N N^T: replications on the diagonal, pair concurrences off it.
IntMatrix concurrence_matrix(const Design& d);

/// k diag(r) - N N^T.
IntMatrix laplacian(const Design& d);

DesignClass classify(const Design& d);

/// Treatments as vertices, lambda_ij parallel edges between i and j.
Multigraph concurrence_graph(const Design& d);

/// All C(v, k) k-subsets; a BIBD with concurrence C(v-2, k-2).
Design unreduced_bibd(int v, int k);

/// base plus y copies of the blocks of bibd. Throws ValidationError on a
/// v or k mismatch or when bibd is not a BIBD.
Design extend(const Design& base, const Design& bibd, unsigned y);

/// A base design together with an extension BIBD and a level y. The
/// non-trivial Laplacian eigenvalues of the extended design are those of the
/// base shifted by v * lambda_tilde * y, so the exact A/D machinery is run at
/// level() = lambda_tilde * y.
struct ExtensionFamily {
  Design base;
  Design bibd;
  unsigned y = 0;

  int lambda_tilde() const;
  unsigned long level() const;
  /// lambda + y * lambda_tilde for an RGD base; empty otherwise.
  std::optional<long> x() const;
  Design extended() const { return extend(base, bibd, y); }
};

}  // namespace bibdopt
