#include "bibdopt/design.hpp"

#include <algorithm>
#include <sstream>

#include "bibdopt/errors.hpp"
#include "text_lines.hpp"

namespace bibdopt {

Design::Design(int v, int k, std::vector<Block> blocks) : v_(v), k_(k), blocks_(std::move(blocks)) {
  if (v_ < 1) throw ValidationError("v must be positive");
  if (k_ < 1) throw ValidationError("k must be positive");
  if (k_ >= v_) throw ValidationError("block size must satisfy k < v");
  replications_.assign(static_cast<std::size_t>(v_), 0);
  for (auto& block : blocks_) {
    if (static_cast<int>(block.size()) != k_)
      throw ValidationError("block of size " + std::to_string(block.size()) + ", expected " + std::to_string(k_));
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw ValidationError("repeated treatment in block");
    if (block.front() < 0 || block.back() >= v_) throw ValidationError("treatment index out of range");
    for (int t : block) ++replications_[t];
  }
  std::sort(blocks_.begin(), blocks_.end());
}

Design parse_design(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ValidationError("empty design file");
  const auto& header = lines.front();
  const auto fields = detail::split_ws(header.text);
  int v = -1;
  int b = -1;
  int k = -1;
  auto field = [&](std::string_view token, std::string_view name, int& out) {
    return token.starts_with(name) && detail::parse_int(token.substr(name.size()), out);
  };
  if (fields.size() != 3 || !field(fields[0], "v=", v) || !field(fields[1], "b=", b) || !field(fields[2], "k=", k) ||
      v < 1 || b < 0 || k < 1)
    throw ValidationError(detail::at_line(header.number) + "malformed header, expected 'v=<int> b=<int> k=<int>'");
  if (k >= v) throw ValidationError(detail::at_line(header.number) + "block size must satisfy k < v");
  if (static_cast<int>(lines.size()) - 1 != b)
    throw ValidationError(detail::at_line(header.number) + "header declares b=" + std::to_string(b) + " but " +
                          std::to_string(lines.size() - 1) + " block lines follow");

  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(b));
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto& line = lines[n];
    const auto tokens = detail::split_ws(line.text);
    if (static_cast<int>(tokens.size()) != k)
      throw ValidationError(detail::at_line(line.number) + "block of size " + std::to_string(tokens.size()) +
                            ", expected " + std::to_string(k));
    Block block;
    for (auto token : tokens) {
      int t = 0;
      if (!detail::parse_int(token, t)) throw ValidationError(detail::at_line(line.number) + "not a treatment index");
      if (t < 1 || t > v)
        throw ValidationError(detail::at_line(line.number) + "treatment " + std::to_string(t) + " out of range 1.." +
                              std::to_string(v));
      block.push_back(t - 1);
    }
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw ValidationError(detail::at_line(line.number) + "repeated treatment in block");
    blocks.push_back(std::move(block));
  }
  return Design(v, k, std::move(blocks));
}

std::string format_design(const Design& d) {
  std::ostringstream out;
  out << "v=" << d.v() << " b=" << d.b() << " k=" << d.k() << '\n';
  for (const auto& block : d.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i] + 1;
    out << '\n';
  }
  return out.str();
}

IntMatrix concurrence_matrix(const Design& d) {
  IntMatrix m(d.v());
  for (const auto& block : d.blocks())
    for (int a : block)
      for (int c : block) m(a, c) += 1;
  return m;
}

IntMatrix laplacian(const Design& d) {
  IntMatrix l = concurrence_matrix(d);
  for (int i = 0; i < d.v(); ++i)
    for (int j = 0; j < d.v(); ++j) l(i, j) = (i == j ? d.k() * l(i, i) : 0) - l(i, j);
  return l;
}

Multigraph concurrence_graph(const Design& d) {
  std::vector<Edge> edges;
  for (const auto& block : d.blocks())
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t c = a + 1; c < block.size(); ++c) edges.push_back({block[a], block[c]});
  return Multigraph(d.v(), std::move(edges));
}

DesignClass classify(const Design& d) {
  DesignClass out;
  out.connected = concurrence_graph(d).connected();
  const auto& reps = d.replications();
  out.equireplicate = std::all_of(reps.begin(), reps.end(), [&](int r) { return r == reps.front(); });
  if (!out.equireplicate) return out;
  const int r = reps.front();
  out.r = r;

  const int v = d.v();
  const int k = d.k();
  const IntMatrix nnt = concurrence_matrix(d);
  const int lambda = r * (k - 1) / (v - 1);
  bool rgd = true;
  bool constant = true;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      const auto c = nnt(i, j);
      rgd = rgd && (c == lambda || c == lambda + 1);
      constant = constant && c == nnt(0, 1);
    }
  if (rgd) {
    out.rgd = true;
    out.lambda = lambda;
    out.delta = r * (k - 1) - lambda * (v - 1);
  }
  if (constant && d.b() > 0 && nnt(0, 1) > 0) {
    out.bibd = true;
    out.bibd_lambda = static_cast<int>(nnt(0, 1));
  }
  return out;
}

Design unreduced_bibd(int v, int k) {
  if (k < 2 || k >= v) throw ValidationError("unreduced BIBD needs 2 <= k < v");
  std::vector<Block> blocks;
  std::vector<bool> pick(static_cast<std::size_t>(v), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Block block;
    for (int i = 0; i < v; ++i)
      if (pick[i]) block.push_back(i);
    blocks.push_back(std::move(block));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Design(v, k, std::move(blocks));
}

Design extend(const Design& base, const Design& bibd, unsigned y) {
  if (base.v() != bibd.v()) throw ValidationError("mismatched v between base design and extension BIBD");
  if (base.k() != bibd.k()) throw ValidationError("mismatched k between base design and extension BIBD");
  if (!classify(bibd).bibd) throw ValidationError("extension design is not a BIBD");
  std::vector<Block> blocks = base.blocks();
  blocks.reserve(blocks.size() + static_cast<std::size_t>(y) * bibd.blocks().size());
  for (unsigned copy = 0; copy < y; ++copy) blocks.insert(blocks.end(), bibd.blocks().begin(), bibd.blocks().end());
  return Design(base.v(), base.k(), std::move(blocks));
}

int ExtensionFamily::lambda_tilde() const {
  const auto c = classify(bibd);
  if (!c.bibd) throw ValidationError("extension design is not a BIBD");
  return *c.bibd_lambda;
}

unsigned long ExtensionFamily::level() const { return static_cast<unsigned long>(lambda_tilde()) * y; }

std::optional<long> ExtensionFamily::x() const {
  const auto c = classify(base);
  if (!c.rgd) return std::nullopt;
  return static_cast<long>(*c.lambda) + static_cast<long>(y) * lambda_tilde();
}

}  // namespace bibdopt
