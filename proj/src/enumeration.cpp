#include "bibdopt/enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bibdopt/canonical.hpp"
#include "bibdopt/errors.hpp"
#include "bibdopt/integer.hpp"
#include "json.hpp"

namespace bibdopt {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Dedup d) { return d == Dedup::labeled ? "labeled" : "canonical"; }

std::vector<Design> Pool::designs() const {
  std::vector<Design> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.design);
  return out;
}

namespace {

std::vector<Block> k_subsets(int v, int k) {
  std::vector<Block> out;
  Block current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int t = start; t <= v - (k - static_cast<int>(current.size())); ++t) {
      current.push_back(t);
      self(self, t + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int components() const { return components_; }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return;
    }
    parent_[a] = b;
    --components_;
    history_.push_back(a);
  }
  void undo() {
    const int a = history_.back();
    history_.pop_back();
    if (a < 0) return;
    parent_[a] = a;
    ++components_;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> history_;
  int components_;
};

bool passes(const DesignClass& c, const Filters& f) {
  if (f.connected && c.connected != *f.connected) return false;
  if (f.equireplicate && c.equireplicate != *f.equireplicate) return false;
  if (f.rgd && c.rgd != *f.rgd) return false;
  return true;
}

void assign_keys_and_dedup(Pool& pool, std::vector<Design> designs, const Limits& limits) {
  std::vector<std::string> keys(designs.size());
  const long n = static_cast<long>(designs.size());
#pragma omp parallel for schedule(dynamic, 64) if (!omp_in_parallel())
  for (long i = 0; i < n; ++i) keys[i] = canonical_key(designs[i], limits);

  std::set<std::string> seen;
  for (std::size_t i = 0; i < designs.size(); ++i) {
    if (pool.dedup == Dedup::canonical && !seen.insert(keys[i]).second) continue;
    pool.members.push_back({static_cast<int>(pool.members.size()), std::move(designs[i]), std::move(keys[i])});
  }
}

class MultisetSearch {
 public:
  MultisetSearch(int v, int b, int k, const Filters& filters)
      : v_(v), b_(b), k_(k), filters_(filters), candidates_(k_subsets(v, k)), uf_(v),
        reps_(static_cast<std::size_t>(v), 0), conc_(static_cast<std::size_t>(v) * v, 0) {
    equi_ = filters.equireplicate.value_or(false) || filters.rgd.value_or(false);
    if (equi_) {
      feasible_ = (b * k) % v == 0;
      r_ = b * k / v;
      lambda_ = v > 1 ? r_ * (k - 1) / (v - 1) : 0;
    }
    rgd_ = filters.rgd.value_or(false);
    connected_ = filters.connected.value_or(false);
  }

  std::vector<Design> run() {
    if (feasible_) extend(0);
    return std::move(found_);
  }

 private:
  bool admissible(const Block& block) const {
    if (equi_)
      for (int t : block)
        if (reps_[t] + 1 > r_) return false;
    if (rgd_)
      for (std::size_t a = 0; a < block.size(); ++a)
        for (std::size_t c = a + 1; c < block.size(); ++c)
          if (conc_[static_cast<std::size_t>(block[a]) * v_ + block[c]] + 1 > lambda_ + 1) return false;
    return true;
  }

  void apply(const Block& block, int sign) {
    for (int t : block) reps_[t] += sign;
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t c = a + 1; c < block.size(); ++c) conc_[static_cast<std::size_t>(block[a]) * v_ + block[c]] += sign;
  }

  void extend(std::size_t from) {
    const int placed = static_cast<int>(chosen_.size());
    if (connected_ && uf_.components() - 1 > (b_ - placed) * (k_ - 1)) return;
    if (placed == b_) {
      std::vector<Block> blocks;
      blocks.reserve(chosen_.size());
      for (auto c : chosen_) blocks.push_back(candidates_[c]);
      Design d(v_, k_, std::move(blocks));
      if (passes(classify(d), filters_)) found_.push_back(std::move(d));
      return;
    }
    for (std::size_t c = from; c < candidates_.size(); ++c) {
      const Block& block = candidates_[c];
      if (!admissible(block)) continue;
      apply(block, +1);
      for (std::size_t t = 1; t < block.size(); ++t) uf_.unite(block[0], block[t]);
      chosen_.push_back(c);
      extend(c);
      chosen_.pop_back();
      for (std::size_t t = 1; t < block.size(); ++t) uf_.undo();
      apply(block, -1);
    }
  }

  int v_;
  int b_;
  int k_;
  Filters filters_;
  std::vector<Block> candidates_;
  RollbackUnionFind uf_;
  std::vector<int> reps_;
  std::vector<int> conc_;
  bool equi_ = false;
  bool rgd_ = false;
  bool connected_ = false;
  bool feasible_ = true;
  int r_ = 0;
  int lambda_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<Design> found_;
};

// Canonical edge list of a loopless multigraph, minimal over the refined
// labelings of its edge-multiplicity matrix.
std::vector<Edge> canonical_edges(int v, const std::vector<Edge>& edges) {
  IntMatrix w(v);
  for (const auto& e : edges) {
    w(e.u, e.w) += 1;
    w(e.w, e.u) += 1;
  }
  std::optional<std::vector<Edge>> best;
  std::vector<Edge> candidate;
  for_each_refined_labeling(w, [&](std::span<const int> perm) {
    candidate.clear();
    for (const auto& e : edges) candidate.push_back({std::min(perm[e.u], perm[e.w]), std::max(perm[e.u], perm[e.w])});
    std::sort(candidate.begin(), candidate.end());
    if (!best || candidate < *best) best = candidate;
  });
  return best.value_or(std::vector<Edge>{});
}

using EdgeSets = std::set<std::vector<Edge>>;

}  // namespace

Pool enumerate_binary_designs(int v, int b, int k, const Filters& filters, Dedup dedup, const Limits& limits) {
  if (k < 1 || k >= v) throw ValidationError("need 1 <= k < v");
  if (b < 0) throw ValidationError("need b >= 0");
  if (filters.rgd.value_or(false) && filters.equireplicate.has_value() && !*filters.equireplicate)
    throw ValidationError("contradictory filters: an RGD is always equireplicate");
  const Integer raw = binomial(static_cast<long>(binomial(v, k).get_ui()) + b - 1, b);
  if (raw > Integer(static_cast<unsigned long>(limits.raw_candidate_cap)))
    throw ScaleCapError("(" + std::to_string(v) + "," + std::to_string(b) + "," + std::to_string(k) + ") has " +
                        raw.get_str() + " raw block multisets, above the cap of " +
                        std::to_string(limits.raw_candidate_cap));

  Pool pool;
  pool.v = v;
  pool.b = b;
  pool.k = k;
  pool.filters = filters;
  pool.generator = "block-multisets";
  pool.dedup = dedup;
  pool.complete = true;
  assign_keys_and_dedup(pool, MultisetSearch(v, b, k, filters).run(), limits);
  return pool;
}

Pool enumerate_connected_k2(int v, int b, const Limits& limits) {
  if (v < 3) throw ValidationError("need v >= 3 for k = 2 designs");
  if (b < v - 1) throw ValidationError("a connected design on v treatments with k = 2 needs b >= v - 1");
  if (v > limits.exact_canonical_max_vertices)
    throw ScaleCapError("canonical augmentation is capped at " + std::to_string(limits.exact_canonical_max_vertices) +
                        " vertices");

  // Trees by leaf addition, then one extra edge at a time.
  EdgeSets level{{{0, 1}}};
  for (int m = 2; m < v; ++m) {
    EdgeSets next;
    for (const auto& tree : level)
      for (int x = 0; x < m; ++x) {
        auto grown = tree;
        grown.push_back({x, m});
        next.insert(canonical_edges(m + 1, grown));
      }
    level = std::move(next);
  }
  for (int extra = 0; extra < b - (v - 1); ++extra) {
    EdgeSets next;
    for (const auto& g : level)
      for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
          auto grown = g;
          grown.push_back({i, j});
          next.insert(canonical_edges(v, grown));
        }
    level = std::move(next);
  }

  Pool pool;
  pool.v = v;
  pool.b = b;
  pool.k = 2;
  pool.filters.connected = true;
  pool.generator = "connected-k2-augmentation";
  pool.dedup = Dedup::canonical;
  pool.complete = true;
  std::vector<Design> designs;
  for (const auto& edges : level) {
    std::vector<Block> blocks;
    for (const auto& e : edges) blocks.push_back({e.u, e.w});
    designs.emplace_back(v, 2, std::move(blocks));
  }
  assign_keys_and_dedup(pool, std::move(designs), limits);
  return pool;
}

namespace {

ordered_json filter_json(const std::optional<bool>& f) { return f ? ordered_json(*f) : ordered_json(nullptr); }

std::optional<bool> filter_from(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

}  // namespace

std::string serialize_pool(const Pool& p) {
  std::ostringstream out;
  ordered_json header;
  header["schema_version"] = Pool::kSchemaVersion;
  header["v"] = p.v;
  header["b"] = p.b;
  header["k"] = p.k;
  header["filters"] = {{"connected", filter_json(p.filters.connected)},
                       {"equireplicate", filter_json(p.filters.equireplicate)},
                       {"rgd", filter_json(p.filters.rgd)}};
  header["generator"] = p.generator;
  header["dedup"] = to_string(p.dedup);
  header["complete"] = p.complete;
  out << header.dump() << '\n';
  for (const auto& m : p.members) {
    ordered_json line;
    line["id"] = m.id;
    auto blocks = ordered_json::array();
    for (const auto& block : m.design.blocks()) {
      auto one = ordered_json::array();
      for (int t : block) one.push_back(t + 1);
      blocks.push_back(one);
    }
    line["blocks"] = blocks;
    line["canonical_key"] = m.canonical_key;
    out << line.dump() << '\n';
  }
  return out.str();
}

Pool deserialize_pool(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Pool pool;
  int line_no = 0;
  bool have_header = false;
  std::set<int> ids;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto j = ordered_json::parse(line);
      if (!have_header) {
        if (!j.contains("schema_version") || j["schema_version"] != Pool::kSchemaVersion)
          throw ValidationError("unsupported pool schema version");
        pool.v = j.at("v").get<int>();
        pool.b = j.at("b").get<int>();
        pool.k = j.at("k").get<int>();
        const auto& f = j.at("filters");
        pool.filters.connected = filter_from(f.at("connected"));
        pool.filters.equireplicate = filter_from(f.at("equireplicate"));
        pool.filters.rgd = filter_from(f.at("rgd"));
        pool.generator = j.at("generator").get<std::string>();
        const auto dedup = j.at("dedup").get<std::string>();
        if (dedup != "labeled" && dedup != "canonical") throw ValidationError("unknown dedup level '" + dedup + "'");
        pool.dedup = dedup == "labeled" ? Dedup::labeled : Dedup::canonical;
        pool.complete = j.at("complete").get<bool>();
        have_header = true;
        continue;
      }
      const int id = j.at("id").get<int>();
      if (!ids.insert(id).second) throw ValidationError("duplicate member id " + std::to_string(id));
      std::vector<Block> blocks;
      for (const auto& jb : j.at("blocks")) {
        Block block;
        for (const auto& t : jb) {
          const int x = t.get<int>();
          if (x < 1 || x > pool.v) throw ValidationError("treatment " + std::to_string(x) + " out of range");
          block.push_back(x - 1);
        }
        blocks.push_back(std::move(block));
      }
      Design design(pool.v, pool.k, std::move(blocks));
      if (design.b() != pool.b) throw ValidationError("member has " + std::to_string(design.b()) + " blocks");
      pool.members.push_back({id, std::move(design), j.at("canonical_key").get<std::string>()});
    }
  } catch (const ValidationError& e) {
    throw ValidationError("pool line " + std::to_string(line_no) + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("pool line " + std::to_string(line_no) + ": " + e.what());
  }
  if (!have_header) throw ValidationError("pool file has no header line");
  return pool;
}

void save_pool(const Pool& p, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_pool(p);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Pool load_pool(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return deserialize_pool(buffer.str());
}

}  // namespace bibdopt
