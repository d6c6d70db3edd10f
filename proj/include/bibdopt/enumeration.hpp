#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bibdopt/design.hpp"
#include "bibdopt/limits.hpp"

namespace bibdopt {

/// Tri-state filters: empty means "don't care".
struct Filters {
  std::optional<bool> connected;
  std::optional<bool> equireplicate;
  std::optional<bool> rgd;

  bool operator==(const Filters&) const = default;
};

enum class Dedup { labeled, canonical };
std::string to_string(Dedup d);

struct PoolMember {
  int id = 0;
  Design design;
  std::string canonical_key;
};

struct Pool {
  static constexpr int kSchemaVersion = 1;

  int v = 0;
  int b = 0;
  int k = 0;
  Filters filters;
  std::string generator;
  Dedup dedup = Dedup::labeled;
  bool complete = true;
  std::vector<PoolMember> members;

  std::vector<Design> designs() const;
};

/// Every multiset of b blocks drawn from the k-subsets of v treatments that
/// satisfies the filters. Throws ScaleCapError when the raw multiset count
/// exceeds Limits::raw_candidate_cap and ValidationError on contradictory
/// filters.
Pool enumerate_binary_designs(int v, int b, int k, const Filters& filters, Dedup dedup = Dedup::labeled,
                              const Limits& limits = {});

/// Connected k = 2 designs with b >= v - 1 blocks up to isomorphism, grown
/// from non-isomorphic trees by adding one edge at a time (parallel edges
/// allowed). Always canonical.
Pool enumerate_connected_k2(int v, int b, const Limits& limits = {});

/// JSON-lines: a header {schema_version, v, b, k, filters, generator, dedup,
/// complete} and one {id, blocks, canonical_key} line per member (1-indexed
/// treatments).
std::string serialize_pool(const Pool& p);
Pool deserialize_pool(std::string_view text);

void save_pool(const Pool& p, const std::filesystem::path& path);
Pool load_pool(const std::filesystem::path& path);

}  // namespace bibdopt
