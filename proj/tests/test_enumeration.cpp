#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "bibdopt/canonical.hpp"
#include "bibdopt/enumeration.hpp"
#include "bibdopt/errors.hpp"
#include "bibdopt/kernels.hpp"
#include "bibdopt/rgd.hpp"
#include "bibdopt/shapes.hpp"
#include "bibdopt/spectrum.hpp"

using namespace bibdopt;

namespace {

Filters only_connected() {
  Filters f;
  f.connected = true;
  return f;
}

std::set<std::string> keys(const Pool& p) {
  std::set<std::string> out;
  for (const auto& m : p.members) out.insert(m.canonical_key);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bibdopt_test_" + name);
}

}  // namespace

TEST_CASE("spanning tree pools") {
  const auto labeled = enumerate_binary_designs(4, 3, 2, only_connected());
  CHECK(labeled.members.size() == 16);
  CHECK(keys(labeled).size() == 2);
  CHECK(enumerate_binary_designs(4, 3, 2, only_connected(), Dedup::canonical).members.size() == 2);
  CHECK(enumerate_binary_designs(5, 4, 2, only_connected()).members.size() == 125);
  CHECK(enumerate_binary_designs(5, 4, 2, only_connected(), Dedup::canonical).members.size() == 3);
  CHECK(enumerate_binary_designs(6, 5, 2, only_connected()).members.size() == 1296);
  CHECK(enumerate_binary_designs(6, 5, 2, only_connected(), Dedup::canonical).members.size() == 6);
}

TEST_CASE("raw multiset counts") {
  const auto raw = enumerate_binary_designs(4, 3, 2, {});
  CHECK(raw.members.size() == 56);
  std::set<std::vector<Block>> distinct;
  for (const auto& m : raw.members) distinct.insert(m.design.blocks());
  CHECK(distinct.size() == 56);
  CHECK(enumerate_binary_designs(5, 2, 3, {}).members.size() == 55);
  CHECK(enumerate_binary_designs(4, 0, 2, {}).members.size() == 1);
}

TEST_CASE("filters agree with classify") {
  for (auto [v, b, k] : std::vector<std::array<int, 3>>{{4, 4, 2}, {5, 5, 2}, {4, 6, 2}, {5, 5, 3}, {6, 4, 3}}) {
    const auto all = enumerate_binary_designs(v, b, k, {});
    std::map<std::string, std::size_t> expected;
    for (const auto& m : all.members) {
      const auto c = classify(m.design);
      expected["connected"] += c.connected;
      expected["equireplicate"] += c.equireplicate;
      expected["rgd"] += c.rgd;
    }
    Filters f;
    f.connected = true;
    auto pool = enumerate_binary_designs(v, b, k, f);
    CHECK(pool.members.size() == expected["connected"]);
    for (const auto& m : pool.members) CHECK(classify(m.design).connected);
    f = {};
    f.equireplicate = true;
    pool = enumerate_binary_designs(v, b, k, f);
    CHECK(pool.members.size() == expected["equireplicate"]);
    f = {};
    f.rgd = true;
    pool = enumerate_binary_designs(v, b, k, f);
    CHECK(pool.members.size() == expected["rgd"]);
    for (const auto& m : pool.members) CHECK(classify(m.design).rgd);
    f = {};
    f.connected = false;
    pool = enumerate_binary_designs(v, b, k, f);
    CHECK(pool.members.size() == all.members.size() - expected["connected"]);
  }
}

TEST_CASE("rgd pool with lambda 0 is the cubic graphs on six vertices") {
  Filters f;
  f.rgd = true;
  const auto pool = enumerate_binary_designs(6, 9, 2, f, Dedup::canonical);
  REQUIRE(pool.members.size() == 2);
  std::set<std::string> expected;
  for (const auto& g : enumerate_regular_graphs(6, 3)) {
    std::vector<Block> blocks;
    for (const auto& e : g.edges()) blocks.push_back({e.u, e.w});
    expected.insert(canonical_key(Design(6, 2, blocks)));
  }
  CHECK(keys(pool) == expected);
}

TEST_CASE("enumeration errors") {
  Filters bad;
  bad.rgd = true;
  bad.equireplicate = false;
  CHECK_THROWS_AS(enumerate_binary_designs(4, 4, 2, bad), ValidationError);
  CHECK_THROWS_AS(enumerate_binary_designs(4, 3, 4, {}), ValidationError);
  CHECK_THROWS_AS(enumerate_binary_designs(9, 9, 3, {}), ScaleCapError);
  Limits tight;
  tight.raw_candidate_cap = 55;
  CHECK_THROWS_AS(enumerate_binary_designs(4, 3, 2, {}, Dedup::labeled, tight), ScaleCapError);
  tight.raw_candidate_cap = 56;
  CHECK_NOTHROW(enumerate_binary_designs(4, 3, 2, {}, Dedup::labeled, tight));
  CHECK_THROWS_AS(enumerate_connected_k2(5, 3), ValidationError);
  Limits canon;
  canon.exact_canonical_max_vertices = 6;
  CHECK_THROWS_AS(enumerate_connected_k2(7, 7, canon), ScaleCapError);
}

TEST_CASE("connected k2 augmentation matches filtered multisets") {
  for (auto [v, b] : std::vector<std::pair<int, int>>{{4, 3}, {4, 4}, {4, 5}, {5, 4}, {5, 5}, {5, 6}, {6, 6}}) {
    const auto grown = enumerate_connected_k2(v, b);
    const auto filtered = enumerate_binary_designs(v, b, 2, only_connected(), Dedup::canonical);
    CHECK(grown.members.size() == filtered.members.size());
    CHECK(keys(grown) == keys(filtered));
  }
  // Unlabeled trees on 4..8 vertices.
  const std::vector<std::size_t> trees{2, 3, 6, 11, 23};
  for (int v = 4; v <= 8; ++v) CHECK(enumerate_connected_k2(v, v - 1).members.size() == trees[v - 4]);
}

TEST_CASE("equal canonical keys imply equal spectra") {
  const auto pool = enumerate_binary_designs(5, 5, 2, only_connected());
  const auto spectra = kernels::parallel::design_spectra(pool.designs());
  std::map<std::string, ExactSpectrum> by_key;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    auto [it, inserted] = by_key.emplace(pool.members[i].canonical_key, spectra[i]);
    if (!inserted) CHECK(it->second == spectra[i]);
  }
}

TEST_CASE("canonical dedup keeps the first member of each class") {
  const auto labeled = enumerate_binary_designs(5, 4, 2, only_connected());
  const auto canonical = enumerate_binary_designs(5, 4, 2, only_connected(), Dedup::canonical);
  std::set<std::string> seen;
  std::vector<Design> firsts;
  for (const auto& m : labeled.members)
    if (seen.insert(m.canonical_key).second) firsts.push_back(m.design);
  REQUIRE(firsts.size() == canonical.members.size());
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    CHECK(canonical.members[i].design == firsts[i]);
    CHECK(canonical.members[i].id == static_cast<int>(i));
  }
}

TEST_CASE("pool persistence") {
  const auto pool = enumerate_binary_designs(4, 3, 2, only_connected());
  const auto path = temp_file("pool.jsonl");
  save_pool(pool, path);
  const auto back = load_pool(path);
  CHECK(back.members.size() == 16);
  CHECK(back.v == 4);
  CHECK(back.filters == pool.filters);
  CHECK(back.generator == pool.generator);
  CHECK(back.dedup == pool.dedup);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(back.members[i].id == pool.members[i].id);
    CHECK(back.members[i].design == pool.members[i].design);
    CHECK(back.members[i].canonical_key == pool.members[i].canonical_key);
  }
  CHECK(serialize_pool(back) == serialize_pool(pool));
  std::filesystem::remove(path);
}

TEST_CASE("pool loading rejects bad files") {
  const auto text = serialize_pool(enumerate_binary_designs(4, 3, 2, only_connected()));
  auto wrong_version = text;
  wrong_version.replace(wrong_version.find("\"schema_version\":1"), 18, "\"schema_version\":9");
  CHECK_THROWS_WITH_AS(deserialize_pool(wrong_version), doctest::Contains("schema"), ValidationError);

  auto three = text;
  const auto first_block = three.find("[[");
  three.replace(first_block, 7, "[[1,2,3]");
  CHECK_THROWS_WITH_AS(deserialize_pool(three), doctest::Contains("line 2"), ValidationError);

  CHECK_THROWS_AS(deserialize_pool(""), ValidationError);
  CHECK_THROWS_AS(deserialize_pool("not json\n"), ValidationError);
  CHECK_THROWS_AS(load_pool(temp_file("does_not_exist.jsonl")), std::runtime_error);

  const auto header_end = text.find('\n') + 1;
  const auto second_end = text.find('\n', header_end) + 1;
  const auto duplicated = text.substr(0, second_end) + text.substr(header_end, second_end - header_end);
  CHECK_THROWS_WITH_AS(deserialize_pool(duplicated), doctest::Contains("duplicate"), ValidationError);
}
