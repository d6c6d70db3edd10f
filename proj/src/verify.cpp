#include "bibdopt/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "bibdopt/canonical.hpp"
#include "bibdopt/design.hpp"
#include "bibdopt/enumeration.hpp"
#include "bibdopt/errors.hpp"
#include "bibdopt/kernels.hpp"
#include "bibdopt/rgd.hpp"
#include "bibdopt/shapes.hpp"
#include "bibdopt/spectrum.hpp"

namespace bibdopt {

using json = nlohmann::ordered_json;

std::size_t VerifySuiteReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::pass; }));
}

std::size_t VerifySuiteReport::failed() const { return checks.size() - passed(); }

json to_json(const VerifySuiteReport& r) {
  json out;
  out["suite"] = r.suite;
  auto checks = json::array();
  for (const auto& c : r.checks) {
    json one;
    one["claim_id"] = c.claim_id;
    one["claim"] = c.claim;
    one["parameters"] = c.parameters;
    one["status"] = c.status == CheckStatus::pass ? "pass" : "fail";
    one["witness"] = c.witness;
    checks.push_back(std::move(one));
  }
  out["checks"] = std::move(checks);
  out["counts"] = {{"pass", r.passed()}, {"fail", r.failed()}};
  return out;
}

namespace {

json spectrum_json(const ExactSpectrum& s) {
  auto out = json::array();
  for (const auto& x : s.s) out.push_back(x.get_str());
  return out;
}

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Integer& z) { return z.get_str(); }

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

Design graph_design(const Graph& g) {
  std::vector<Block> blocks;
  for (const auto& e : g.edges()) blocks.push_back({e.u, e.w});
  return Design(g.vertex_count(), 2, std::move(blocks));
}

struct Range {
  int lo;
  int hi;
  bool contains(int v) const { return lo <= v && v <= hi; }
};

Range range(const VerifyOptions& o, int lo, int hi) { return {o.v_min.value_or(lo), o.v_max.value_or(hi)}; }

std::vector<Criterion> criteria(const VerifyOptions& o) {
  if (o.criterion) return {*o.criterion};
  return {Criterion::D, Criterion::A};
}

std::vector<unsigned long> levels(const VerifyOptions& o, std::vector<unsigned long> defaults) {
  return o.ys.value_or(std::move(defaults));
}

// Spectra of a pool with the distinct ones factored out, so criterion values
// are computed once per spectrum.
struct PoolSpectra {
  std::vector<ExactSpectrum> member;
  std::vector<ExactSpectrum> distinct;
  std::vector<std::size_t> class_of;

  explicit PoolSpectra(const Pool& pool) : member(kernels::parallel::design_spectra(pool.designs())) {
    std::map<std::vector<Integer>, std::size_t> seen;
    for (const auto& s : member) {
      auto [it, inserted] = seen.emplace(s.s, distinct.size());
      if (inserted) distinct.push_back(s);
      class_of.push_back(it->second);
    }
  }

  struct Best {
    Rational value;
    std::vector<std::size_t> maximizers;
  };

  Best best(unsigned long y, Criterion c) const {
    std::vector<Rational> values;
    values.reserve(distinct.size());
    for (const auto& s : distinct) values.push_back(criterion_value(s, Integer(y), c));
    Best out{*std::max_element(values.begin(), values.end()), {}};
    for (std::size_t i = 0; i < member.size(); ++i)
      if (values[class_of[i]] == out.value) out.maximizers.push_back(i);
    return out;
  }

  Rational value(std::size_t i, unsigned long y, Criterion c) const {
    return criterion_value(member[i], Integer(y), c);
  }
};

json ids(const Pool& pool, const std::vector<std::size_t>& indices, std::size_t limit = 8) {
  auto out = json::array();
  for (std::size_t i = 0; i < indices.size() && i < limit; ++i) out.push_back(pool.members[indices[i]].id);
  return out;
}

std::vector<std::size_t> with_key(const Pool& pool, const std::string& key) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pool.members.size(); ++i)
    if (pool.members[i].canonical_key == key) out.push_back(i);
  return out;
}

bool all_with_key(const Pool& pool, const std::vector<std::size_t>& indices, const std::string& key) {
  return std::all_of(indices.begin(), indices.end(),
                     [&](std::size_t i) { return pool.members[i].canonical_key == key; });
}

// One check on whether the designs with canonical key `key` take the pool
// maximum, and optionally are the only ones that do.
VerifyCheck shape_maximizes(const Pool& pool, const PoolSpectra& spectra, const std::string& shape,
                            const std::string& key, unsigned long y, Criterion c, bool unique,
                            const std::string& claim_id) {
  const auto shape_members = with_key(pool, key);
  const auto best = spectra.best(y, c);
  VerifyCheck check;
  check.claim_id = claim_id;
  check.claim = "the " + shape + (unique ? " is the only maximizer of " : " attains the maximum ") + to_string(c) +
                "-value" + (unique ? "" : " (ties allowed)");
  check.parameters = {{"v", pool.v}, {"b", pool.b}, {"k", pool.k}, {"y", y}, {"criterion", to_string(c)},
                      {"pool_size", pool.members.size()}};
  bool ok = !shape_members.empty();
  json witness;
  witness["max_value"] = str(best.value);
  witness["maximizer_ids"] = ids(pool, best.maximizers);
  witness["maximizers"] = best.maximizers.size();
  if (ok) {
    const auto value = spectra.value(shape_members.front(), y, c);
    witness[shape + "_id"] = pool.members[shape_members.front()].id;
    witness[shape + "_value"] = str(value);
    ok = value == best.value && (!unique || all_with_key(pool, best.maximizers, key));
  } else {
    witness["error"] = shape + " missing from the pool";
  }
  check.status = status_of(ok);
  check.witness = std::move(witness);
  return check;
}

VerifySuiteReport oracle_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"oracle", {}};
  const auto r = range(o, 1, 7);
  for (int v = std::max(r.lo, 1); v <= r.hi; ++v) {
    std::size_t count = 0;
    json witness = {{"connected_graphs", 0}};
    bool ok = true;
    for (const auto& g : enumerate_graphs(v, o.limits)) {
      if (!g.connected()) continue;
      ++count;
      const auto direct = sym_polys(g.laplacian(), SymPolyMethod::Automatic, o.limits);
      const auto forests = forest_oracle(g.as_multigraph(), o.limits);
      if (ok && direct != forests) {
        ok = false;
        witness["graph"] = format_graph(g);
        witness["sym_polys"] = spectrum_json(direct);
        witness["forest_oracle"] = spectrum_json(forests);
      }
    }
    witness["connected_graphs"] = count;
    report.checks.push_back({"oracle.forest", "principal-minor sums equal spanning-forest counts on every connected graph",
                             {{"v", v}}, status_of(ok), std::move(witness)});
  }
  return report;
}

VerifySuiteReport path_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"path-prop", {}};
  const auto r = range(o, 4, 8);
  Filters connected;
  connected.connected = true;
  for (int v = std::max(r.lo, 3); v <= r.hi; ++v) {
    const auto pool = enumerate_binary_designs(v, v - 1, 2, connected, Dedup::labeled, o.limits);
    const PoolSpectra spectra(pool);
    const auto path_key = canonical_key(path_design(v), o.limits);
    const auto star_key = canonical_key(star_design(v), o.limits);
    for (auto c : criteria(o)) {
      for (auto y : levels(o, {0, 1, 2, 5})) {
        if (c == Criterion::A && y == 0)
          report.checks.push_back(shape_maximizes(pool, spectra, "star", star_key, y, c, true, "path-prop.star-A0"));
        else
          report.checks.push_back(shape_maximizes(pool, spectra, "path", path_key, y, c, y > 0,
                                                  "path-prop." + to_string(c)));
      }
    }
  }
  return report;
}

// Shape of the A-optimal unicyclic design at level 0 as stated for each v.
std::pair<std::string, Design> expected_a0_unicyclic(int v) {
  if (v <= 8 || v == 12) return {"cycle", cycle_design(v)};
  if (v <= 11) return {"quadrangle-fan", fan_cycle_design(v, 4)};
  return {"triangle-fan", fan_cycle_design(v, 3)};
}

VerifySuiteReport cycle_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"cycle-prop", {}};
  const auto r = range(o, 5, 9);
  for (int v = std::max(r.lo, 3); v <= r.hi; ++v) {
    const auto pool = enumerate_connected_k2(v, v, o.limits);
    const PoolSpectra spectra(pool);
    const auto cycle_key = canonical_key(cycle_design(v), o.limits);
    for (auto c : criteria(o)) {
      for (auto y : levels(o, {0, 1, 2})) {
        if (c == Criterion::A && y == 0) {
          const auto [shape, design] = expected_a0_unicyclic(v);
          auto check = shape_maximizes(pool, spectra, shape, canonical_key(design, o.limits), y, c, true,
                                       "cycle-prop.A0-shape");
          check.witness["winner"] = format_design(pool.members[spectra.best(y, c).maximizers.front()].design);
          check.witness["winner_is_cycle"] = pool.members[spectra.best(y, c).maximizers.front()].canonical_key ==
                                             cycle_key;
          report.checks.push_back(std::move(check));
        } else {
          report.checks.push_back(
              shape_maximizes(pool, spectra, "cycle", cycle_key, y, c, true, "cycle-prop." + to_string(c)));
        }
      }
    }
  }
  return report;
}

const std::vector<std::pair<int, int>> kRegularPools = {{6, 3}, {6, 4}, {8, 3}};

VerifySuiteReport s3_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"s3-lemma", {}};
  const auto r = range(o, 1, 10);
  for (auto [v, delta] : kRegularPools) {
    if (!r.contains(v)) continue;
    const auto graphs = enumerate_regular_graphs(v, delta, o.limits);
    std::vector<ExactSpectrum> s;
    std::vector<Integer> eta;
    for (const auto& g : graphs) {
      s.push_back(sym_polys(g.laplacian(), SymPolyMethod::Automatic, o.limits));
      eta.push_back(v_subgraph_count(g));
    }
    bool ok = true;
    json pairs = json::array();
    for (std::size_t a = 0; a < graphs.size(); ++a)
      for (std::size_t b = a + 1; b < graphs.size(); ++b) {
        const Integer ds3 = s[a][3] - s[b][3];
        const Integer deta = eta[a] - eta[b];
        const bool pair_ok = s[a][1] == s[b][1] && s[a][2] == s[b][2] && 3 * ds3 == 2 * deta;
        ok = ok && pair_ok;
        pairs.push_back({{"graphs", {a, b}}, {"s3_difference", str(ds3)}, {"eta_difference", str(deta)},
                         {"holds", pair_ok}});
      }
    json members = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i)
      members.push_back({{"id", i}, {"eta", str(eta[i])}, {"spectrum", spectrum_json(s[i])}});
    report.checks.push_back({"s3-lemma.pairs",
                             "regular graphs of equal degree agree on S1, S2 and differ on S3 by 2/3 of their "
                             "V-subgraph counts",
                             {{"v", v}, {"delta", delta}},
                             status_of(ok),
                             {{"graphs", graphs.size()}, {"members", members}, {"pairs", pairs}}});
  }
  if (r.contains(6)) {
    const auto k33 = sym_polys(multipartite(2, 3).laplacian());
    Graph prism(6);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})
      prism.add_edge(a, b);
    const auto cmp = stable_compare(k33, sym_polys(prism.laplacian()));
    const bool ok = cmp.relation == Order::greater && cmp.first_differing_index == 3 && cmp.margin == 4;
    report.checks.push_back({"s3-lemma.witness", "K(3,3) leads the prism at S3 with margin 4",
                             {{"v", 6}, {"delta", 3}},
                             status_of(ok),
                             {{"relation", to_string(cmp.relation)},
                              {"index", cmp.first_differing_index.value_or(-1)},
                              {"margin", str(cmp.margin)}}});
  }
  return report;
}

VerifySuiteReport complement_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"complement", {}};
  const auto r = range(o, 1, 10);
  auto check_graph = [&](const Graph& g, json& witness) {
    const int v = g.vertex_count();
    const auto transformed = complement_sym_transform(sym_polys(g.laplacian(), SymPolyMethod::Automatic, o.limits), v);
    const auto direct = sym_polys(complement(g).laplacian(), SymPolyMethod::Automatic, o.limits);
    if (transformed == direct) return true;
    witness["graph"] = format_graph(g);
    witness["transformed"] = spectrum_json(transformed);
    witness["direct"] = spectrum_json(direct);
    return false;
  };

  // Fixed-seed generator: identical graphs on every run and platform.
  std::mt19937_64 rng(20240611);
  const int lo = std::max(r.lo, 1);
  const int hi = std::min(r.hi, 10);
  if (lo <= hi) {
    json witness;
    bool ok = true;
    std::size_t count = 0;
    for (; count < 500; ++count) {
      const int v = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
      Graph g(v);
      for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
          if (rng() & 1U) g.add_edge(a, b);
      if (!check_graph(g, witness)) {
        ok = false;
        break;
      }
    }
    witness["graphs"] = count;
    report.checks.push_back({"complement.random", "the complement transform matches direct computation",
                             {{"v_min", lo}, {"v_max", hi}, {"samples", 500}},
                             status_of(ok),
                             std::move(witness)});
  }
  for (int v = lo; v <= std::min(hi, 6); ++v) {
    json witness;
    bool ok = true;
    const auto graphs = enumerate_graphs(v, o.limits);
    for (const auto& g : graphs)
      if (!check_graph(g, witness)) {
        ok = false;
        break;
      }
    witness["graphs"] = graphs.size();
    report.checks.push_back({"complement.exhaustive", "the complement transform matches direct computation",
                             {{"v", v}}, status_of(ok), std::move(witness)});
  }
  return report;
}

Pool rgd_pool(int v, int b, const Limits& limits) {
  Filters f;
  f.rgd = true;
  return enumerate_binary_designs(v, b, 2, f, Dedup::canonical, limits);
}

// The member with key `key` beats every other member from a certified
// crossover no later than `max_y_star`, for each criterion.
void certified_winner(VerifySuiteReport& report, const Pool& pool, const std::string& name, const std::string& key,
                      const std::string& claim_id, const std::string& claim, std::optional<unsigned long> max_y_star,
                      const VerifyOptions& o) {
  const auto spectra = kernels::parallel::design_spectra(pool.designs());
  const auto found = with_key(pool, key);
  for (auto c : criteria(o)) {
    json witness;
    bool ok = !found.empty();
    json certs = json::array();
    if (ok) {
      const auto w = found.front();
      witness["winner_id"] = pool.members[w].id;
      Integer worst = 0;
      for (std::size_t i = 0; i < pool.members.size(); ++i) {
        if (i == w) continue;
        if (stable_compare(spectra[w], spectra[i]).relation != Order::greater) {
          ok = false;
          witness["not_behind_id"] = pool.members[i].id;
          break;
        }
        CrossoverOptions opts;
        opts.limits = o.limits;
        const auto cert = certified_crossover(spectra[w], spectra[i], c, opts);
        worst = std::max(worst, cert.y_star);
        certs.push_back({{"loser_id", pool.members[i].id}, {"y_star", str(cert.y_star)},
                         {"root_bound", str(cert.root_bound)}});
        if (max_y_star && cert.y_star > Integer(*max_y_star)) ok = false;
      }
      witness["max_y_star"] = str(worst);
    } else {
      witness["error"] = name + " missing from the pool";
    }
    witness["certificates"] = std::move(certs);
    report.checks.push_back({claim_id, claim,
                             {{"v", pool.v}, {"b", pool.b}, {"k", pool.k}, {"criterion", to_string(c)},
                              {"pool_size", pool.members.size()}},
                             status_of(ok),
                             std::move(witness)});
  }
}

VerifySuiteReport multipartite_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"multipartite", {}};
  const auto r = range(o, 1, 10);
  if (r.contains(6)) {
    const auto k33 = graph_design(multipartite(2, 3));
    report.checks.push_back({"multipartite.eta", "the complement of K(3,3) has no V-subgraphs", {{"m", 2}, {"alpha", 3}},
                             status_of(v_subgraph_count(complement(multipartite(2, 3))) == 0),
                             {{"eta_complement", str(v_subgraph_count(complement(multipartite(2, 3))))}}});
    certified_winner(report, rgd_pool(6, 9, o.limits), "K(3,3)", canonical_key(k33, o.limits),
                     "multipartite.K33", "K(3,3) beats every other (6,9,2) RGD for all y >= 0", 0UL, o);
    const auto k222 = graph_design(multipartite(3, 2));
    certified_winner(report, rgd_pool(6, 12, o.limits), "K(2,2,2)", canonical_key(k222, o.limits),
                     "multipartite.K222", "K(2,2,2) is the certified winner among (6,12,2) RGDs", std::nullopt, o);
  }

  // Graphs minimizing V-subgraphs of the complement form L3 and beat the
  // rest from a certified crossover on. Minimizers may tie on eta and then
  // split on later S_j.
  for (auto [v, delta] : kRegularPools) {
    if (!r.contains(v)) continue;
    const auto graphs = enumerate_regular_graphs(v, delta, o.limits);
    std::vector<Integer> eta;
    for (const auto& g : graphs) eta.push_back(v_subgraph_count(complement(g)));
    const auto min_eta = *std::min_element(eta.begin(), eta.end());
    std::vector<ExactSpectrum> spectra;
    for (const auto& g : graphs) spectra.push_back(sym_polys(g.laplacian()));
    const auto strata = stratify(spectra);
    bool ok = true;
    json members = json::array();
    std::map<Criterion, Integer> worst;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const bool minimizer = eta[i] == min_eta;
      if (minimizer && strata[i] < 3) ok = false;
      if (!minimizer && strata[i] == v - 1) ok = false;
      if (!minimizer)
        for (std::size_t w = 0; w < graphs.size(); ++w) {
          if (eta[w] != min_eta) continue;
          if (stable_compare(spectra[w], spectra[i]).relation != Order::greater) {
            ok = false;
            continue;
          }
          for (auto c : criteria(o)) {
            CrossoverOptions opts;
            opts.limits = o.limits;
            worst[c] = std::max(worst[c], certified_crossover(spectra[w], spectra[i], c, opts).y_star);
          }
        }
      members.push_back({{"id", i}, {"eta_complement", str(eta[i])}, {"stratum", strata[i]}});
    }
    json crossovers;
    for (const auto& [c, y] : worst) crossovers[to_string(c)] = str(y);
    report.checks.push_back({"multipartite.v-min",
                             "regular graphs minimizing V-subgraphs in the complement lead every other graph",
                             {{"v", v}, {"delta", delta}},
                             status_of(ok),
                             {{"members", members}, {"max_y_star", crossovers}}});
  }
  return report;
}

VerifySuiteReport bounds_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"bounds", {}};
  const auto r = range(o, 1, 10);
  const std::vector<std::array<int, 3>> pools = {{4, 3, 2}, {4, 4, 2}, {5, 5, 2}};
  for (auto [v, b, k] : pools) {
    if (!r.contains(v)) continue;
    const auto pool = enumerate_binary_designs(v, b, k, {}, Dedup::canonical, o.limits);
    const auto spectra = kernels::parallel::design_spectra(pool.designs());
    const auto strata = stratify(spectra);
    for (auto c : criteria(o)) {
      const auto bound = bound_y0(v, b, k, c);
      bool ok = true;
      std::size_t pairs = 0;
      Integer worst = 0;
      json worst_pair;
      for (std::size_t m = 0; m < spectra.size(); ++m) {
        if (strata[m] < 2) continue;
        for (std::size_t n = 0; n < spectra.size(); ++n) {
          if (strata[n] >= 2) continue;
          CrossoverOptions opts;
          opts.limits = o.limits;
          const auto cert = certified_crossover(spectra[m], spectra[n], c, opts);
          ++pairs;
          if (Rational(cert.y_star) > bound) ok = false;
          if (pairs == 1 || cert.y_star > worst) {
            worst = cert.y_star;
            worst_pair = {pool.members[m].id, pool.members[n].id};
          }
        }
      }
      report.checks.push_back({"bounds.y0", "certified crossovers from L2 members stay below bound_y0",
                               {{"v", v}, {"b", b}, {"k", k}, {"criterion", to_string(c)},
                                {"pool_size", pool.members.size()}},
                               status_of(ok),
                               {{"bound", str(bound)}, {"pairs", pairs}, {"max_y_star", str(worst)},
                                {"max_pair", worst_pair}}});
    }
  }
  if (r.contains(6)) {
    const auto pool = rgd_pool(6, 9, o.limits);
    const auto spectra = kernels::parallel::design_spectra(pool.designs());
    const auto strata = stratify(spectra);
    const auto lambda_tilde = ExtensionFamily{pool.members.front().design, unreduced_bibd(6, 2), 1}.lambda_tilde();
    const auto form = rgd_form_of(pool.members.front().design);
    for (auto c : criteria(o)) {
      const auto bound = bound_x0(6, form.delta(), c);
      bool ok = true;
      std::size_t pairs = 0;
      Integer worst = 0;
      for (std::size_t m = 0; m < spectra.size(); ++m) {
        if (strata[m] < 3) continue;
        for (std::size_t n = 0; n < spectra.size(); ++n) {
          if (strata[n] >= 3) continue;
          CrossoverOptions opts;
          opts.limits = o.limits;
          opts.level_step = static_cast<unsigned long>(lambda_tilde);
          const auto cert = certified_crossover(spectra[m], spectra[n], c, opts);
          const Integer x_star = form.lambda() + cert.y_star * lambda_tilde;
          ++pairs;
          worst = std::max(worst, x_star);
          if (Rational(x_star) > bound) ok = false;
        }
      }
      report.checks.push_back({"bounds.x0", "certified crossovers from L3 members among RGDs stay below bound_x0",
                               {{"v", 6}, {"b", 9}, {"k", 2}, {"delta", form.delta()}, {"criterion", to_string(c)}},
                               status_of(ok),
                               {{"bound", str(bound)}, {"pairs", pairs}, {"max_x_star", str(worst)}}});
    }
  }
  return report;
}

struct NamedPool {
  std::string name;
  int v;
  std::function<Pool()> make;
};

Pool graph_pool(int v, int delta, const Limits& limits) {
  Pool pool;
  pool.v = v;
  pool.b = v * delta / 2;
  pool.k = 2;
  pool.generator = "regular-graphs";
  pool.dedup = Dedup::canonical;
  for (const auto& g : enumerate_regular_graphs(v, delta, limits)) {
    auto d = graph_design(g);
    auto key = canonical_key(d, limits);
    pool.members.push_back({static_cast<int>(pool.members.size()), std::move(d), std::move(key)});
  }
  return pool;
}

std::vector<NamedPool> catalogue(const VerifyOptions& o) {
  std::vector<NamedPool> out;
  const auto limits = o.limits;
  const std::vector<std::array<int, 3>> binary = {{4, 3, 2}, {4, 4, 2}, {4, 5, 2}, {4, 6, 2}, {5, 4, 2},
                                                  {5, 5, 2}, {5, 6, 2}, {4, 3, 3}, {4, 4, 3}, {5, 4, 3},
                                                  {5, 5, 3}, {6, 4, 3}};
  for (auto [v, b, k] : binary)
    out.push_back({"binary(" + std::to_string(v) + "," + std::to_string(b) + "," + std::to_string(k) + ")", v,
                   [=] { return enumerate_binary_designs(v, b, k, {}, Dedup::canonical, limits); }});
  for (int v = 4; v <= 8; ++v)
    out.push_back({"trees(" + std::to_string(v) + ")", v, [=] { return enumerate_connected_k2(v, v - 1, limits); }});
  for (int v = 5; v <= 9; ++v)
    out.push_back({"unicyclic(" + std::to_string(v) + ")", v, [=] { return enumerate_connected_k2(v, v, limits); }});
  out.push_back({"rgd(6,9,2)", 6, [=] { return rgd_pool(6, 9, limits); }});
  out.push_back({"rgd(6,12,2)", 6, [=] { return rgd_pool(6, 12, limits); }});
  for (auto [v, delta] : std::vector<std::pair<int, int>>{{7, 2}, {7, 4}, {8, 3}, {8, 4}})
    out.push_back({"regular(" + std::to_string(v) + "," + std::to_string(delta) + ")", v,
                   [=] { return graph_pool(v, delta, limits); }});
  const auto r = range(o, 1, 10);
  std::erase_if(out, [&](const NamedPool& p) { return !r.contains(p.v); });
  return out;
}

VerifySuiteReport theorem1_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"theorem1", {}};
  const auto ys = levels(o, {1, 2, 3, 4, 5});
  for (const auto& named : catalogue(o)) {
    const auto pool = named.make();
    if (pool.members.empty()) continue;
    const PoolSpectra spectra(pool);
    const auto strata = stratify(spectra.member);
    std::vector<std::size_t> leaders;
    for (std::size_t i = 0; i < strata.size(); ++i)
      if (strata[i] == pool.v - 1) leaders.push_back(i);
    bool ok = true;
    json failure;
    for (auto c : criteria(o))
      for (auto y : ys) {
        const auto best = spectra.best(y, c);
        for (auto l : leaders)
          if (ok && spectra.value(l, y, c) != best.value) {
            ok = false;
            failure = {{"leader_id", pool.members[l].id},
                       {"leader_value", str(spectra.value(l, y, c))},
                       {"better_id", pool.members[best.maximizers.front()].id},
                       {"better_value", str(best.value)},
                       {"y", y},
                       {"criterion", to_string(c)}};
          }
      }
    json witness = {{"leader_ids", ids(pool, leaders)}, {"vacuous", leaders.empty()}};
    if (!ok) witness["counterexample"] = failure;
    report.checks.push_back({"theorem1.leaders",
                             "members attaining every maximal S_j maximize A and D at each level",
                             {{"pool", named.name}, {"pool_size", pool.members.size()}},
                             status_of(ok),
                             std::move(witness)});
  }
  return report;
}

VerifySuiteReport eigen_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"eigen-bound", {}};
  for (const auto& named : catalogue(o)) {
    const auto pool = named.make();
    const double bound = 2.0 * pool.b * (pool.k - 1) + 1e-6;
    double worst = 0.0;
    int worst_id = -1;
    for (const auto& m : pool.members) {
      const auto eig = float_eigenvalues(laplacian(m.design));
      if (!eig.empty() && eig.front() > worst) {
        worst = eig.front();
        worst_id = m.id;
      }
    }
    report.checks.push_back({"eigen-bound.rho1", "the largest Laplacian eigenvalue is at most 2b(k-1)",
                             {{"pool", named.name}, {"pool_size", pool.members.size()}},
                             status_of(worst <= bound),
                             {{"max_eigenvalue", worst}, {"member_id", worst_id}, {"bound", 2 * pool.b * (pool.k - 1)}}});
  }
  return report;
}

VerifySuiteReport power_suite(const VerifyOptions& o) {
  VerifySuiteReport report{"power-sums", {}};
  const auto r = range(o, 3, 8);
  for (int v = std::max(r.lo, 1); v <= r.hi; ++v)
    for (int delta = 0; delta < v; ++delta) {
      if ((v * delta) % 2 != 0) continue;
      const auto graphs = enumerate_regular_graphs(v, delta, o.limits);
      bool ok = true;
      std::size_t disconnected = 0;
      json witness;
      const Integer sq = Integer(v) * delta * (delta + 1);
      const Integer cube_base = Integer(v) * delta * (delta + 1) * (delta + 1);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        if (!g.connected()) ++disconnected;
        const auto p = power_sums(sym_polys(g.laplacian(), SymPolyMethod::Automatic, o.limits), 3);
        const Integer eta = v_subgraph_count(g);
        if (ok && (p[2] != sq || p[3] != cube_base + 2 * eta)) {
          ok = false;
          witness["graph"] = format_graph(g);
          witness["sum_squares"] = str(p[2]);
          witness["sum_cubes"] = str(p[3]);
          witness["eta"] = str(eta);
        }
      }
      witness["graphs"] = graphs.size();
      witness["disconnected"] = disconnected;
      report.checks.push_back({"power-sums.regular",
                               "sum psi^2 = v d(d+1) and sum psi^3 = v d(d+1)^2 + 2 eta",
                               {{"v", v}, {"delta", delta}},
                               status_of(ok),
                               std::move(witness)});
    }
  return report;
}

using SuiteFn = VerifySuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"oracle", oracle_suite},         {"path-prop", path_suite},   {"cycle-prop", cycle_suite},
      {"s3-lemma", s3_suite},           {"complement", complement_suite}, {"multipartite", multipartite_suite},
      {"bounds", bounds_suite},         {"theorem1", theorem1_suite}, {"eigen-bound", eigen_suite},
      {"power-sums", power_suite},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<VerifySuiteReport> run_suite(std::string_view name, const VerifyOptions& options) {
  std::vector<VerifySuiteReport> out;
  for (const auto& [suite, fn] : suites())
    if (name == "all" || name == suite) out.push_back(fn(options));
  if (out.empty()) throw ValidationError("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace bibdopt
