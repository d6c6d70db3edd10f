#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bibdopt/canonical.hpp"
#include "bibdopt/design.hpp"
#include "bibdopt/enumeration.hpp"
#include "bibdopt/errors.hpp"
#include "bibdopt/kernels.hpp"
#include "bibdopt/optimality.hpp"
#include "bibdopt/spectrum.hpp"
#include "bibdopt/verify.hpp"

namespace bibdopt::cli {

using json = nlohmann::ordered_json;

std::vector<unsigned long> parse_levels(const std::string& text) {
  std::vector<unsigned long> out;
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ValidationError("bad level '" + s + "' in --y " + text);
    return std::stoul(s);
  };
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const auto lo = number(item.substr(0, dots));
    const auto hi = number(item.substr(dots + 2));
    if (hi < lo) throw ValidationError("empty level range '" + item + "'");
    if (hi - lo > 100000) throw ScaleCapError("level range '" + item + "' is too long");
    for (auto y = lo; y <= hi; ++y) out.push_back(y);
  }
  if (out.empty()) throw ValidationError("no levels in --y");
  return out;
}

namespace {

struct Shared {
  bool json = false;
  bool seedless = true;
  int cap_vertices = 0;

  Limits limits() const {
    Limits l;
    if (cap_vertices > 0) {
      l.forest_oracle_max_vertices = std::min(l.forest_oracle_max_vertices, cap_vertices);
      l.exact_canonical_max_vertices = std::min(l.exact_canonical_max_vertices, cap_vertices);
      l.regular_enumeration_max_vertices = std::min(l.regular_enumeration_max_vertices, cap_vertices);
      l.graph_enumeration_max_vertices = std::min(l.graph_enumeration_max_vertices, cap_vertices);
    }
    return l;
  }

  void check_vertices(int v) const {
    if (cap_vertices > 0 && v > cap_vertices)
      throw ScaleCapError("v = " + std::to_string(v) + " exceeds --cap-vertices " + std::to_string(cap_vertices));
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Design load_design(const std::string& path) {
  const auto text = read_file(path);
  try {
    return parse_design(text);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Design load_bibd(const std::string& spec, const Design& like) {
  if (spec == "unreduced") return unreduced_bibd(like.v(), like.k());
  auto bibd = load_design(spec);
  if (!classify(bibd).bibd) throw ValidationError(spec + " is not a BIBD");
  if (bibd.v() != like.v() || bibd.k() != like.k())
    throw ValidationError(spec + " does not match v = " + std::to_string(like.v()) + ", k = " + std::to_string(like.k()));
  return bibd;
}

json value_record(Criterion c, unsigned long y, const json& id, const Rational& value) {
  return {{"criterion", to_string(c)},
          {"y", y},
          {"design_id", id},
          {"value_num", value.get_num().get_str()},
          {"value_den", value.get_den().get_str()}};
}

std::string describe(const DesignClass& c) {
  std::ostringstream s;
  s << (c.binary ? "binary" : "non-binary") << (c.connected ? " connected" : " disconnected");
  if (c.equireplicate) s << " equireplicate(r=" << *c.r << ")";
  if (c.rgd) s << " rgd(lambda=" << *c.lambda << ", delta=" << *c.delta << ")";
  if (c.bibd) s << " bibd(lambda=" << *c.bibd_lambda << ")";
  return s.str();
}

json class_json(const DesignClass& c) {
  json out = {{"binary", c.binary}, {"connected", c.connected}, {"equireplicate", c.equireplicate},
              {"rgd", c.rgd}, {"bibd", c.bibd}};
  out["r"] = c.r ? json(*c.r) : json(nullptr);
  out["lambda"] = c.lambda ? json(*c.lambda) : json(nullptr);
  out["delta"] = c.delta ? json(*c.delta) : json(nullptr);
  out["bibd_lambda"] = c.bibd_lambda ? json(*c.bibd_lambda) : json(nullptr);
  return out;
}

std::string spectrum_text(const ExactSpectrum& s) {
  std::string out;
  for (const auto& x : s.s) out += (out.empty() ? "" : " ") + x.get_str();
  return out;
}

std::vector<Criterion> criteria_of(const std::string& text) {
  if (text == "both") return {Criterion::D, Criterion::A};
  return {parse_criterion(text)};
}

int cmd_analyze(const Shared& sh, const std::string& path, const std::string& ys_text, std::ostream& out) {
  const auto d = load_design(path);
  sh.check_vertices(d.v());
  const auto ys = parse_levels(ys_text);
  const auto cls = classify(d);
  const auto s = sym_polys(laplacian(d), SymPolyMethod::Automatic, sh.limits());
  if (sh.json) {
    json head = {{"record", "analysis"}, {"design_id", path}, {"v", d.v()}, {"b", d.b()}, {"k", d.k()}};
    head["class"] = class_json(cls);
    head["spectrum"] = json::array();
    for (const auto& x : s.s) head["spectrum"].push_back(x.get_str());
    out << head.dump() << '\n';
  } else {
    out << "design " << path << ": v=" << d.v() << " b=" << d.b() << " k=" << d.k() << '\n';
    out << "class: " << describe(cls) << '\n';
    out << "S_0..S_" << s.degree() << ": " << spectrum_text(s) << '\n';
    if (cls.bibd) out << "all non-trivial eigenvalues equal\n";
    out << "criterion values (maximize):\n";
  }
  for (auto c : {Criterion::D, Criterion::A})
    for (auto y : ys) {
      const auto a = a_value(s, Integer(y));
      const Rational value = c == Criterion::D ? Rational(d_value(s, Integer(y))) : a.value;
      const bool degenerate = value == 0;
      if (sh.json) {
        auto rec = value_record(c, y, path, value);
        rec["degenerate"] = degenerate;
        out << rec.dump() << '\n';
      } else {
        out << "  " << to_string(c) << "  y=" << y << "  " << to_string(value);
        if (degenerate) out << "  (disconnected)";
        out << '\n';
      }
    }
  return ok;
}

struct Candidate {
  json id;
  Design design;
};

std::vector<Candidate> load_candidates(const std::string& pool_path, const std::vector<std::string>& files) {
  std::vector<Candidate> out;
  if (!pool_path.empty()) {
    const auto pool = deserialize_pool(read_file(pool_path));
    for (const auto& m : pool.members) out.push_back({m.id, m.design});
  }
  for (const auto& f : files) out.push_back({f, load_design(f)});
  if (out.empty()) throw ValidationError("nothing to rank: pass --pool or design files");
  for (const auto& c : out)
    if (c.design.v() != out.front().design.v() || c.design.b() != out.front().design.b() ||
        c.design.k() != out.front().design.k())
      throw ValidationError("designs must share v, b and k");
  return out;
}

int cmd_rank(const Shared& sh, const std::string& pool_path, const std::vector<std::string>& files,
             const std::string& criterion, const std::string& ys_text, std::ostream& out) {
  const auto candidates = load_candidates(pool_path, files);
  sh.check_vertices(candidates.front().design.v());
  std::vector<Design> designs;
  for (const auto& c : candidates) designs.push_back(c.design);
  const auto spectra = kernels::parallel::design_spectra(designs);
  for (auto c : criteria_of(criterion))
    for (auto y : parse_levels(ys_text)) {
      const auto ranked = rank_pool(spectra, Integer(y), c);
      if (!sh.json) out << "rank by " << to_string(c) << " (maximize) at y=" << y << ":\n";
      for (const auto& m : ranked) {
        if (sh.json) {
          auto rec = value_record(c, y, candidates[m.index].id, m.value);
          rec["rank"] = m.rank;
          rec["tied"] = m.tied;
          out << rec.dump() << '\n';
        } else {
          const auto& id = candidates[m.index].id;
          out << "  " << std::setw(4) << m.rank << "  " << (id.is_string() ? id.get<std::string>() : id.dump())
              << "  " << to_string(m.value) << (m.tied ? "  (tie)" : "") << '\n';
        }
      }
    }
  return ok;
}

int cmd_crossover(const Shared& sh, const std::string& a_path, const std::string& b_path, const std::string& criterion,
                  const std::string& bibd_spec, std::ostream& out) {
  const auto a = load_design(a_path);
  const auto b = load_design(b_path);
  if (a.v() != b.v() || a.b() != b.b() || a.k() != b.k()) throw ValidationError("designs must share v, b and k");
  sh.check_vertices(a.v());
  const auto bibd = load_bibd(bibd_spec, a);
  const auto step = ExtensionFamily{a, bibd, 1}.lambda_tilde();
  const auto sa = sym_polys(laplacian(a), SymPolyMethod::Automatic, sh.limits());
  const auto sb = sym_polys(laplacian(b), SymPolyMethod::Automatic, sh.limits());
  const auto order = stable_compare(sa, sb);
  const bool a_wins = order.relation != Order::less;
  const auto& winner = a_wins ? a_path : b_path;
  const auto& loser = a_wins ? b_path : a_path;
  for (auto c : criteria_of(criterion)) {
    CrossoverOptions opts;
    opts.level_step = static_cast<unsigned long>(step);
    opts.limits = sh.limits();
    const auto cert = a_wins ? certified_crossover(sa, sb, c, opts) : certified_crossover(sb, sa, c, opts);
    const std::string status = cert.distinguishable ? "certified" : "indistinguishable";
    if (sh.json) {
      json rec = {{"winner", winner},
                  {"loser", loser},
                  {"criterion", to_string(c)},
                  {"status", status},
                  {"y_star", cert.y_star.get_str()},
                  {"root_bound", to_string(cert.root_bound)},
                  {"root_bound_kind", to_string(cert.root_bound_kind)},
                  {"level_step", step},
                  {"checked_to", cert.checked_to.get_str()}};
      rec["first_differing_index"] = order.first_differing_index ? json(*order.first_differing_index) : json(nullptr);
      out << rec.dump() << '\n';
    } else {
      out << "criterion " << to_string(c) << " (maximize): ";
      if (!cert.distinguishable) {
        out << "indistinguishable (equal spectra), y_star=0\n";
        continue;
      }
      out << winner << " beats " << loser << " for every y >= " << cert.y_star.get_str() << '\n';
      out << "  stable order differs first at S_" << *order.first_differing_index << "; root bound "
          << to_string(cert.root_bound) << " (" << to_string(cert.root_bound_kind) << "), checked y in [0, "
          << cert.checked_to.get_str() << "]\n";
    }
  }
  return ok;
}

int cmd_bounds(const Shared& sh, int v, int b, int k, std::optional<int> delta, const std::string& criterion,
               std::ostream& out) {
  for (auto c : criteria_of(criterion)) {
    const auto y0 = bound_y0(v, b, k, c);
    if (sh.json) {
      json rec = {{"criterion", to_string(c)}, {"v", v}, {"b", b}, {"k", k}, {"y0", to_string(y0)}};
      if (delta) {
        rec["delta"] = *delta;
        rec["x0"] = to_string(bound_x0(v, *delta, c));
      }
      out << rec.dump() << '\n';
    } else {
      out << to_string(c) << ": y0 = " << to_string(y0);
      if (delta) out << ", x0 = " << to_string(bound_x0(v, *delta, c)) << " (delta=" << *delta << ")";
      out << '\n';
    }
  }
  return ok;
}

int cmd_extend(const Shared& sh, const std::string& path, const std::string& bibd_spec, unsigned y, std::ostream& out) {
  const auto base = load_design(path);
  sh.check_vertices(base.v());
  const ExtensionFamily family{base, load_bibd(bibd_spec, base), y};
  const auto extended = family.extended();
  if (sh.json) {
    json rec = {{"v", extended.v()}, {"b", extended.b()}, {"k", extended.k()}, {"y", y},
                {"lambda_tilde", family.lambda_tilde()}, {"level", family.level()}};
    rec["x"] = family.x() ? json(*family.x()) : json(nullptr);
    auto blocks = json::array();
    for (const auto& block : extended.blocks()) {
      auto one = json::array();
      for (int t : block) one.push_back(t + 1);
      blocks.push_back(one);
    }
    rec["blocks"] = blocks;
    out << rec.dump() << '\n';
  } else {
    out << format_design(extended);
  }
  return ok;
}

std::optional<bool> tri_state(const std::string& text, const char* name) {
  if (text.empty() || text == "any") return std::nullopt;
  if (text == "true" || text == "yes") return true;
  if (text == "false" || text == "no") return false;
  throw ValidationError(std::string("--") + name + " takes true, false or any");
}

int cmd_enumerate(const Shared& sh, int v, int b, int k, const std::string& connected, const std::string& equi,
                  const std::string& rgd, const std::string& dedup, const std::string& generator,
                  const std::string& output, std::ostream& out) {
  sh.check_vertices(v);
  if (dedup != "labeled" && dedup != "canonical") throw ValidationError("--dedup takes labeled or canonical");
  Pool pool;
  if (generator == "connected-k2") {
    if (k != 2) throw ValidationError("the connected-k2 generator needs k = 2");
    pool = enumerate_connected_k2(v, b, sh.limits());
  } else if (generator == "multisets") {
    Filters f{tri_state(connected, "connected"), tri_state(equi, "equireplicate"), tri_state(rgd, "rgd")};
    pool = enumerate_binary_designs(v, b, k, f, dedup == "labeled" ? Dedup::labeled : Dedup::canonical, sh.limits());
  } else {
    throw ValidationError("unknown generator '" + generator + "'");
  }
  if (!output.empty()) save_pool(pool, output);
  if (sh.json) {
    out << serialize_pool(pool);
  } else {
    out << "pool (" << v << "," << b << "," << k << ") generator=" << pool.generator << " dedup=" << to_string(pool.dedup)
        << ": " << pool.members.size() << " members\n";
    for (const auto& m : pool.members) {
      out << "  " << std::setw(5) << m.id << "  ";
      for (std::size_t i = 0; i < m.design.blocks().size(); ++i) {
        out << (i ? " " : "") << '{';
        const auto& block = m.design.blocks()[i];
        for (std::size_t j = 0; j < block.size(); ++j) out << (j ? "," : "") << block[j] + 1;
        out << '}';
      }
      out << '\n';
    }
  }
  return ok;
}

std::pair<std::optional<int>, std::optional<int>> vertex_range(const std::string& text) {
  if (text.empty()) return {};
  const auto levels = parse_levels(text);
  return {static_cast<int>(*std::min_element(levels.begin(), levels.end())),
          static_cast<int>(*std::max_element(levels.begin(), levels.end()))};
}

int cmd_verify(const Shared& sh, const std::string& suite, const std::string& vs, const std::string& ys,
               const std::string& criterion, std::ostream& out) {
  VerifyOptions opts;
  std::tie(opts.v_min, opts.v_max) = vertex_range(vs);
  if (sh.cap_vertices > 0) {
    opts.v_max = std::min(opts.v_max.value_or(sh.cap_vertices), sh.cap_vertices);
    if (opts.v_min && *opts.v_min > *opts.v_max) sh.check_vertices(*opts.v_min);
  }
  if (!ys.empty()) opts.ys = parse_levels(ys);
  if (criterion != "both") opts.criterion = parse_criterion(criterion);
  opts.limits = sh.limits();
  bool all_ok = true;
  for (const auto& report : run_suite(suite, opts)) {
    all_ok = all_ok && report.ok();
    if (sh.json) {
      out << to_json(report).dump() << '\n';
      continue;
    }
    out << "suite " << report.suite << ": " << report.passed() << " pass, " << report.failed() << " fail\n";
    for (const auto& c : report.checks)
      out << "  " << (c.status == CheckStatus::pass ? "PASS" : "FAIL") << "  " << c.claim_id << "  "
          << c.parameters.dump() << (c.status == CheckStatus::fail ? "  witness " + c.witness.dump() : "") << '\n';
  }
  return all_ok ? ok : suite_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact A- and D-optimality for extended block designs", "bibdopt"};
  app.fallthrough();
  app.require_subcommand(1);
  Shared sh;
  app.add_flag("--json", sh.json, "JSON-lines output");
  app.add_option("--cap-vertices", sh.cap_vertices, "refuse work above this many treatments")->check(CLI::PositiveNumber);
  app.add_flag("--seedless", sh.seedless, "no randomness (always on)");

  std::string ys = "0";
  std::string criterion = "both";
  std::string bibd = "unreduced";

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "classification, spectrum and A/D values of a design");
  analyze->add_option("design", analyze_path)->required();
  analyze->add_option("--y", ys, "levels, e.g. 0,1,2 or 0..5");

  std::string pool_path;
  std::vector<std::string> rank_files;
  auto* rank = app.add_subcommand("rank", "rank a pool or design files by exact criterion value");
  rank->add_option("designs", rank_files);
  rank->add_option("--pool", pool_path, "pool file (JSON-lines)");
  rank->add_option("--criterion", criterion)->check(CLI::IsMember({"A", "D", "both"}));
  rank->add_option("--y", ys);

  std::string a_path;
  std::string b_path;
  auto* crossover = app.add_subcommand("crossover", "certified level from which the stable-order winner stays ahead");
  crossover->add_option("design-a", a_path)->required();
  crossover->add_option("design-b", b_path)->required();
  crossover->add_option("--criterion", criterion)->check(CLI::IsMember({"A", "D", "both"}));
  crossover->add_option("--bibd", bibd, "unreduced or a BIBD design file");

  int v = 0;
  int b = 0;
  int k = 0;
  std::optional<int> delta;
  auto* bounds = app.add_subcommand("bounds", "stable-order thresholds y0 and x0");
  bounds->add_option("--v", v)->required();
  bounds->add_option("--b", b)->required();
  bounds->add_option("--k", k)->required();
  bounds->add_option("--delta", delta, "residual degree for x0");
  bounds->add_option("--criterion", criterion)->check(CLI::IsMember({"A", "D", "both"}));

  std::string extend_path;
  unsigned extend_y = 1;
  auto* extend = app.add_subcommand("extend", "append y copies of a BIBD");
  extend->add_option("design", extend_path)->required();
  extend->add_option("--bibd", bibd);
  extend->add_option("--y", extend_y);

  std::string connected;
  std::string equi;
  std::string rgd;
  std::string dedup = "labeled";
  std::string generator = "multisets";
  std::string output;
  auto* enumerate = app.add_subcommand("enumerate", "generate a design pool");
  enumerate->add_option("--v", v)->required();
  enumerate->add_option("--b", b)->required();
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--connected", connected, "true, false or any");
  enumerate->add_option("--equireplicate", equi, "true, false or any");
  enumerate->add_option("--rgd", rgd, "true, false or any");
  enumerate->add_option("--dedup", dedup, "labeled or canonical");
  enumerate->add_option("--generator", generator, "multisets or connected-k2");
  enumerate->add_option("--output", output, "also write the pool file here");

  std::string suite;
  std::string vs;
  std::string verify_ys;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--v", vs, "vertex counts, e.g. 4..7");
  verify->add_option("--y", verify_ys, "levels");
  verify->add_option("--criterion", criterion)->check(CLI::IsMember({"A", "D", "both"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : validation;
  }

  try {
    if (*analyze) return cmd_analyze(sh, analyze_path, ys, out);
    if (*rank) return cmd_rank(sh, pool_path, rank_files, criterion, ys, out);
    if (*crossover) return cmd_crossover(sh, a_path, b_path, criterion, bibd, out);
    if (*bounds) return cmd_bounds(sh, v, b, k, delta, criterion, out);
    if (*extend) return cmd_extend(sh, extend_path, bibd, extend_y, out);
    if (*enumerate)
      return cmd_enumerate(sh, v, b, k, connected, equi, rgd, dedup, generator, output, out);
    if (*verify) return cmd_verify(sh, suite, vs, verify_ys, criterion, out);
  } catch (const ScaleCapError& e) {
    err << "scale cap: " << e.what() << '\n';
    return scale_cap;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return validation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return validation;
  }
  return validation;
}

}  // namespace bibdopt::cli
