#pragma once

// The mipkit command line: subcommands, group arguments, JSON reports,
// exit codes and the fingerprint cache.

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mipkit/mipkit.hpp"

namespace mipkit::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kParse = 2, kCap = 3, kInternal = 4 };

inline const char* version() { return MIPKIT_VERSION; }

struct GroupInput {
  std::string label;
  std::string source_bytes;  // identifies the input for caching
  std::shared_ptr<const FiniteGroup> group;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Row i, column j is the index of the product i*j; 0 is the identity.
inline std::shared_ptr<const FiniteGroup> parse_mul_table(const std::string& text, const std::string& label) {
  std::vector<Elem> table;
  std::size_t rows = 0, cols = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream cells(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(cell, &used);
      } catch (const std::exception&) {
        throw ParseError("malformed entry '" + cell + "' in row " + std::to_string(rows + 1));
      }
      if (cell.find_first_not_of(" \t\r", used) != std::string::npos)
        throw ParseError("malformed entry '" + cell + "' in row " + std::to_string(rows + 1));
      table.push_back(static_cast<Elem>(v));
      ++c;
    }
    if (rows == 0) cols = c;
    if (c != cols) throw ParseError("row " + std::to_string(rows + 1) + " has " + std::to_string(c) + " entries");
    ++rows;
  }
  if (rows != cols || rows == 0) throw ParseError("multiplication table is not square");
  std::optional<unsigned> p;
  for (unsigned q : {2u, 3u, 5u, 7u})
    if (log_p(rows, q)) p = q;
  if (rows == 1) p = 2;
  if (!p) throw ParseError("group order " + std::to_string(rows) + " is not a prime power");
  if (rows > order_cap(*p)) throw CapExceeded("group order " + std::to_string(rows) + " exceeds the cap");
  auto g = std::make_shared<const FiniteGroup>(*p, std::move(table), label);
  if (!g->is_associative()) throw ParseError("multiplication table is not associative");
  return g;
}

/// A catalog name, @file.pcp or @file.mul.
inline GroupInput load_group(const std::string& arg) {
  GroupInput in;
  in.label = arg;
  if (!arg.empty() && arg[0] == '@') {
    const std::string path = arg.substr(1);
    const std::string text = read_file(path);
    const std::string ext = std::filesystem::path(path).extension().string();
    if (ext == ".mul") {
      in.group = parse_mul_table(text, path);
      in.source_bytes = "mul\n" + text;
    } else if (ext == ".pcp") {
      PcPresentation pres = parse_pc_presentation(text);
      in.source_bytes = "pcp\n" + format_pc_presentation(pres);
      in.group = build_group(pres, path);
    } else {
      throw ParseError("unknown group file type '" + ext + "' (expected .pcp or .mul)");
    }
    return in;
  }
  const CatalogEntry* e = find_catalog_entry(arg);
  if (!e) throw ParseError("unknown group '" + arg + "'");
  in.source_bytes = "pcp\n" + format_pc_presentation(parse_pc_presentation(e->presentation));
  in.group = build_entry(*e);
  return in;
}

// ---------------------------------------------------------------------------
// Cache

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream s;
  for (unsigned i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

inline std::filesystem::path cache_dir() {
  if (const char* d = std::getenv("MIPKIT_CACHE_DIR"); d && *d) return d;
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "mipkit";
  return std::filesystem::temp_directory_path() / "mipkit-cache";
}

inline std::string cache_key(const GroupInput& in, const FingerprintOptions& opt) {
  std::ostringstream s;
  s << in.source_bytes << "\ndepth=" << opt.depth << "\ntmax=" << opt.t_max << "\npairs=" << opt.pair_depth
    << "\nversion=" << version() << "\n";
  return sha256_hex(s.str());
}

struct CacheOptions {
  bool enabled = true;
  bool verbose = false;
};

/// Canonical fingerprint JSON, read from or written to the cache.
inline json cached_fingerprint(const GroupInput& in, FingerprintOptions opt, const CacheOptions& cache,
                               std::ostream& err) {
  if (!opt.t_max) opt.t_max = default_t_max(*in.group);
  if (!cache.enabled) return to_json(fingerprint(in.group, opt));
  const auto path = cache_dir() / (cache_key(in, opt) + ".json");
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      json j = json::parse(read_file(path.string()));
      if (j.is_object() && j.contains("catalog")) {
        if (cache.verbose) err << "cache hit: " << path.string() << "\n";
        return j;
      }
    } catch (const std::exception&) {
    }
    err << "warning: corrupt cache entry " << path.string() << ", recomputing\n";
  }
  json j = to_json(fingerprint(in.group, opt));
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) err << "warning: could not write cache entry " << path.string() << "\n";
  if (cache.verbose) err << "cache miss: " << path.string() << "\n";
  return j;
}

// ---------------------------------------------------------------------------
// Reports

inline json group_summary(const GroupInput& in) {
  return {{"name", in.label}, {"p", in.group->p()}, {"order", in.group->order()}};
}

inline json to_json(const FpMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<unsigned> r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
    rows.push_back(r);
  }
  return rows;
}

inline json to_json(const FpVector& v) {
  std::vector<unsigned> r;
  for (std::size_t i = 0; i < v.size(); ++i) r.push_back(v[i]);
  return r;
}

inline json decomposition_report(const HomocyclicDecomposition& d, bool trace) {
  const FiniteGroup& g = *d.group;
  json r;
  SubgroupGroup nab = as_group(g, d.nab);
  r["nab"] = {{"order", d.nab.order()},
              {"generators", d.nab_generators},
              {"abelian", nab.group->is_abelian()},
              {"abelianization_type",
               mipkit::to_json(section_type(nab.group, whole(*nab.group), commutator_subgroup(*nab.group)))}};
  r["ab_type"] = mipkit::to_json(d.ab_type());
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back({{"t", c.t}, {"rank", c.rank}, {"generators", c.generators}});
  r["components"] = comps;
  json checks = json::array();
  bool all = true;
  for (const auto& c : component_checks(d)) {
    all = all && c.all();
    checks.push_back({{"t", c.t},
                      {"in_omega_center", c.in_omega_center},
                      {"rank_matches_frattini_image", c.rank_matches_frattini_image},
                      {"complement_keeps_series", c.complement_keeps_series},
                      {"meets_series_trivially", c.meets_series_trivially},
                      {"lambda_injective", c.lambda_injective}});
  }
  r["certificate"] = {{"direct_product_verified", true},
                      {"component_checks", checks},
                      {"component_checks_pass", all},
                      {"formula_ab_type", mipkit::to_json(ab_type_by_formula(d.group))}};
  if (trace) {
    json steps = json::array();
    for (const auto& s : d.trace)
      steps.push_back({{"t", s.t},
                       {"residual_order", s.residual_order},
                       {"rank", s.rank},
                       {"complement_order", s.complement_order},
                       {"component_generators", s.component_generators},
                       {"complement_generators", s.complement_generators}});
    r["peel_trace"] = steps;
  }
  return r;
}

inline json error_object(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}, {"version", version()}};
}

/// Runs the CLI; the JSON report goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular group algebra invariants and homocyclic decompositions of small p-groups", "mipkit"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  std::string g1, g2;
  std::size_t depth = 2, pair_depth = 1;
  unsigned tmax = 0;
  bool no_cache = false, timing = false, verbose = false, peel_trace = false;
  std::string show;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--timing", timing, "Include wall-clock timings in the report");
    c->add_flag("--verbose", verbose, "Report cache activity on stderr");
  };
  auto add_fp = [&](CLI::App* c) {
    c->add_option("--depth", depth, "Catalog nesting depth")->check(CLI::Range(1, 4));
    c->add_option("--tmax", tmax, "Largest t in the catalog (default log_p(exp G) + 1)")->check(CLI::Range(1, 16));
    c->add_option("--pair-depth", pair_depth, "Catalog depth for (L, N) pair invariants")->check(CLI::Range(1, 4));
    c->add_flag("--no-cache", no_cache, "Do not read or write the fingerprint cache");
  };

  auto* analyze = app.add_subcommand("analyze", "Fingerprint of a group");
  analyze->add_option("group", g1, "Catalog name, @file.pcp or @file.mul")->required();
  add_fp(analyze);
  add_common(analyze);

  auto* cmp = app.add_subcommand("compare", "Compare the fingerprints of two groups");
  cmp->add_option("group1", g1)->required();
  cmp->add_option("group2", g2)->required();
  add_fp(cmp);
  add_common(cmp);

  auto* dec = app.add_subcommand("decompose", "Split G = NAb(G) x Ab(G) into homocyclic components");
  dec->add_option("group", g1)->required();
  dec->add_flag("--peel-trace", peel_trace, "Include the per-step peeling log");
  add_common(dec);

  auto* iso = app.add_subcommand("iso-search", "Exhaustive search for an explicit algebra isomorphism");
  iso->add_option("group1", g1)->required();
  iso->add_option("group2", g2)->required();
  add_common(iso);

  auto* cat = app.add_subcommand("catalog", "List the built-in groups");
  cat->add_option("--show", show, "Print the presentation of one entry instead");

  auto* self = app.add_subcommand("selftest", "Check every catalog entry against its expected facts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_object("usage", e.what()).dump(2) << "\n";
    return kParse;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  report["version"] = version();
  std::vector<std::string> command;
  for (int i = 1; i < argc; ++i) command.emplace_back(argv[i]);
  report["command"] = command;
  FingerprintOptions fopt{depth, tmax, pair_depth};
  CacheOptions copt{!no_cache, verbose};
  int code = kOk;

  try {
    if (*analyze) {
      GroupInput in = load_group(g1);
      report["inputs"] = {group_summary(in)};
      json fp = cached_fingerprint(in, fopt, copt, err);
      report["result"] = {{"group", in.label}, {"fingerprint", fp}};
    } else if (*cmp) {
      GroupInput a = load_group(g1), b = load_group(g2);
      report["inputs"] = {group_summary(a), group_summary(b)};
      if (a.group->p() != b.group->p()) throw DimensionMismatch("compare: groups for different primes");
      if (!fopt.t_max) fopt.t_max = std::max(default_t_max(*a.group), default_t_max(*b.group));
      json fa = cached_fingerprint(a, fopt, copt, err), fb = cached_fingerprint(b, fopt, copt, err);
      json verdict;
      verdict["depth"] = fopt.depth;
      verdict["t_max"] = fopt.t_max;
      verdict["indistinguishable_at_depth"] = true;
      for (const char* k : {"order", "jennings", "d", "ab_type"})
        if (fa[k] != fb[k]) {
          verdict = {{"distinguished_by", k}, {"left", fa[k]}, {"right", fb[k]}};
          break;
        }
      if (!verdict.contains("distinguished_by")) {
        const json& ca = fa["catalog"];
        const json& cb = fb["catalog"];
        for (auto it = ca.begin(); it != ca.end(); ++it)
          if (!cb.contains(it.key()) || cb[it.key()] != it.value()) {
            verdict = {{"distinguished_by", "catalog/" + it.key()},
                       {"left", it.value()},
                       {"right", cb.contains(it.key()) ? cb[it.key()] : json(nullptr)}};
            break;
          }
      }
      if (verdict.contains("distinguished_by")) {
        verdict["depth"] = fopt.depth;
        verdict["t_max"] = fopt.t_max;
      }
      // the square of the augmentation ideal, the first layer where C8 and C4 x C2 differ
      if (a.group->order() <= 64 && b.group->order() <= 64) {
        GroupAlgebra aa(a.group), ab(b.group);
        std::vector<std::size_t> da, db;
        for (const auto& s : aa.augmentation_powers()) da.push_back(s.dim());
        for (const auto& s : ab.augmentation_powers()) db.push_back(s.dim());
        verdict["augmentation_power_dims"] = {da, db};
      }
      report["result"] = verdict;
    } else if (*dec) {
      GroupInput in = load_group(g1);
      report["inputs"] = {group_summary(in)};
      report["result"] = decomposition_report(ab_nab_split(in.group), peel_trace);
    } else if (*iso) {
      GroupInput a = load_group(g1), b = load_group(g2);
      report["inputs"] = {group_summary(a), group_summary(b)};
      GroupAlgebra aa(a.group), ab(b.group);
      IsoSearchResult r = iso_search(aa, ab);
      json res = {{"found", r.witness.has_value()},
                  {"search_space", r.search_space},
                  {"candidates_after_pruning", r.candidates},
                  {"relation_passes", r.relation_passes}};
      if (r.witness) {
        json images = json::array();
        for (const auto& u : r.witness->images) images.push_back(to_json(u));
        res["witness"] = {{"generators", r.witness->generators},
                          {"images", images},
                          {"matrix", to_json(r.witness->matrix)}};
      } else {
        res["witness"] = nullptr;
      }
      report["result"] = res;
    } else if (*cat) {
      if (!show.empty()) {
        const CatalogEntry* e = find_catalog_entry(show);
        if (!e) throw ParseError("unknown group '" + show + "'");
        out << format_pc_presentation(parse_pc_presentation(e->presentation));
        return kOk;
      }
      json entries = json::array();
      for (const auto& e : builtin_catalog())
        entries.push_back({{"name", e.name},
                           {"order", e.order},
                           {"center_order", e.center_order},
                           {"derived_order", e.derived_order},
                           {"exponent", e.exponent},
                           {"abelian_type", e.abelian ? mipkit::to_json(*e.abelian) : json(nullptr)}});
      report["result"] = {{"entries", entries}};
    } else if (*self) {
      json failures = json::array();
      for (const auto& e : builtin_catalog())
        for (const auto& f : selftest_entry(e)) failures.push_back(f);
      report["result"] = {{"entries", builtin_catalog().size()}, {"failures", failures}, {"passed", failures.empty()}};
      if (!failures.empty()) code = kInternal;
    }
  } catch (const ParseError& e) {
    out << error_object("parse", e.what()).dump(2) << "\n";
    return kParse;
  } catch (const NotContained& e) {
    out << error_object("input", e.what()).dump(2) << "\n";
    return kParse;
  } catch (const DimensionMismatch& e) {
    out << error_object("input", e.what()).dump(2) << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    out << error_object("cap", e.what()).dump(2) << "\n";
    return kCap;
  } catch (const std::exception& e) {
    out << error_object("internal", e.what()).dump(2) << "\n";
    return kInternal;
  }

  if (timing)
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace mipkit::cli
