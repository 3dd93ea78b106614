// Command-line front end: enumerate orbits of mutually orthogonal positive
// roots, classify admissibility, build monoidal posets, emit value tables
// and verify the monoid representation, and reproduce the orbit catalog.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "orthoposet/h_elements.hpp"
#include "orthoposet/representation.hpp"
#include "orthoposet/root_parse.hpp"
#include "orthoposet/tables.hpp"

using namespace orthoposet;

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string type;
  int size = -1;
  int variant = 0;
  int k = 0;
  std::string roots;
  std::string format;
  std::string out;
  int budget = 100;
  int jobs = 0;
  std::string emit_matrices;
};

int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::string path = cfg.out;
  const char* dir = std::getenv("ORTHOPOSET_OUT_DIR");
  if (dir && *dir && path.front() != '/') path = std::string(dir) + "/" + path;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << content;
}

OrthoSet resolve_seed(const RootSystem& rs, const RunConfig& cfg) {
  if (!cfg.roots.empty()) {
    if (cfg.size >= 0)
      throw CLI::ValidationError("give either --roots or --size, not both");
    return parse_root_list(rs, cfg.roots);
  }
  if (cfg.size < 0)
    throw CLI::ValidationError("a seed is required: --roots or --size/--variant");
  return seed_from_table(rs, cfg.size, cfg.variant, cfg.k);
}

RootSystem system_of(const RunConfig& cfg) {
  if (cfg.type.empty()) throw CLI::ValidationError("--type is required");
  return RootSystem::build(DiagramType::parse(cfg.type));
}

std::string orbit_summary(const OrbitData& orbit, bool adm_def, bool adm_moves) {
  std::ostringstream os;
  os << orbit.rs->dtype().name() << " orbit of {";
  for (size_t i = 0; i < orbit.seed.size(); ++i)
    os << (i ? "," : "") << orbit.rs->root_repr(orbit.seed[i]);
  os << "}: " << orbit.size() << " members, admissible: "
     << (adm_def ? "yes" : "no");
  if (adm_def != adm_moves) os << " [CRITERIA DISAGREE]";
  return os.str();
}

int cmd_orbits(const RunConfig& cfg) {
  RootSystem rs = system_of(cfg);
  OrbitData orbit = enumerate_orbit(rs, resolve_seed(rs, cfg));
  bool adm_def = is_admissible_def(orbit);
  bool adm_moves = is_admissible_moves(orbit);
  if (cfg.format == "json")
    emit(cfg, orbit_to_json(orbit, adm_def));
  else
    emit(cfg, orbit_summary(orbit, adm_def, adm_moves));
  return adm_def == adm_moves ? 0 : kExitVerificationFailure;
}

int cmd_admissible(const RunConfig& cfg) {
  RootSystem rs = system_of(cfg);
  OrbitData orbit = enumerate_orbit(rs, resolve_seed(rs, cfg));
  bool adm_def = is_admissible_def(orbit);
  bool adm_moves = is_admissible_moves(orbit);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << "{\"diagram\": \"" << rs.dtype().name() << "\", \"orbit_size\": "
       << orbit.size() << ", \"admissible_def\": " << (adm_def ? "true" : "false")
       << ", \"admissible_moves\": " << (adm_moves ? "true" : "false") << "}";
  } else {
    os << orbit_summary(orbit, adm_def, adm_moves)
       << "\n  by definition:   " << (adm_def ? "admissible" : "non-admissible")
       << "\n  by moved counts: " << (adm_moves ? "admissible" : "non-admissible");
  }
  emit(cfg, os.str());
  return adm_def == adm_moves ? 0 : kExitVerificationFailure;
}

int cmd_poset(const RunConfig& cfg) {
  RootSystem rs = system_of(cfg);
  MonoidalPoset p = build_poset(rs, enumerate_orbit(rs, resolve_seed(rs, cfg)));
  if (cfg.format == "json") {
    emit(cfg, poset_to_json(p));
  } else if (cfg.format == "dot" || cfg.format.empty()) {
    emit(cfg, poset_to_dot(p));
  } else {
    std::ostringstream os;
    auto [nodes, ctype] = compute_C(p);
    os << rs.dtype().name() << " poset: " << p.size() << " members, maximal member {";
    const OrthoSet& b0 = maximal_element(p);
    for (size_t i = 0; i < b0.size(); ++i) os << (i ? "," : "") << rs.root_repr(b0[i]);
    os << "}, levels 0.." << *std::max_element(p.level.begin(), p.level.end())
       << ", C = {";
    for (size_t i = 0; i < nodes.size(); ++i) os << (i ? "," : "") << nodes[i];
    os << "} of type " << ctype;
    emit(cfg, os.str());
  }
  return 0;
}

int cmd_h_table(const RunConfig& cfg) {
  RootSystem rs = system_of(cfg);
  MonoidalPoset p = build_poset(rs, enumerate_orbit(rs, resolve_seed(rs, cfg)));
  HTable ht = build_h_table(p);
  HBudget budget;
  budget.sampled_chains = cfg.budget;
  HReport wd = verify_h_well_defined(p, ht, budget);
  if (cfg.format == "json") {
    emit(cfg, h_table_to_json(p, ht));
  } else {
    std::ostringstream os;
    int entries = 0;
    for (int m = 0; m < p.size(); ++m)
      for (int i = 1; i <= rs.rank(); ++i) entries += ht.defined(m, i);
    os << rs.dtype().name() << " value table: " << entries << " entries, "
       << "chain independence " << (wd.pass ? "verified" : "FAILED");
    for (const std::string& f : wd.failures) os << "\n  " << f;
    emit(cfg, os.str());
  }
  return wd.pass ? 0 : kExitVerificationFailure;
}

int cmd_verify_braid(const RunConfig& cfg) {
  RootSystem rs = system_of(cfg);
  MonoidalPoset p = build_poset(rs, enumerate_orbit(rs, resolve_seed(rs, cfg)));
  HTable ht = build_h_table(p);
  HeckeContext ctx(rs, p.c_nodes);
  RepReport rep = verify_braid(p, ht, ctx, effective_jobs(cfg.jobs));
  if (!cfg.emit_matrices.empty()) {
    RunConfig matrices_cfg = cfg;
    matrices_cfg.out = cfg.emit_matrices;
    emit(matrices_cfg, matrices_to_json(p, ht, ctx));
  }
  emit(cfg, rep_report_summary(p, rep) + (rep.pass() ? "\nPASS" : "\nFAIL"));
  return rep.pass() ? 0 : kExitVerificationFailure;
}

struct RowOutcome {
  std::string line;
  std::vector<std::string> diffs;
};

RowOutcome check_row(const CatalogRow& row) {
  RowOutcome out;
  RootSystem rs = RootSystem::build(DiagramType::parse(row.diagram));
  OrthoSet seed = seed_from_table(rs, row.size, row.variant, row.k);
  {
    std::string joined;
    for (const auto& r : row.seed) {
      if (!joined.empty()) joined += ',';
      joined += r;
    }
    if (parse_root_list(rs, joined) != seed)
      out.diffs.push_back("constructed seed differs from the catalog literal");
  }
  OrbitData orbit = enumerate_orbit(rs, seed);
  bool adm_def = is_admissible_def(orbit);
  bool adm_moves = is_admissible_moves(orbit);
  if (adm_def != adm_moves)
    out.diffs.push_back("admissibility criteria disagree");
  if (adm_def != row.admissible)
    out.diffs.push_back(std::string("admissible: expected ") +
                        (row.admissible ? "yes" : "no"));
  std::ostringstream os;
  os << row.key() << ": orbit " << orbit.size() << ", "
     << (adm_def ? "admissible" : "non-admissible");
  if (row.admissible && adm_def) {
    if (orbit.size() != row.orbit_size) {
      std::ostringstream d;
      d << "orbit size " << orbit.size() << " != expected " << row.orbit_size;
      out.diffs.push_back(d.str());
    }
    long long stab = rs.dtype().weyl_order() / orbit.size();
    MonoidalPoset p = build_poset(rs, std::move(orbit));
    auto [nodes, ctype] = compute_C(p);
    std::string ytype = orthogonal_subsystem_type(rs, p.member(p.b0));
    os << ", C " << ctype << ", Y " << ytype << ", stabilizer " << stab;
    if (ctype != row.c_type)
      out.diffs.push_back("C type " + ctype + " != expected " + row.c_type);
    if (ytype != row.y_type)
      out.diffs.push_back("Y type " + ytype + " != expected " + row.y_type);
    if (stab != row.normalizer_order) {
      std::ostringstream d;
      d << "stabilizer order " << stab << " != expected " << row.normalizer_order;
      out.diffs.push_back(d.str());
    }
    if (!row.b0.empty()) {
      OrthoSet expected;
      for (const auto& r : row.b0) expected.push_back(parse_root(rs, r));
      std::sort(expected.begin(), expected.end());
      if (maximal_element(p) != expected)
        out.diffs.push_back("maximal member differs from the catalog closed form");
    }
  }
  out.line = os.str();
  return out;
}

int cmd_tables(const RunConfig& cfg) {
  std::ostringstream os;
  int bad = 0, rows = 0;
  for (const CatalogRow& row : orbit_catalog()) {
    if (!cfg.type.empty() && row.diagram != cfg.type) continue;
    ++rows;
    RowOutcome out = check_row(row);
    os << out.line;
    if (out.diffs.empty()) {
      os << " [ok]\n";
    } else {
      ++bad;
      os << " [MISMATCH]\n";
      for (const std::string& d : out.diffs) os << "    " << d << "\n";
    }
    if (!row.note.empty()) os << "    note: " << row.note << "\n";
  }
  os << rows << " rows, " << bad << " mismatches";
  emit(cfg, os.str());
  return bad == 0 ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monoidal posets of orthogonal-root orbits and the associated "
               "monoid representation"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub, bool with_seed = true) {
    sub->add_option("--type", cfg.type, "diagram, e.g. A5, D6, E8");
    if (with_seed) {
      sub->add_option("--size", cfg.size, "catalog seed size");
      sub->add_option("--variant", cfg.variant, "catalog seed variant");
      sub->add_option("--k", cfg.k, "pair count for the type D first family");
      sub->add_option("--roots", cfg.roots, "explicit comma-separated root list");
    }
    sub->add_option("--format", cfg.format, "output format (text|json|dot)");
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
    sub->add_option("--budget", cfg.budget, "sampled chains per pair on large orbits");
    sub->add_option("--jobs", cfg.jobs, "worker threads (default: all cores)");
  };

  CLI::App* orbits = app.add_subcommand("orbits", "enumerate an orbit and dump it");
  add_common(orbits);
  CLI::App* admissible =
      app.add_subcommand("admissible", "classify an orbit by both criteria");
  add_common(admissible);
  CLI::App* poset = app.add_subcommand("poset", "build the monoidal poset");
  add_common(poset);
  CLI::App* h_table =
      app.add_subcommand("h-table", "emit the conjugated-generator value table");
  add_common(h_table);
  CLI::App* verify =
      app.add_subcommand("verify-braid", "verify the braid relations of the action");
  add_common(verify);
  verify->add_option("--emit-matrices", cfg.emit_matrices,
                     "write all generator matrices to this JSON file");
  CLI::App* tables =
      app.add_subcommand("tables", "recompute the orbit catalog and diff it");
  add_common(tables, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (orbits->parsed()) return cmd_orbits(cfg);
    if (admissible->parsed()) return cmd_admissible(cfg);
    if (poset->parsed()) return cmd_poset(cfg);
    if (h_table->parsed()) return cmd_h_table(cfg);
    if (verify->parsed()) return cmd_verify_braid(cfg);
    if (tables->parsed()) return cmd_tables(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
