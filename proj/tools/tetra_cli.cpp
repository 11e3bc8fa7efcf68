// tetra: low-index subgroups of tetrahedron groups and their Kleinian subgroups.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tetra/coloring.hpp"
#include "tetra/enumerator.hpp"
#include "tetra/export.hpp"
#include "tetra/oracle.hpp"
#include "tetra/presentation.hpp"
#include "tetra/stabilizer.hpp"
#include "tetra/table7.hpp"

#ifndef TETRA_DATA_DIR
#define TETRA_DATA_DIR "data"
#endif

namespace {

using namespace tetra;

constexpr int kUsageError = 2;

struct Target {
  std::string id;
  std::string symbol;
  std::string group = "full";
  int index = 2;
};

void add_target_options(CLI::App* cmd, Target& t) {
  auto* id = cmd->add_option("--id", t.id, "catalog id, e.g. t10");
  auto* sym = cmd->add_option("--symbol", t.symbol, "Coxeter symbol p,q,r,s,t,u");
  id->excludes(sym);
  cmd->add_option("--group", t.group, "full | kleinian")
      ->check(CLI::IsMember({"full", "kleinian"}));
  cmd->add_option("--index", t.index, "subgroup index n")->check(CLI::Range(1, kMaxDegree));
}

Presentation resolve(const Target& t) {
  CoxeterSymbol sym;
  if (!t.id.empty()) {
    auto entry = find_entry(t.id);
    if (!entry) throw std::invalid_argument("unknown catalog id: " + t.id);
    sym = entry->symbol;
  } else if (!t.symbol.empty()) {
    sym = parse_symbol(t.symbol);
  } else {
    throw std::invalid_argument("one of --id or --symbol is required");
  }
  if (t.index > kOracleCheckedDegree) {
    std::cerr << "warning: index " << t.index << " is above " << kOracleCheckedDegree
              << "; results are not cross-checked by the brute-force oracle\n";
  }
  return make_presentation(sym, parse_group_kind(t.group));
}

int cmd_list(const std::string& geometry, const std::string& format) {
  std::vector<CatalogEntry> rows;
  std::optional<Geometry> filter;
  if (!geometry.empty()) filter = parse_geometry(geometry);
  for (const auto& e : catalog()) {
    if (!filter || e.geometry == *filter) rows.push_back(e);
  }
  if (format == "json") {
    std::cout << catalog_to_json(rows).dump(2) << '\n';
    return 0;
  }
  for (const auto& e : rows) {
    std::cout << e.id << '\t' << '[' << e.symbol.to_string() << "]\t" << to_string(e.geometry)
              << '\t' << e.ideal_vertices << '\n';
  }
  return 0;
}

int cmd_enumerate(const Target& t, const std::string& format, int jobs) {
  Presentation pres = resolve(t);
  auto classes = enumerate_classes(pres, t.index, jobs);
  if (format == "json") {
    std::cout << classes_to_json(pres, t.index, classes).dump(2) << '\n';
    return 0;
  }
  std::cout << "symbol [" << pres.symbol().to_string() << "] group " << to_string(pres.kind())
            << " index " << t.index << ": " << classes.size() << " class(es)\n";
  int ordinal = 1;
  for (const auto& cls : classes) {
    auto gens = schreier_generators(pres, build_coset_table(cls.rep));
    std::cout << ordinal++ << "  " << format_assignment(pres, cls.rep) << "  image "
              << cls.image_type << "  orbit " << cls.labeled_orbit_size << "\n   generators:";
    for (std::size_t i = 0; i < gens.simplified.size(); ++i) {
      std::cout << (i ? ", " : " ") << pres.format(gens.simplified[i]);
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(const Target& t, int max_cosets, int jobs) {
  Presentation pres = resolve(t);
  auto classes = enumerate_classes(pres, t.index, jobs);
  bool all_closed = true;
  int ordinal = 1;
  for (const auto& cls : classes) {
    VerifyResult v = verify_class(pres, cls.rep, max_cosets);
    std::cout << ordinal++ << "  " << format_assignment(pres, cls.rep) << "  ";
    switch (v.verdict) {
      case Verdict::verified:
        std::cout << "closed(" << v.tc.index << ")\n";
        break;
      case Verdict::wrong_index:
        std::cout << "closed(" << v.tc.index << ") WRONG INDEX\n";
        all_closed = false;
        break;
      case Verdict::inconclusive:
        std::cout << "inconclusive (coset limit reached)\n";
        all_closed = false;
        break;
    }
  }
  return all_closed ? 0 : 1;
}

int cmd_oracle_diff(const Target& t, int jobs) {
  Presentation pres = resolve(t);
  if (t.index > kBruteForceMaxDegree) {
    throw std::invalid_argument("oracle-diff supports index 1..4");
  }
  auto classes = enumerate_classes(pres, t.index, jobs);
  std::uint64_t subgroups = count_distinct_subgroups(pres, t.index, jobs);
  BruteForceCounts oracle = brute_force_classes(pres, t.index, jobs);
  bool agree = oracle.classes == classes.size() && oracle.subgroups == subgroups;
  std::cout << "enumerator: classes " << classes.size() << ", subgroups " << subgroups << '\n'
            << "oracle:     classes " << oracle.classes << ", subgroups " << oracle.subgroups
            << ", labeled " << oracle.labeled << '\n'
            << (agree ? "AGREE" : "DISAGREE") << '\n';
  return agree ? 0 : 1;
}

int cmd_coloring(const Target& t, int ordinal, const std::string& format, int jobs) {
  Presentation pres = resolve(t);
  auto classes = enumerate_classes(pres, t.index, jobs);
  if (ordinal < 1 || ordinal > static_cast<int>(classes.size())) {
    std::cerr << "error: class " << ordinal << " out of range 1.." << classes.size() << '\n';
    return 1;
  }
  Coloring c = coloring_of(classes[static_cast<std::size_t>(ordinal - 1)]);
  if (format == "csv") {
    std::cout << coloring_to_csv(pres, c);
  } else {
    std::cout << coloring_to_json(pres, c).dump(2) << '\n';
  }
  return 0;
}

int cmd_table7(bool diff, const std::string& reference_path, int jobs, bool oracle_all) {
  std::vector<Table7Row> reference;
  if (diff) reference = load_table7_csv(reference_path);
  Table7Report report = compute_table7(diff ? &reference : nullptr, jobs, oracle_all);
  std::cout << format_table7(report, diff);
  return report.consistent() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-index subgroups of Coxeter tetrahedron groups"};
  app.require_subcommand(1);

  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string geometry;
  std::string list_format = "table";
  auto* list = app.add_subcommand("list", "list the built-in catalog of Coxeter tetrahedra");
  list->add_option("--geometry", geometry,
                   "spherical | euclidean | hyperbolic-compact | hyperbolic-noncompact");
  list->add_option("--format", list_format)->check(CLI::IsMember({"table", "json"}));

  Target target;
  std::string enum_format = "table";
  auto* enumerate = app.add_subcommand("enumerate", "enumerate index-n subgroup classes");
  add_target_options(enumerate, target);
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"table", "json"}));
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  int max_cosets = 0;
  auto* verify = app.add_subcommand("verify", "confirm each class by coset enumeration");
  add_target_options(verify, target);
  verify->add_option("--max-cosets", max_cosets, "coset limit (default 10*n*generators)");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* oracle = app.add_subcommand("oracle-diff", "compare enumerator and brute-force counts");
  add_target_options(oracle, target);
  oracle->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  int ordinal = 1;
  std::string coloring_format = "json";
  auto* coloring = app.add_subcommand("coloring", "export the coloring of one class");
  add_target_options(coloring, target);
  coloring->add_option("--class", ordinal, "1-based class ordinal");
  coloring->add_option("--format", coloring_format)->check(CLI::IsMember({"json", "csv"}));

  bool diff = false;
  bool oracle_all = false;
  std::string reference = std::string(TETRA_DATA_DIR) + "/table7_reference.csv";
  auto* table7 = app.add_subcommand("table7", "count index 2,3,4 classes for t1-t32");
  table7->add_flag("--diff", diff, "compare against the reference counts");
  table7->add_option("--expected", reference, "reference CSV");
  table7->add_flag("--oracle-all", oracle_all, "run the brute-force oracle on every cell");
  table7->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*list) return cmd_list(geometry, list_format);
    if (*enumerate) return cmd_enumerate(target, enum_format, jobs);
    if (*verify) return cmd_verify(target, max_cosets, jobs);
    if (*oracle) return cmd_oracle_diff(target, jobs);
    if (*coloring) return cmd_coloring(target, ordinal, coloring_format, jobs);
    if (*table7) return cmd_table7(diff, reference, jobs, oracle_all);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
