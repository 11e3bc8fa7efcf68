#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/presentation.hpp"

namespace tetra {

/// Subgroup-class counts for one tetrahedron: full group at index 2, 3, 4,
/// then the Kleinian group at index 2, 3, 4.
struct Table7Row {
  std::string id;
  std::array<std::uint64_t, 6> counts{};
};

/// CSV with header "id,H2,H3,H4,K2,K3,K4"; lines starting with '#' are comments.
std::vector<Table7Row> parse_table7_csv(std::string_view text);
std::vector<Table7Row> load_table7_csv(const std::filesystem::path& path);

struct Table7Cell {
  std::string id;
  GroupKind group = GroupKind::full;
  int index = 2;
  std::uint64_t computed = 0;
  std::optional<std::uint64_t> expected;
  std::optional<std::uint64_t> oracle;

  bool matches_reference() const { return !expected || *expected == computed; }
  bool oracle_agrees() const { return !oracle || *oracle == computed; }
};

struct Table7Report {
  std::vector<Table7Cell> cells;  ///< catalog order, then H2..K4

  int reference_mismatches() const;
  int oracle_disagreements() const;
  /// Internal consistency: the oracle agreed wherever it ran.
  bool consistent() const { return oracle_disagreements() == 0; }
};

/// Counts every cell for t1–t32 with enumerate_classes. When a reference is
/// given, each cell differing from it is re-counted by brute_force_classes;
/// `oracle_all` re-counts every cell. Entries are processed on `jobs` threads
/// and assembled in catalog order.
Table7Report compute_table7(const std::vector<Table7Row>* reference, int jobs = 1,
                            bool oracle_all = false);

/// One line per tetrahedron; with `diff`, one PASS/MISMATCH line per cell and
/// a summary.
std::string format_table7(const Table7Report& report, bool diff);

}  // namespace tetra
