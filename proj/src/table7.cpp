#include "tetra/table7.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tetra/enumerator.hpp"
#include "tetra/oracle.hpp"

namespace tetra {

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

constexpr std::array<const char*, 6> kColumnNames{"H2", "H3", "H4", "K2", "K3", "K4"};

}  // namespace

std::vector<Table7Row> parse_table7_csv(std::string_view text) {
  std::vector<Table7Row> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(trim(f));
    if (!header_seen) {
      header_seen = true;
      if (fields.size() != 7 || fields[0] != "id") {
        throw std::invalid_argument("table7 csv: expected header id,H2,H3,H4,K2,K3,K4");
      }
      continue;
    }
    if (fields.size() != 7) throw std::invalid_argument("table7 csv: bad row: " + line);
    Table7Row row;
    row.id = fields[0];
    for (int c = 0; c < 6; ++c) {
      long v = std::stol(fields[c + 1]);
      if (v < 0) throw std::invalid_argument("table7 csv: negative count in row " + row.id);
      row.counts[c] = static_cast<std::uint64_t>(v);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<Table7Row> load_table7_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table7_csv(buf.str());
}

int Table7Report::reference_mismatches() const {
  return static_cast<int>(
      std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.matches_reference(); }));
}

int Table7Report::oracle_disagreements() const {
  return static_cast<int>(
      std::count_if(cells.begin(), cells.end(), [](const auto& c) { return !c.oracle_agrees(); }));
}

Table7Report compute_table7(const std::vector<Table7Row>* reference, int jobs, bool oracle_all) {
  std::vector<CatalogEntry> entries;
  for (const auto& e : catalog()) {
    if (e.geometry == Geometry::hyperbolic_compact || e.geometry == Geometry::hyperbolic_noncompact) {
      entries.push_back(e);
    }
  }
  std::map<std::string, Table7Row> expected;
  if (reference) {
    for (const auto& row : *reference) expected[row.id] = row;
  }

  std::vector<std::array<Table7Cell, 6>> rows(entries.size());
  auto work = [&](std::size_t i) {
    const CatalogEntry& e = entries[i];
    auto found = expected.find(e.id);
    for (int c = 0; c < 6; ++c) {
      Table7Cell cell;
      cell.id = e.id;
      cell.group = c < 3 ? GroupKind::full : GroupKind::kleinian;
      cell.index = 2 + c % 3;
      Presentation pres = make_presentation(e.symbol, cell.group);
      cell.computed = enumerate_classes(pres, cell.index).size();
      if (found != expected.end()) cell.expected = found->second.counts[c];
      if (oracle_all || !cell.matches_reference()) {
        cell.oracle = brute_force_classes(pres, cell.index).classes;
      }
      rows[i][c] = cell;
    }
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) work(i);
      });
    }
    for (auto& w : workers) w.join();
  }

  Table7Report report;
  for (const auto& row : rows) report.cells.insert(report.cells.end(), row.begin(), row.end());
  return report;
}

std::string format_table7(const Table7Report& report, bool diff) {
  std::ostringstream out;
  if (!diff) {
    out << "id    H2  H3  H4  K2  K3  K4\n";
    for (std::size_t i = 0; i + 5 < report.cells.size(); i += 6) {
      out << report.cells[i].id;
      for (std::size_t pad = report.cells[i].id.size(); pad < 4; ++pad) out << ' ';
      for (int c = 0; c < 6; ++c) {
        std::string v = std::to_string(report.cells[i + c].computed);
        out << std::string(4 - std::min<std::size_t>(v.size(), 3), ' ') << v;
      }
      out << '\n';
    }
    return out.str();
  }
  for (std::size_t i = 0; i < report.cells.size(); ++i) {
    const Table7Cell& cell = report.cells[i];
    out << cell.id << ' ' << kColumnNames[i % 6] << ": computed " << cell.computed;
    if (cell.expected) out << ", reference " << *cell.expected;
    out << (cell.matches_reference() ? "  PASS" : "  MISMATCH");
    if (cell.oracle) {
      out << (cell.oracle_agrees() ? "  oracle agrees (" : "  ORACLE DISAGREES (") << *cell.oracle
          << ")";
    }
    out << '\n';
  }
  out << "summary: " << report.cells.size() << " cells, " << report.reference_mismatches()
      << " reference mismatches, " << report.oracle_disagreements()
      << " enumerator/oracle disagreements\n";
  if (report.reference_mismatches() > 0 && report.consistent()) {
    out << "warning: reference mismatches are confirmed by the brute-force oracle; "
           "the reference cells are suspect\n";
  }
  return out.str();
}

}  // namespace tetra
