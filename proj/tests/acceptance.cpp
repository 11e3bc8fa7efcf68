// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tetra/coloring.hpp"
#include "tetra/enumerator.hpp"
#include "tetra/oracle.hpp"
#include "tetra/stabilizer.hpp"
#include "tetra/table7.hpp"

using namespace tetra;

namespace {

// Wall-clock budgets, in seconds.
constexpr double kGoldenBudget = 1.0;
constexpr double kOracleSweepBudget = 60.0;
constexpr double kTable7Budget = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome golden_t10() {
  Outcome out;
  CoxeterSymbol t10 = find_entry("t10")->symbol;
  for (GroupKind kind : {GroupKind::full, GroupKind::kleinian}) {
    Presentation pres = make_presentation(t10, kind);
    const std::vector<std::size_t> expected =
        kind == GroupKind::full ? std::vector<std::size_t>{3, 1, 2} : std::vector<std::size_t>{1, 1, 1};
    for (int n = 2; n <= 4; ++n) {
      auto classes = enumerate_classes(pres, n);
      out.require(classes.size() == expected[n - 2],
                  std::string(to_string(kind)) + " index " + std::to_string(n) + " count " +
                      std::to_string(classes.size()));
      for (const auto& cls : classes) {
        VerifyResult v = verify_class(pres, cls.rep);
        out.require(v.verdict == Verdict::verified && v.tc.index == n,
                    "coset enumeration did not close at " + std::to_string(n));
      }
    }
  }
  Presentation h = full_presentation(t10);
  Assignment s_only = parse_assignment(h, {{"S", "(12)"}}, 2);
  bool found = false;
  for (const auto& cls : enumerate_classes(h, 2)) {
    if (!same_subgroup(cls.rep, s_only)) continue;
    auto gens = schreier_generators(h, build_coset_table(cls.rep));
    std::vector<std::string> text;
    for (const Word& w : gens.simplified) text.push_back(h.format(w));
    found = text == std::vector<std::string>{"P", "Q", "R", "SRS"};
  }
  out.require(found, "no index-2 class with stabilizer <P,Q,R,SRS>");
  return out;
}

// P, Q, R, S, then PQ, QR, RS, PR, PS, QS, as listed.
const std::vector<std::vector<std::string>> kTwoColorings = {
    {"(12)", "(1)", "(1)", "(1)", "(12)", "(1)", "(1)", "(12)", "(12)", "(1)"},
    {"(1)", "(12)", "(1)", "(1)", "(12)", "(12)", "(1)", "(1)", "(1)", "(12)"},
    {"(1)", "(1)", "(12)", "(1)", "(1)", "(12)", "(12)", "(12)", "(1)", "(1)"},
    {"(1)", "(1)", "(1)", "(12)", "(1)", "(1)", "(12)", "(1)", "(12)", "(12)"},
    {"(1)", "(1)", "(12)", "(12)", "(1)", "(12)", "(1)", "(12)", "(12)", "(12)"},
    {"(1)", "(12)", "(1)", "(12)", "(12)", "(12)", "(12)", "(1)", "(12)", "(1)"},
    {"(1)", "(12)", "(12)", "(1)", "(12)", "(1)", "(12)", "(12)", "(1)", "(12)"},
    {"(12)", "(12)", "(1)", "(1)", "(1)", "(12)", "(1)", "(12)", "(12)", "(12)"},
    {"(12)", "(1)", "(12)", "(1)", "(12)", "(12)", "(12)", "(1)", "(12)", "(1)"},
    {"(12)", "(1)", "(1)", "(12)", "(12)", "(1)", "(12)", "(12)", "(1)", "(12)"},
    {"(1)", "(12)", "(12)", "(12)", "(12)", "(1)", "(1)", "(12)", "(12)", "(1)"},
    {"(12)", "(1)", "(12)", "(12)", "(12)", "(12)", "(1)", "(1)", "(1)", "(12)"},
    {"(12)", "(12)", "(1)", "(12)", "(1)", "(12)", "(12)", "(12)", "(1)", "(1)"},
    {"(12)", "(12)", "(12)", "(1)", "(1)", "(1)", "(12)", "(1)", "(12)", "(12)"},
    {"(12)", "(12)", "(12)", "(12)", "(1)", "(1)", "(1)", "(1)", "(1)", "(1)"},
};

Outcome table1_fixture() {
  Outcome out;
  // Any symbol whose entries are all even admits every S_2 assignment.
  Presentation h = full_presentation(parse_symbol("4,4,4,2,2,2"));
  out.require(enumerate_candidates(h, 2, Stage::all).size() == 16, "stage=all is not 16");
  auto nontrivial = enumerate_candidates(h, 2, Stage::nontrivial);
  out.require(nontrivial.size() == 15, "stage=nontrivial is not 15");

  const char* products[] = {"PQ", "QR", "RS", "PR", "PS", "QS"};
  std::set<std::vector<std::string>> computed;
  for (const auto& a : nontrivial) {
    std::vector<std::string> row;
    for (int g = 0; g < 4; ++g) row.push_back(a[g].to_cycles());
    for (const char* p : products) row.push_back(evaluate_word(h.parse_word(p), a).to_cycles());
    computed.insert(row);
  }
  std::set<std::vector<std::string>> listed(kTwoColorings.begin(), kTwoColorings.end());
  out.require(listed.size() == 15, "fixture rows are not distinct");
  out.require(computed == listed, "product columns differ from the reference rows");

  Presentation t10 = full_presentation(find_entry("t10")->symbol);
  auto gens_for = [&](int row) {
    std::map<std::string, std::string> cycles;
    const char* names[] = {"P", "Q", "R", "S"};
    for (int g = 0; g < 4; ++g) cycles[names[g]] = kTwoColorings[row][g];
    return schreier_generators(t10, build_coset_table(parse_assignment(t10, cycles, 2))).generators;
  };
  auto same_up_to_inverse = [&](const std::vector<Word>& got, std::vector<std::string> want) {
    if (got.size() != want.size()) return false;
    for (const auto& text : want) {
      Word w = t10.parse_word(text);
      Word inv = t10.normalize(w.inverse());
      if (std::find(got.begin(), got.end(), w) == got.end() &&
          std::find(got.begin(), got.end(), inv) == got.end())
        return false;
    }
    return true;
  };
  out.require(same_up_to_inverse(gens_for(3), {"P", "Q", "R", "SPS", "SQS", "SRS"}),
              "row 4 Schreier generators");
  out.require(same_up_to_inverse(gens_for(4), {"P", "Q", "SR", "RPR", "RQR"}),
              "row 5 Schreier generators");
  return out;
}

Outcome table6_fixture() {
  Outcome out;
  Presentation k = kleinian_presentation(find_entry("t10")->symbol);
  struct Row {
    int n;
    const char* a;
    const char* b;
    const char* c;
    const char* image;
  };
  const Row rows[] = {{2, "(1)", "(1)", "(12)", "S2"},
                      {3, "(123)", "(132)", "(23)", "S3"},
                      {4, "(234)", "(143)", "(13)", "S4"}};
  for (const Row& r : rows) {
    Assignment listed = parse_assignment(k, {{"a", r.a}, {"b", r.b}, {"c", r.c}}, r.n);
    auto classes = enumerate_classes(k, r.n);
    std::string at = " at n=" + std::to_string(r.n);
    if (!satisfies_relators(k, listed)) {
      // The listed n=4 row gives ab = (123), of order 3, against (ab)^2 = e;
      // its own PR column shows the same 3-cycle. Only the b entry is off:
      // with b = (123) it is the unique class, image S4.
      out.require(r.n == 4, "listed row" + at + " violates the relators");
      std::vector<std::string> broken;
      for (const auto& rel : k.element_orders()) {
        if (!evaluate_word(rel.base.pow(rel.exponent), listed).is_identity()) {
          broken.push_back(k.format(rel.base));
        }
      }
      out.require(broken == std::vector<std::string>{"ab"}, "listed row" + at + " breaks more than (ab)^2");
      Assignment corrected = listed;
      corrected.set(1, Perm::parse_cycles("(123)", 4));
      out.require(classes.size() == 1 && classes[0].rep == canonical_form(corrected) &&
                      classes[0].image_type == r.image,
                  "no unique S4 class one entry away from the listed row");
      out.notes.push_back("listed n=4 row breaks (ab)^2; the unique class is a=(234) b=(123) c=(13), image " +
                          (classes.empty() ? std::string("none") : classes[0].image_type));
      continue;
    }
    out.require(is_transitive(listed), "listed row" + at + " is not transitive");
    bool matched = false;
    for (const auto& cls : classes) {
      if (canonical_form(listed) != cls.rep) continue;
      matched = true;
      out.require(cls.image_type == r.image, "image type" + at + " is " + cls.image_type);
    }
    out.require(matched, "no class conjugate to the listed row" + at);
  }
  return out;
}

Outcome oracle_sweep() {
  Outcome out;
  struct Job {
    CoxeterSymbol symbol;
    GroupKind kind;
    int n;
  };
  std::vector<Job> work;
  for (const auto& e : catalog()) {
    for (GroupKind kind : {GroupKind::full, GroupKind::kleinian}) {
      for (int n = 1; n <= 4; ++n) work.push_back({e.symbol, kind, n});
    }
  }
  std::vector<std::string> failures(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < work.size();) {
      const Job& job = work[i];
      Presentation pres = make_presentation(job.symbol, job.kind);
      auto classes = enumerate_classes(pres, job.n);
      auto brute = brute_force_classes(pres, job.n);
      std::string where = job.symbol.to_string() + " " + std::string(to_string(job.kind)) + " n=" +
                          std::to_string(job.n);
      if (brute.classes != classes.size()) failures[i] = where + ": count differs from oracle";
      for (const auto& cls : classes) {
        VerifyResult v = verify_class(pres, cls.rep);
        if (v.verdict != Verdict::verified) failures[i] = where + ": class not verified";
      }
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs(); ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  for (const auto& f : failures) out.require(f.empty(), f);
  return out;
}

Outcome table7_reproduction() {
  Outcome out;
  auto reference = load_table7_csv(TETRA_DATA_DIR "/table7_reference.csv");
  Table7Report report = compute_table7(&reference, jobs());
  out.require(report.cells.size() == 32 * 6, "report does not cover 32 x 6 cells");
  out.require(report.consistent(), "enumerator and oracle disagree");
  std::vector<std::string> soft;
  for (const auto& cell : report.cells) {
    if (cell.matches_reference()) continue;
    out.require(cell.oracle.has_value(), cell.id + ": mismatch without an oracle count");
    soft.push_back(cell.id + " " + (cell.group == GroupKind::full ? "H" : "K") +
                   std::to_string(cell.index) + " computed " + std::to_string(cell.computed) +
                   " reference " + std::to_string(*cell.expected));
  }
  for (const auto& s : soft) out.notes.push_back(s + " (oracle agrees)");
  if (out.pass && !soft.empty()) {
    out.detail = std::to_string(soft.size()) + " cells differ from the reference, all oracle-confirmed";
  }
  return out;
}

Outcome properties() {
  Outcome out;
  std::mt19937 rng(7);
  for (const auto& e : catalog()) {
    for (GroupKind kind : {GroupKind::full, GroupKind::kleinian}) {
      Presentation pres = make_presentation(e.symbol, kind);
      std::vector<Assignment> reps;
      for (int n = 1; n <= 4; ++n) {
        for (const auto& cls : enumerate_classes(pres, n)) {
          out.require(satisfies_relators(pres, cls.rep) && is_transitive(cls.rep),
                      e.id + ": class fails relators or transitivity");
          out.require(canonical_form(cls.rep) == cls.rep, e.id + ": canonical form not idempotent");
          for (const Perm& s : all_perms(n)) {
            out.require(canonical_form(conjugate_assignment(cls.rep, s)) == cls.rep,
                        e.id + ": canonical form varies on an orbit");
          }
          for (const Word& w : schreier_generators(pres, build_coset_table(cls.rep)).generators) {
            out.require(evaluate_word(w, cls.rep)(1) == 1, e.id + ": Schreier word moves point 1");
          }
          reps.push_back(cls.rep);
        }
      }
      std::uniform_int_distribution<int> len(0, 12), gen(0, pres.generator_count() - 1);
      std::bernoulli_distribution inv(0.5);
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<Letter> letters(len(rng));
        for (auto& l : letters) l = {static_cast<std::uint8_t>(gen(rng)), inv(rng)};
        Word w(std::move(letters));
        Word s = simplify_word(w, pres);
        for (const auto& rep : reps) {
          out.require(evaluate_word(s, rep) == evaluate_word(w, rep),
                      e.id + ": simplify_word changed a permutation");
        }
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t fixing = 0;
    for (const Perm& s : all_perms(n)) fixing += s(1) == 1;
    out.require(colorings_fixing_c1_count(n) == fixing && fixing == factorial(n - 1),
                "(n-1)! coloring count at n=" + std::to_string(n));
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget;
  };
  const Criterion criteria[] = {
      {"1 t10 golden suite", golden_t10, kGoldenBudget},
      {"2 index-2 coloring fixture", table1_fixture, 0},
      {"3 Kleinian t10 fixture", table6_fixture, 0},
      {"4 oracle equivalence, 40 symbols x 2 groups x n<=4", oracle_sweep, kOracleSweepBudget},
      {"5 subgroup count table", table7_reproduction, kTable7Budget},
      {"6 property suites", properties, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && seconds >= c.budget) {
      out.require(false, "over budget of " + std::to_string(c.budget) + " s");
    }
    failed += !out.pass;
    std::printf("%s  %-52s %7.3f s%s%s\n", out.pass ? "PASS" : "FAIL", c.name, seconds,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    for (const auto& note : out.notes) std::printf("      note: %s\n", note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
