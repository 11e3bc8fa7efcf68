#pragma once

#include <cstdint>
#include <vector>

#include "tetra/assignment.hpp"
#include "tetra/presentation.hpp"
#include "tetra/word.hpp"

namespace tetra {

/// Largest degree the exhaustive oracle accepts.
inline constexpr int kBruteForceMaxDegree = 4;

struct BruteForceCounts {
  std::uint64_t labeled = 0;    ///< transitive relator-satisfying assignments
  std::uint64_t classes = 0;    ///< orbits under S_n conjugation
  std::uint64_t subgroups = 0;  ///< orbits under conjugation by σ with σ(1) = 1

  friend bool operator==(const BruteForceCounts&, const BruteForceCounts&) = default;
};

/// Walks the full product space (n!)^k with no pruning. Shares nothing with the
/// enumerator except the Perm type. Throws std::invalid_argument for n > 4.
BruteForceCounts brute_force_classes(const Presentation& pres, int n, int jobs = 1);

enum class TCStatus { closed, overflow };

struct TCResult {
  TCStatus status = TCStatus::overflow;
  /// Number of cosets on close.
  int index = 0;
  /// table[i][2g] = coset i·g, table[i][2g+1] = coset i·g⁻¹ (0-based, right cosets).
  std::vector<std::vector<int>> table;

  bool closed() const { return status == TCStatus::closed; }
};

/// 10·n·k, with n the expected index and k the generator count.
int default_max_cosets(int index, int generator_count);

/// HLT coset enumeration with immediate coincidence processing. Cosets are
/// numbered in order of definition. Exceeding max_cosets live cosets yields
/// TCStatus::overflow, which is inconclusive rather than an error.
TCResult todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                      int max_cosets);

/// The left-action permutation representation on the cosets of a closed run:
/// generator g maps coset i to i·g⁻¹, so coset 1 is stabilized by the subgroup.
Assignment induced_representation(const TCResult& result, int generator_count);

enum class Verdict { verified, wrong_index, inconclusive };

struct VerifyResult {
  Verdict verdict = Verdict::inconclusive;
  std::vector<Word> generators;  ///< simplified Schreier generators fed to coset enumeration
  TCResult tc;
};

/// Schreier generators of the point-1 stabilizer, simplified, then coset
/// enumeration; verified iff it closes at exactly the degree of rep.
/// max_cosets <= 0 selects default_max_cosets.
VerifyResult verify_class(const Presentation& pres, const Assignment& rep, int max_cosets = 0);

}  // namespace tetra
