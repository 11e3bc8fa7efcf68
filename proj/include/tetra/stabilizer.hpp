#pragma once

#include <vector>

#include "tetra/assignment.hpp"
#include "tetra/presentation.hpp"
#include "tetra/word.hpp"

namespace tetra {

/// Action of the generators on the cosets of the point-1 stabilizer, with a
/// Schreier transversal. Cosets are 0-based here; coset 0 is the subgroup.
struct CosetTable {
  int n = 1;
  int generator_count = 0;
  /// action[i][g] = image of coset i under generator g.
  std::vector<std::vector<int>> action;
  /// evaluate_word(transversal[i]) maps point 1 to point i+1.
  std::vector<Word> transversal;
};

/// Breadth-first from coset 0 over the generators in declared order; each
/// coset gets the shortest, then lexicographically least, representative.
CosetTable build_coset_table(const Assignment& rep);

/// All n·k words t_{g(i)}⁻¹ · g · t_i (coset-major, then generator order),
/// freely reduced. Exactly n−1 of them are empty.
std::vector<Word> raw_schreier_words(const CosetTable& table);

struct StabilizerGens {
  /// Raw Schreier words after involution normalization, with empty words,
  /// repeats and inverses of earlier words removed.
  std::vector<Word> generators;
  /// The same list after simplify_word, deduplicated the same way.
  std::vector<Word> simplified;
};

StabilizerGens schreier_generators(const Presentation& pres, const CosetTable& table);

/// Length-nonincreasing rewriting with sound rules only: free and involution
/// reduction, plus replacement of any piece u of a cyclic conjugate u·v of a
/// relator (or its inverse) by v⁻¹ whenever |u| > |v|. Covers x² → ε, and
/// yxy → x when (xy)² = e. Runs to a fixed point.
Word simplify_word(const Word& w, const Presentation& pres);

/// True iff some σ with σ(1) = 1 conjugates one representation into the other,
/// i.e. both have the same point-1 stabilizer.
bool same_subgroup(const Assignment& a, const Assignment& b);

}  // namespace tetra
