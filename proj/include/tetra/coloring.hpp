#pragma once

#include <cstdint>
#include <vector>

#include "tetra/assignment.hpp"
#include "tetra/enumerator.hpp"
#include "tetra/presentation.hpp"
#include "tetra/word.hpp"

namespace tetra {

/// Finite quotient data of an n-coloring: colors are the points 1..n, color i
/// is carried by the cosets m_i L with m_i = coset_words[i-1], and each
/// generator permutes the colors by its image in the class representative.
struct Coloring {
  int n = 1;
  std::vector<Word> coset_words;
  Assignment action;
};

Coloring coloring_of(const SubgroupClass& cls);

/// (n-1)!: colorings in which the subgroup fixes the first color.
std::uint64_t colorings_fixing_c1_count(int n);

}  // namespace tetra
