#include "tetra/coloring.hpp"

#include <stdexcept>

#include "tetra/stabilizer.hpp"

namespace tetra {

Coloring coloring_of(const SubgroupClass& cls) {
  CosetTable table = build_coset_table(cls.rep);
  return {cls.rep.degree(), table.transversal, cls.rep};
}

std::uint64_t colorings_fixing_c1_count(int n) {
  if (n < 1) throw std::invalid_argument("colorings_fixing_c1_count: n must be >= 1");
  return factorial(n - 1);
}

}  // namespace tetra
