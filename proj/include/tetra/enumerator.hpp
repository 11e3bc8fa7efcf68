#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tetra/assignment.hpp"
#include "tetra/presentation.hpp"

namespace tetra {

/// Indices above this are accepted, but only this range is cross-checked
/// against the brute-force oracle.
inline constexpr int kOracleCheckedDegree = 4;

enum class Stage {
  all,               ///< raw product space S_n^k
  nontrivial,        ///< product space minus the all-identity assignment (n > 1)
  relator_filtered,  ///< every relator maps to the identity
  transitive,        ///< relator_filtered and transitive
};

/// One conjugacy class of index-n subgroups, certified by a transitive
/// permutation representation.
struct SubgroupClass {
  Assignment rep;  ///< lexicographically least in its S_n-conjugation orbit
  int index = 1;
  std::string image_type;
  /// Number of relator-satisfying assignments in the S_n-conjugation orbit of rep.
  std::uint64_t labeled_orbit_size = 1;
};

/// Depth-first search over generator images in declared order. Relators are
/// checked as soon as all their generators are assigned. Output is sorted
/// lexicographically; `jobs > 1` splits the search at the first generator.
std::vector<Assignment> enumerate_candidates(const Presentation& pres, int n, Stage stage,
                                             int jobs = 1);

/// One class per S_n-conjugation orbit of transitive relator-satisfying
/// assignments, sorted by canonical representative.
std::vector<SubgroupClass> enumerate_classes(const Presentation& pres, int n, int jobs = 1);

/// Isomorphism type of the image group: S1, S2, Z3, S3, V, Z4, D4, A4, S4;
/// "order-N" above degree 4.
std::string classify_image(const Assignment& a);

/// Elements of the group generated by the images, sorted.
std::vector<Perm> generated_group(const Assignment& a, std::size_t limit = 5040);

/// Minimum of conjugate_assignment(a, σ) over σ ∈ S_n.
Assignment canonical_form(const Assignment& a);
/// Minimum over σ ∈ S_n with σ(1) = 1; equal forms mean equal point-1 stabilizers.
Assignment stabilizer_canonical_form(const Assignment& a);

/// Number of σ ∈ S_n commuting with every generator image.
std::uint64_t centralizer_size(const Assignment& a);

/// Index-n subgroups counted individually (not up to conjugacy).
std::uint64_t count_distinct_subgroups(const Presentation& pres, int n, int jobs = 1);

/// Calls fn for every σ ∈ S_n in lexicographic order.
void for_each_perm(int n, const std::function<void(const Perm&)>& fn);

}  // namespace tetra
