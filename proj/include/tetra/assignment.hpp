#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tetra/perm.hpp"
#include "tetra/presentation.hpp"

namespace tetra {

/// Images of the generators of a presentation, indexed in declared order,
/// all of a common degree.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Perm> images);
  /// All generators map to the identity of the given degree.
  Assignment(int generator_count, int degree);

  int degree() const { return images_.empty() ? 1 : images_.front().degree(); }
  int generator_count() const { return static_cast<int>(images_.size()); }
  const Perm& operator[](int gen) const { return images_[gen]; }
  const std::vector<Perm>& images() const { return images_; }
  void set(int gen, Perm p);

  friend bool operator==(const Assignment&, const Assignment&) = default;
  /// Generator images compared in declared order, each by one-line notation.
  friend auto operator<=>(const Assignment& a, const Assignment& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Perm> images_;
};

/// Builds an assignment from generator name → cycle notation.
Assignment parse_assignment(const Presentation& pres, const std::map<std::string, std::string>& cycles,
                            int degree);

/// Homomorphic image of a word: product of the generator images in word order
/// under left-action composition. The empty word maps to the identity.
Perm evaluate_word(const Word& w, const Assignment& a);

bool satisfies_relators(const Presentation& pres, const Assignment& a);

/// True iff the orbit of point 1 under the generator images is {1..n}.
bool is_transitive(const Assignment& a);

/// Every generator image g ↦ σ·g·σ⁻¹.
Assignment conjugate_assignment(const Assignment& a, const Perm& sigma);

/// Human-readable "P=(12) Q=(1) ...".
std::string format_assignment(const Presentation& pres, const Assignment& a);

}  // namespace tetra
