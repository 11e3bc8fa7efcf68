#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tetra {

/// One generator occurrence, possibly a formal inverse.
struct Letter {
  std::uint8_t gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word over numbered generators.
///
/// Free reduction (cancelling x x⁻¹ and x⁻¹ x) is applied on every construction,
/// so two words compare equal iff they are equal in the free group.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  static Word generator(int gen, bool inverse = false);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(int k) const;
  /// Largest generator index used, or -1 for the empty word.
  int max_generator() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  /// Plain lexicographic order on letters.
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// Shortest first, then lexicographic.
bool shortlex_less(const Word& a, const Word& b);

}  // namespace tetra
