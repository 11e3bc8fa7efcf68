#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tetra {

/// Largest supported permutation degree.
inline constexpr int kMaxDegree = 12;

/// A bijection of {1..n}, stored in one-line notation (0-based internally).
///
/// Composition follows the left-action convention: `compose(f, g)(x) = f(g(x))`.
class Perm {
 public:
  Perm() : Perm(1) {}
  explicit Perm(int degree);

  /// Builds from one-line notation with 1-based images, e.g. {2,1,3}.
  static Perm from_images(std::span<const int> images_one_based);
  /// Parses cycle notation such as "(12)(34)" or "(1)" (whitespace-insensitive).
  /// Points above 9 may be written with commas inside the cycle: "(1,10,3)".
  static Perm parse_cycles(std::string_view text, int degree);

  int degree() const { return degree_; }
  /// Image of a 1-based point.
  int operator()(int point) const { return images_[point - 1] + 1; }
  /// Image of a 0-based point.
  int image0(int point) const { return images_[point]; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;
  Perm pow(int k) const;

  /// One-line notation, 1-based.
  std::vector<int> one_line() const;
  /// Cycle notation; identity prints as "(1)".
  std::string to_cycles() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.degree_ == b.degree_ && a.images_ == b.images_;
  }
  /// Lexicographic on one-line notation (degree first).
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

  friend Perm compose(const Perm& f, const Perm& g);

 private:
  int degree_;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

/// (f·g)(x) = f(g(x)). Throws std::invalid_argument on degree mismatch.
Perm compose(const Perm& f, const Perm& g);
inline Perm operator*(const Perm& f, const Perm& g) { return compose(f, g); }

/// σ·g·σ⁻¹.
Perm conjugate(const Perm& g, const Perm& sigma);

/// Every element of S_n in lexicographic one-line order.
std::vector<Perm> all_perms(int degree);

/// n!
std::uint64_t factorial(int n);

}  // namespace tetra
