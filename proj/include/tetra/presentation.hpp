#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/word.hpp"

namespace tetra {

/// Dihedral-angle submultiples [p,q,r,s,t,u] of a Coxeter tetrahedron.
///
/// Edge mapping: p→PQ, q→QR, r→RS, s→PR, t→PS, u→QS.
struct CoxeterSymbol {
  std::array<int, 6> entries{2, 2, 2, 2, 2, 2};

  int p() const { return entries[0]; }
  int q() const { return entries[1]; }
  int r() const { return entries[2]; }
  int s() const { return entries[3]; }
  int t() const { return entries[4]; }
  int u() const { return entries[5]; }

  /// "p,q,r,s,t,u"
  std::string to_string() const;
  friend bool operator==(const CoxeterSymbol&, const CoxeterSymbol&) = default;
  friend auto operator<=>(const CoxeterSymbol&, const CoxeterSymbol&) = default;
};

/// Parses six comma-separated integers, each ≥ 2. Brackets and spaces are tolerated.
/// Throws std::invalid_argument otherwise.
CoxeterSymbol parse_symbol(std::string_view text);

enum class GroupKind { full, kleinian };

std::string_view to_string(GroupKind kind);
GroupKind parse_group_kind(std::string_view text);

/// (base)^exponent = e, where base is not itself a proper power.
struct PowerRelation {
  Word base;
  int exponent = 1;
};

/// A finite presentation with named generators.
class Presentation {
 public:
  Presentation(GroupKind kind, CoxeterSymbol symbol, std::vector<std::string> names,
               std::vector<Word> relators);

  GroupKind kind() const { return kind_; }
  const CoxeterSymbol& symbol() const { return symbol_; }
  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  /// Each relator written as base^exponent.
  const std::vector<PowerRelation>& element_orders() const { return orders_; }

  /// True when gen² is a relator.
  bool is_involution(int gen) const { return involution_[gen]; }
  /// Replaces inverses of involutions by the generator and cancels adjacent
  /// repeated involutions until none remain.
  Word normalize(const Word& w) const;

  std::string format(const Word& w) const;
  /// Accepts generator names, optionally followed by "^-1", "⁻¹" or "'" for an inverse.
  Word parse_word(std::string_view text) const;
  int generator_index(std::string_view name) const;

 private:
  GroupKind kind_;
  CoxeterSymbol symbol_;
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<PowerRelation> orders_;
  std::vector<bool> involution_;
};

/// H = <P,Q,R,S | P²,Q²,R²,S²,(PQ)^p,(QR)^q,(RS)^r,(PR)^s,(PS)^t,(QS)^u>.
Presentation full_presentation(const CoxeterSymbol& sym);

/// K = <a,b,c | a^p, b^q, c^r, (ab)^s, (abc)^t, (bc)^u> with a=PQ, b=QR, c=RS.
Presentation kleinian_presentation(const CoxeterSymbol& sym);

Presentation make_presentation(const CoxeterSymbol& sym, GroupKind kind);

enum class Geometry { spherical, euclidean, hyperbolic_compact, hyperbolic_noncompact };

std::string_view to_string(Geometry g);
Geometry parse_geometry(std::string_view text);

struct CatalogEntry {
  std::string id;
  CoxeterSymbol symbol;
  Geometry geometry;
  int ideal_vertices = 0;
};

/// The 5 spherical, 3 Euclidean and 32 finite-volume hyperbolic Coxeter tetrahedra.
const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_entry(std::string_view id);

}  // namespace tetra
