#include "tetra/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tetra {

std::string CoxeterSymbol::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

CoxeterSymbol parse_symbol(std::string_view text) {
  CoxeterSymbol sym;
  std::vector<std::string> fields(1);
  for (char ch : text) {
    if (ch == ',') {
      fields.emplace_back();
    } else if (ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch))) {
      continue;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      fields.back().push_back(ch);
    } else {
      throw std::invalid_argument("malformed Coxeter symbol: " + std::string(text));
    }
  }
  if (fields.size() != 6) {
    throw std::invalid_argument("Coxeter symbol needs six entries: " + std::string(text));
  }
  for (std::size_t i = 0; i < 6; ++i) {
    if (fields[i].empty() || fields[i].size() > 6) {
      throw std::invalid_argument("malformed Coxeter symbol: " + std::string(text));
    }
    int v = std::stoi(fields[i]);
    if (v < 2) {
      throw std::invalid_argument("Coxeter symbol entries must be >= 2: " + std::string(text));
    }
    sym.entries[i] = v;
  }
  return sym;
}

std::string_view to_string(GroupKind kind) {
  return kind == GroupKind::full ? "full" : "kleinian";
}

GroupKind parse_group_kind(std::string_view text) {
  if (text == "full" || text == "H") return GroupKind::full;
  if (text == "kleinian" || text == "K") return GroupKind::kleinian;
  throw std::invalid_argument("unknown group kind: " + std::string(text));
}

namespace {

// Splits r = base^k with k maximal.
PowerRelation as_power(const Word& r) {
  const auto& ls = r.letters();
  std::size_t n = ls.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len) continue;
    bool periodic = true;
    for (std::size_t i = len; i < n && periodic; ++i) periodic = ls[i] == ls[i - len];
    if (periodic) {
      return {Word(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<long>(len))),
              static_cast<int>(n / len)};
    }
  }
  return {r, 1};
}

Letter gen(int g) { return {static_cast<std::uint8_t>(g), false}; }

}  // namespace

Presentation::Presentation(GroupKind kind, CoxeterSymbol symbol, std::vector<std::string> names,
                           std::vector<Word> relators)
    : kind_(kind),
      symbol_(symbol),
      names_(std::move(names)),
      relators_(std::move(relators)),
      involution_(names_.size(), false) {
  for (const Word& r : relators_) {
    if (r.max_generator() >= generator_count()) {
      throw std::invalid_argument("relator mentions an undeclared generator");
    }
    orders_.push_back(as_power(r));
    const auto& pr = orders_.back();
    if (pr.base.size() == 1 && pr.exponent == 2) involution_[pr.base[0].gen] = true;
  }
}

Word Presentation::normalize(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) {
    if (involution_[l.gen]) l.inverse = false;
    if (!out.empty() && (out.back() == l.inverted() ||
                         (involution_[l.gen] && out.back() == l))) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

std::string Presentation::format(const Word& w) const {
  std::string out;
  for (const Letter& l : w.letters()) {
    out += names_[l.gen];
    if (l.inverse) out += "⁻¹";  // ⁻¹
  }
  return out;
}

int Presentation::generator_index(std::string_view name) const {
  for (int i = 0; i < generator_count(); ++i) {
    if (names_[i] == name) return i;
  }
  return -1;
}

Word Presentation::parse_word(std::string_view text) const {
  static constexpr std::string_view kSuperInverse = "⁻¹";
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
      ++pos;
      continue;
    }
    if (text.substr(pos, 3) == "^-1" || text.substr(pos, kSuperInverse.size()) == kSuperInverse ||
        ch == '\'') {
      if (letters.empty()) throw std::invalid_argument("inverse marker without a generator");
      letters.back().inverse = !letters.back().inverse;
      pos += ch == '^' ? 3 : ch == '\'' ? 1 : kSuperInverse.size();
      continue;
    }
    // Generator names are single characters in both built-in presentations, but
    // match the longest declared name to stay general.
    int best = -1;
    std::size_t best_len = 0;
    for (int g = 0; g < generator_count(); ++g) {
      const auto& name = names_[g];
      if (name.size() > best_len && text.substr(pos, name.size()) == name) {
        best = g;
        best_len = name.size();
      }
    }
    if (best < 0) {
      throw std::invalid_argument("unknown generator in word: " + std::string(text));
    }
    letters.push_back(gen(best));
    pos += best_len;
  }
  return Word(std::move(letters));
}

Presentation full_presentation(const CoxeterSymbol& sym) {
  enum { P, Q, R, S };
  auto pair = [](int x, int y, int k) { return Word{gen(x), gen(y)}.pow(k); };
  std::vector<Word> rel;
  for (int g : {P, Q, R, S}) rel.push_back(Word{gen(g), gen(g)});
  rel.push_back(pair(P, Q, sym.p()));
  rel.push_back(pair(Q, R, sym.q()));
  rel.push_back(pair(R, S, sym.r()));
  rel.push_back(pair(P, R, sym.s()));
  rel.push_back(pair(P, S, sym.t()));
  rel.push_back(pair(Q, S, sym.u()));
  return Presentation(GroupKind::full, sym, {"P", "Q", "R", "S"}, std::move(rel));
}

Presentation kleinian_presentation(const CoxeterSymbol& sym) {
  enum { A, B, C };
  // ab = PR, abc = PS, bc = QS
  std::vector<Word> rel;
  rel.push_back(Word{gen(A)}.pow(sym.p()));
  rel.push_back(Word{gen(B)}.pow(sym.q()));
  rel.push_back(Word{gen(C)}.pow(sym.r()));
  rel.push_back(Word{gen(A), gen(B)}.pow(sym.s()));
  rel.push_back(Word{gen(A), gen(B), gen(C)}.pow(sym.t()));
  rel.push_back(Word{gen(B), gen(C)}.pow(sym.u()));
  return Presentation(GroupKind::kleinian, sym, {"a", "b", "c"}, std::move(rel));
}

Presentation make_presentation(const CoxeterSymbol& sym, GroupKind kind) {
  return kind == GroupKind::full ? full_presentation(sym) : kleinian_presentation(sym);
}

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::spherical: return "spherical";
    case Geometry::euclidean: return "euclidean";
    case Geometry::hyperbolic_compact: return "hyperbolic-compact";
    case Geometry::hyperbolic_noncompact: return "hyperbolic-noncompact";
  }
  return "?";
}

Geometry parse_geometry(std::string_view text) {
  for (Geometry g : {Geometry::spherical, Geometry::euclidean, Geometry::hyperbolic_compact,
                     Geometry::hyperbolic_noncompact}) {
    if (to_string(g) == text) return g;
  }
  throw std::invalid_argument("unknown geometry: " + std::string(text));
}

const std::vector<CatalogEntry>& catalog() {
  using G = Geometry;
  static const std::vector<CatalogEntry> entries = {
      {"s1", {{3, 3, 3, 2, 2, 2}}, G::spherical, 0},
      {"s2", {{4, 3, 3, 2, 2, 2}}, G::spherical, 0},
      {"s3", {{3, 4, 3, 2, 2, 2}}, G::spherical, 0},
      {"s4", {{5, 3, 3, 2, 2, 2}}, G::spherical, 0},
      {"s5", {{3, 3, 2, 3, 2, 2}}, G::spherical, 0},
      {"e1", {{4, 3, 4, 2, 2, 2}}, G::euclidean, 0},
      {"e2", {{3, 4, 2, 3, 2, 2}}, G::euclidean, 0},
      {"e3", {{3, 3, 3, 2, 2, 3}}, G::euclidean, 0},
      {"t1", {{3, 5, 2, 3, 2, 2}}, G::hyperbolic_compact, 0},
      {"t2", {{5, 3, 5, 2, 2, 2}}, G::hyperbolic_compact, 0},
      {"t3", {{3, 5, 3, 2, 2, 3}}, G::hyperbolic_compact, 0},
      {"t4", {{3, 5, 3, 2, 2, 2}}, G::hyperbolic_compact, 0},
      {"t5", {{3, 4, 3, 2, 2, 3}}, G::hyperbolic_compact, 0},
      {"t6", {{3, 5, 3, 2, 2, 4}}, G::hyperbolic_compact, 0},
      {"t7", {{4, 3, 5, 2, 2, 2}}, G::hyperbolic_compact, 0},
      {"t8", {{4, 3, 4, 2, 2, 3}}, G::hyperbolic_compact, 0},
      {"t9", {{5, 3, 5, 2, 2, 3}}, G::hyperbolic_compact, 0},
      {"t10", {{3, 3, 6, 2, 2, 2}}, G::hyperbolic_noncompact, 1},
      {"t11", {{4, 4, 3, 2, 2, 2}}, G::hyperbolic_noncompact, 1},
      {"t12", {{3, 3, 3, 3, 2, 2}}, G::hyperbolic_noncompact, 1},
      {"t13", {{4, 3, 6, 2, 2, 2}}, G::hyperbolic_noncompact, 1},
      {"t14", {{3, 4, 2, 4, 2, 2}}, G::hyperbolic_noncompact, 1},
      {"t15", {{3, 6, 3, 2, 2, 2}}, G::hyperbolic_noncompact, 2},
      {"t16", {{5, 3, 6, 2, 2, 2}}, G::hyperbolic_noncompact, 1},
      {"t17", {{4, 3, 3, 3, 2, 2}}, G::hyperbolic_noncompact, 1},
      {"t18", {{3, 6, 2, 3, 2, 2}}, G::hyperbolic_noncompact, 2},
      {"t19", {{4, 4, 4, 2, 2, 2}}, G::hyperbolic_noncompact, 3},
      {"t20", {{6, 3, 6, 2, 2, 2}}, G::hyperbolic_noncompact, 2},
      {"t21", {{3, 4, 4, 2, 2, 3}}, G::hyperbolic_noncompact, 1},
      {"t22", {{5, 3, 3, 3, 2, 2}}, G::hyperbolic_noncompact, 1},
      {"t23", {{3, 3, 6, 2, 2, 3}}, G::hyperbolic_noncompact, 2},
      {"t24", {{3, 3, 3, 3, 2, 3}}, G::hyperbolic_noncompact, 2},
      {"t25", {{4, 4, 2, 4, 2, 2}}, G::hyperbolic_noncompact, 2},
      {"t26", {{6, 3, 3, 3, 2, 2}}, G::hyperbolic_noncompact, 3},
      {"t27", {{4, 3, 6, 2, 2, 3}}, G::hyperbolic_noncompact, 2},
      {"t28", {{4, 4, 4, 2, 2, 3}}, G::hyperbolic_noncompact, 2},
      {"t29", {{5, 3, 6, 2, 2, 3}}, G::hyperbolic_noncompact, 2},
      {"t30", {{6, 3, 6, 2, 2, 3}}, G::hyperbolic_noncompact, 4},
      {"t31", {{4, 4, 4, 2, 2, 4}}, G::hyperbolic_noncompact, 4},
      {"t32", {{3, 3, 3, 3, 3, 3}}, G::hyperbolic_noncompact, 4},
  };
  return entries;
}

std::optional<CatalogEntry> find_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  return std::nullopt;
}

}  // namespace tetra
