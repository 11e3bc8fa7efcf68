#include "tetra/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tetra/enumerator.hpp"

namespace tetra {

CosetTable build_coset_table(const Assignment& rep) {
  CosetTable table;
  table.n = rep.degree();
  table.generator_count = rep.generator_count();
  table.action.assign(static_cast<std::size_t>(table.n),
                      std::vector<int>(static_cast<std::size_t>(table.generator_count)));
  for (int i = 0; i < table.n; ++i) {
    for (int g = 0; g < table.generator_count; ++g) table.action[i][g] = rep[g].image0(i);
  }

  table.transversal.assign(static_cast<std::size_t>(table.n), Word{});
  std::vector<bool> reached(static_cast<std::size_t>(table.n), false);
  reached[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::map<int, Word> best;
    for (int i : frontier) {
      for (int g = 0; g < table.generator_count; ++g) {
        int j = table.action[i][g];
        if (reached[j]) continue;
        Word candidate = Word::generator(g) * table.transversal[i];
        auto it = best.find(j);
        if (it == best.end() || candidate < it->second) best[j] = candidate;
      }
    }
    frontier.clear();
    for (auto& [j, w] : best) {
      reached[j] = true;
      table.transversal[j] = w;
      frontier.push_back(j);
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw std::invalid_argument("build_coset_table: representation is not transitive");
  }
  return table;
}

std::vector<Word> raw_schreier_words(const CosetTable& table) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(table.n * table.generator_count));
  for (int i = 0; i < table.n; ++i) {
    for (int g = 0; g < table.generator_count; ++g) {
      int j = table.action[i][g];
      out.push_back(table.transversal[j].inverse() * Word::generator(g) * table.transversal[i]);
    }
  }
  return out;
}

namespace {

// Keeps nonempty words that are neither repeats nor inverses of earlier ones.
std::vector<Word> dedup(const Presentation& pres, const std::vector<Word>& words) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const Word& w : words) {
    if (w.empty() || seen.contains(w)) continue;
    seen.insert(w);
    seen.insert(pres.normalize(w.inverse()));
    out.push_back(w);
  }
  return out;
}

struct Rule {
  std::vector<Letter> lhs;
  Word rhs;
};

std::vector<Rule> build_rules(const Presentation& pres) {
  std::set<std::pair<std::vector<Letter>, Word>> unique;
  for (const Word& relator : pres.relators()) {
    for (const Word& r : {pres.normalize(relator), pres.normalize(relator.inverse())}) {
      const auto& ls = r.letters();
      std::size_t len = ls.size();
      if (len == 0) continue;
      for (std::size_t start = 0; start < len; ++start) {
        std::vector<Letter> rot(ls.begin() + static_cast<long>(start), ls.end());
        rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<long>(start));
        for (std::size_t piece = len / 2 + 1; piece <= len; ++piece) {
          std::vector<Letter> u(rot.begin(), rot.begin() + static_cast<long>(piece));
          Word v(std::vector<Letter>(rot.begin() + static_cast<long>(piece), rot.end()));
          Word rhs = pres.normalize(v.inverse());
          if (rhs.size() < u.size()) unique.insert({u, rhs});
        }
      }
    }
  }
  std::vector<Rule> rules;
  for (const auto& [lhs, rhs] : unique) rules.push_back({lhs, rhs});
  std::stable_sort(rules.begin(), rules.end(),
                   [](const Rule& a, const Rule& b) { return a.lhs.size() > b.lhs.size(); });
  return rules;
}

// Applies the first matching rule (leftmost position, longest rule). Returns
// false when no rule matches.
bool rewrite_once(const std::vector<Rule>& rules, const Presentation& pres, Word& w) {
  const auto& ls = w.letters();
  for (std::size_t pos = 0; pos < ls.size(); ++pos) {
    for (const Rule& rule : rules) {
      if (pos + rule.lhs.size() > ls.size()) continue;
      if (!std::equal(rule.lhs.begin(), rule.lhs.end(), ls.begin() + static_cast<long>(pos))) {
        continue;
      }
      std::vector<Letter> out(ls.begin(), ls.begin() + static_cast<long>(pos));
      out.insert(out.end(), rule.rhs.letters().begin(), rule.rhs.letters().end());
      out.insert(out.end(), ls.begin() + static_cast<long>(pos + rule.lhs.size()), ls.end());
      w = pres.normalize(Word(std::move(out)));
      return true;
    }
  }
  return false;
}

}  // namespace

StabilizerGens schreier_generators(const Presentation& pres, const CosetTable& table) {
  std::vector<Word> normalized;
  for (const Word& w : raw_schreier_words(table)) normalized.push_back(pres.normalize(w));
  StabilizerGens gens;
  gens.generators = dedup(pres, normalized);
  std::vector<Word> simplified;
  for (const Word& w : gens.generators) simplified.push_back(simplify_word(w, pres));
  gens.simplified = dedup(pres, simplified);
  return gens;
}

Word simplify_word(const Word& w, const Presentation& pres) {
  std::vector<Rule> rules = build_rules(pres);
  Word current = pres.normalize(w);
  while (rewrite_once(rules, pres, current)) {
  }
  return current;
}

bool same_subgroup(const Assignment& a, const Assignment& b) {
  if (a.degree() != b.degree() || a.generator_count() != b.generator_count()) {
    throw std::invalid_argument("same_subgroup: degree mismatch");
  }
  return stabilizer_canonical_form(a) == stabilizer_canonical_form(b);
}

}  // namespace tetra
