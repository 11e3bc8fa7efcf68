#include "tetra/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "tetra/stabilizer.hpp"

namespace tetra {

namespace {

// ---- exhaustive enumeration ------------------------------------------------

std::vector<Perm> symmetric_group(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

// Applies the word right-to-left to every point and checks each is fixed.
bool kills(const Word& relator, const std::vector<Perm>& images, int n) {
  const auto& ls = relator.letters();
  for (int x = 1; x <= n; ++x) {
    int y = x;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      const Perm& p = images[it->gen];
      if (it->inverse) {
        int z = 1;
        while (p(z) != y) ++z;
        y = z;
      } else {
        y = p(y);
      }
    }
    if (y != x) return false;
  }
  return true;
}

bool single_orbit(const std::vector<Perm>& images, int n) {
  std::vector<int> orbit{1};
  std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
  in[1] = true;
  for (std::size_t h = 0; h < orbit.size(); ++h) {
    for (const Perm& p : images) {
      int y = p(orbit[h]);
      if (!in[y]) {
        in[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return static_cast<int>(orbit.size()) == n;
}

using Key = std::vector<std::vector<int>>;

Key key_of(const std::vector<Perm>& images) {
  Key k;
  for (const Perm& p : images) k.push_back(p.one_line());
  return k;
}

// Orbits of `valid` under simultaneous conjugation by the given σ.
std::uint64_t count_orbits(const std::vector<std::vector<Perm>>& valid,
                           const std::vector<Perm>& conjugators) {
  std::set<Key> visited;
  std::uint64_t orbits = 0;
  for (const auto& images : valid) {
    if (visited.contains(key_of(images))) continue;
    ++orbits;
    for (const Perm& s : conjugators) {
      Perm s_inv = s.inverse();
      std::vector<Perm> c;
      for (const Perm& g : images) c.push_back(s * g * s_inv);
      visited.insert(key_of(c));
    }
  }
  return orbits;
}

// ---- coset enumeration -----------------------------------------------------

class CosetEnumerator {
 public:
  CosetEnumerator(int columns, int max_cosets) : columns_(columns), max_cosets_(max_cosets) {
    new_coset();
  }

  bool overflow() const { return overflow_; }
  bool live(int c) const { return parent_[c] == c; }
  int defined() const { return static_cast<int>(table_.size()); }
  int active() const { return active_; }

  void define(int coset, int col) {
    if (active_ >= max_cosets_) {
      overflow_ = true;
      return;
    }
    int d = new_coset();
    table_[coset][col] = d;
    table_[d][col ^ 1] = coset;
  }

  void scan_and_fill(int coset, const std::vector<int>& word) {
    if (word.empty()) return;
    int f = coset;
    int b = coset;
    int i = 0;
    int j = static_cast<int>(word.size()) - 1;
    while (true) {
      while (i <= j && table_[f][word[i]] >= 0) f = table_[f][word[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][word[j] ^ 1] >= 0) b = table_[b][word[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][word[i]] = b;
        table_[b][word[i] ^ 1] = f;
        return;
      }
      define(f, word[i]);
      if (overflow_) return;
    }
  }

  void fill_row(int coset) {
    for (int col = 0; col < columns_ && !overflow_; ++col) {
      if (table_[coset][col] < 0) define(coset, col);
    }
  }

  /// Live cosets renumbered in definition order.
  std::vector<std::vector<int>> compact() {
    std::vector<int> number(table_.size(), -1);
    int next = 0;
    for (int c = 0; c < defined(); ++c) {
      if (live(c)) number[c] = next++;
    }
    std::vector<std::vector<int>> out;
    for (int c = 0; c < defined(); ++c) {
      if (!live(c)) continue;
      std::vector<int> row(static_cast<std::size_t>(columns_));
      for (int col = 0; col < columns_; ++col) row[col] = number[rep(table_[c][col])];
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  int new_coset() {
    table_.emplace_back(static_cast<std::size_t>(columns_), -1);
    int id = static_cast<int>(table_.size()) - 1;
    parent_.push_back(id);
    ++active_;
    return id;
  }

  int rep(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int k, int l) {
    int a = rep(k);
    int b = rep(l);
    if (a == b) return;
    int keep = std::min(a, b);
    int drop = std::max(a, b);
    parent_[drop] = keep;
    --active_;
    queue_.push_back(drop);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      int dead = queue_[q];
      for (int col = 0; col < columns_; ++col) {
        int d = table_[dead][col];
        if (d < 0) continue;
        table_[d][col ^ 1] = -1;
        int mu = rep(dead);
        int nu = rep(d);
        if (table_[mu][col] >= 0) {
          merge(nu, table_[mu][col]);
        } else if (table_[nu][col ^ 1] >= 0) {
          merge(mu, table_[nu][col ^ 1]);
        } else {
          table_[mu][col] = nu;
          table_[nu][col ^ 1] = mu;
        }
      }
    }
  }

  int columns_;
  int max_cosets_;
  int active_ = 0;
  bool overflow_ = false;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

std::vector<int> columns_of(const Word& w) {
  std::vector<int> out;
  for (const Letter& l : w.letters()) out.push_back(2 * l.gen + (l.inverse ? 1 : 0));
  return out;
}

}  // namespace

BruteForceCounts brute_force_classes(const Presentation& pres, int n, int jobs) {
  if (n < 1 || n > kBruteForceMaxDegree) {
    throw std::invalid_argument("brute_force_classes: degree must be in 1..4");
  }
  const std::vector<Perm> group = symmetric_group(n);
  const std::size_t base = group.size();
  const int k = pres.generator_count();
  std::uint64_t total = 1;
  for (int g = 0; g < k; ++g) total *= base;

  // Shard by the image of the first generator.
  const std::uint64_t shard_size = k == 0 ? 1 : total / base;
  const std::size_t shards = k == 0 ? 1 : base;
  std::vector<std::vector<std::vector<Perm>>> found(shards);
  auto work = [&](std::size_t shard) {
    std::vector<Perm> images(static_cast<std::size_t>(k), group.front());
    for (std::uint64_t code = shard * shard_size; code < (shard + 1) * shard_size; ++code) {
      // Mixed radix: generator 0 is the most significant digit.
      std::uint64_t rest = code;
      for (int g = k - 1; g >= 0; --g) {
        images[g] = group[rest % base];
        rest /= base;
      }
      bool ok = std::all_of(pres.relators().begin(), pres.relators().end(),
                            [&](const Word& r) { return kills(r, images, n); });
      if (ok && single_orbit(images, n)) found[shard].push_back(images);
    }
  };
  if (jobs <= 1) {
    for (std::size_t s = 0; s < shards; ++s) work(s);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (std::size_t s = next++; s < shards; s = next++) work(s);
      });
    }
    for (auto& w : workers) w.join();
  }

  std::vector<std::vector<Perm>> valid;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(valid));

  std::vector<Perm> fixing_one;
  std::copy_if(group.begin(), group.end(), std::back_inserter(fixing_one),
               [](const Perm& p) { return p(1) == 1; });

  BruteForceCounts counts;
  counts.labeled = valid.size();
  counts.classes = count_orbits(valid, group);
  counts.subgroups = count_orbits(valid, fixing_one);
  return counts;
}

int default_max_cosets(int index, int generator_count) {
  return 10 * std::max(index, 1) * std::max(generator_count, 1);
}

TCResult todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                      int max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  const int columns = 2 * pres.generator_count();
  CosetEnumerator e(columns, max_cosets);
  TCResult result;

  std::vector<std::vector<int>> relators;
  for (const Word& r : pres.relators()) relators.push_back(columns_of(r));

  for (const Word& w : subgroup_gens) {
    e.scan_and_fill(0, columns_of(w));
    if (e.overflow()) return result;
  }
  for (int coset = 0; coset < e.defined(); ++coset) {
    for (const auto& r : relators) {
      if (!e.live(coset)) break;
      e.scan_and_fill(coset, r);
      if (e.overflow()) return result;
    }
    if (e.live(coset)) {
      e.fill_row(coset);
      if (e.overflow()) return result;
    }
  }
  result.status = TCStatus::closed;
  result.table = e.compact();
  result.index = static_cast<int>(result.table.size());
  return result;
}

Assignment induced_representation(const TCResult& result, int generator_count) {
  if (!result.closed()) throw std::invalid_argument("induced_representation: run did not close");
  std::vector<Perm> images;
  for (int g = 0; g < generator_count; ++g) {
    std::vector<int> line;
    for (const auto& row : result.table) line.push_back(row[2 * g + 1] + 1);
    images.push_back(Perm::from_images(line));
  }
  if (generator_count == 0) return Assignment{};
  return Assignment(std::move(images));
}

VerifyResult verify_class(const Presentation& pres, const Assignment& rep, int max_cosets) {
  VerifyResult out;
  out.generators = schreier_generators(pres, build_coset_table(rep)).simplified;
  int cap = max_cosets > 0 ? max_cosets : default_max_cosets(rep.degree(), pres.generator_count());
  out.tc = todd_coxeter(pres, out.generators, cap);
  if (!out.tc.closed()) {
    out.verdict = Verdict::inconclusive;
  } else {
    out.verdict = out.tc.index == rep.degree() ? Verdict::verified : Verdict::wrong_index;
  }
  return out;
}

}  // namespace tetra
