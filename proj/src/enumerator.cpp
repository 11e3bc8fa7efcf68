#include "tetra/enumerator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace tetra {

namespace {

constexpr int kCachedDegree = 7;

const std::vector<Perm>& cached_symmetric_group(int n) {
  static std::array<std::once_flag, kCachedDegree + 1> flags;
  static std::array<std::vector<Perm>, kCachedDegree + 1> groups;
  std::call_once(flags[n], [n] { groups[n] = all_perms(n); });
  return groups[n];
}

void check_index(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("index " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxDegree));
  }
}

class Search {
 public:
  Search(const Presentation& pres, int n, Stage stage)
      : pres_(pres), n_(n), stage_(stage), perms_(all_or_cached(n)) {
    ready_.resize(static_cast<std::size_t>(pres.generator_count()));
    if (stage != Stage::all && stage != Stage::nontrivial) {
      for (const Word& r : pres.relators()) {
        int level = r.max_generator();
        if (level >= 0) ready_[level].push_back(&r);
      }
    }
  }

  std::size_t branch_count() const { return perms_.size(); }

  /// Explores the subtree where generator 0 maps to perms_[first].
  std::vector<Assignment> run(std::size_t first) {
    std::vector<Assignment> out;
    int k = pres_.generator_count();
    if (k == 0) {
      if (first == 0) out.emplace_back();
      return out;
    }
    Assignment current(k, n_);
    current.set(0, perms_[first]);
    if (consistent(current, 0)) descend(current, 1, out);
    return out;
  }

 private:
  static std::vector<Perm> all_or_cached(int n) {
    return n <= kCachedDegree ? cached_symmetric_group(n) : all_perms(n);
  }

  bool consistent(const Assignment& a, int level) const {
    for (const Word* r : ready_[level]) {
      if (!evaluate_word(*r, a).is_identity()) return false;
    }
    return true;
  }

  void descend(Assignment& current, int level, std::vector<Assignment>& out) const {
    if (level == pres_.generator_count()) {
      if (accept(current)) out.push_back(current);
      return;
    }
    for (const Perm& p : perms_) {
      current.set(level, p);
      if (consistent(current, level)) descend(current, level + 1, out);
    }
    current.set(level, Perm(n_));
  }

  bool accept(const Assignment& a) const {
    switch (stage_) {
      case Stage::all:
      case Stage::relator_filtered:
        return true;
      case Stage::nontrivial:
        return n_ == 1 || std::any_of(a.images().begin(), a.images().end(),
                                      [](const Perm& p) { return !p.is_identity(); });
      case Stage::transitive:
        return is_transitive(a);
    }
    return false;
  }

  const Presentation& pres_;
  int n_;
  Stage stage_;
  std::vector<Perm> perms_;
  std::vector<std::vector<const Word*>> ready_;
};

// Minimum of the conjugates of a over σ drawn from `sigmas`.
Assignment min_conjugate(const Assignment& a, const std::vector<Perm>& sigmas) {
  Assignment best = a;
  for (const Perm& s : sigmas) {
    Assignment c = conjugate_assignment(a, s);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::vector<Perm> point_one_stabilizer(int n) {
  std::vector<Perm> out;
  for_each_perm(n, [&](const Perm& p) {
    if (p(1) == 1) out.push_back(p);
  });
  return out;
}

}  // namespace

void for_each_perm(int n, const std::function<void(const Perm&)>& fn) {
  if (n <= kCachedDegree) {
    for (const Perm& p : cached_symmetric_group(n)) fn(p);
    return;
  }
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  do {
    fn(Perm::from_images(line));
  } while (std::next_permutation(line.begin(), line.end()));
}

std::vector<Assignment> enumerate_candidates(const Presentation& pres, int n, Stage stage,
                                             int jobs) {
  check_index(n);
  Search search(pres, n, stage);
  std::size_t branches = pres.generator_count() == 0 ? 1 : search.branch_count();
  std::vector<std::vector<Assignment>> parts(branches);

  if (jobs <= 1 || branches == 1) {
    for (std::size_t b = 0; b < branches; ++b) parts[b] = search.run(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (std::size_t b = next++; b < branches; b = next++) parts[b] = search.run(b);
      });
    }
    for (auto& w : workers) w.join();
  }

  // Branches follow the lexicographic order of the first image, and each
  // branch is produced in lexicographic order, so concatenation is sorted.
  std::vector<Assignment> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

std::vector<SubgroupClass> enumerate_classes(const Presentation& pres, int n, int jobs) {
  std::vector<Assignment> reps = enumerate_candidates(pres, n, Stage::transitive, jobs);
  std::map<Assignment, std::uint64_t> orbits;
  for (const Assignment& a : reps) ++orbits[canonical_form(a)];
  std::vector<SubgroupClass> out;
  out.reserve(orbits.size());
  for (auto& [rep, count] : orbits) {
    out.push_back({rep, n, classify_image(rep), count});
  }
  return out;
}

std::vector<Perm> generated_group(const Assignment& a, std::size_t limit) {
  std::set<Perm> elements{Perm(a.degree())};
  std::vector<Perm> frontier{Perm(a.degree())};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : a.images()) {
        Perm y = compose(g, x);
        if (elements.insert(y).second) {
          if (elements.size() > limit) return {};
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return {elements.begin(), elements.end()};
}

std::string classify_image(const Assignment& a) {
  std::vector<Perm> group = generated_group(a);
  if (group.empty()) return "order>5040";
  std::size_t order = group.size();
  int n = a.degree();
  bool has_order4 = std::any_of(group.begin(), group.end(),
                                [](const Perm& p) { return p.order() == 4; });
  if (n == 1) return "S1";
  if (n == 2 && order == 2) return "S2";
  if (n == 3) {
    if (order == 3) return "Z3";
    if (order == 6) return "S3";
  }
  if (n == 4) {
    if (order == 4) return has_order4 ? "Z4" : "V";
    if (order == 8) return "D4";
    if (order == 12) return "A4";
    if (order == 24) return "S4";
  }
  return "order-" + std::to_string(order);
}

Assignment canonical_form(const Assignment& a) {
  Assignment best = a;
  for_each_perm(a.degree(), [&](const Perm& s) {
    Assignment c = conjugate_assignment(a, s);
    if (c < best) best = std::move(c);
  });
  return best;
}

Assignment stabilizer_canonical_form(const Assignment& a) {
  return min_conjugate(a, point_one_stabilizer(a.degree()));
}

std::uint64_t centralizer_size(const Assignment& a) {
  std::uint64_t count = 0;
  for_each_perm(a.degree(), [&](const Perm& s) {
    if (conjugate_assignment(a, s) == a) ++count;
  });
  return count;
}

std::uint64_t count_distinct_subgroups(const Presentation& pres, int n, int jobs) {
  std::vector<Assignment> reps = enumerate_candidates(pres, n, Stage::transitive, jobs);
  std::vector<Perm> fixing_one = point_one_stabilizer(n);
  std::set<Assignment> forms;
  for (const Assignment& a : reps) forms.insert(min_conjugate(a, fixing_one));
  return forms.size();
}

}  // namespace tetra
