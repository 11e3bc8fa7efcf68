#include "tetra/assignment.hpp"

#include <stdexcept>

namespace tetra {

Assignment::Assignment(std::vector<Perm> images) : images_(std::move(images)) {
  for (const Perm& p : images_) {
    if (p.degree() != images_.front().degree()) {
      throw std::invalid_argument("assignment images have mixed degrees");
    }
  }
}

Assignment::Assignment(int generator_count, int degree)
    : images_(static_cast<std::size_t>(generator_count), Perm(degree)) {}

void Assignment::set(int gen, Perm p) {
  if (p.degree() != degree()) throw std::invalid_argument("assignment: degree mismatch");
  images_[gen] = p;
}

Assignment parse_assignment(const Presentation& pres, const std::map<std::string, std::string>& cycles,
                            int degree) {
  Assignment a(pres.generator_count(), degree);
  for (const auto& [name, text] : cycles) {
    int g = pres.generator_index(name);
    if (g < 0) throw std::invalid_argument("unknown generator: " + name);
    a.set(g, Perm::parse_cycles(text, degree));
  }
  return a;
}

Perm evaluate_word(const Word& w, const Assignment& a) {
  Perm result(a.degree());
  for (const Letter& l : w.letters()) {
    if (l.gen >= a.generator_count()) {
      throw std::invalid_argument("evaluate_word: generator without an image");
    }
    const Perm& img = a[l.gen];
    result = compose(result, l.inverse ? img.inverse() : img);
  }
  return result;
}

bool satisfies_relators(const Presentation& pres, const Assignment& a) {
  for (const Word& r : pres.relators()) {
    if (!evaluate_word(r, a).is_identity()) return false;
  }
  return true;
}

bool is_transitive(const Assignment& a) {
  int n = a.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& p : a.images()) {
      int next = p.image0(queue[head]);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return static_cast<int>(queue.size()) == n;
}

Assignment conjugate_assignment(const Assignment& a, const Perm& sigma) {
  if (sigma.degree() != a.degree()) {
    throw std::invalid_argument("conjugate_assignment: degree mismatch");
  }
  Perm sigma_inv = sigma.inverse();
  std::vector<Perm> out;
  out.reserve(a.images().size());
  for (const Perm& g : a.images()) out.push_back(compose(compose(sigma, g), sigma_inv));
  return Assignment(std::move(out));
}

std::string format_assignment(const Presentation& pres, const Assignment& a) {
  std::string out;
  for (int g = 0; g < a.generator_count(); ++g) {
    if (g) out += ' ';
    out += pres.generator_names()[g] + "=" + a[g].to_cycles();
  }
  return out;
}

}  // namespace tetra
