#include "tetra/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tetra {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("permutation degree " + std::to_string(degree) +
                                " outside 1.." + std::to_string(kMaxDegree));
  }
}

}  // namespace

Perm::Perm(int degree) : degree_(degree) {
  check_degree(degree);
  for (int i = 0; i < degree_; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_images(std::span<const int> images_one_based) {
  Perm p(static_cast<int>(images_one_based.size()));
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < p.degree_; ++i) {
    int img = images_one_based[i];
    if (img < 1 || img > p.degree_ || seen[img - 1]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[img - 1] = true;
    p.images_[i] = static_cast<std::uint8_t>(img - 1);
  }
  return p;
}

Perm Perm::parse_cycles(std::string_view text, int degree) {
  Perm p(degree);
  std::array<bool, kMaxDegree> moved{};
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty cycle notation");
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') {
      throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
    }
    ++pos;
    // A cycle with commas uses multi-digit points; otherwise each digit is a point.
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("unterminated cycle: " + std::string(text));
    }
    std::string_view body = text.substr(pos, close - pos);
    bool comma_separated = body.find(',') != std::string_view::npos;
    std::vector<int> cycle;
    std::string token;
    auto flush = [&] {
      if (!token.empty()) {
        cycle.push_back(std::stoi(token));
        token.clear();
      }
    };
    for (char ch : body) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        if (comma_separated) flush();
        continue;
      }
      if (ch == ',') {
        flush();
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        token.push_back(ch);
        if (!comma_separated) flush();
      } else {
        throw std::invalid_argument("bad character in cycle notation: " + std::string(text));
      }
    }
    flush();
    pos = close + 1;
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (int pt : cycle) {
      if (pt < 1 || pt > degree) {
        throw std::invalid_argument("point " + std::to_string(pt) + " outside degree " +
                                    std::to_string(degree));
      }
    }
    if (cycle.size() == 1) continue;  // "(1)" and other fixed points
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i] - 1;
      if (moved[from]) throw std::invalid_argument("cycles are not disjoint: " + std::string(text));
      moved[from] = true;
      p.images_[from] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()] - 1);
    }
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  Perm inv(degree_);
  for (int i = 0; i < degree_; ++i) inv.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

int Perm::order() const {
  // lcm of cycle lengths
  std::array<bool, kMaxDegree> seen{};
  int result = 1;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm Perm::pow(int k) const {
  Perm base = k < 0 ? inverse() : *this;
  Perm result(degree_);
  for (int i = 0, e = k < 0 ? -k : k; i < e; ++i) result = compose(result, base);
  return result;
}

std::vector<int> Perm::one_line() const {
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = images_[i] + 1;
  return out;
}

std::string Perm::to_cycles() const {
  std::array<bool, kMaxDegree> seen{};
  bool wide = degree_ > 9;
  std::string out;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (wide && !first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "(1)" : out;
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.degree_ != g.degree_) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  Perm out(f.degree_);
  for (int i = 0; i < f.degree_; ++i) out.images_[i] = f.images_[g.images_[i]];
  return out;
}

Perm conjugate(const Perm& g, const Perm& sigma) {
  return compose(compose(sigma, g), sigma.inverse());
}

std::vector<Perm> all_perms(int degree) {
  std::vector<int> line(degree);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Perm> out;
  out.reserve(factorial(degree));
  do {
    out.push_back(Perm::from_images(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace tetra
