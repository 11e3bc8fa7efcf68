#include "tetra/word.hpp"

#include <algorithm>

namespace tetra {

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverted()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(int gen, bool inverse) {
  Word w;
  w.letters_.push_back({static_cast<std::uint8_t>(gen), inverse});
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverted());
  return w;
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (int i = 0, e = k < 0 ? -k : k; i < e; ++i) out = out * base;
  return out;
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, static_cast<int>(l.gen));
  return m;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(joined));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace tetra
