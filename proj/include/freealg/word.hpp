#pragma once

/*
 * Words over the alphabet {X, Y}: the monomial basis of the free
 * associative algebra in two generators. The empty word is the monomial 1.
 *
 * The monomial order "Y >> X > 1" is lexicographic with Y > X and a proper
 * prefix smaller than its extensions, which is exactly what std::string
 * comparison gives for the letters 'X' < 'Y'.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace freealg {

class Word {
public:
  Word() = default;

  static Word from_letters(std::string_view s) {
    for (char c : s)
      if (c != 'X' && c != 'Y')
        throw std::invalid_argument("word letters must be 'X' or 'Y'");
    Word w;
    w.s_.assign(s);
    return w;
  }
  static Word x(std::size_t n = 1) {
    Word w;
    w.s_.assign(n, 'X');
    return w;
  }
  static Word y(std::size_t n = 1) {
    Word w;
    w.s_.assign(n, 'Y');
    return w;
  }

  std::size_t length() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  char letter(std::size_t i) const { return s_[i]; }
  std::size_t count(char c) const {
    return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), c));
  }

  Word operator*(const Word& o) const {
    Word w;
    w.s_ = s_ + o.s_;
    return w;
  }
  Word& operator*=(const Word& o) {
    s_ += o.s_;
    return *this;
  }

  Word prefix(std::size_t n) const {
    Word w;
    w.s_ = s_.substr(0, n);
    return w;
  }
  Word suffix(std::size_t from) const {
    Word w;
    w.s_ = s_.substr(std::min(from, s_.size()));
    return w;
  }
  // does this word contain `pattern` starting at position pos?
  bool matches_at(const Word& pattern, std::size_t pos) const {
    return pos + pattern.s_.size() <= s_.size() &&
           s_.compare(pos, pattern.s_.size(), pattern.s_) == 0;
  }

  auto operator<=>(const Word&) const = default;

  const std::string& letters() const { return s_; }
  std::string str() const { return s_.empty() ? "1" : s_; }

private:
  std::string s_;
};

inline std::strong_ordering lex_compare(const Word& a, const Word& b) {
  return a <=> b;
}

// Weight grading w(X) = 1, w(Y) = m.
inline long weight(const Word& w, int m) {
  return static_cast<long>(w.count('X')) +
         static_cast<long>(m) * static_cast<long>(w.count('Y'));
}

}  // namespace freealg
