#include "freealg/bracketed.hpp"

#include <sstream>

namespace freealg {

long BracketedWord::weight(int m) const {
  long w = 0;
  for (const auto& a : atoms_) {
    switch (a.kind) {
      case Kind::XPow: w += a.power; break;
      case Kind::T1Pow: w += static_cast<long>(a.power) * (m == 0 ? 2 : m + 1); break;
      case Kind::Box: w += a.inner->weight(m) + (m == 0 ? 1 : 2L * m); break;
    }
  }
  return w;
}

std::string BracketedWord::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& a : atoms_) {
    if (!first) out << " ";
    first = false;
    switch (a.kind) {
      case Kind::XPow:
        out << "X";
        if (a.power != 1) out << "^" << a.power;
        break;
      case Kind::T1Pow:
        out << "T1";
        if (a.power != 1) out << "^" << a.power;
        break;
      case Kind::Box:
        out << "{" << a.inner->str() << "}";
        break;
    }
  }
  return out.str();
}

NCPoly box(const NCPoly& a, const NCPoly& f) {
  return NCPoly::y() * a * f - f * a * NCPoly::y();
}

NCPoly t_sequence(int i, const NCPoly& f) {
  if (i < 1) throw std::invalid_argument("t_sequence: index must be >= 1");
  NCPoly t = t1();
  for (int k = 1; k < i; ++k) t = box(t, f);
  return t;
}

NCPoly eval_bracketed(const BracketedWord& bw, const NCPoly& f) {
  NCPoly prod = NCPoly::one();
  for (const auto& a : bw.atoms()) {
    switch (a.kind) {
      case BracketedWord::Kind::XPow:
        prod *= NCPoly::x_pow(static_cast<std::size_t>(a.power));
        break;
      case BracketedWord::Kind::T1Pow:
        prod *= pow(t1(), a.power);
        break;
      case BracketedWord::Kind::Box:
        prod *= box(eval_bracketed(*a.inner, f), f);
        break;
    }
  }
  return prod;
}

bool is_permissible(const BracketedWord& bw, int m) {
  if (m < 1) throw std::invalid_argument("is_permissible: requires m >= 1");
  if (bw.empty()) return false;
  const auto& atoms = bw.atoms();
  if (atoms.front().kind == BracketedWord::Kind::XPow) return false;
  if (atoms.back().kind == BracketedWord::Kind::XPow) return false;
  for (const auto& a : atoms) {
    if (a.kind == BracketedWord::Kind::XPow && a.power >= m) return false;
    if (a.kind == BracketedWord::Kind::Box && !is_permissible(*a.inner, m))
      return false;
  }
  return true;
}

static void slm_append(const BracketedWord& bw, int m, Word& out) {
  for (const auto& a : bw.atoms()) {
    switch (a.kind) {
      case BracketedWord::Kind::XPow:
        out *= Word::x(static_cast<std::size_t>(a.power));
        break;
      case BracketedWord::Kind::T1Pow:
        for (int i = 0; i < a.power; ++i) out *= Word::y() * Word::x();
        break;
      case BracketedWord::Kind::Box:
        out *= Word::y();
        slm_append(*a.inner, m, out);
        out *= Word::x(static_cast<std::size_t>(m));
        break;
    }
  }
}

Word symbolic_leading_monomial(const BracketedWord& bw, int m) {
  if (!is_permissible(bw, m))
    throw std::domain_error("symbolic_leading_monomial: word is not permissible");
  Word out;
  slm_append(bw, m, out);
  return out;
}

BracketedWord decode(const Word& w, int m) {
  if (m < 1) throw std::invalid_argument("decode: requires m >= 1");
  auto fail = [&] {
    throw std::domain_error("decode: '" + w.str() +
                            "' is not a generator leading monomial");
  };

  // split into segments Y^{b_i} X^{a_i}, all b_i, a_i >= 1
  std::vector<std::pair<long, long>> segments;
  std::size_t pos = 0;
  while (pos < w.length()) {
    long b = 0, a = 0;
    while (pos < w.length() && w.letter(pos) == 'Y') ++b, ++pos;
    while (pos < w.length() && w.letter(pos) == 'X') ++a, ++pos;
    if (b == 0 || a == 0) fail();
    segments.emplace_back(b, a);
  }
  if (segments.empty()) fail();

  // each segment reads as (b-1) left brackets, T1, floor((a-1)/m) right
  // brackets, and X^{(a-1) mod m}
  std::vector<BracketedWord> stack(1);
  for (const auto& [b, a] : segments) {
    for (long k = 0; k < b - 1; ++k) stack.emplace_back();
    stack.back() *= BracketedWord::t1_pow(1);
    long closes = (a - 1) / m;
    long rem = (a - 1) % m;
    for (long k = 0; k < closes; ++k) {
      if (stack.size() < 2) fail();  // unbalanced
      BracketedWord inner = std::move(stack.back());
      stack.pop_back();
      if (inner.empty()) fail();
      stack.back() *= BracketedWord::boxed(inner);
    }
    if (rem > 0) stack.back() *= BracketedWord::x_pow(static_cast<int>(rem));
  }
  if (stack.size() != 1) fail();  // unclosed brackets

  const BracketedWord& result = stack.front();
  // a boxed generator is exactly one outer box around a permissible root
  if (result.atoms().size() != 1 ||
      result.atoms().front().kind != BracketedWord::Kind::Box)
    fail();
  if (!is_permissible(result, m)) fail();
  if (symbolic_leading_monomial(result, m) != w) fail();
  return result;
}

NCPoly nabla_r(const NCPoly& v1, const NCPoly& u1, const NCPoly& u, const NCPoly& f) {
  return v1 * NCPoly::y() * u1 * u * f - v1 * f * u1 * u * NCPoly::y();
}

NCPoly nabla_l(const NCPoly& v1, const NCPoly& u1, const NCPoly& u, const NCPoly& f) {
  return f * u * v1 * NCPoly::y() * u1 - NCPoly::y() * u * v1 * f * u1;
}

}  // namespace freealg
