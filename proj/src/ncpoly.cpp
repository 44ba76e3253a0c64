#include "freealg/ncpoly.hpp"

#include <sstream>

namespace freealg {

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    if (w.empty()) {
      out << a.str();
    } else if (a.is_one()) {
      out << w.str();
    } else {
      out << a.str() << "*" << w.str();
    }
  }
  return out.str();
}

NCPoly pow(const NCPoly& p, int n) {
  if (n < 0) throw std::invalid_argument("negative power of a polynomial");
  NCPoly r = NCPoly::one();
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

NCPoly commutator(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

long graded_weight(const Word& w, int m) {
  return m == 0 ? static_cast<long>(w.length()) : weight(w, m);
}

const Word& graded_leading_monomial(const NCPoly& p, int m) {
  if (p.is_zero()) throw std::domain_error("no leading monomial: zero polynomial");
  const Word* best = nullptr;
  long best_w = -1;
  for (const auto& [w, c] : p.terms()) {  // lex descending, so first of a
    long gw = graded_weight(w, m);        // weight stratum is its lex max
    if (gw > best_w) {
      best_w = gw;
      best = &w;
    }
  }
  return *best;
}

NCPoly top_weight_part(const NCPoly& p, int m) {
  NCPoly top;
  if (p.is_zero()) return top;
  long best_w = graded_weight(graded_leading_monomial(p, m), m);
  for (const auto& [w, c] : p.terms())
    if (graded_weight(w, m) == best_w) top.add_term(w, c);
  return top;
}

NCPoly t1() { return commutator(NCPoly::y(), NCPoly::x()); }

NCPoly poly_in_x(const std::vector<Rational>& coeffs) {
  NCPoly p;
  for (std::size_t j = 0; j < coeffs.size(); ++j) p.add_term(Word::x(j), coeffs[j]);
  return p;
}

bool is_poly_in_x(const NCPoly& p) {
  for (const auto& [w, c] : p.terms())
    if (w.count('Y') != 0) return false;
  return true;
}

std::vector<Rational> coeffs_in_x(const NCPoly& p) {
  std::vector<Rational> coeffs;
  for (const auto& [w, c] : p.terms()) {
    if (w.count('Y') != 0)
      throw std::domain_error("polynomial is not univariate in X");
    std::size_t j = w.length();
    if (coeffs.size() <= j) coeffs.resize(j + 1, Rational(0));
    coeffs[j] = c;
  }
  return coeffs;
}

int degree_in_x(const std::vector<Rational>& coeffs) {
  for (std::size_t j = coeffs.size(); j-- > 0;)
    if (!coeffs[j].is_zero()) return static_cast<int>(j);
  return -1;
}

std::string CommPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // print highest total degree first, then x-degree descending
  std::vector<std::pair<Key, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    long ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  for (const auto& [k, c] : items) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    std::string mono;
    auto power = [](const char* v, long e) -> std::string {
      if (e == 0) return "";
      if (e == 1) return v;
      return std::string(v) + "^" + std::to_string(e);
    };
    mono = power("x", k.first);
    std::string my = power("y", k.second);
    if (!mono.empty() && !my.empty()) mono += "*";
    mono += my;
    if (mono.empty()) {
      out << a.str();
    } else if (a.is_one()) {
      out << mono;
    } else {
      out << a.str() << "*" << mono;
    }
  }
  return out.str();
}

CommPoly abelianize(const NCPoly& p) {
  CommPoly r;
  for (const auto& [w, c] : p.terms())
    r.add_term({static_cast<long>(w.count('X')), static_cast<long>(w.count('Y'))}, c);
  return r;
}

bool is_in_commutator_ideal(const NCPoly& p) { return abelianize(p).is_zero(); }

}  // namespace freealg
