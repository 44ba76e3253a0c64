#pragma once

/*
 * Sparse exact arithmetic in the free associative algebra Q<X,Y> and in
 * its abelianization Q[x,y].
 *
 * An NCPoly is a finite map word -> coefficient kept canonical at all
 * times (zero coefficients are purged on every operation), so equality is
 * plain map equality and term iteration is lex-descending, leading
 * monomial first.
 */

#include "freealg/rational.hpp"
#include "freealg/word.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace freealg {

struct LexDescending {
  bool operator()(const Word& a, const Word& b) const { return b < a; }
};

class NCPoly {
public:
  using TermMap = std::map<Word, Rational, LexDescending>;

  NCPoly() = default;
  NCPoly(int c) { add_term(Word(), Rational(c)); }
  NCPoly(const Rational& c) { add_term(Word(), c); }
  explicit NCPoly(const Word& w) { add_term(w, Rational(1)); }

  static NCPoly monomial(const Rational& c, const Word& w) {
    NCPoly p;
    p.add_term(w, c);
    return p;
  }
  static NCPoly one() { return NCPoly(1); }
  static NCPoly x() { return NCPoly(Word::x()); }
  static NCPoly y() { return NCPoly(Word::y()); }
  static NCPoly x_pow(std::size_t n) { return NCPoly(Word::x(n)); }
  static NCPoly y_pow(std::size_t n) { return NCPoly(Word::y(n)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }

  // word concatenation product, extended bilinearly
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  friend NCPoly operator*(const Rational& c, const NCPoly& p) {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, a] : p.terms_) r.terms_.emplace(w, c * a);
    return r;
  }
  friend NCPoly operator*(const NCPoly& p, const Rational& c) { return c * p; }
  friend NCPoly operator/(const NCPoly& p, const Rational& c) {
    return c.inverse() * p;
  }

  bool operator==(const NCPoly&) const = default;

  const Word& leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("no leading monomial: zero polynomial");
    return terms_.begin()->first;
  }
  const Rational& leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("no leading coefficient: zero polynomial");
    return terms_.begin()->second;
  }

  long max_weight(int m) const {
    long best = 0;
    for (const auto& [w, c] : terms_) best = std::max(best, weight(w, m));
    return best;
  }
  long max_length() const {
    long best = 0;
    for (const auto& [w, c] : terms_) best = std::max(best, static_cast<long>(w.length()));
    return best;
  }

  std::string str() const;

private:
  TermMap terms_;
};

NCPoly pow(const NCPoly& p, int n);
NCPoly commutator(const NCPoly& p, const NCPoly& q);

// weight used for grading computations: total length when m = 0, else the
// (1, m) letter weight
long graded_weight(const Word& w, int m);

// lex-largest word among those of maximal graded weight; this "graded
// leading monomial" is multiplicative for all products, unlike the plain
// lex leading monomial (prefix capture), and the two agree on homogeneous
// polynomials
const Word& graded_leading_monomial(const NCPoly& p, int m);

// the homogeneous component of maximal graded weight
NCPoly top_weight_part(const NCPoly& p, int m);

// T_1 = [Y, X] = YX - XY
NCPoly t1();

// univariate helpers for f(X): coefficient lists are ascending in degree
NCPoly poly_in_x(const std::vector<Rational>& coeffs);
bool is_poly_in_x(const NCPoly& p);
std::vector<Rational> coeffs_in_x(const NCPoly& p);  // throws if p has a Y
int degree_in_x(const std::vector<Rational>& coeffs);  // -1 for the zero list

// Commutative polynomials in Q[x,y], keyed by (deg_x, deg_y).
class CommPoly {
public:
  using Key = std::pair<long, long>;

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  void add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  CommPoly& operator+=(const CommPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  bool operator==(const CommPoly&) const = default;

  std::string str() const;

private:
  std::map<Key, Rational> terms_;
};

// the natural homomorphism pi : Q<X,Y> -> Q[x,y]
CommPoly abelianize(const NCPoly& p);

// membership in the commutator ideal C = ker(pi)
bool is_in_commutator_ideal(const NCPoly& p);

}  // namespace freealg
