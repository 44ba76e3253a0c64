#pragma once

/*
 * The box operator A -> YAF - FAY for a fixed F = f(X), written {A}, and
 * the bracketed-word syntax for constants: sequences of X-powers,
 * T1-powers and boxed subwords.
 *
 * Canonical form: adjacent powers of the same kind are merged and a box
 * argument is never empty, so the uniqueness statements about bracketings
 * become syntactic equality.
 */

#include "freealg/ncpoly.hpp"

#include <memory>
#include <vector>

namespace freealg {

class BracketedWord {
public:
  enum class Kind { XPow, T1Pow, Box };

  struct Atom {
    Kind kind;
    int power = 0;                               // XPow / T1Pow
    std::shared_ptr<const BracketedWord> inner;  // Box

    bool operator==(const Atom& o) const {
      if (kind != o.kind) return false;
      if (kind == Kind::Box) return *inner == *o.inner;
      return power == o.power;
    }
  };

  BracketedWord() = default;  // empty product

  static BracketedWord x_pow(int j) {
    if (j < 1) throw std::invalid_argument("x_pow: exponent must be >= 1");
    BracketedWord b;
    b.atoms_.push_back(Atom{Kind::XPow, j, nullptr});
    return b;
  }
  static BracketedWord t1_pow(int i) {
    if (i < 1) throw std::invalid_argument("t1_pow: exponent must be >= 1");
    BracketedWord b;
    b.atoms_.push_back(Atom{Kind::T1Pow, i, nullptr});
    return b;
  }
  static BracketedWord boxed(const BracketedWord& v) {
    if (v.empty()) throw std::invalid_argument("boxed: argument must be nonempty");
    BracketedWord b;
    b.atoms_.push_back(Atom{Kind::Box, 0, std::make_shared<BracketedWord>(v)});
    return b;
  }

  bool empty() const { return atoms_.empty(); }
  const std::vector<Atom>& atoms() const { return atoms_; }

  // concatenation, merging adjacent powers of the same kind
  BracketedWord operator*(const BracketedWord& o) const {
    BracketedWord r = *this;
    for (const auto& a : o.atoms_) r.append(a);
    return r;
  }
  BracketedWord& operator*=(const BracketedWord& o) { return *this = *this * o; }

  bool operator==(const BracketedWord& o) const { return atoms_ == o.atoms_; }

  // weight for m >= 1: w(X)=1, w(T1)=m+1, box adds 2m.
  // For m = 0 this is the total degree: deg(T1)=2, a box adds 1.
  long weight(int m) const;

  std::string str() const;

private:
  void append(const Atom& a) {
    if (!atoms_.empty() && a.kind != Kind::Box && atoms_.back().kind == a.kind) {
      atoms_.back().power += a.power;
      return;
    }
    atoms_.push_back(a);
  }

  std::vector<Atom> atoms_;
};

// the operator {A} = YAF - FAY
NCPoly box(const NCPoly& a, const NCPoly& f);

// T_1 = YX - XY, T_{i+1} = {T_i}
NCPoly t_sequence(int i, const NCPoly& f);

// XPow(j) -> X^j, T1Pow(i) -> T1^i, Box(V) -> {eval(V)}, sequence -> product
NCPoly eval_bracketed(const BracketedWord& bw, const NCPoly& f);

// permissible words: start and end in T1 or a box at every nesting level,
// interior X-powers have exponent < m, and no X stands before a closing
// bracket
bool is_permissible(const BracketedWord& bw, int m);

// leading monomial by the substitution T1 -> YX, { -> Y, } -> X^m
Word symbolic_leading_monomial(const BracketedWord& bw, int m);

// inverse of symbolic_leading_monomial on leading monomials of boxed
// generators; throws std::domain_error on anything else
BracketedWord decode(const Word& w, int m);

// nabla_{r,U}(V1 Y U1) = V1 Y U1 U F - V1 F U1 U Y  (operates on the
// explicit decomposition; U = 1 gives nabla_r)
NCPoly nabla_r(const NCPoly& v1, const NCPoly& u1, const NCPoly& u, const NCPoly& f);
// nabla_{l,U}(V1 Y U1) = F U V1 Y U1 - Y U V1 F U1
NCPoly nabla_l(const NCPoly& v1, const NCPoly& u1, const NCPoly& u, const NCPoly& f);

}  // namespace freealg
