#pragma once

/*
 * Tame automorphisms of Q<X,Y>: words of affine and triangular elementary
 * automorphisms, plus exponentials of derivations that are nilpotent on
 * the generators. Both constructions are invertible by design, so no
 * inversion algorithm is needed.
 */

#include "freealg/derivation.hpp"
#include "freealg/ncpoly.hpp"

#include <variant>
#include <vector>

namespace freealg {

class ElementaryAuto {
public:
  // X -> a1 X + a2 Y + a3,  Y -> b1 X + b2 Y + b3,  a1 b2 - a2 b1 != 0
  struct Affine {
    Rational a1, a2, a3, b1, b2, b3;
  };
  // X -> X,  Y -> Y + p(X)  (coefficients of p ascending in degree)
  struct Triangular {
    std::vector<Rational> p;
  };

  static ElementaryAuto affine(const Rational& a1, const Rational& a2,
                               const Rational& a3, const Rational& b1,
                               const Rational& b2, const Rational& b3) {
    if ((a1 * b2 - a2 * b1).is_zero())
      throw std::invalid_argument("affine automorphism with zero determinant");
    return ElementaryAuto(Affine{a1, a2, a3, b1, b2, b3});
  }
  static ElementaryAuto triangular(std::vector<Rational> p) {
    return ElementaryAuto(Triangular{std::move(p)});
  }

  NCPoly image_x() const;
  NCPoly image_y() const;

private:
  template <class T>
  explicit ElementaryAuto(T data) : data_(std::move(data)) {}
  std::variant<Affine, Triangular> data_;
};

class Automorphism {
public:
  static Automorphism identity() {
    return Automorphism({}, NCPoly::x(), NCPoly::y());
  }
  static Automorphism of(const ElementaryAuto& e) {
    return Automorphism({e}, e.image_x(), e.image_y());
  }
  // product in the given order; the rightmost factor acts first
  static Automorphism from_word(const std::vector<ElementaryAuto>& word);
  // exp(D) for a derivation nilpotent on the generators
  static Automorphism exp_of(const Derivation& d, int cap = kDefaultCap);
  // escape hatch for tests and serialization; no invertibility guarantee
  static Automorphism from_images_unchecked(NCPoly image_x, NCPoly image_y) {
    return Automorphism({}, std::move(image_x), std::move(image_y));
  }

  const NCPoly& image_x() const { return image_x_; }
  const NCPoly& image_y() const { return image_y_; }
  const std::vector<ElementaryAuto>& word() const { return word_; }

  friend Automorphism compose(const Automorphism& a, const Automorphism& b);

private:
  Automorphism(std::vector<ElementaryAuto> word, NCPoly ix, NCPoly iy)
      : word_(std::move(word)), image_x_(std::move(ix)), image_y_(std::move(iy)) {}

  std::vector<ElementaryAuto> word_;
  NCPoly image_x_;
  NCPoly image_y_;
};

// substitution homomorphism: replace X, Y by the cached images
NCPoly apply_auto(const Automorphism& a, const NCPoly& p);

// compose(a, b) applies b first: compose(a, b)(p) = a(b(p))
Automorphism compose(const Automorphism& a, const Automorphism& b);

// log(1 + Theta) with Theta = A - id, on the generators; requires Theta
// nilpotent on X and Y within cap (A unipotent)
Derivation log_auto(const Automorphism& a, int cap = kDefaultCap);

// the scalar c with A(T_1) = c T_1; throws if A does not scale T_1
Rational t1_scaling(const Automorphism& a);

}  // namespace freealg
