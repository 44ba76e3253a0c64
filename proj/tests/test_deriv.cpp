#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freealg/automorphism.hpp"
#include "freealg/sampling.hpp"

using namespace freealg;

namespace {

Word W(const char* s) { return Word::from_letters(s); }
NCPoly P(const char* s) { return NCPoly(W(s)); }

Derivation scaled(const Derivation& d, const Rational& c) {
  return Derivation{c * d.image_x, c * d.image_y};
}

}  // namespace

TEST_CASE("derive follows the Leibniz extension") {
  // D = (0, F) kills T_1 = [Y, X] because [F(X), X] = 0
  for (int m = 0; m <= 6; ++m) CHECK(derive(weitzenbock(m), t1()).is_zero());
  Derivation general{NCPoly(), NCPoly(1) + NCPoly::x_pow(2)};
  CHECK(derive(general, t1()).is_zero());

  CHECK(derive(weitzenbock(2), NCPoly::one()).is_zero());
  CHECK(derive(weitzenbock(1), P("YY")) == P("XY") + P("YX"));
}

TEST_CASE("Leibniz law on random pairs") {
  Sampler s(201);
  for (int it = 0; it < 100; ++it) {
    Derivation d{s.poly(3, 3), s.poly(3, 3)};
    NCPoly p = s.poly(4, 4), q = s.poly(4, 4);
    CHECK(derive(d, p * q) == derive(d, p) * q + p * derive(d, q));
  }
}

TEST_CASE("delta degree") {
  CHECK(delta_degree(weitzenbock(0), P("YYY")) == 3);
  CHECK(delta_degree(weitzenbock(3), t1()) == 0);
  CHECK(delta_degree(weitzenbock(1), P("YYX")) == 2);
  CHECK(delta_degree(weitzenbock(1), NCPoly()) == std::nullopt);  // deg(0) = -inf

  Derivation not_nilpotent{NCPoly::x(), NCPoly()};  // D(X) = X
  CHECK_THROWS_AS(delta_degree(not_nilpotent, NCPoly::x(), 16), std::domain_error);
}

TEST_CASE("degree identities for the weitzenbock family") {
  Sampler s(202);
  for (int it = 0; it < 100; ++it) {
    Derivation d = weitzenbock(s.uniform(0, 3));
    NCPoly p = s.nonzero_poly(5, 4), q = s.nonzero_poly(5, 4);
    int dp = *delta_degree(d, p), dq = *delta_degree(d, q);
    CHECK(delta_degree(d, p * q) == dp + dq);
    auto ds = delta_degree(d, p + q);
    if (ds) CHECK(*ds <= std::max(dp, dq));
    if (dp != dq) CHECK(ds == std::max(dp, dq));
    NCPoly dp1 = derive(d, p);
    if (!dp1.is_zero()) CHECK(delta_degree(d, dp1) == dp - 1);
  }
}

TEST_CASE("exp") {
  CHECK(exp_apply(weitzenbock(0), NCPoly::y()) == NCPoly::y() + NCPoly(1));
  CHECK(exp_apply(weitzenbock(2), NCPoly::x()) == NCPoly::x());
  // delta_1 on Y^2: Y^2 + (XY + YX) + X^2
  CHECK(exp_apply(weitzenbock(1), P("YY")) ==
        P("YY") + P("XY") + P("YX") + P("XX"));

  Derivation not_nilpotent{NCPoly::x(), NCPoly()};
  CHECK_THROWS_AS(exp_apply(not_nilpotent, NCPoly::x(), 16), std::domain_error);
}

TEST_CASE("exp is multiplicative") {
  Sampler s(203);
  for (int it = 0; it < 60; ++it) {
    Derivation d = weitzenbock(s.uniform(0, 3));
    NCPoly p = s.poly(3, 3), q = s.poly(3, 3);
    CHECK(exp_apply(d, p * q) == exp_apply(d, p) * exp_apply(d, q));
  }
}

TEST_CASE("one-parameter group: exp(lambda D) exp(mu D) = exp((lambda+mu) D)") {
  Sampler s(204);
  for (int it = 0; it < 60; ++it) {
    Derivation d = weitzenbock(s.uniform(0, 3));
    Rational lambda = s.rational(), mu = s.rational();
    Automorphism a = compose(Automorphism::exp_of(scaled(d, lambda)),
                             Automorphism::exp_of(scaled(d, mu)));
    Automorphism b = Automorphism::exp_of(scaled(d, lambda + mu));
    CHECK(a.image_x() == b.image_x());
    CHECK(a.image_y() == b.image_y());
  }
}

TEST_CASE("log of an automorphism") {
  CHECK(log_auto(Automorphism::identity()).is_zero());

  // X -> X, Y -> Y + X^2 has Theta^2 = 0 on the generators, so log = Theta
  Automorphism a = Automorphism::of(
      ElementaryAuto::triangular({Rational(0), Rational(0), Rational(1)}));
  Derivation d = log_auto(a);
  CHECK(d.image_x.is_zero());
  CHECK(d.image_y == NCPoly::x_pow(2));

  CHECK(log_auto(Automorphism::exp_of(weitzenbock(1))) == weitzenbock(1));

  Automorphism dilation = Automorphism::of(ElementaryAuto::affine(
      Rational(2), Rational(0), Rational(0), Rational(0), Rational(1), Rational(0)));
  CHECK_THROWS_AS(log_auto(dilation, 16), std::domain_error);
}

TEST_CASE("log/exp round trip on normal-form derivations") {
  Sampler s(205);
  for (int m = 0; m <= 4; ++m)
    CHECK(log_auto(Automorphism::exp_of(weitzenbock(m))) == weitzenbock(m));
  for (int it = 0; it < 40; ++it) {
    Derivation d{NCPoly(), poly_in_x(s.f_coeffs(4))};
    CHECK(log_auto(Automorphism::exp_of(d)) == d);
  }
}

TEST_CASE("weitzenbock family") {
  CHECK(weitzenbock(0) == Derivation{NCPoly(), NCPoly(1)});
  CHECK(weitzenbock(1) == Derivation{NCPoly(), NCPoly::x()});
  CHECK(weitzenbock(3) == Derivation{NCPoly(), NCPoly::x_pow(3)});
  CHECK_THROWS_AS(weitzenbock(-1), std::invalid_argument);
}

TEST_CASE("apply_auto substitutes the cached images") {
  Sampler s(206);
  NCPoly p = s.poly(5, 4);
  CHECK(apply_auto(Automorphism::identity(), p) == p);

  Automorphism shear =
      Automorphism::of(ElementaryAuto::triangular({Rational(0), Rational(1)}));
  CHECK(apply_auto(shear, t1()) == t1());  // [Y + X, X] = [Y, X]

  Automorphism swap = Automorphism::of(ElementaryAuto::affine(
      Rational(0), Rational(1), Rational(0), Rational(1), Rational(0), Rational(0)));
  CHECK(apply_auto(swap, t1()) == -t1());  // [X, Y] = -[Y, X]
}

TEST_CASE("apply_auto is a ring homomorphism") {
  Sampler s(209);
  Automorphism a = compose(
      Automorphism::of(ElementaryAuto::triangular({Rational(1), Rational(2)})),
      Automorphism::of(ElementaryAuto::affine(Rational(0), Rational(1), Rational(3),
                                              Rational(1), Rational(0),
                                              Rational(0))));
  for (int it = 0; it < 40; ++it) {
    NCPoly p = s.poly(3, 3), q = s.poly(3, 3);
    CHECK(apply_auto(a, p * q) == apply_auto(a, p) * apply_auto(a, q));
    CHECK(apply_auto(a, p + q) == apply_auto(a, p) + apply_auto(a, q));
  }
}

TEST_CASE("t1 scaling") {
  CHECK(t1_scaling(Automorphism::identity()) == Rational(1));

  Sampler s(207);
  for (int it = 0; it < 60; ++it) {
    Rational a1 = s.rational(), a2 = s.rational(), b1 = s.rational(),
             b2 = s.rational();
    Rational det = a1 * b2 - a2 * b1;
    if (det.is_zero()) continue;
    Automorphism a = Automorphism::of(
        ElementaryAuto::affine(a1, a2, s.rational(), b1, b2, s.rational()));
    CHECK(t1_scaling(a) == det);
  }

  for (int m = 0; m <= 4; ++m)
    CHECK(t1_scaling(Automorphism::exp_of(weitzenbock(m))) == Rational(1));

  CHECK_THROWS_AS(
      t1_scaling(Automorphism::from_images_unchecked(NCPoly::x(), NCPoly::x())),
      std::runtime_error);
  CHECK_THROWS_AS(t1_scaling(Automorphism::from_images_unchecked(
                      NCPoly::x(), NCPoly::y() + P("XY"))),
                  std::runtime_error);
}

TEST_CASE("t1 scaling is multiplicative over composition") {
  Sampler s(208);
  for (int it = 0; it < 40; ++it) {
    std::vector<ElementaryAuto> word;
    int len = s.uniform(1, 4);
    for (int k = 0; k < len; ++k) {
      if (s.uniform(0, 1)) {
        word.push_back(ElementaryAuto::triangular(
            {s.rational(), s.rational(), s.rational()}));
      } else {
        Rational a1 = s.rational(), a2 = s.rational(), b1 = s.rational(),
                 b2 = s.rational();
        if ((a1 * b2 - a2 * b1).is_zero()) {
          a1 = Rational(1);
          a2 = Rational(0);
          b1 = Rational(0);
          b2 = Rational(1);
        }
        word.push_back(
            ElementaryAuto::affine(a1, a2, s.rational(), b1, b2, s.rational()));
      }
    }
    Rational product(1);
    for (const auto& e : word) product *= t1_scaling(Automorphism::of(e));
    CHECK(t1_scaling(Automorphism::from_word(word)) == product);
  }
}

TEST_CASE("affine automorphism rejects zero determinant") {
  CHECK_THROWS_AS(
      ElementaryAuto::affine(Rational(1), Rational(2), Rational(0), Rational(2),
                             Rational(4), Rational(1)),
      std::invalid_argument);
}
