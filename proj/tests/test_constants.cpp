#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freealg/generators.hpp"
#include "freealg/sampling.hpp"

using namespace freealg;

namespace {

Word W(const char* s) { return Word::from_letters(s); }
NCPoly P(const char* s) { return NCPoly(W(s)); }

BracketedWord bw_t1(int i = 1) { return BracketedWord::t1_pow(i); }
BracketedWord bw_x(int j = 1) { return BracketedWord::x_pow(j); }

}  // namespace

TEST_CASE("bracketed words canonicalize") {
  CHECK(bw_t1(1) * bw_t1(1) == bw_t1(2));
  CHECK(bw_x(2) * bw_x(3) == bw_x(5));
  CHECK(!(bw_t1(1) * bw_x(1) == bw_x(1) * bw_t1(1)));
  CHECK_THROWS_AS(BracketedWord::boxed(BracketedWord()), std::invalid_argument);
  CHECK_THROWS_AS(BracketedWord::x_pow(0), std::invalid_argument);
  CHECK_THROWS_AS(BracketedWord::t1_pow(0), std::invalid_argument);

  CHECK(BracketedWord::boxed(bw_t1(2) * bw_x(1) * bw_t1(1)).str() ==
        "{T1^2 X T1}");
  CHECK(bw_x(3).str() == "X^3");
}

TEST_CASE("box operator") {
  NCPoly one = NCPoly::one();
  CHECK(box(t1(), one) == NCPoly::y() * t1() - t1() * NCPoly::y());
  CHECK(box(t1(), NCPoly::x()) == P("YYXX") - P("YXYX") - P("XYXY") + P("XXYY"));
  CHECK(box(NCPoly::y(), one).is_zero());
}

TEST_CASE("kernel of box") {
  // F constant: the kernel is Q[Y]
  for (int k = 0; k <= 6; ++k)
    CHECK(box(NCPoly::y_pow(static_cast<std::size_t>(k)), NCPoly::one()).is_zero());
  // deg_X(F) > 0: the kernel is 0
  Sampler s(301);
  for (int it = 0; it < 60; ++it)
    CHECK_FALSE(box(s.nonzero_poly(4, 4), NCPoly::x()).is_zero());
}

TEST_CASE("t sequence") {
  CHECK(t_sequence(1, NCPoly::x()) == t1());
  Sampler s(302);
  for (int it = 0; it < 20; ++it) {
    NCPoly f = poly_in_x(s.f_coeffs(3));
    CHECK(t_sequence(2, f) == NCPoly::y() * t1() * f - f * t1() * NCPoly::y());
  }
  // for F = 1: LM(T_i) = Y^i X
  for (int i = 1; i <= 5; ++i) {
    Word expected = Word::y(static_cast<std::size_t>(i)) * Word::x();
    CHECK(t_sequence(i, NCPoly::one()).leading_monomial() == expected);
  }
  CHECK_THROWS_AS(t_sequence(0, NCPoly::x()), std::invalid_argument);
}

TEST_CASE("total degree of T_i is i + 1") {
  for (int i = 1; i <= 5; ++i)
    CHECK(t_sequence(i, NCPoly::one()).max_length() == i + 1);
}

TEST_CASE("eval_bracketed") {
  Sampler s(303);
  NCPoly f = poly_in_x(s.f_coeffs(2));
  CHECK(eval_bracketed(bw_t1(1), f) == t1());
  CHECK(eval_bracketed(BracketedWord::boxed(bw_t1(1)), NCPoly::x()) ==
        t_sequence(2, NCPoly::x()));
  CHECK(eval_bracketed(BracketedWord::boxed(bw_t1(2)), NCPoly::x()) ==
        NCPoly::y() * t1() * t1() * NCPoly::x() -
            NCPoly::x() * t1() * t1() * NCPoly::y());
  CHECK(eval_bracketed(BracketedWord(), f) == NCPoly::one());
}

TEST_CASE("box commutes with the derivation") {
  Sampler s(304);
  for (int it = 0; it < 60; ++it) {
    NCPoly f = poly_in_x(s.f_coeffs(3));
    Derivation d{NCPoly(), f};
    NCPoly a = s.poly(4, 4);
    CHECK(box(derive(d, a), f) == derive(d, box(a, f)));
  }
}

TEST_CASE("box preserves the delta degree when deg_X(F) > 0") {
  Sampler s(305);
  for (int it = 0; it < 60; ++it) {
    int m = s.uniform(1, 3);
    Derivation d = weitzenbock(m);
    NCPoly a = s.nonzero_poly(4, 4);
    CHECK(delta_degree(d, box(a, d.image_y)) == delta_degree(d, a));
  }
}

TEST_CASE("permissible words") {
  CHECK(is_permissible(BracketedWord::boxed(bw_t1(1)), 1));
  CHECK_FALSE(is_permissible(BracketedWord::boxed(bw_t1(1) * bw_x(1)), 1));
  BracketedWord txt = bw_t1(1) * bw_x(1) * bw_t1(1);
  CHECK(is_permissible(BracketedWord::boxed(txt), 2));
  CHECK_FALSE(is_permissible(BracketedWord::boxed(txt), 1));
  CHECK_FALSE(is_permissible(BracketedWord(), 1));
  CHECK_FALSE(is_permissible(bw_x(1) * bw_t1(1), 2));  // X in front
  CHECK_THROWS_AS(is_permissible(bw_t1(1), 0), std::invalid_argument);
}

TEST_CASE("symbolic leading monomial") {
  CHECK(symbolic_leading_monomial(BracketedWord::boxed(bw_t1(1)), 1) == W("YYXX"));
  CHECK(symbolic_leading_monomial(bw_t1(2), 1) == W("YXYX"));
  CHECK(symbolic_leading_monomial(
            BracketedWord::boxed(bw_t1(1) * bw_x(1) * bw_t1(1)), 2) ==
        W("YYXXYXXX"));
  CHECK_THROWS_AS(symbolic_leading_monomial(bw_x(1) * bw_t1(1), 2),
                  std::domain_error);
}

TEST_CASE("slm equals the leading monomial of the evaluated word") {
  for (int m : {1, 2}) {
    std::vector<Rational> f(static_cast<std::size_t>(m) + 1, Rational(0));
    f.back() = Rational(1);
    GeneratorTable table = enumerate_generators(m, f, m == 1 ? 8 : 10);
    for (const auto& e : table.entries()) {
      if (e.bw.atoms().front().kind != BracketedWord::Kind::Box) continue;
      CHECK(symbolic_leading_monomial(e.bw, m) ==
            eval_bracketed(e.bw, table.f()).leading_monomial());
    }
  }
}

TEST_CASE("decode") {
  CHECK(decode(W("YYXX"), 1) == BracketedWord::boxed(bw_t1(1)));
  CHECK(decode(W("YYXYXX"), 1) == BracketedWord::boxed(bw_t1(2)));
  CHECK_THROWS_AS(decode(W("YX"), 1), std::domain_error);
  CHECK_THROWS_AS(decode(W("X"), 1), std::domain_error);
  CHECK_THROWS_AS(decode(W("YYYX"), 1), std::domain_error);    // unbalanced
  CHECK_THROWS_AS(decode(W("YXY"), 1), std::domain_error);     // no trailing X run
  CHECK_THROWS_AS(decode(W("YYXXYX"), 1), std::domain_error);  // two components
  CHECK_THROWS_AS(decode(W("YYXXX"), 1), std::domain_error);   // closes too often
  CHECK_THROWS_AS(decode(W("YYXXXX"), 2), std::domain_error);  // X before '}'
  CHECK(decode(W("YYXXX"), 2) == BracketedWord::boxed(bw_t1(1)));
}

TEST_CASE("decode inverts slm on boxed generators") {
  for (int m : {1, 2}) {
    std::vector<Rational> f(static_cast<std::size_t>(m) + 1, Rational(0));
    f.back() = Rational(1);
    GeneratorTable table = enumerate_generators(m, f, m == 1 ? 8 : 11);
    int boxed = 0;
    for (const auto& e : table.entries()) {
      if (e.bw.atoms().front().kind != BracketedWord::Kind::Box) continue;
      CHECK(decode(symbolic_leading_monomial(e.bw, m), m) == e.bw);
      ++boxed;
    }
    CHECK(boxed > 0);
  }
}

TEST_CASE("generator enumeration m = 1") {
  GeneratorTable t4 = enumerate_generators(1, {Rational(0), Rational(1)}, 4);
  REQUIRE(t4.entries().size() == 3);
  CHECK(t4.entries()[0].bw == bw_x(1));
  CHECK(t4.entries()[0].weight == 1);
  CHECK(t4.entries()[1].bw == bw_t1(1));
  CHECK(t4.entries()[1].weight == 2);
  CHECK(t4.entries()[2].bw == BracketedWord::boxed(bw_t1(1)));
  CHECK(t4.entries()[2].weight == 4);

  // weight 6 adds {T1^2} and {{T1}} (both weight 6); {T1^3} has weight 8
  GeneratorTable t6 = enumerate_generators(1, {Rational(0), Rational(1)}, 6);
  REQUIRE(t6.entries().size() == 5);
  CHECK(t6.entries()[3].weight == 6);
  CHECK(t6.entries()[4].weight == 6);
  bool has_t1sq = false, has_nested = false;
  for (const auto& e : t6.entries()) {
    if (e.bw == BracketedWord::boxed(bw_t1(2))) has_t1sq = true;
    if (e.bw == BracketedWord::boxed(BracketedWord::boxed(bw_t1(1))))
      has_nested = true;
  }
  CHECK(has_t1sq);
  CHECK(has_nested);
}

TEST_CASE("generator enumeration m = 0") {
  GeneratorTable t = enumerate_generators(0, {Rational(1)}, 3);
  REQUIRE(t.entries().size() == 3);
  CHECK(t.entries()[0].bw == bw_x(1));
  CHECK(t.entries()[1].bw == bw_t1(1));
  CHECK(t.entries()[2].bw == BracketedWord::boxed(bw_t1(1)));
  CHECK(t.entries()[2].weight == 3);
  CHECK(t.entries()[2].value == t_sequence(2, NCPoly::one()));
  CHECK(t.entries()[2].lm == W("YYX"));
}

TEST_CASE("generator enumeration validates the degree of f") {
  CHECK_THROWS_AS(enumerate_generators(2, {Rational(0), Rational(1)}, 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_generators(0, {Rational(0)}, 3), std::invalid_argument);
}

TEST_CASE("every generator table entry is a constant") {
  struct Case {
    int m;
    std::vector<Rational> f;
    int bound;
  };
  const std::vector<Case> cases = {{0, {Rational(2)}, 5},
                                   {1, {Rational(0), Rational(1)}, 8},
                                   {1, {Rational(1), Rational(1)}, 8},
                                   {2, {Rational(0), Rational(1), Rational(1)}, 9}};
  for (const auto& c : cases) {
    GeneratorTable table = enumerate_generators(c.m, c.f, c.bound);
    Derivation d = table.derivation();
    for (const auto& e : table.entries()) CHECK(derive(d, e.value).is_zero());
  }
}

TEST_CASE("boxing raises the leading-monomial weight by 2m") {
  for (int m = 1; m <= 3; ++m) {
    NCPoly f = NCPoly::x_pow(static_cast<std::size_t>(m));
    Word before = t1().leading_monomial();
    Word after = box(t1(), f).leading_monomial();
    CHECK(weight(after, m) == weight(before, m) + 2 * m);
  }
}

TEST_CASE("deformed values keep the homogeneous top part") {
  struct Case {
    int m;
    std::vector<Rational> f;
  };
  const std::vector<Case> cases = {{1, {Rational(1), Rational(1)}},
                                   {2, {Rational(0), Rational(1), Rational(1)}}};
  for (const auto& c : cases) {
    std::vector<Rational> xm(static_cast<std::size_t>(c.m) + 1, Rational(0));
    xm.back() = Rational(1);
    GeneratorTable deformed = enumerate_generators(c.m, c.f, c.m == 1 ? 8 : 11);
    NCPoly fxm = poly_in_x(xm);
    for (const auto& e : deformed.entries()) {
      NCPoly homog = eval_bracketed(e.bw, fxm);
      CHECK(top_weight_part(e.value, c.m) == homog);  // f is monic here
      CHECK(e.lm == homog.leading_monomial());
    }
  }
}

TEST_CASE("nabla operations") {
  NCPoly one = NCPoly::one(), x = NCPoly::x();
  CHECK(nabla_r(one, one, one, x) == t1());
  CHECK(nabla_r(x, one, one, x) == P("XYX") - P("XXY"));
  CHECK(nabla_l(one, one, one, x) == -t1());
  CHECK(nabla_l(one, x, one, x) == P("XYX") - P("YXX"));
}

TEST_CASE("nabla commutation identity") {
  Sampler s(306);
  const std::vector<std::vector<Rational>> fs = {
      {Rational(0), Rational(1)},
      {Rational(0), Rational(0), Rational(1)},
      {Rational(1), Rational(1)}};
  NCPoly one = NCPoly::one(), y = NCPoly::y();
  for (int it = 0; it < 25; ++it) {
    NCPoly v2{s.word(4)}, u2{s.word(4)};
    for (const auto& coeffs : fs) {
      NCPoly f = poly_in_x(coeffs);
      NCPoly lhs =
          nabla_r(y * v2, u2 * f, one, f) - nabla_r(f * v2, u2 * y, one, f);
      NCPoly rhs = box(nabla_r(v2, u2, one, f), f) -
                   nabla_l(v2, u2, one, f) * commutator(y, f);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("rewrite expresses constants in the generators") {
  GeneratorTable table = enumerate_generators(1, {Rational(0), Rational(1)}, 6);

  // T_2 is the generator {T1} itself
  FormalPoly fp = rewrite_in_generators(t_sequence(2, NCPoly::x()), table);
  REQUIRE(fp.terms().size() == 1);
  const auto& [prod, coeff] = *fp.terms().begin();
  REQUIRE(prod.size() == 1);
  CHECK(table.entries()[prod[0]].bw == BracketedWord::boxed(bw_t1(1)));
  CHECK(coeff == Rational(1));

  // X*T1 + 2 X^3 -> X (x) T1 + 2 X (x) X (x) X
  NCPoly p = NCPoly::x() * t1() + Rational(2) * NCPoly::x_pow(3);
  FormalPoly fp2 = rewrite_in_generators(p, table);
  CHECK(fp2.terms().size() == 2);
  CHECK(eval_formal(fp2, table) == p);
  for (const auto& [factors, c] : fp2.terms()) {
    if (factors.size() == 2) {
      CHECK(table.entries()[factors[0]].bw == bw_x(1));
      CHECK(table.entries()[factors[1]].bw == bw_t1(1));
      CHECK(c == Rational(1));
    } else {
      REQUIRE(factors.size() == 3);
      CHECK(c == Rational(2));
    }
  }

  // a longer constant, verified by round trip
  NCPoly q = t1() * NCPoly::x() * t1() - NCPoly::x() * t1() * t1();
  CHECK(eval_formal(rewrite_in_generators(q, table), table) == q);
}

TEST_CASE("rewrite round-trips random generator combinations") {
  Sampler s(307);
  for (int m : {1, 2}) {
    std::vector<Rational> f(static_cast<std::size_t>(m) + 1, Rational(0));
    f.back() = Rational(1);
    GeneratorTable table = enumerate_generators(m, f, 8);
    for (int it = 0; it < 20; ++it) {
      NCPoly p;
      int terms = s.uniform(1, 3);
      for (int t = 0; t < terms; ++t) {
        NCPoly prod = NCPoly::one();
        long w = 0;
        while (true) {
          std::size_t idx = static_cast<std::size_t>(
              s.uniform(0, static_cast<int>(table.entries().size() - 1)));
          const auto& e = table.entries()[idx];
          if (w + e.weight > 8) break;
          prod *= e.value;
          w += e.weight;
          if (s.uniform(0, 2) == 0) break;
        }
        p += s.nonzero_rational() * prod;
      }
      CHECK(eval_formal(rewrite_in_generators(p, table), table) == p);
    }
  }
}

TEST_CASE("rewrite rejects non-constants and reports missing coverage") {
  GeneratorTable small = enumerate_generators(1, {Rational(0), Rational(1)}, 4);
  CHECK_THROWS_AS(rewrite_in_generators(NCPoly::y(), small), std::domain_error);

  // {T1^2} has weight 6; its leading monomial cannot be segmented over a
  // weight-4 table
  NCPoly big = eval_bracketed(BracketedWord::boxed(bw_t1(2)), NCPoly::x());
  CHECK_THROWS_WITH_AS(rewrite_in_generators(big, small),
                       doctest::Contains("YYXYXX"), std::domain_error);
}

TEST_CASE("formal polynomial printing") {
  GeneratorTable table = enumerate_generators(1, {Rational(0), Rational(1)}, 4);
  NCPoly p = NCPoly::x() * t1() + Rational(2) * NCPoly::x_pow(3);
  CHECK(rewrite_in_generators(p, table).str(table) == "2*X*X*X + X*T1");
}
