#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freealg/bracketed.hpp"
#include "freealg/cli.hpp"
#include "freealg/expr.hpp"
#include "freealg/sampling.hpp"
#include "freealg/serialize.hpp"

#include <sstream>

using namespace freealg;

namespace {

NCPoly eval_str(const std::string& src, std::optional<NCPoly> f = std::nullopt) {
  return eval_expr(parse_expr(src), EvalContext{std::move(f)});
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return CliRun{code, out.str(), err.str()};
}

ExprPtr random_expr(Sampler& s, int depth) {
  auto node = std::make_shared<Expr>();
  int pick = s.uniform(0, depth <= 0 ? 3 : 10);
  switch (pick) {
    case 0: node->kind = Expr::Kind::Number;
            node->number = Rational(s.uniform(0, 9), s.uniform(1, 4)); break;
    case 1: node->kind = Expr::Kind::SymX; break;
    case 2: node->kind = Expr::Kind::SymY; break;
    case 3: node->kind = Expr::Kind::TSeq; node->index = s.uniform(1, 3); break;
    case 4: node->kind = Expr::Kind::Add; break;
    case 5: node->kind = Expr::Kind::Sub; break;
    case 6: node->kind = Expr::Kind::Mul; break;
    case 7: node->kind = Expr::Kind::Neg; break;
    case 8: node->kind = Expr::Kind::Pow; node->exponent = s.uniform(0, 3); break;
    case 9: node->kind = Expr::Kind::Comm; break;
    default: node->kind = Expr::Kind::Box; break;
  }
  switch (node->kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Comm:
      node->lhs = random_expr(s, depth - 1);
      node->rhs = random_expr(s, depth - 1);
      break;
    case Expr::Kind::Neg:
    case Expr::Kind::Pow:
    case Expr::Kind::Box:
      node->lhs = random_expr(s, depth - 1);
      break;
    default:
      break;
  }
  return node;
}

}  // namespace

TEST_CASE("expression parsing and evaluation") {
  CHECK(eval_str("comm(Y,X)") == t1());
  CHECK(eval_str("Y*X - X*Y") == t1());
  CHECK(eval_str("box(T(1))", NCPoly::x()) == t_sequence(2, NCPoly::x()));
  CHECK(eval_str("3/2*X^2 - Y") ==
        Rational(3, 2) * NCPoly::x_pow(2) - NCPoly::y());
  CHECK(eval_str("X + Y*X^2") ==
        NCPoly::x() + NCPoly::y() * NCPoly::x_pow(2));
  CHECK(eval_str("-X^2") == -NCPoly::x_pow(2));        // -(X^2)
  CHECK(eval_str("(X + 1)^2") ==
        NCPoly::x_pow(2) + Rational(2) * NCPoly::x() + NCPoly::one());
  CHECK(eval_str("2^3") == NCPoly(8));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_expr("X + ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 5);
  }
  CHECK_THROWS_AS(parse_expr("X ** Y"), ParseError);
  CHECK_THROWS_AS(parse_expr("comm(X)"), ParseError);
  CHECK_THROWS_AS(parse_expr("X^(2)"), ParseError);   // exponent must be a literal
  CHECK_THROWS_AS(parse_expr("X^-1"), ParseError);
  CHECK_THROWS_AS(parse_expr("T(0)"), ParseError);
  CHECK_THROWS_AS(parse_expr("foo(X)"), ParseError);
  CHECK_THROWS_AS(parse_expr("X Y"), ParseError);     // trailing input
}

TEST_CASE("box and T require the ambient F") {
  CHECK_THROWS_AS(eval_str("box(X)"), std::domain_error);
  CHECK_THROWS_AS(eval_str("T(2)"), std::domain_error);
}

TEST_CASE("parse of print is the identity on printed ASTs") {
  Sampler s(501);
  for (int it = 0; it < 300; ++it) {
    ExprPtr e = random_expr(s, 4);
    std::string printed = print_expr(e);
    ExprPtr reparsed = parse_expr(printed);
    CHECK(expr_equal(e, reparsed));
    CHECK(print_expr(reparsed) == printed);
  }
}

TEST_CASE("cli: derive kills T_1") {
  auto r = cli({"derive", "--f", "X", "--expr", "comm(Y,X)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value: 0") != std::string::npos);
}

TEST_CASE("cli: kernel reports the frozen basis at weight 2") {
  auto r = cli({"kernel", "--f", "X", "--weight", "2", "--format", "structured"});
  REQUIRE(r.code == 0);
  auto doc = OrderedJson::parse(r.out);
  CHECK(doc["results"]["dimension"] == 2);
  auto basis = doc["results"]["basis"];
  REQUIRE(basis.size() == 2);
  CHECK(poly_from_json(basis[0]) == t1());
  CHECK(poly_from_json(basis[1]) == NCPoly::x_pow(2));
}

TEST_CASE("cli: decode") {
  auto r = cli({"decode", "--m", "1", "--word", "YYXX"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bracketed: {T1}") != std::string::npos);

  auto bad = cli({"decode", "--m", "1", "--word", "YX"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not a generator leading monomial") != std::string::npos);
}

TEST_CASE("cli: tseq, gens, rewrite, ak, eval, expmap") {
  auto t = cli({"tseq", "--f", "X", "--n", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("YX - XY") != std::string::npos);

  auto g = cli({"gens", "--f", "X", "--weight-max", "6"});
  CHECK(g.code == 0);
  CHECK(g.out.find("count: 5") != std::string::npos);

  auto w = cli({"rewrite", "--f", "X", "--expr", "box(T(1)) + X*X"});
  CHECK(w.code == 0);
  CHECK(w.out.find("X*X + {T1}") != std::string::npos);

  auto a = cli({"ak", "--m", "4", "--weight", "4"});
  CHECK(a.code == 0);
  CHECK(a.out.find("dimension: 3") != std::string::npos);

  auto e = cli({"eval", "--expr", "comm(Y,X)^2"});
  CHECK(e.code == 0);
  CHECK(e.out.find("YXYX - YXXY - XYYX + XYXY") != std::string::npos);

  auto x = cli({"expmap", "--f", "1", "--expr", "Y"});
  CHECK(x.code == 0);
  CHECK(x.out.find("value: Y + 1") != std::string::npos);
}

TEST_CASE("cli: structured output round-trips polynomials") {
  auto r = cli({"eval", "--expr", "comm(Y,X)*3/2", "--format", "structured"});
  REQUIRE(r.code == 0);
  auto doc = OrderedJson::parse(r.out);
  CHECK(poly_from_json(doc["results"]["value"]) == Rational(3, 2) * t1());
}

TEST_CASE("cli: reports are byte-identical across runs") {
  std::vector<std::string> args = {"kernel", "--f", "1+X", "--weight", "3",
                                   "--format", "structured"};
  auto r1 = cli(args);
  auto r2 = cli(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);

  auto t1run = cli({"gens", "--f", "X", "--weight-max", "6"});
  auto t2run = cli({"gens", "--f", "X", "--weight-max", "6"});
  CHECK(t1run.out == t2run.out);
}

TEST_CASE("cli: exit codes") {
  CHECK(cli({"nosuch"}).code == 2);                                   // usage
  CHECK(cli({"derive", "--f", "X", "--expr", "comm(Y"}).code == 1);   // domain
  CHECK(cli({"derive", "--f", "X", "--m", "2", "--expr", "X"}).code == 2);
  CHECK(cli({"kernel", "--f", "X+Y", "--weight", "2"}).code == 1);    // f not in X
  CHECK(cli({"eval", "--expr", "X", "--format", "yaml"}).code == 2);
  CHECK(cli({"decode", "--word", "YYXX"}).code == 2);                 // missing --m
  CHECK(cli({"--help"}).code == 0);

  auto bare = cli({});
  CHECK(bare.code == 2);
  CHECK(bare.out.find("Usage") != std::string::npos);
}

TEST_CASE("cli: verify with a small budget") {
  auto r = cli({"verify", "--weight-max", "3", "--format", "structured"});
  CHECK(r.code == 0);
  auto doc = OrderedJson::parse(r.out);
  CHECK(doc["results"]["all_pass"] == true);
  CHECK(doc["results"]["checks"].size() == 8);
}
