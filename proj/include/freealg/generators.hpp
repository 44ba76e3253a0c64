#pragma once

/*
 * Free generators of the algebra of constants of D = (0, f(X)) and
 * rewriting of constants as formal polynomials in those generators.
 *
 * For m = deg f >= 1 the generators are X, T1 and the boxed permissible
 * words; for m = 0 they are X and the sequence T_1, T_2, ... realized as
 * nested boxes.
 */

#include "freealg/bracketed.hpp"
#include "freealg/derivation.hpp"

#include <cstddef>
#include <map>

namespace freealg {

struct GeneratorEntry {
  BracketedWord bw;
  NCPoly value;  // eval_bracketed(bw, f)
  Word lm;       // leading monomial of value
  long weight;   // nominal weight (total degree when m = 0)
};

class GeneratorTable {
public:
  // validates lm = LM(value) and distinctness, sorts by (weight, lm desc)
  GeneratorTable(int m, std::vector<Rational> f_coeffs, int weight_max,
                 std::vector<GeneratorEntry> entries);

  int m() const { return m_; }
  const std::vector<Rational>& f_coeffs() const { return f_coeffs_; }
  const NCPoly& f() const { return f_; }
  int weight_max() const { return weight_max_; }
  const std::vector<GeneratorEntry>& entries() const { return entries_; }

  Derivation derivation() const { return Derivation{NCPoly(), f_}; }
  bool f_is_pure_power() const;

private:
  int m_;
  std::vector<Rational> f_coeffs_;
  NCPoly f_;
  int weight_max_;
  std::vector<GeneratorEntry> entries_;
};

// all permissible roots of each exact weight up to max_root_weight (m >= 1)
std::vector<std::vector<BracketedWord>> permissible_roots_by_weight(int m,
                                                                    long max_root_weight);

// the table of free generators of weight (total degree when m = 0) <= weight_max
GeneratorTable enumerate_generators(int m, const std::vector<Rational>& f_coeffs,
                                    int weight_max);

// formal polynomial over generator symbols; a product is a sequence of
// entry indices into the table
class FormalPoly {
public:
  using Product = std::vector<std::size_t>;

  void add(const Product& prod, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(prod, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Product, Rational>& terms() const { return terms_; }
  bool operator==(const FormalPoly&) const = default;

  std::string str(const GeneratorTable& table) const;

private:
  std::map<Product, Rational> terms_;
};

// unique factorization of a word into generator leading monomials; throws
// std::domain_error naming the word when none exists
std::vector<std::size_t> factorize_word(const Word& w, const GeneratorTable& table);

// greedy leading-monomial elimination; requires derive(D, p) = 0
FormalPoly rewrite_in_generators(const NCPoly& p, const GeneratorTable& table);

NCPoly eval_formal(const FormalPoly& fp, const GeneratorTable& table);

}  // namespace freealg
