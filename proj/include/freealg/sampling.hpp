#pragma once

/*
 * Seeded random generators for the property tests and the verification
 * suite. Everything is driven by one mt19937_64 so runs are reproducible.
 */

#include "freealg/derivation.hpp"
#include "freealg/ncpoly.hpp"

#include <cstdint>
#include <random>

namespace freealg {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Word word(int max_len, int min_len = 0) {
    int len = uniform(min_len, max_len);
    std::string s;
    for (int i = 0; i < len; ++i) s += (uniform(0, 1) ? 'Y' : 'X');
    return Word::from_letters(s);
  }

  Rational rational(int num_range = 9, int den_range = 4) {
    return Rational(uniform(-num_range, num_range), uniform(1, den_range));
  }
  Rational nonzero_rational(int num_range = 9, int den_range = 4) {
    Rational r = rational(num_range, den_range);
    return r.is_zero() ? Rational(1, uniform(1, den_range)) : r;
  }

  NCPoly poly(int max_terms, int max_len) {
    NCPoly p;
    int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) p.add_term(word(max_len), rational());
    return p;
  }

  // random word of exact graded weight (length when m = 0)
  Word homogeneous_word(int m, int target_weight) {
    int wy = (m == 0) ? 1 : m;
    std::string s;
    int remaining = target_weight;
    while (remaining > 0) {
      if (wy <= remaining && uniform(0, 1)) {
        s += 'Y';
        remaining -= wy;
      } else {
        s += 'X';
        remaining -= 1;
      }
    }
    return Word::from_letters(s);
  }

  // possibly-zero homogeneous polynomial of the given graded weight
  NCPoly homogeneous_poly(int m, int target_weight, int max_terms) {
    NCPoly p;
    int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i)
      p.add_term(homogeneous_word(m, target_weight), rational());
    return p;
  }
  NCPoly nonzero_poly(int max_terms, int max_len) {
    NCPoly p = poly(max_terms, max_len);
    while (p.is_zero()) p.add_term(word(max_len), nonzero_rational());
    return p;
  }

  // random nonzero f(X) of degree <= max_deg, ascending coefficients
  std::vector<Rational> f_coeffs(int max_deg) {
    int deg = uniform(0, max_deg);
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : coeffs) c = rational(4, 3);
    coeffs.back() = nonzero_rational(4, 3);
    return coeffs;
  }

  std::mt19937_64& rng() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace freealg
