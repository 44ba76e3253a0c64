#pragma once

/*
 * Brute-force verification side of the library: graded kernel bases by
 * exact rational elimination, kernel comparison and scalar recovery,
 * absolute constants, freeness of the generator leading monomials, and
 * the R_F^n span checks.
 *
 * Everything here is independent of the constructive generator machinery
 * so the two routes can be played against each other.
 *
 * Dimension growth is exponential in the weight; the public entry points
 * enforce a hard cap of weight 12 and fail loudly beyond it.
 */

#include "freealg/derivation.hpp"
#include "freealg/generators.hpp"
#include "freealg/matrix.hpp"

#include <optional>

namespace freealg {

inline constexpr int kOracleWeightCap = 12;

struct GradedComponent {
  int m;
  int weight;
  std::vector<Word> monomials;  // lex descending
};

struct KernelBasis {
  GradedComponent component;
  std::vector<NCPoly> basis;  // monic, leading monomials strictly decreasing
};

// all words of exact weight N (of length N when m = 0), lex descending
std::vector<Word> words_of_weight(int m, int N);
std::vector<Word> words_of_weight_upto(int m, int N);

// images of a monomial basis under a derivation: the data-parallel kernel
// and its serial reference
std::vector<NCPoly> assemble_images_serial(const Derivation& d,
                                           const std::vector<Word>& basis_words);
std::vector<NCPoly> assemble_images_parallel(const Derivation& d,
                                             const std::vector<Word>& basis_words);

// echelon basis of the weight-N homogeneous kernel of D = (0, f(X)).
// For inhomogeneous f the computation runs on the filtration V_{<=N} and
// returns the echelon vectors whose leading monomial has weight exactly N
// (representatives of the associated graded piece).
KernelBasis graded_kernel_basis(const Derivation& d, int m, int N,
                                bool parallel = true);

// echelon basis of {p : D(p) = 0, weight(p) <= N}
std::vector<NCPoly> kernel_basis_upto(const Derivation& d, int m, int N,
                                      bool parallel = true);

// dimension of the span of all products of generator values of total
// nominal weight exactly N
std::size_t span_dimension(const GeneratorTable& table, int N, bool parallel = true);

struct KernelComparison {
  bool equal = false;
  std::optional<NCPoly> witness;  // element of exactly one kernel
  int witness_kernel = 0;         // 1 or 2 when a witness is present
};

KernelComparison compare_kernels(const Derivation& d1, const Derivation& d2, int m,
                                 int n_max, bool parallel = true);

// the unique alpha with D2 = alpha D1; requires equal kernels
Rational recover_scalar(const Derivation& d1, const Derivation& d2, int n_max);

// echelon basis of the intersection of ker(d_m), m = 0..M, together with
// the X <-> Y switched family, restricted to total degree <= N.
// M >= N guarantees the result is AK restricted to degree <= N; smaller M
// computes the plain intersection (used by the stability experiments).
std::vector<NCPoly> ak_basis(int M, int N, bool parallel = true);

// do the generator leading monomials of weight <= N form a code
// (no word of weight <= N has two factorizations)?
bool verify_freeness(const GeneratorTable& table, int N);

// dimension at weight N of the span of A_1 Y A_2 ... Y A_k, k <= n, with
// A_i monomials of R_F and arbitrary matching brace pairs; F = X^m only
std::size_t rfn_span_dimension(int n, int m, int N, const GeneratorTable& table);

// nullity of D^n on the weight-N monomial component
std::size_t delta_power_nullity(const Derivation& d, int n, int N,
                                bool parallel = true);

// linear algebra over polynomials, shared with the tests; pivots are
// graded leading monomials for the grading selected by m
std::vector<NCPoly> echelonize(std::vector<NCPoly> vs, int m);
NCPoly reduce_against(NCPoly v, const std::vector<NCPoly>& echelon_basis, int m);

}  // namespace freealg
