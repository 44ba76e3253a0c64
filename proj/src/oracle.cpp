#include "freealg/oracle.hpp"

#include "freealg/bracketed.hpp"
#include "freealg/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace freealg {

namespace {

void check_weight_cap(int n) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  if (n > kOracleWeightCap)
    throw std::invalid_argument("oracle weight " + std::to_string(n) +
                                " exceeds the hard cap " +
                                std::to_string(kOracleWeightCap));
}

void gen_words(int letter_weight_y, long remaining, std::string& cur,
               std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(Word::from_letters(cur));
    return;
  }
  // Y branch first: within one weight stratum this emits lex-descending
  if (letter_weight_y <= remaining) {
    cur.push_back('Y');
    gen_words(letter_weight_y, remaining - letter_weight_y, cur, out);
    cur.pop_back();
  }
  cur.push_back('X');
  gen_words(letter_weight_y, remaining - 1, cur, out);
  cur.pop_back();
}

// index assignment for the words appearing in a batch of polynomials
std::map<Word, std::size_t, LexDescending> index_words(const std::vector<NCPoly>& vs) {
  std::map<Word, std::size_t, LexDescending> index;
  for (const auto& v : vs)
    for (const auto& [w, c] : v.terms()) index.emplace(w, 0);
  std::size_t i = 0;
  for (auto& [w, slot] : index) slot = i++;
  return index;
}

std::size_t rank_of_polys(const std::vector<NCPoly>& vs, bool parallel) {
  auto index = index_words(vs);
  QMatrix mat(vs.size(), index.size());
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (const auto& [w, c] : vs[r].terms()) mat.at(r, index.at(w)) = c;
  return rank(std::move(mat), parallel);
}

bool graded_less(const Word& a, const Word& b, int m) {
  long wa = graded_weight(a, m), wb = graded_weight(b, m);
  if (wa != wb) return wa < wb;
  return a < b;
}

// echelon kernel basis of a derivation on the span of a monomial list.
// Columns are ordered graded-ascending so every nullspace vector is monic
// at its graded-largest word; the resulting basis is canonical per
// subspace and compatible with the weight filtration.
std::vector<NCPoly> kernel_on_words(const Derivation& d, std::vector<Word> words,
                                    int m, bool parallel) {
  std::sort(words.begin(), words.end(),
            [&](const Word& a, const Word& b) { return graded_less(a, b, m); });
  auto images = parallel ? assemble_images_parallel(d, words)
                         : assemble_images_serial(d, words);
  auto tindex = index_words(images);
  QMatrix mat(tindex.size(), words.size());
  for (std::size_t j = 0; j < words.size(); ++j)
    for (const auto& [w, c] : images[j].terms()) mat.at(tindex.at(w), j) = c;

  std::vector<NCPoly> basis;
  for (const auto& v : nullspace(std::move(mat), parallel)) {
    NCPoly p;
    for (std::size_t j = 0; j < words.size(); ++j) p.add_term(words[j], v[j]);
    basis.push_back(std::move(p));
  }
  std::sort(basis.begin(), basis.end(), [&](const NCPoly& a, const NCPoly& b) {
    return graded_less(graded_leading_monomial(b, m), graded_leading_monomial(a, m),
                       m);
  });
  return basis;
}

// kernel of a derivation restricted to the span of the given vectors
std::vector<NCPoly> kernel_restricted(const Derivation& d,
                                      const std::vector<NCPoly>& span_basis,
                                      bool parallel) {
  std::vector<NCPoly> images(span_basis.size());
  par_for(span_basis.size(), parallel,
          [&](std::size_t i) { images[i] = derive(d, span_basis[i]); });
  auto tindex = index_words(images);
  QMatrix mat(tindex.size(), span_basis.size());
  for (std::size_t j = 0; j < span_basis.size(); ++j)
    for (const auto& [w, c] : images[j].terms()) mat.at(tindex.at(w), j) = c;

  std::vector<NCPoly> out;
  for (const auto& v : nullspace(std::move(mat), parallel)) {
    NCPoly p;
    for (std::size_t j = 0; j < span_basis.size(); ++j) p += v[j] * span_basis[j];
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

int checked_normal_form_degree(const Derivation& d, int m) {
  auto coeffs = normal_form_coeffs(d);
  int deg = degree_in_x(coeffs);
  if (deg < 0) throw std::invalid_argument("derivation is zero (f = 0)");
  if (deg != m)
    throw std::invalid_argument("deg f = " + std::to_string(deg) +
                                " does not match m = " + std::to_string(m));
  return deg;
}

bool is_single_term_f(const Derivation& d) { return d.image_y.term_count() == 1; }

}  // namespace

std::vector<Word> words_of_weight(int m, int N) {
  if (m < 0 || N < 0) throw std::invalid_argument("words_of_weight: bad arguments");
  std::vector<Word> out;
  std::string cur;
  gen_words(m == 0 ? 1 : m, N, cur, out);
  return out;
}

std::vector<Word> words_of_weight_upto(int m, int N) {
  std::vector<Word> all;
  for (int k = 0; k <= N; ++k) {
    auto stratum = words_of_weight(m, k);
    all.insert(all.end(), stratum.begin(), stratum.end());
  }
  std::sort(all.begin(), all.end(), [](const Word& a, const Word& b) { return b < a; });
  return all;
}

std::vector<NCPoly> assemble_images_serial(const Derivation& d,
                                           const std::vector<Word>& basis_words) {
  std::vector<NCPoly> out(basis_words.size());
  for (std::size_t i = 0; i < basis_words.size(); ++i)
    out[i] = derive(d, NCPoly(basis_words[i]));
  return out;
}

std::vector<NCPoly> assemble_images_parallel(const Derivation& d,
                                             const std::vector<Word>& basis_words) {
  std::vector<NCPoly> out(basis_words.size());
  par_for(basis_words.size(), true,
          [&](std::size_t i) { out[i] = derive(d, NCPoly(basis_words[i])); });
  return out;
}

KernelBasis graded_kernel_basis(const Derivation& d, int m, int N, bool parallel) {
  check_weight_cap(N);
  checked_normal_form_degree(d, m);
  bool homogeneous = is_single_term_f(d);

  auto source = homogeneous ? words_of_weight(m, N) : words_of_weight_upto(m, N);
  auto basis = kernel_on_words(d, source, m, parallel);
  if (!homogeneous) {
    // representatives of the graded piece: vectors whose graded leading
    // monomial sits at weight exactly N
    std::erase_if(basis, [&](const NCPoly& p) {
      return graded_weight(graded_leading_monomial(p, m), m) != N;
    });
  }
  std::sort(source.begin(), source.end(),
            [](const Word& a, const Word& b) { return b < a; });
  return KernelBasis{GradedComponent{m, N, std::move(source)}, std::move(basis)};
}

std::vector<NCPoly> kernel_basis_upto(const Derivation& d, int m, int N,
                                      bool parallel) {
  check_weight_cap(N);
  if (m < 0) throw std::invalid_argument("kernel_basis_upto: m must be nonnegative");
  return kernel_on_words(d, words_of_weight_upto(m, N), m, parallel);
}

std::size_t span_dimension(const GeneratorTable& table, int N, bool parallel) {
  check_weight_cap(N);
  if (N > table.weight_max())
    throw std::invalid_argument("span_dimension: table weight bound too small");

  const auto& entries = table.entries();
  std::vector<std::vector<std::size_t>> products;
  std::vector<std::size_t> cur;
  std::function<void(long)> rec = [&](long remaining) {
    if (remaining == 0) {
      products.push_back(cur);
      return;
    }
    for (std::size_t idx = 0; idx < entries.size(); ++idx)
      if (entries[idx].weight <= remaining) {
        cur.push_back(idx);
        rec(remaining - entries[idx].weight);
        cur.pop_back();
      }
  };
  rec(N);

  std::vector<NCPoly> values(products.size());
  par_for(products.size(), parallel, [&](std::size_t i) {
    NCPoly v = NCPoly::one();
    for (std::size_t idx : products[i]) v *= entries[idx].value;
    values[i] = std::move(v);
  });
  return rank_of_polys(values, parallel);
}

KernelComparison compare_kernels(const Derivation& d1, const Derivation& d2, int m,
                                 int n_max, bool parallel) {
  check_weight_cap(n_max);
  if (!is_normal_form(d1) || !is_normal_form(d2))
    throw std::invalid_argument("compare_kernels: derivations must be in normal form");

  auto words = words_of_weight_upto(m, n_max);
  auto b1 = kernel_on_words(d1, words, m, parallel);
  auto b2 = kernel_on_words(d2, words, m, parallel);
  if (b1 == b2) return KernelComparison{true, std::nullopt, 0};

  // the echelon bases are canonical per subspace, so the subspaces differ
  for (const auto& v : b1)
    if (!reduce_against(v, b2, m).is_zero())
      return KernelComparison{false, v, 1};
  for (const auto& v : b2)
    if (!reduce_against(v, b1, m).is_zero())
      return KernelComparison{false, v, 2};
  throw std::logic_error("compare_kernels: bases differ but spans agree");
}

Rational recover_scalar(const Derivation& d1, const Derivation& d2, int n_max) {
  auto f1 = normal_form_coeffs(d1);
  auto f2 = normal_form_coeffs(d2);
  int deg1 = degree_in_x(f1);
  if (deg1 < 0) throw std::invalid_argument("recover_scalar: D1 = 0");

  auto cmp = compare_kernels(d1, d2, deg1, n_max);
  if (!cmp.equal)
    throw std::domain_error("recover_scalar: algebras of constants differ");

  std::size_t i0 = 0;
  while (f1[i0].is_zero()) ++i0;
  Rational alpha = (i0 < f2.size() ? f2[i0] : Rational(0)) / f1[i0];
  if (d2.image_y != alpha * d1.image_y)
    throw std::runtime_error(
        "recover_scalar: kernels equal but derivations not proportional");
  // cross-check on the T2 element built from F1
  if (!derive(d2, t_sequence(2, d1.image_y)).is_zero())
    throw std::runtime_error(
        "recover_scalar: kernels equal but derivations not proportional");
  return alpha;
}

std::vector<NCPoly> ak_basis(int M, int N, bool parallel) {
  check_weight_cap(N);
  if (M < 0) throw std::invalid_argument("ak_basis: M must be nonnegative");

  std::vector<NCPoly> basis;
  for (const auto& w : words_of_weight_upto(0, N)) basis.emplace_back(w);

  for (int m = 0; m <= M && !basis.empty(); ++m) {
    Derivation straight{NCPoly(), NCPoly::x_pow(static_cast<std::size_t>(m))};
    Derivation switched{NCPoly::y_pow(static_cast<std::size_t>(m)), NCPoly()};
    basis = kernel_restricted(straight, basis, parallel);
    if (basis.empty()) break;
    basis = kernel_restricted(switched, basis, parallel);
  }
  return echelonize(std::move(basis), 0);
}

bool verify_freeness(const GeneratorTable& table, int N) {
  check_weight_cap(N);
  std::vector<Word> lms;
  for (const auto& e : table.entries())
    if (e.weight <= N && !e.lm.empty()) lms.push_back(e.lm);

  // saturated factorization counter: 0 / 1 / many
  auto count_factorizations = [&](const Word& w) -> unsigned {
    const std::size_t n = w.length();
    std::vector<unsigned> ways(n + 1, 0);
    ways[n] = 1;
    for (std::size_t pos = n; pos-- > 0;) {
      unsigned total = 0;
      for (const auto& lm : lms)
        if (w.matches_at(lm, pos)) {
          total += ways[pos + lm.length()];
          if (total > 2) total = 2;
        }
      ways[pos] = total;
    }
    return ways[0];
  };

  for (const auto& w : words_of_weight_upto(table.m(), N)) {
    if (w.empty()) continue;
    if (count_factorizations(w) > 1) return false;
  }
  for (const auto& lm : lms)
    if (count_factorizations(lm) != 1) return false;
  return true;
}

std::size_t rfn_span_dimension(int n, int m, int N, const GeneratorTable& table) {
  check_weight_cap(N);
  if (n < 1) throw std::invalid_argument("rfn_span_dimension: n must be >= 1");
  if (m < 1 || table.m() != m || !table.f_is_pure_power())
    throw std::invalid_argument("R_F^n check restricted to F = X^m");

  const NCPoly f = table.f();
  // memo[(w, y)]: values of all atom sequences of weight w containing
  // exactly y free Y's; atoms are X, T1, Y and braces around a nonempty
  // element (each sequence arises once via its first-atom decomposition)
  std::map<std::pair<int, int>, std::vector<NCPoly>> memo;
  std::function<const std::vector<NCPoly>&(int, int)> elements =
      [&](int w, int y) -> const std::vector<NCPoly>& {
    auto key = std::make_pair(w, y);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<NCPoly> out;
    if (w == 0) {
      if (y == 0) out.push_back(NCPoly::one());
    } else if (w > 0 && y >= 0) {
      auto extend = [&](const NCPoly& head, int hw, int hy) {
        if (hw > w || hy > y) return;
        for (const auto& rest : elements(w - hw, y - hy))
          out.push_back(head * rest);
      };
      extend(NCPoly::x(), 1, 0);
      extend(t1(), m + 1, 0);
      extend(NCPoly::y(), m, 1);
      for (int we = 1; we + 2 * m <= w; ++we)
        for (int ye = 0; ye <= y; ++ye)
          for (const auto& e : elements(we, ye)) {
            NCPoly braced = box(e, f);
            for (const auto& rest : elements(w - we - 2 * m, y - ye))
              out.push_back(braced * rest);
          }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };

  std::vector<NCPoly> values;
  for (int y = 0; y <= n - 1; ++y) {
    const auto& vs = elements(N, y);
    values.insert(values.end(), vs.begin(), vs.end());
  }
  return rank_of_polys(values, true);
}

std::size_t delta_power_nullity(const Derivation& d, int n, int N, bool parallel) {
  check_weight_cap(N);
  if (n < 1) throw std::invalid_argument("delta_power_nullity: n must be >= 1");
  auto coeffs = normal_form_coeffs(d);
  int m = degree_in_x(coeffs);
  if (m < 0) throw std::invalid_argument("delta_power_nullity: D = 0");

  auto words = words_of_weight(m, N);
  std::vector<NCPoly> images(words.size());
  par_for(words.size(), parallel, [&](std::size_t i) {
    NCPoly p{words[i]};
    for (int k = 0; k < n; ++k) p = derive(d, p);
    images[i] = std::move(p);
  });
  return words.size() - rank_of_polys(images, parallel);
}

NCPoly reduce_against(NCPoly v, const std::vector<NCPoly>& echelon_basis, int m) {
  for (const auto& b : echelon_basis) {
    if (v.is_zero()) break;
    Rational c = v.coeff(graded_leading_monomial(b, m));
    if (!c.is_zero()) v -= c * b;
  }
  return v;
}

std::vector<NCPoly> echelonize(std::vector<NCPoly> vs, int m) {
  std::vector<NCPoly> ech;
  for (auto& v : vs) {
    NCPoly r = reduce_against(std::move(v), ech, m);
    if (r.is_zero()) continue;
    r = r / r.coeff(graded_leading_monomial(r, m));
    ech.push_back(std::move(r));
    std::sort(ech.begin(), ech.end(), [&](const NCPoly& a, const NCPoly& b) {
      return graded_less(graded_leading_monomial(b, m), graded_leading_monomial(a, m),
                         m);
    });
  }
  // bottom-up back substitution: each row ends up containing no other
  // row's leading monomial
  for (std::size_t i = ech.size(); i-- > 0;)
    for (std::size_t j = i + 1; j < ech.size(); ++j) {
      Rational c = ech[i].coeff(graded_leading_monomial(ech[j], m));
      if (!c.is_zero()) ech[i] -= c * ech[j];
    }
  return ech;
}

}  // namespace freealg
