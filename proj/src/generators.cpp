#include "freealg/generators.hpp"

#include "freealg/parallel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace freealg {

GeneratorTable::GeneratorTable(int m, std::vector<Rational> f_coeffs, int weight_max,
                               std::vector<GeneratorEntry> entries)
    : m_(m),
      f_coeffs_(std::move(f_coeffs)),
      f_(poly_in_x(f_coeffs_)),
      weight_max_(weight_max),
      entries_(std::move(entries)) {
  if (degree_in_x(f_coeffs_) != m_)
    throw std::invalid_argument("generator table: deg f != m");
  for (const auto& e : entries_)
    if (graded_leading_monomial(e.value, m_) != e.lm)
      throw std::invalid_argument("generator table: entry lm != LM(value)");
  std::sort(entries_.begin(), entries_.end(),
            [](const GeneratorEntry& a, const GeneratorEntry& b) {
              if (a.weight != b.weight) return a.weight < b.weight;
              return b.lm < a.lm;  // lm descending
            });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].lm == entries_[i - 1].lm)
      throw std::invalid_argument("generator table: duplicate leading monomial");
}

bool GeneratorTable::f_is_pure_power() const {
  if (degree_in_x(f_coeffs_) != m_ || !f_coeffs_[static_cast<std::size_t>(m_)].is_one())
    return false;
  for (int j = 0; j < m_; ++j)
    if (!f_coeffs_[static_cast<std::size_t>(j)].is_zero()) return false;
  return true;
}

std::vector<std::vector<BracketedWord>> permissible_roots_by_weight(int m,
                                                                    long max_root_weight) {
  if (m < 1) throw std::invalid_argument("permissible roots require m >= 1");
  std::vector<std::vector<BracketedWord>> byw(
      static_cast<std::size_t>(std::max(max_root_weight + 1, 1L)));
  using Kind = BracketedWord::Kind;

  for (long target = 1; target <= max_root_weight; ++target) {
    auto& acc = byw[static_cast<std::size_t>(target)];
    // depth-first extension; merging never fires because we forbid equal
    // adjacent power kinds, so every canonical word is produced once
    std::function<void(const BracketedWord&, long, Kind, bool)> extend =
        [&](const BracketedWord& prefix, long used, Kind last, bool empty) {
          if (used == target) {
            if (!empty && last != Kind::XPow) acc.push_back(prefix);
            return;
          }
          long remaining = target - used;
          if (last != Kind::T1Pow)
            for (long i = 1; i * (m + 1) <= remaining; ++i)
              extend(prefix * BracketedWord::t1_pow(static_cast<int>(i)),
                     used + i * (m + 1), Kind::T1Pow, false);
          if (!empty && last != Kind::XPow)
            for (long j = 1; j < m && j <= remaining; ++j)
              extend(prefix * BracketedWord::x_pow(static_cast<int>(j)), used + j,
                     Kind::XPow, false);
          for (long wr = 1; wr + 2L * m <= remaining; ++wr)
            for (const auto& r : byw[static_cast<std::size_t>(wr)])
              extend(prefix * BracketedWord::boxed(r), used + wr + 2L * m, Kind::Box,
                     false);
        };
    extend(BracketedWord(), 0, Kind::Box, true);
  }
  return byw;
}

GeneratorTable enumerate_generators(int m, const std::vector<Rational>& f_coeffs,
                                    int weight_max) {
  if (degree_in_x(f_coeffs) != m)
    throw std::invalid_argument("enumerate_generators: deg f != m");
  if (weight_max < 1)
    throw std::invalid_argument("enumerate_generators: weight_max must be >= 1");

  std::vector<GeneratorEntry> entries;
  std::vector<BracketedWord> words;
  std::vector<long> weights;

  auto push = [&](const BracketedWord& bw, long w) {
    words.push_back(bw);
    weights.push_back(w);
  };

  push(BracketedWord::x_pow(1), 1);
  if (m == 0) {
    // X and T_i = box^{i-1}(T_1), total degree i + 1
    BracketedWord chain = BracketedWord::t1_pow(1);
    for (int i = 1; i + 1 <= weight_max; ++i) {
      push(chain, i + 1);
      chain = BracketedWord::boxed(chain);
    }
  } else {
    if (m + 1 <= weight_max) push(BracketedWord::t1_pow(1), m + 1);
    auto roots = permissible_roots_by_weight(m, weight_max - 2L * m);
    for (long wr = 1; wr + 2L * m <= weight_max; ++wr)
      for (const auto& r : roots[static_cast<std::size_t>(wr)])
        push(BracketedWord::boxed(r), wr + 2L * m);
  }

  NCPoly f = poly_in_x(f_coeffs);
  entries.resize(words.size());
  par_for(words.size(), true, [&](std::size_t i) {
    NCPoly value = eval_bracketed(words[i], f);
    Word lm = graded_leading_monomial(value, m);
    entries[i] = GeneratorEntry{words[i], std::move(value), std::move(lm), weights[i]};
  });
  return GeneratorTable(m, f_coeffs, weight_max, std::move(entries));
}

std::string FormalPoly::str(const GeneratorTable& table) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [prod, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    std::string factors;
    for (std::size_t idx : prod) {
      if (!factors.empty()) factors += "*";
      const auto& bw = table.entries()[idx].bw;
      bool needs_parens = bw.atoms().size() > 1;
      factors += needs_parens ? "(" + bw.str() + ")" : bw.str();
    }
    if (factors.empty()) {
      out << a.str();
    } else if (a.is_one()) {
      out << factors;
    } else {
      out << a.str() << "*" << factors;
    }
  }
  return out.str();
}

std::vector<std::size_t> factorize_word(const Word& w, const GeneratorTable& table) {
  const auto& entries = table.entries();
  const std::size_t n = w.length();
  // parse counts per suffix, saturated at 2: we only need 0 / 1 / many
  std::vector<unsigned> ways(n + 1, 0);
  ways[n] = 1;
  for (std::size_t pos = n; pos-- > 0;) {
    unsigned total = 0;
    for (const auto& e : entries)
      if (w.matches_at(e.lm, pos) && ways[pos + e.lm.length()] > 0) {
        total += ways[pos + e.lm.length()];
        if (total > 2) total = 2;
      }
    ways[pos] = total;
  }
  if (ways[0] == 0)
    throw std::domain_error(
        "monomial '" + w.str() +
        "' is not a product of generator leading monomials (input is not a "
        "constant, or the table weight bound is too small)");
  if (ways[0] > 1)
    throw std::runtime_error("monomial '" + w.str() +
                             "' has more than one factorization; the generator "
                             "leading monomials do not form a code");

  std::vector<std::size_t> factors;
  std::size_t pos = 0;
  while (pos < n) {
    bool advanced = false;
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
      const auto& e = entries[idx];
      if (w.matches_at(e.lm, pos) && ways[pos + e.lm.length()] > 0) {
        factors.push_back(idx);
        pos += e.lm.length();
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("factorize_word: inconsistent parse table");
  }
  return factors;
}

FormalPoly rewrite_in_generators(const NCPoly& p, const GeneratorTable& table) {
  if (!derive(table.derivation(), p).is_zero())
    throw std::domain_error("rewrite: input is not a constant of D = (0, f(X))");

  // elimination runs on the graded leading word: it is multiplicative, so
  // the top of a generator product is the concatenation of the entry lms,
  // and for inhomogeneous f the subtraction only introduces words that are
  // smaller in the graded order
  FormalPoly out;
  NCPoly rest = p;
  while (!rest.is_zero()) {
    const Word w = graded_leading_monomial(rest, table.m());
    auto factors = factorize_word(w, table);
    NCPoly prod = NCPoly::one();
    for (std::size_t idx : factors) prod *= table.entries()[idx].value;
    Rational c = rest.coeff(w) / prod.coeff(w);
    out.add(factors, c);
    rest -= c * prod;
  }
  return out;
}

NCPoly eval_formal(const FormalPoly& fp, const GeneratorTable& table) {
  NCPoly out;
  for (const auto& [prod, c] : fp.terms()) {
    NCPoly value = NCPoly::one();
    for (std::size_t idx : prod) value *= table.entries()[idx].value;
    out += c * value;
  }
  return out;
}

}  // namespace freealg
