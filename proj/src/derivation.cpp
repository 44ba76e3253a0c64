#include "freealg/derivation.hpp"

namespace freealg {

NCPoly derive(const Derivation& d, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.length(); ++i) {
      const NCPoly& img = (w.letter(i) == 'X') ? d.image_x : d.image_y;
      if (img.is_zero()) continue;
      Word pre = w.prefix(i);
      Word post = w.suffix(i + 1);
      for (const auto& [u, b] : img.terms()) out.add_term(pre * u * post, c * b);
    }
  }
  return out;
}

std::optional<int> delta_degree(const Derivation& d, const NCPoly& p, int cap) {
  if (p.is_zero()) return std::nullopt;
  int deg = 0;
  NCPoly q = derive(d, p);
  while (!q.is_zero()) {
    ++deg;
    if (deg > cap)
      throw std::domain_error("delta_degree: not nilpotent on input within cap");
    q = derive(d, q);
  }
  return deg;
}

NCPoly exp_apply(const Derivation& d, const NCPoly& p, int cap) {
  NCPoly sum = p;
  NCPoly term = p;  // D^k(p)/k!
  for (int k = 1;; ++k) {
    term = derive(d, term);
    if (term.is_zero()) return sum;
    if (k > cap) throw std::domain_error("exp: not locally nilpotent on input");
    term = term / Rational(k);
    sum += term;
  }
}

Derivation weitzenbock(int m) {
  if (m < 0) throw std::invalid_argument("weitzenbock: m must be nonnegative");
  return Derivation{NCPoly(), NCPoly::x_pow(static_cast<std::size_t>(m))};
}

bool is_normal_form(const Derivation& d) {
  return d.image_x.is_zero() && is_poly_in_x(d.image_y);
}

std::vector<Rational> normal_form_coeffs(const Derivation& d) {
  if (!is_normal_form(d))
    throw std::domain_error("derivation not in normal form (D(X) = 0, D(Y) = f(X))");
  return coeffs_in_x(d.image_y);
}

}  // namespace freealg
