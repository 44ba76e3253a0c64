#include "freealg/automorphism.hpp"

namespace freealg {

NCPoly ElementaryAuto::image_x() const {
  if (const auto* a = std::get_if<Affine>(&data_))
    return a->a1 * NCPoly::x() + a->a2 * NCPoly::y() + NCPoly(a->a3);
  return NCPoly::x();
}

NCPoly ElementaryAuto::image_y() const {
  if (const auto* a = std::get_if<Affine>(&data_))
    return a->b1 * NCPoly::x() + a->b2 * NCPoly::y() + NCPoly(a->b3);
  const auto& t = std::get<Triangular>(data_);
  return NCPoly::y() + poly_in_x(t.p);
}

NCPoly apply_auto(const Automorphism& a, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly prod = NCPoly::one();
    for (std::size_t i = 0; i < w.length(); ++i)
      prod *= (w.letter(i) == 'X') ? a.image_x() : a.image_y();
    out += c * prod;
  }
  return out;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  std::vector<ElementaryAuto> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return Automorphism(std::move(word), apply_auto(a, b.image_x()),
                      apply_auto(a, b.image_y()));
}

Automorphism Automorphism::from_word(const std::vector<ElementaryAuto>& word) {
  Automorphism a = identity();
  for (const auto& e : word) a = compose(a, of(e));
  return a;
}

Automorphism Automorphism::exp_of(const Derivation& d, int cap) {
  return from_images_unchecked(exp_apply(d, NCPoly::x(), cap),
                               exp_apply(d, NCPoly::y(), cap));
}

Derivation log_auto(const Automorphism& a, int cap) {
  auto log_on = [&](const NCPoly& gen) {
    NCPoly theta = apply_auto(a, gen) - gen;  // Theta^k(gen), k = 1
    NCPoly acc;
    int k = 1;
    while (!theta.is_zero()) {
      if (k > cap)
        throw std::domain_error("log: automorphism not unipotent on generators within cap");
      acc += theta * Rational(k % 2 == 1 ? 1 : -1, k);
      theta = apply_auto(a, theta) - theta;
      ++k;
    }
    return acc;
  };
  return Derivation{log_on(NCPoly::x()), log_on(NCPoly::y())};
}

Rational t1_scaling(const Automorphism& a) {
  NCPoly image = apply_auto(a, t1());
  Rational c = image.coeff(Word::y() * Word::x());
  if (c.is_zero() || image != c * t1())
    throw std::runtime_error(
        "t1_scaling: automorphism does not scale T1 by a nonzero constant "
        "(construction invariant violated)");
  return c;
}

}  // namespace freealg
