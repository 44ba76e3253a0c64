#pragma once

/*
 * Derivations of Q<X,Y>. A derivation is determined by the images of the
 * two generators and extends everywhere by the Leibniz law
 * d(ab) = d(a)b + a d(b).
 *
 * Local nilpotency is not decidable from the images, so every operation
 * that iterates a derivation takes an explicit cap and fails loudly when
 * the iteration does not terminate.
 */

#include "freealg/ncpoly.hpp"

#include <optional>

namespace freealg {

inline constexpr int kDefaultCap = 64;

struct Derivation {
  NCPoly image_x;
  NCPoly image_y;

  bool operator==(const Derivation&) const = default;
  bool is_zero() const { return image_x.is_zero() && image_y.is_zero(); }
};

// the unique Leibniz extension applied to p; derive(D, 1) = 0
NCPoly derive(const Derivation& d, const NCPoly& p);

// max d with D^d(p) != 0; nullopt encodes deg(0) = -infinity
std::optional<int> delta_degree(const Derivation& d, const NCPoly& p,
                                int cap = kDefaultCap);

// exp(D) applied to p: sum of D^k(p)/k!, truncated at the first vanishing power
NCPoly exp_apply(const Derivation& d, const NCPoly& p, int cap = kDefaultCap);

// the Weitzenboeck family: d_m(X) = 0, d_m(Y) = X^m
Derivation weitzenbock(int m);

// normal form D(X) = 0, D(Y) = f(X)
bool is_normal_form(const Derivation& d);
// coefficient list of f(X) for a normal-form derivation (throws otherwise)
std::vector<Rational> normal_form_coeffs(const Derivation& d);

}  // namespace freealg
