#pragma once

// Seeded random generators for polynomials and multivectors, used by the
// verification suites and the property tests.

#include <random>
#include <vector>

#include "starprod/multivector.hpp"

namespace starprod::sampling {

using Rng = std::mt19937_64;

struct PolySpec {
  int max_degree = 3;
  int max_terms = 4;
  int max_coeff = 5;     // numerators and denominators drawn from [1, max_coeff]
  bool complex = true;   // allow imaginary parts
  int max_hbar = 0;      // hbar powers drawn from [0, max_hbar]
  std::vector<Var> vars{Var::q0, Var::q1, Var::q2, Var::q3, Var::p0, Var::p1, Var::p2, Var::p3};
};

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, int max_coeff, bool allow_zero = false) {
  for (;;) {
    const long num = uniform(rng, -max_coeff, max_coeff);
    if (num == 0 && !allow_zero) continue;
    return make_rational(num, uniform(rng, 1, max_coeff));
  }
}

inline ScalarH random_scalar(Rng& rng, const PolySpec& shape) {
  ComplexQ c(random_rational(rng, shape.max_coeff));
  if (shape.complex && uniform(rng, 0, 2) == 0) c.im = random_rational(rng, shape.max_coeff, true);
  return ScalarH(c, uniform(rng, 0, shape.max_hbar));
}

/// Monomial of total degree at most max_degree over the chosen variables.
inline Exponents random_exponents(Rng& rng, const PolySpec& shape) {
  Exponents e{};
  const int degree = uniform(rng, 0, shape.max_degree);
  for (int k = 0; k < degree; ++k) {
    const Var v = shape.vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(shape.vars.size()) - 1))];
    ++e[index_of(v)];
  }
  return e;
}

inline PhasePoly random_poly(Rng& rng, const PolySpec& shape = {}) {
  PhasePoly out;
  const int terms = uniform(rng, 1, shape.max_terms);
  for (int t = 0; t < terms; ++t) out.add_term(random_exponents(rng, shape), random_scalar(rng, shape));
  return out;
}

/// Polynomial in the positions only, for potentials A_mu(q).
inline PhasePoly random_position_poly(Rng& rng, int max_degree, int max_terms = 3) {
  PolySpec shape;
  shape.max_degree = max_degree;
  shape.max_terms = max_terms;
  shape.complex = false;
  shape.vars = {Var::q0, Var::q1, Var::q2, Var::q3};
  return random_poly(rng, shape);
}

inline Blade random_blade(Rng& rng) { return Blade(static_cast<std::uint8_t>(uniform(rng, 0, 15))); }

inline Multivector random_multivector(Rng& rng, const PolySpec& shape = {}, int max_blades = 3) {
  Multivector out;
  const int n = uniform(rng, 1, max_blades);
  for (int k = 0; k < n; ++k) out.add(random_blade(rng), random_poly(rng, shape));
  return out;
}

/// Constant Gaussian-rational coefficients on random blades.
inline Multivector random_constant_multivector(Rng& rng, int max_blades = 6, int max_coeff = 7) {
  PolySpec shape;
  shape.max_degree = 0;
  shape.max_terms = 1;
  shape.max_coeff = max_coeff;
  return random_multivector(rng, shape, max_blades);
}

}  // namespace starprod::sampling
