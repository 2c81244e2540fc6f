#pragma once

// Star powers, star exponentials and their projector splitting, star
// eigenvalue checks, and the proper-time Schroedinger residual.

#include <optional>
#include <vector>

#include "starprod/star.hpp"

namespace starprod {

inline Multivector star_power(const Multivector& a, int n, const ProductKind& kind) {
  if (n < 0) throw DomainError("star power requires n >= 0");
  Multivector out(1L);
  for (int k = 0; k < n; ++k) out = star(a, out, kind);
  return out;
}

/// pi_+ and pi_- = (1 +- A/c)/2 for A *A = c^2.
struct ProjectorSplit {
  ScalarH eigenvalue;
  Multivector pi_minus;
  Multivector pi_plus;
};

/// Exact square root of a single-term scalar r*hbar^(2k) with r a positive
/// rational square.
inline std::optional<ScalarH> exact_sqrt(const ScalarH& x) {
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [n, c] = *x.terms().begin();
  if (n % 2 != 0 || !c.is_real()) return std::nullopt;
  auto r = exact_sqrt(c.re);
  if (!r) return std::nullopt;
  return ScalarH(ComplexQ(*r), n / 2);
}

/// Splits A using a caller-supplied root c of A*A.
inline ProjectorSplit projector_split(const Multivector& a, const ProductKind& kind, const ScalarH& root) {
  const Multivector square = star(a, a, kind);
  if (!square.is_scalar() || !square.has_constant_coefficients()) {
    throw NotSplittableError("A*A is not a phase-space-constant scalar: " + square.str());
  }
  if (root.is_zero()) throw NotSplittableError("A*A vanishes; no projector split");
  if (!(Multivector(root * root) == square)) {
    throw DomainError("supplied root does not square to A*A");
  }
  if (root.terms().size() != 1) throw DomainError("eigenvalue must be a single hbar monomial");
  const Multivector normalized = a.map_coefficients([&](const PhasePoly& c) { return c.divided_by_monomial(root); });
  const ScalarH half(make_rational(1, 2));
  ProjectorSplit out;
  out.eigenvalue = root;
  out.pi_plus = (Multivector(1L) + normalized).scaled(half);
  out.pi_minus = (Multivector(1L) - normalized).scaled(half);
  return out;
}

inline ProjectorSplit projector_split(const Multivector& a, const ProductKind& kind) {
  const Multivector square = star(a, a, kind);
  if (!square.is_scalar() || !square.has_constant_coefficients()) {
    throw NotSplittableError("A*A is not a phase-space-constant scalar: " + square.str());
  }
  const ScalarH c2 = square.component(Blade::scalar()).constant_term();
  if (c2.is_zero()) throw NotSplittableError("A*A vanishes; no projector split");
  auto root = exact_sqrt(c2);
  if (!root) {
    throw IrrationalEigenvalueError("A*A = " + c2.str() + " has no exact square root; evaluate at a rational point");
  }
  return projector_split(a, kind, *root);
}

/// Taylor coefficients of exp(-i s K / hbar) under the chosen star product.
struct TruncatedExp {
  int order = 0;
  std::vector<Multivector> coefficients;

  /// The truncated series as a polynomial in the evolution variable s.
  [[nodiscard]] Multivector as_series(Var param = Var::s) const {
    Multivector out;
    for (std::size_t n = 0; n < coefficients.size(); ++n) {
      out += coefficients[n].scaled(PhasePoly::variable(param, static_cast<unsigned>(n)));
    }
    return out;
  }
};

inline TruncatedExp star_exp_truncated(const Multivector& k, int order, const ProductKind& kind) {
  if (order < 0) throw DomainError("truncation order must be >= 0");
  TruncatedExp out;
  out.order = order;
  out.coefficients.reserve(static_cast<std::size_t>(order) + 1);
  out.coefficients.emplace_back(1L);
  const ComplexQ minus_i(Rational(0), Rational(-1));
  for (int n = 0; n < order; ++n) {
    const ScalarH step(minus_i * ComplexQ(make_rational(1, n + 1)), -1);
    out.coefficients.push_back(star(k, out.coefficients.back(), kind).scaled(step));
  }
  return out;
}

/// n-th Taylor coefficient of pi_- exp(+i s c/hbar) + pi_+ exp(-i s c/hbar).
inline Multivector split_exp_coefficient(const ProjectorSplit& split, int n) {
  ScalarH plus(1L), minus(1L);
  const ScalarH phase = split.eigenvalue * ScalarH(ComplexQ::i(), -1);
  for (int k = 1; k <= n; ++k) {
    plus = plus * phase * ScalarH(make_rational(1, k));
    minus = minus * (-phase) * ScalarH(make_rational(1, k));
  }
  return split.pi_minus.scaled(plus) + split.pi_plus.scaled(minus);
}

inline bool star_eigencheck(const Multivector& h, const Multivector& w, const ScalarH& lambda,
                            const ProductKind& kind) {
  return (star(h, w, kind) - w.scaled(lambda)).is_zero();
}

/// i hbar d/ds Exp(Ks) - K * Exp(Ks) on the order-N truncation, returned as
/// its Taylor coefficients in s (index 0..N). Entries below N vanish when the
/// exponential is correct; entry N is the truncation remainder.
inline std::vector<Multivector> schrodinger_residual(const Multivector& k, int order,
                                                     const ProductKind& kind = moyal4_kind()) {
  if (order < 1) throw DomainError("residual needs order >= 1");
  for (const auto& [blade, poly] : k.components()) {
    if (!poly.partial(Var::s).is_zero()) throw DomainError("K must not depend on the evolution parameter s");
  }
  const Multivector series = star_exp_truncated(k, order, kind).as_series(Var::s);
  const Multivector lhs = partial(series, Var::s).scaled(ScalarH::i_hbar());
  const Multivector residual = lhs - star(k, series, kind);

  std::vector<Multivector> coeffs(static_cast<std::size_t>(order) + 1);
  const int si = index_of(Var::s);
  for (const auto& [blade, poly] : residual.components()) {
    for (const auto& [e, c] : poly.terms()) {
      const int n = e[si];
      if (n >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(n) + 1);
      Exponents rest = e;
      rest[si] = 0;
      coeffs[static_cast<std::size_t>(n)].add(blade, PhasePoly::monomial(rest, c));
    }
  }
  return coeffs;
}

}  // namespace starprod
