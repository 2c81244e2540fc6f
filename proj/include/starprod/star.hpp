#pragma once

// The deformed products: Clifford (fermionic), Moyal in three and four
// dimensions (bosonic), and the combined Moyal-Clifford product.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starprod/metric.hpp"
#include "starprod/multivector.hpp"

namespace starprod {

enum class Product { clifford, moyal3, moyal4, moyal_clifford };

struct ProductKind {
  Product kind = Product::moyal4;
  Metric metric = Metric::nonstandard();

  friend bool operator==(const ProductKind&, const ProductKind&) = default;
};

inline std::string_view product_tag(Product p) {
  switch (p) {
    case Product::clifford: return "C";
    case Product::moyal3: return "M3";
    case Product::moyal4: return "M4";
    case Product::moyal_clifford: return "MC";
  }
  return "?";
}

inline Product parse_product(std::string_view tag) {
  if (tag == "C" || tag == "clifford") return Product::clifford;
  if (tag == "M3" || tag == "moyal3") return Product::moyal3;
  if (tag == "M4" || tag == "moyal4") return Product::moyal4;
  if (tag == "MC" || tag == "moyal_clifford" || tag == "mc") return Product::moyal_clifford;
  throw DomainError("unknown product kind '" + std::string(tag) + "' (expected C|M3|M4|MC)");
}

namespace detail {

/// One level of the Clifford bidifferential series. Derivatives are applied
/// pairwise nested: the first contracted generator is removed first from both
/// factors, so each eta-weighted pair acts as an even operator.
inline void clifford_series_level(const Multivector& left, const Multivector& right, const Rational& weight,
                                  unsigned used, int depth, Metric metric, Multivector& out) {
  if (left.is_zero() || right.is_zero()) return;
  // 1/k! from the exponential
  Rational inv_fact(1);
  for (int k = 2; k <= depth; ++k) inv_fact /= k;
  out += grassmann_mul(left, right).scaled(ScalarH(weight * inv_fact));
  for (int mu = 0; mu < 4; ++mu) {
    if ((used >> mu) & 1u) continue;  // a repeated derivative annihilates
    clifford_series_level(grassmann_partial_right(left, mu), grassmann_partial_left(right, mu),
                          weight * metric.diag(mu), used | (1u << mu), depth + 1, metric, out);
  }
}

/// Blade-by-blade Clifford products; entry [a][b] lists (blade, coefficient) pairs.
struct CliffordTable {
  std::array<std::array<std::vector<std::pair<Blade, Rational>>, 16>, 16> entries;
};

inline CliffordTable build_clifford_table(Metric metric) {
  CliffordTable table;
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      Multivector prod;
      clifford_series_level(Multivector::blade(Blade(static_cast<std::uint8_t>(a))),
                            Multivector::blade(Blade(static_cast<std::uint8_t>(b))), Rational(1), 0u, 0,
                            metric, prod);
      for (const auto& [blade, coeff] : prod.components()) {
        const ComplexQ c = coeff.constant_term().coefficient(0);
        table.entries[a][b].emplace_back(blade, c.re);
      }
    }
  }
  return table;
}

inline const CliffordTable& clifford_table(Metric metric) {
  static const CliffordTable standard = build_clifford_table(Metric::standard());
  static const CliffordTable nonstandard = build_clifford_table(Metric::nonstandard());
  return metric.signature() == Signature::standard ? standard : nonstandard;
}

/// Binomial coefficient as a machine integer; arguments are small exponents.
inline long binom(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

inline long factorial(int n) {
  long r = 1;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

/// Moyal product of two monomials over the conjugate pairs (q^mu, p_mu),
/// mu in [first, last]. Accumulates into `out`.
inline void moyal_monomials(const Exponents& e, const Exponents& f, const ScalarH& coeff, int first, int last,
                            PhasePoly& out) {
  struct Frame {
    Exponents exps;
    mpz_class factor;
    int order;
  };
  std::vector<Frame> frames{{Exponents{}, mpz_class(1), 0}};
  for (int i = 0; i < kNumVars; ++i) frames[0].exps[i] = static_cast<std::uint16_t>(e[i] + f[i]);

  for (int mu = first; mu <= last; ++mu) {
    const int qi = index_of(q_var(mu));
    const int pi = index_of(p_var(mu));
    const int max_a = std::min(e[qi], f[pi]);  // d/dq^mu on the left, d/dp_mu on the right
    const int max_b = std::min(e[pi], f[qi]);  // d/dp_mu on the left, d/dq^mu on the right
    if (max_a == 0 && max_b == 0) continue;
    std::vector<Frame> next;
    next.reserve(frames.size() * static_cast<std::size_t>((max_a + 1) * (max_b + 1)));
    for (const Frame& fr : frames) {
      for (int a = 0; a <= max_a; ++a) {
        for (int b = 0; b <= max_b; ++b) {
          // falling factorials over a!b!: C(e_q,a) C(f_p,a) a! C(e_p,b) C(f_q,b) b!
          long w = binom(e[qi], a) * binom(f[pi], a) * factorial(a) * binom(e[pi], b) * binom(f[qi], b) *
                   factorial(b);
          if (b % 2 == 1) w = -w;
          Frame g = fr;
          g.factor *= w;
          g.order += a + b;
          g.exps[qi] = static_cast<std::uint16_t>(g.exps[qi] - a - b);
          g.exps[pi] = static_cast<std::uint16_t>(g.exps[pi] - a - b);
          next.push_back(std::move(g));
        }
      }
    }
    frames = std::move(next);
  }

  for (const Frame& fr : frames) {
    // (i hbar / 2)^n / n! is already split into the per-pair a! b! above
    Rational scale(fr.factor, mpz_class(1));
    scale /= mpz_class(1) << fr.order;
    out.add_term(fr.exps, coeff.scaled(i_power(fr.order) * ComplexQ(scale), fr.order));
  }
}

}  // namespace detail

/// Bosonic Moyal product of commuting polynomials over the pairs mu in [first, last].
inline PhasePoly moyal_poly(const PhasePoly& f, const PhasePoly& g, int first = 0, int last = 3) {
  PhasePoly out;
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [h, d] : g.terms()) detail::moyal_monomials(e, h, c * d, first, last, out);
  }
  return out;
}

/// Clifford star product computed directly from the exponential series of
/// contracted Grassmann derivatives (no tables). Coefficients multiply pointwise.
inline Multivector clifford_star_series(const Multivector& a, const Multivector& b, Metric metric) {
  Multivector out;
  detail::clifford_series_level(a, b, Rational(1), 0u, 0, metric, out);
  return out;
}

namespace detail {

template <typename CoeffProduct>
Multivector clifford_with(const Multivector& a, const Multivector& b, Metric metric, CoeffProduct&& coeff_product) {
  const CliffordTable& table = clifford_table(metric);
  Multivector out;
  for (const auto& [ba, ca] : a.components()) {
    for (const auto& [bb, cb] : b.components()) {
      const auto& entry = table.entries[ba.mask()][bb.mask()];
      if (entry.empty()) continue;
      const PhasePoly prod = coeff_product(ca, cb);
      for (const auto& [blade, coeff] : entry) out.add(blade, prod.scaled(ScalarH(coeff)));
    }
  }
  return out;
}

template <typename CoeffProduct>
Multivector wedge_with(const Multivector& a, const Multivector& b, CoeffProduct&& coeff_product) {
  Multivector out;
  for (const auto& [ba, ca] : a.components()) {
    for (const auto& [bb, cb] : b.components()) {
      const int sign = wedge_sign(ba, bb);
      if (sign == 0) continue;
      const PhasePoly prod = coeff_product(ca, cb);
      out.add(Blade(static_cast<std::uint8_t>(ba.mask() | bb.mask())), sign > 0 ? prod : -prod);
    }
  }
  return out;
}

}  // namespace detail

/// A *_C B; series terminates at fourth order in the Grassmann derivatives.
inline Multivector clifford_star(const Multivector& a, const Multivector& b, Metric metric) {
  return detail::clifford_with(a, b, metric, [](const PhasePoly& x, const PhasePoly& y) { return x * y; });
}

/// Three-dimensional Moyal product over (q^i, p_i), i = 1..3. Blades multiply
/// by the undeformed exterior product.
inline Multivector moyal3_star(const Multivector& f, const Multivector& g) {
  return detail::wedge_with(f, g, [](const PhasePoly& x, const PhasePoly& y) { return moyal_poly(x, y, 1, 3); });
}

/// Four-dimensional Moyal product. With positions stored as q^mu and momenta as
/// p_mu the eta-weighted bidifferential reduces to the pairing of q^mu with p_mu,
/// so the kernel itself is metric independent; the metric only enters when
/// indices are raised on the operands.
inline Multivector moyal4_star(const Multivector& f, const Multivector& g, Metric /*metric*/ = Metric{}) {
  return detail::wedge_with(f, g, [](const PhasePoly& x, const PhasePoly& y) { return moyal_poly(x, y, 0, 3); });
}

/// Combined product: 4D Moyal on coefficients, Clifford on blades.
inline Multivector mc_star(const Multivector& a, const Multivector& b, Metric metric) {
  return detail::clifford_with(a, b, metric,
                               [](const PhasePoly& x, const PhasePoly& y) { return moyal_poly(x, y, 0, 3); });
}

inline Multivector star(const Multivector& a, const Multivector& b, const ProductKind& kind) {
  switch (kind.kind) {
    case Product::clifford: return clifford_star(a, b, kind.metric);
    case Product::moyal3: return moyal3_star(a, b);
    case Product::moyal4: return moyal4_star(a, b, kind.metric);
    case Product::moyal_clifford: return mc_star(a, b, kind.metric);
  }
  return {};
}

inline Multivector star_commutator(const Multivector& a, const Multivector& b, const ProductKind& kind) {
  return star(a, b, kind) - star(b, a, kind);
}

inline Multivector star_anticommutator(const Multivector& a, const Multivector& b, const ProductKind& kind) {
  return star(a, b, kind) + star(b, a, kind);
}

inline ProductKind clifford_kind(Metric m = Metric{}) { return {Product::clifford, m}; }
inline ProductKind moyal3_kind() { return {Product::moyal3, Metric{}}; }
inline ProductKind moyal4_kind(Metric m = Metric{}) { return {Product::moyal4, m}; }
inline ProductKind mc_kind(Metric m = Metric{}) { return {Product::moyal_clifford, m}; }

}  // namespace starprod
