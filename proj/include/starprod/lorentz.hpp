#pragma once

// Lorentz and Poincare structure: passive generators built from Clifford
// bivectors, active generators M^{mu nu} under the 4D Moyal product, their
// star-commutator algebras and the finite transformations they generate.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "starprod/calculus.hpp"
#include "starprod/report.hpp"

namespace starprod {

template <typename T>
using Mat4 = std::array<std::array<T, 4>, 4>;

using Vec4d = std::array<double, 4>;

inline int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (1,2,3)
  if ((i == 1 && j == 2 && k == 3) || (i == 2 && j == 3 && k == 1) || (i == 3 && j == 1 && k == 2)) return 1;
  return -1;
}

template <typename T>
void require_antisymmetric(const Mat4<T>& a) {
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      if (a[m][n] != -a[n][m]) throw DomainError("Lorentz parameters must be antisymmetric");
    }
  }
}

/// Parameter matrix with alpha[mu][nu] = value and alpha[nu][mu] = -value.
template <typename T>
Mat4<T> plane_parameters(int mu, int nu, const T& value) {
  Mat4<T> a{};
  for (auto& row : a) row.fill(T(0));
  a[mu][nu] = value;
  a[nu][mu] = -value;
  return a;
}

// ---------------------------------------------------------------------------
// passive side

struct PassiveGenerators {
  Metric metric;
  Mat4<Multivector> sigma;  // sigma[mu][nu], antisymmetric
  std::array<Multivector, 3> boost;     // K_1..K_3
  std::array<Multivector, 3> rotation;  // L_1..L_3
};

/// sigma_{mu nu} = (I/2) *_C [gamma_mu, gamma_nu]_C, K_i = sigma_{0i}/2,
/// L_i = (1/2) sum_{j<k} eps_{ijk} sigma_{jk}.
inline PassiveGenerators passive_generators(Metric metric) {
  PassiveGenerators g{metric, {}, {}, {}};
  const ProductKind c = clifford_kind(metric);
  const Multivector half_i = Multivector::pseudoscalar().scaled(ScalarH(make_rational(1, 2)));
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      g.sigma[mu][nu] =
          clifford_star(half_i, star_commutator(Multivector::gamma(mu), Multivector::gamma(nu), c), metric);
    }
  }
  const ScalarH half(make_rational(1, 2));
  for (int i = 1; i <= 3; ++i) {
    g.boost[i - 1] = g.sigma[0][i].scaled(half);
    Multivector l;
    for (int j = 1; j <= 3; ++j) {
      for (int k = j + 1; k <= 3; ++k) {
        const int eps = levi_civita(i, j, k);
        if (eps != 0) l += g.sigma[j][k].scaled(ScalarH(static_cast<long>(eps)));
      }
    }
    g.rotation[i - 1] = l.scaled(half);
  }
  return g;
}

/// Passive boost/rotation algebra. In the nonstandard metric
///   [L_i,L_j] = -I eps_ijk L_k, [L_i,K_j] = -I eps_ijk K_k, [K_i,K_j] = I eps_ijk L_k;
/// in the standard metric I is replaced by -I.
inline CheckReport passive_algebra_check(Metric metric) {
  const PassiveGenerators g = passive_generators(metric);
  const ProductKind c = clifford_kind(metric);
  const long flip = metric.signature() == Signature::nonstandard ? 1 : -1;
  const Multivector pseudo = Multivector::pseudoscalar().scaled(ScalarH(flip));
  CheckReport report{"passive Lorentz algebra (" + std::string(metric.name()) + " metric)", {}};

  auto sweep = [&](const std::string& label, const std::array<Multivector, 3>& a, const std::array<Multivector, 3>& b,
                   const std::array<Multivector, 3>& target, long sign) {
    int failures = 0;
    std::string first;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        Multivector rhs;
        for (int k = 1; k <= 3; ++k) {
          const int eps = levi_civita(i, j, k);
          if (eps != 0) rhs += clifford_star(pseudo, target[k - 1], metric).scaled(ScalarH(sign * eps));
        }
        const Multivector residual = star_commutator(a[i - 1], b[j - 1], c) - rhs;
        if (!residual.is_zero()) {
          if (failures++ == 0) first = "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + residual.str();
        }
      }
    }
    report.add_true(label, failures == 0, failures == 0 ? "9 index pairs, residuals 0" : first);
  };
  const std::string i4 = flip > 0 ? "I" : "(-I)";
  sweep("[L_i,L_j]_C = -" + i4 + " eps_ijk L_k", g.rotation, g.rotation, g.rotation, -1);
  sweep("[L_i,K_j]_C = -" + i4 + " eps_ijk K_k", g.rotation, g.boost, g.boost, -1);
  sweep("[K_i,K_j]_C = " + i4 + " eps_ijk L_k", g.boost, g.boost, g.rotation, +1);
  return report;
}

/// Rotor exponent (1/4) I *_C alpha^{mu nu} sigma_{mu nu}, summed over all mu, nu.
inline Multivector passive_exponent(const Mat4<Rational>& alpha, Metric metric) {
  require_antisymmetric(alpha);
  const PassiveGenerators g = passive_generators(metric);
  Multivector sum;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (sgn(alpha[mu][nu]) != 0) sum += g.sigma[mu][nu].scaled(ScalarH(alpha[mu][nu]));
    }
  }
  return clifford_star(Multivector::pseudoscalar(), sum, metric).scaled(ScalarH(make_rational(1, 4)));
}

/// Matrix P with [B, gamma_rho]_C = P(nu, rho) gamma_nu for the rotor exponent B.
inline Mat4<Rational> passive_generator_matrix(const Mat4<Rational>& alpha, Metric metric) {
  const Multivector b = passive_exponent(alpha, metric);
  Mat4<Rational> p{};
  for (int rho = 0; rho < 4; ++rho) {
    const Multivector image = star_commutator(b, Multivector::gamma(rho), clifford_kind(metric));
    if (!image.is_grade(1) || !image.has_constant_coefficients()) {
      throw Error("bivector commutator left the vector space: " + image.str());
    }
    for (int nu = 0; nu < 4; ++nu) {
      p[nu][rho] = image.component(Blade::gamma(nu)).constant_term().coefficient(0).re;
    }
  }
  return p;
}

inline Multivector truncate_in(const Multivector& m, Var v, int order) {
  Multivector out;
  const int k = index_of(v);
  for (const auto& [b, poly] : m.components()) {
    PhasePoly kept;
    for (const auto& [e, c] : poly.terms()) {
      if (e[k] <= order) kept.add_term(e, c);
    }
    out.add(b, kept);
  }
  return out;
}

/// R *_C x *_C R^{-1} with R = exp_C(s B) = sum_n (sB)^{n*_C}/n! expanded
/// exactly to order N in the formal parameter s.
inline Multivector passive_transform_series(const Multivector& x, const Mat4<Rational>& alpha, int order,
                                            Metric metric) {
  if (!x.is_grade(1)) throw DomainError("passive transformation acts on grade-1 multivectors");
  const Multivector b = passive_exponent(alpha, metric).scaled(PhasePoly::variable(Var::s));
  Multivector r(1L), rinv(1L), term(1L), term_inv(1L);
  for (int n = 1; n <= order; ++n) {
    term = truncate_in(clifford_star(b, term, metric), Var::s, order).scaled(ScalarH(make_rational(1, n)));
    term_inv = truncate_in(clifford_star(-b, term_inv, metric), Var::s, order).scaled(ScalarH(make_rational(1, n)));
    r += term;
    rinv += term_inv;
  }
  const Multivector left = truncate_in(clifford_star(r, x, metric), Var::s, order);
  return truncate_in(clifford_star(left, rinv, metric), Var::s, order);
}

// ---------------------------------------------------------------------------
// numerics shared by both sides

inline Eigen::Matrix4d to_eigen(const Mat4<Rational>& m) {
  Eigen::Matrix4d out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out(r, c) = m[r][c].get_d();
  }
  return out;
}

inline Eigen::Matrix4d matrix_exp(const Eigen::Matrix4d& g) { return g.exp(); }

/// Exact Taylor polynomial sum_{n<=order} G^n / n!.
inline Mat4<Rational> matrix_exp_taylor(const Mat4<Rational>& g, int order) {
  if (order < 0 || order > 20) throw DomainError("exact Taylor order must lie in 0..20");
  Mat4<Rational> sum{}, term{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      sum[r][c] = term[r][c] = Rational(r == c ? 1 : 0);
    }
  }
  for (int n = 1; n <= order; ++n) {
    Mat4<Rational> next{};
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        Rational acc(0);
        for (int k = 0; k < 4; ++k) acc += g[r][k] * term[k][c];
        next[r][c] = acc / n;
      }
    }
    term = next;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) sum[r][c] += term[r][c];
    }
  }
  return sum;
}

inline Vec4d transform_vector(const Eigen::Matrix4d& m, const Vec4d& x) {
  Vec4d out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[r] += m(r, c) * x[c];
  }
  return out;
}

/// Passive transformation of the coefficient vector of x = x^rho gamma_rho.
/// Simple bivectors (B*B scalar) use the closed-form rotor
/// R = a + bB with circular or hyperbolic a, b; otherwise exp of the
/// generator matrix.
inline Vec4d passive_transform(const Vec4d& x, const Mat4<Rational>& alpha, Metric metric) {
  const Multivector b = passive_exponent(alpha, metric);
  const Multivector square = clifford_star(b, b, metric);
  if (!(square.is_scalar() && square.has_constant_coefficients())) {
    return transform_vector(matrix_exp(to_eigen(passive_generator_matrix(alpha, metric))), x);
  }
  const double c = square.component(Blade::scalar()).constant_term().coefficient(0).re.get_d();
  double a = 1.0, s = 1.0;
  if (c < 0) {
    const double theta = std::sqrt(-c);
    a = std::cos(theta);
    s = std::sin(theta) / theta;
  } else if (c > 0) {
    const double theta = std::sqrt(c);
    a = std::cosh(theta);
    s = std::sinh(theta) / theta;
  }
  // (a + sB) x (a - sB) = a^2 x + a s [B, x] - s^2 B x B
  Vec4d out{};
  for (int rho = 0; rho < 4; ++rho) {
    if (x[rho] == 0.0) continue;
    const Multivector g = Multivector::gamma(rho);
    const Multivector comm = star_commutator(b, g, clifford_kind(metric));
    const Multivector sandwich = clifford_star(clifford_star(b, g, metric), b, metric);
    for (int nu = 0; nu < 4; ++nu) {
      const double direct = (nu == rho) ? 1.0 : 0.0;
      const double cm = comm.component(Blade::gamma(nu)).constant_term().coefficient(0).re.get_d();
      const double sw = sandwich.component(Blade::gamma(nu)).constant_term().coefficient(0).re.get_d();
      out[nu] += x[rho] * (a * a * direct + a * s * cm - s * s * sw);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// active side

struct ActiveGenerators {
  Metric metric;
  Mat4<Multivector> m;                  // M^{mu nu}
  std::array<Multivector, 3> boost;     // K^i = M^{0i}
  std::array<Multivector, 3> rotation;  // L^i = sum_{j<k} eps^{ijk} M^{jk}
};

/// Contravariant momentum p^mu = eta^{mu mu} p_mu.
inline Multivector p_upper(int mu, Metric metric) {
  return Multivector::p(mu).scaled(ScalarH(static_cast<long>(metric.diag(mu))));
}

/// M^{mu nu} = q^mu p^nu - p^mu q^nu.
inline ActiveGenerators active_generators(Metric metric) {
  ActiveGenerators g{metric, {}, {}, {}};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      g.m[mu][nu] = grassmann_mul(Multivector::q(mu), p_upper(nu, metric)) -
                    grassmann_mul(p_upper(mu, metric), Multivector::q(nu));
    }
  }
  for (int i = 1; i <= 3; ++i) {
    g.boost[i - 1] = g.m[0][i];
    Multivector l;
    for (int j = 1; j <= 3; ++j) {
      for (int k = j + 1; k <= 3; ++k) {
        const int eps = levi_civita(i, j, k);
        if (eps != 0) l += g.m[j][k].scaled(ScalarH(static_cast<long>(eps)));
      }
    }
    g.rotation[i - 1] = l;
  }
  return g;
}

/// [M^{mu nu}, M^{rho sigma}]_M over all 256 index combinations, and the
/// boost/rotation form. The latter reads [L,L] = i hbar eps L, [L,K] = i hbar eps K,
/// [K,K] = -i hbar eps L in the nonstandard metric; all three flip sign with
/// the spatial metric sign.
inline CheckReport active_algebra_check(Metric metric) {
  const ActiveGenerators g = active_generators(metric);
  const ProductKind mk = moyal4_kind(metric);
  const ScalarH ih = ScalarH::i_hbar();
  CheckReport report{"active Lorentz algebra (" + std::string(metric.name()) + " metric)", {}};

  int failures = 0;
  std::string first;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      for (int rho = 0; rho < 4; ++rho) {
        for (int sg = 0; sg < 4; ++sg) {
          Multivector rhs = g.m[nu][sg].scaled(ScalarH(static_cast<long>(metric(mu, rho)))) -
                            g.m[mu][sg].scaled(ScalarH(static_cast<long>(metric(nu, rho)))) +
                            g.m[rho][nu].scaled(ScalarH(static_cast<long>(metric(mu, sg)))) -
                            g.m[rho][mu].scaled(ScalarH(static_cast<long>(metric(nu, sg))));
          const Multivector residual = star_commutator(g.m[mu][nu], g.m[rho][sg], mk) - rhs.scaled(ih);
          if (!residual.is_zero() && failures++ == 0) {
            first = "(" + std::to_string(mu) + std::to_string(nu) + "," + std::to_string(rho) + std::to_string(sg) +
                    "): " + residual.str();
          }
        }
      }
    }
  }
  report.add_true("[M^mn,M^rs]_M = i hb (eta^mr M^ns - eta^nr M^ms + eta^ms M^rn - eta^ns M^rm)", failures == 0,
                  failures == 0 ? "256 index combinations, residuals 0" : first);

  const long sign = metric.diag(1);
  auto sweep = [&](const std::string& label, const std::array<Multivector, 3>& a, const std::array<Multivector, 3>& b,
                   const std::array<Multivector, 3>& target, long coeff) {
    int fails = 0;
    std::string first_fail;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        Multivector rhs;
        for (int k = 1; k <= 3; ++k) {
          const int eps = levi_civita(i, j, k);
          if (eps != 0) rhs += target[k - 1].scaled(ih * ScalarH(coeff * sign * eps));
        }
        const Multivector residual = star_commutator(a[i - 1], b[j - 1], mk) - rhs;
        if (!residual.is_zero() && fails++ == 0) first_fail = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      }
    }
    report.add_true(label, fails == 0, fails == 0 ? "9 index pairs, residuals 0" : first_fail);
  };
  const std::string s = sign > 0 ? "" : "-";
  const std::string ns = sign > 0 ? "-" : "";
  sweep("[L^i,L^j]_M = " + s + "i hb eps^ijk L^k", g.rotation, g.rotation, g.rotation, 1);
  sweep("[L^i,K^j]_M = " + s + "i hb eps^ijk K^k", g.rotation, g.boost, g.boost, 1);
  sweep("[K^i,K^j]_M = " + ns + "i hb eps^ijk L^k", g.boost, g.boost, g.rotation, -1);
  return report;
}

/// Translations: [p_mu, p_nu]_M = 0 and [M^{mu nu}, p^rho]_M = i hb (eta^{mu rho} p^nu - eta^{nu rho} p^mu).
inline CheckReport poincare_check(Metric metric) {
  const ActiveGenerators g = active_generators(metric);
  const ProductKind mk = moyal4_kind(metric);
  CheckReport report{"Poincare extension (" + std::string(metric.name()) + " metric)", {}};

  int failures = 0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (!star_commutator(Multivector::p(mu), Multivector::p(nu), mk).is_zero()) ++failures;
    }
  }
  report.add_true("[p_m,p_n]_M = 0", failures == 0, failures == 0 ? "16 index pairs, residuals 0" : "nonzero");

  failures = 0;
  std::string first;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      for (int rho = 0; rho < 4; ++rho) {
        const Multivector rhs = (p_upper(nu, metric).scaled(ScalarH(static_cast<long>(metric(mu, rho)))) -
                                 p_upper(mu, metric).scaled(ScalarH(static_cast<long>(metric(nu, rho)))))
                                    .scaled(ScalarH::i_hbar());
        const Multivector residual = star_commutator(g.m[mu][nu], p_upper(rho, metric), mk) - rhs;
        if (!residual.is_zero() && failures++ == 0) first = residual.str();
      }
    }
  }
  report.add_true("[M^mn,p^r]_M = i hb (eta^mr p^n - eta^nr p^m)", failures == 0,
                  failures == 0 ? "64 index combinations, residuals 0" : first);
  return report;
}

/// G with (-i/hbar) [alpha_{mu nu} M^{mu nu}, q^rho]_M = G(rho, sigma) q^sigma.
inline Mat4<Rational> active_adjoint_matrix(const Mat4<Rational>& alpha, Metric metric) {
  require_antisymmetric(alpha);
  const ActiveGenerators g = active_generators(metric);
  Multivector x;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (sgn(alpha[mu][nu]) != 0) x += g.m[mu][nu].scaled(ScalarH(alpha[mu][nu]));
    }
  }
  const ScalarH minus_i_over_hbar(ComplexQ(Rational(0), Rational(-1)), -1);
  Mat4<Rational> out{};
  for (int rho = 0; rho < 4; ++rho) {
    const Multivector image = star_commutator(x, Multivector::q(rho), moyal4_kind(metric)).scaled(minus_i_over_hbar);
    const PhasePoly c = image.component(Blade::scalar());
    if (!image.is_scalar()) throw Error("adjoint action left the scalar sector");
    for (int sg = 0; sg < 4; ++sg) out[rho][sg] = Rational(0);
    for (const auto& [e, coeff] : c.terms()) {
      int var = -1;
      int degree = 0;
      for (int k = 0; k < kNumVars; ++k) {
        degree += e[k];
        if (e[k] == 1) var = k;
      }
      if (degree != 1 || var < 0 || var > 3 || coeff.terms().size() != 1 || coeff.min_hbar_power() != 0 ||
          !coeff.coefficient(0).is_real()) {
        throw Error("adjoint action is not linear in the positions: " + image.str());
      }
      out[rho][var] = coeff.coefficient(0).re;
    }
  }
  return out;
}

/// Numeric generator matrix for real parameters, assembled from the exact
/// single-plane generators.
inline Eigen::Matrix4d active_adjoint_matrix(const Mat4<double>& alpha, Metric metric) {
  require_antisymmetric(alpha);
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      if (alpha[mu][nu] == 0.0) continue;
      g += alpha[mu][nu] * to_eigen(active_adjoint_matrix(plane_parameters(mu, nu, Rational(1)), metric));
    }
  }
  return g;
}

inline Eigen::Matrix4d active_lorentz_matrix(const Mat4<double>& alpha, Metric metric) {
  return matrix_exp(active_adjoint_matrix(alpha, metric));
}

/// Lambda = exp(G) applied to the coefficients q^mu.
inline Vec4d active_transform(const Vec4d& x, const Mat4<double>& alpha, Metric metric) {
  return transform_vector(active_lorentz_matrix(alpha, metric), x);
}

/// Parameters of a pure boost along spatial axis i (1..3) with the given
/// rapidity: Lambda mixes q^0 and q^i through cosh and sinh of the rapidity.
inline Mat4<double> boost_parameters(double rapidity, int axis, Metric metric) {
  if (axis < 1 || axis > 3) throw DomainError("boost axis must be 1, 2 or 3");
  return plane_parameters(0, axis, metric.diag(0) * rapidity / 2.0);
}

/// Passive parameters alpha^{mu nu} that reproduce the active transformation
/// with parameters alpha_{mu nu}: alpha^{mu nu} = -2 eta^{mu mu} eta^{nu nu} alpha_{mu nu}.
inline Mat4<Rational> passive_parameters_from_active(const Mat4<Rational>& alpha, Metric metric) {
  Mat4<Rational> out{};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) out[mu][nu] = alpha[mu][nu] * (-2 * metric.diag(mu) * metric.diag(nu));
  }
  return out;
}

}  // namespace starprod
