#pragma once

// Verification batteries behind `starprod verify`. Every entry is labeled by
// the identity it checks; symbolic entries pass only on an exactly zero
// residual, numeric ones within their stated tolerance.

#include <cmath>
#include <string>
#include <vector>

#include "starprod/dirac.hpp"
#include "starprod/lorentz.hpp"
#include "starprod/mechanics.hpp"
#include "starprod/sampling.hpp"

namespace starprod {

class UnknownSuiteError : public Error {
 public:
  using Error::Error;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dirac", "lorentz", "poincare", "classical-limit", "spin", "all"};
  return names;
}

namespace detail {

inline void add_all_zero(CheckReport& r, const std::string& label, const std::vector<Multivector>& residuals) {
  for (const Multivector& m : residuals) {
    if (!m.is_zero()) {
      r.add_true(label, false, "residual " + m.str());
      return;
    }
  }
  r.add_true(label, true, std::to_string(residuals.size()) + " residuals 0");
}

inline std::string point_tag(const DiracSystem& sys) {
  const auto norm = exact_sqrt(dot(sys.momentum, sys.momentum));
  std::string p = norm ? to_string(*norm)
                       : "(" + to_string(sys.momentum[0]) + "," + to_string(sys.momentum[1]) + "," +
                             to_string(sys.momentum[2]) + ")";
  return "(m,|p|,E)=(" + to_string(sys.mass) + "," + p + "," + to_string(sys.energy) + ")";
}

}  // namespace detail

/// Relations among beta and alpha_i under the given metric.
inline CheckReport dirac_matrix_relations(Metric metric = Metric::standard()) {
  CheckReport r{"Dirac matrices (" + std::string(metric.name()) + " metric)", {}};
  const ProductKind c = clifford_kind(metric);
  const Multivector one(1L);
  r.add_zero("beta *_C beta = 1", clifford_star(beta(metric), beta(metric), metric) - one);
  std::vector<Multivector> squares, anti_beta, anti_alpha;
  for (int i = 1; i <= 3; ++i) {
    squares.push_back(clifford_star(alpha(i, metric), alpha(i, metric), metric) - one);
    anti_beta.push_back(star_anticommutator(beta(metric), alpha(i, metric), c));
    for (int j = 1; j <= 3; ++j) {
      anti_alpha.push_back(star_anticommutator(alpha(i, metric), alpha(j, metric), c) - Multivector(i == j ? 2L : 0L));
    }
  }
  detail::add_all_zero(r, "alpha_i *_C alpha_i = 1", squares);
  detail::add_all_zero(r, "{beta, alpha_i}_C = 0", anti_beta);
  detail::add_all_zero(r, "{alpha_i, alpha_j}_C = 2 delta_ij", anti_alpha);
  return r;
}

/// Full battery of projector identities at one mass-shell point.
inline CheckReport dirac_point_report(const DiracSystem& sys, const SpinAxis& axis, int exp_order = 8) {
  const Metric m = sys.metric;
  const ProductKind mc = mc_kind(m);
  CheckReport r{"Dirac Wigner functions at " + detail::point_tag(sys), {}};
  const Multivector one(1L);
  const ScalarH e_val(sys.energy);
  const ScalarH half_hbar(ComplexQ(make_rational(1, 2)), 1);

  const Multivector hs = dirac_hamiltonian_symbolic(sys.mass, m);
  PhasePoly shell(ScalarH(sys.mass * sys.mass));
  for (int i = 1; i <= 3; ++i) shell += PhasePoly::p(i) * PhasePoly::p(i);
  r.add_zero("H_D *_MC H_D = p^2 + m^2 (symbolic in p_1, p_2, p_3)", mc_star(hs, hs, m) - Multivector(shell));

  const Multivector h = dirac_hamiltonian(sys);
  r.add_zero("H_D *_MC H_D = E^2", mc_star(h, h, m) - Multivector(e_val * e_val));

  const ProjectorSplit e = energy_projectors(sys);
  detail::add_all_zero(r, "pi_+-E *_MC pi_+-E = pi_+-E",
                       {mc_star(e.pi_plus, e.pi_plus, m) - e.pi_plus, mc_star(e.pi_minus, e.pi_minus, m) - e.pi_minus});
  r.add_zero("pi_+E + pi_-E = 1", e.pi_plus + e.pi_minus - one);
  detail::add_all_zero(r, "pi_+E *_MC pi_-E = 0 = pi_-E *_MC pi_+E",
                       {mc_star(e.pi_plus, e.pi_minus, m), mc_star(e.pi_minus, e.pi_plus, m)});
  detail::add_all_zero(r, "H_D *_MC pi_+-E = +-E pi_+-E",
                       {mc_star(h, e.pi_plus, m) - e.pi_plus.scaled(e_val),
                        mc_star(h, e.pi_minus, m) + e.pi_minus.scaled(e_val)});

  const Multivector s = spin_operator(axis, m);
  const ProjectorSplit sp = spin_projectors(axis, m);
  r.add_zero("S_u *_C S_u = hb^2/4", clifford_star(s, s, m) - Multivector(half_hbar * half_hbar));
  detail::add_all_zero(r, "pi_+-1/2 *_C pi_+-1/2 = pi_+-1/2",
                       {clifford_star(sp.pi_plus, sp.pi_plus, m) - sp.pi_plus,
                        clifford_star(sp.pi_minus, sp.pi_minus, m) - sp.pi_minus});
  r.add_zero("pi_+1/2 + pi_-1/2 = 1", sp.pi_plus + sp.pi_minus - one);
  detail::add_all_zero(r, "pi_+1/2 *_C pi_-1/2 = 0 = pi_-1/2 *_C pi_+1/2",
                       {clifford_star(sp.pi_plus, sp.pi_minus, m), clifford_star(sp.pi_minus, sp.pi_plus, m)});
  detail::add_all_zero(r, "S_u *_C pi_+-1/2 = +-(hb/2) pi_+-1/2",
                       {clifford_star(s, sp.pi_plus, m) - sp.pi_plus.scaled(half_hbar),
                        clifford_star(s, sp.pi_minus, m) + sp.pi_minus.scaled(half_hbar)});

  std::vector<Multivector> commute;
  for (const Multivector* pe : {&e.pi_plus, &e.pi_minus}) {
    for (const Multivector* ps : {&sp.pi_plus, &sp.pi_minus}) commute.push_back(star_commutator(*pe, *ps, mc));
  }
  detail::add_all_zero(r, "[pi_+-E, pi_+-1/2]_MC = 0", commute);

  const CombinedProjectors c = combined_projectors(sys, axis);
  std::vector<Multivector> ortho, h_eig, s_eig;
  Multivector total;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Multivector& pi = c.pi[a][b];
      total += pi;
      const ScalarH ev = a == 0 ? e_val : -e_val;
      const ScalarH sv = b == 0 ? half_hbar : -half_hbar;
      h_eig.push_back(mc_star(h, pi, m) - pi.scaled(ev));
      s_eig.push_back(mc_star(s, pi, m) - pi.scaled(sv));
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int b2 = 0; b2 < 2; ++b2) {
          const Multivector expect = (a == a2 && b == b2) ? pi : Multivector{};
          ortho.push_back(mc_star(pi, c.pi[a2][b2], m) - expect);
        }
      }
    }
  }
  detail::add_all_zero(r, "pi_(E,s) *_MC pi_(E',s') = delta_EE' delta_ss' pi_(E,s)", ortho);
  r.add_zero("sum_(E,s) pi_(E,s) = 1", total - one);
  detail::add_all_zero(r, "H_D *_MC pi_(+-E,s) = +-E pi_(+-E,s)", h_eig);
  detail::add_all_zero(r, "S_u *_MC pi_(E,+-1/2) = +-(hb/2) pi_(E,+-1/2)", s_eig);

  const TruncatedExp ex = star_exp_truncated(h, exp_order, mc);
  std::vector<Multivector> series;
  for (int n = 0; n <= exp_order; ++n) series.push_back(ex.coefficients[static_cast<std::size_t>(n)] -
                                                         split_exp_coefficient(e, n));
  detail::add_all_zero(r,
                       "Exp_MC(-i s H_D/hb) = pi_+E e^(-i s E/hb) + pi_-E e^(i s E/hb) through order " +
                           std::to_string(exp_order),
                       series);
  return r;
}

inline std::vector<CheckReport> dirac_suite(int exp_order = 8) {
  std::vector<CheckReport> out{dirac_matrix_relations(Metric::standard())};
  for (const PythagoreanPoint& pt : pythagorean_points()) out.push_back(dirac_point_report(pt.system, pt.axis, exp_order));
  return out;
}

// ---------------------------------------------------------------------------

/// Exact check that exp(sB) gamma_rho exp(-sB) has s^n coefficient P^n/n! gamma_rho.
inline CheckReport passive_series_report(Metric metric, int order = 6) {
  CheckReport r{"finite passive transformations (" + std::string(metric.name()) + " metric)", {}};
  const std::vector<std::pair<std::string, Mat4<Rational>>> cases{
      {"boost 01", plane_parameters(0, 1, Rational(1))},
      {"rotation 12", plane_parameters(1, 2, Rational(1))},
      {"mixed 02+13+23", [] {
         Mat4<Rational> a = plane_parameters(0, 2, make_rational(1, 2));
         a[1][3] = make_rational(-1, 3);
         a[3][1] = make_rational(1, 3);
         a[2][3] = Rational(2);
         a[3][2] = Rational(-2);
         return a;
       }()}};
  for (const auto& [name, alpha] : cases) {
    const Mat4<Rational> p = passive_generator_matrix(alpha, metric);
    std::vector<Multivector> residuals;
    for (int rho = 0; rho < 4; ++rho) {
      const Multivector series = passive_transform_series(Multivector::gamma(rho), alpha, order, metric);
      Mat4<Rational> power{};
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) power[a][b] = Rational(a == b ? 1 : 0);
      }
      Rational fact(1);
      Multivector expect;
      for (int n = 0; n <= order; ++n) {
        if (n > 0) {
          Mat4<Rational> next{};
          for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
              Rational acc(0);
              for (int k = 0; k < 4; ++k) acc += p[a][k] * power[k][b];
              next[a][b] = acc;
            }
          }
          power = next;
          fact *= n;
        }
        for (int nu = 0; nu < 4; ++nu) {
          const Rational c = power[nu][rho] / fact;
          if (sgn(c) != 0) {
            expect.add(Blade::gamma(nu), PhasePoly::variable(Var::s, static_cast<unsigned>(n)).scaled(ScalarH(c)));
          }
        }
      }
      residuals.push_back(series - expect);
    }
    detail::add_all_zero(r, "R(s) *_C g_r *_C R(s)^-1 = sum_n s^n/n! P^n g_r (" + name + ", order " +
                                std::to_string(order) + ")",
                         residuals);
  }
  return r;
}

inline double max_abs(const Eigen::Matrix4d& m) { return m.cwiseAbs().maxCoeff(); }

/// Numeric finite transformations: boost mixing, metric preservation and
/// agreement between the passive rotor and the active star exponential.
inline CheckReport finite_transform_report(Metric metric, int samples = 100) {
  CheckReport r{"finite Lorentz transformations (" + std::string(metric.name()) + " metric)", {}};
  const double phi = 0.5;
  const Eigen::Matrix4d boost = active_lorentz_matrix(boost_parameters(phi, 1, metric), metric);
  Eigen::Matrix4d expect = Eigen::Matrix4d::Identity();
  expect(0, 0) = expect(1, 1) = std::cosh(phi);
  expect(0, 1) = expect(1, 0) = std::sinh(phi);
  r.add_within("Lambda(rapidity 0.5) mixes q^0, q^1 by cosh 0.5, sinh 0.5", max_abs(boost - expect), 1e-12);

  Eigen::Matrix4d eta = Eigen::Matrix4d::Zero();
  for (int mu = 0; mu < 4; ++mu) eta(mu, mu) = metric.diag(mu);
  sampling::Rng rng(20240611);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    Mat4<double> alpha{};
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu) {
        alpha[mu][nu] = unit(rng);
        alpha[nu][mu] = -alpha[mu][nu];
      }
    }
    const Eigen::Matrix4d lam = active_lorentz_matrix(alpha, metric);
    worst = std::max(worst, max_abs(lam.transpose() * eta * lam - eta));
  }
  r.add_within("Lambda^T eta Lambda = eta (" + std::to_string(samples) + " random parameter sets)", worst, 1e-12);

  double agree = 0.0;
  for (int k = 0; k < samples / 5; ++k) {
    Mat4<Rational> alpha{};
    Mat4<double> alpha_d{};
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu) {
        alpha[mu][nu] = make_rational(sampling::uniform(rng, -8, 8), 8);
        alpha[nu][mu] = -alpha[mu][nu];
        alpha_d[mu][nu] = alpha[mu][nu].get_d();
        alpha_d[nu][mu] = -alpha_d[mu][nu];
      }
    }
    const Vec4d x{unit(rng), unit(rng), unit(rng), unit(rng)};
    const Vec4d active = active_transform(x, alpha_d, metric);
    const Vec4d passive = passive_transform(x, passive_parameters_from_active(alpha, metric), metric);
    for (int mu = 0; mu < 4; ++mu) agree = std::max(agree, std::abs(active[mu] - passive[mu]));
  }
  r.add_within("passive rotor and active star exponential agree (" + std::to_string(samples / 5) + " parameter sets)",
               agree, 1e-10);
  return r;
}

inline std::vector<CheckReport> lorentz_suite() {
  std::vector<CheckReport> out;
  for (Metric m : {Metric::nonstandard(), Metric::standard()}) out.push_back(passive_algebra_check(m));
  for (Metric m : {Metric::nonstandard(), Metric::standard()}) out.push_back(active_algebra_check(m));
  for (Metric m : {Metric::nonstandard(), Metric::standard()}) out.push_back(passive_series_report(m));
  for (Metric m : {Metric::nonstandard(), Metric::standard()}) out.push_back(finite_transform_report(m));
  return out;
}

inline std::vector<CheckReport> poincare_suite() {
  return {poincare_check(Metric::nonstandard()), poincare_check(Metric::standard())};
}

// ---------------------------------------------------------------------------

inline CheckReport canonical_relations_report() {
  CheckReport r{"canonical relations", {}};
  const ProductKind mk = moyal4_kind();
  std::vector<Multivector> qp, qq, pp, pb_qp, pb_qq;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Multivector delta = mu == nu ? Multivector(ScalarH::i_hbar()) : Multivector{};
      qp.push_back(star_commutator(Multivector::q(mu), Multivector::p(nu), mk) - delta);
      qq.push_back(star_commutator(Multivector::q(mu), Multivector::q(nu), mk));
      pp.push_back(star_commutator(Multivector::p(mu), Multivector::p(nu), mk));
      pb_qp.push_back(Multivector(poisson_bracket(PhasePoly::q(mu), PhasePoly::p(nu)) - PhasePoly(mu == nu ? 1L : 0L)));
      pb_qq.push_back(Multivector(poisson_bracket(PhasePoly::q(mu), PhasePoly::q(nu))));
      pb_qq.push_back(Multivector(poisson_bracket(PhasePoly::p(mu), PhasePoly::p(nu))));
    }
  }
  detail::add_all_zero(r, "[q^m, p_n]_M = i hb delta^m_n", qp);
  detail::add_all_zero(r, "[q^m, q^n]_M = 0", qq);
  detail::add_all_zero(r, "[p_m, p_n]_M = 0", pp);
  detail::add_all_zero(r, "{q^m, p_n} = delta^m_n", pb_qp);
  detail::add_all_zero(r, "{q^m, q^n} = 0 = {p_m, p_n}", pb_qq);
  return r;
}

inline CheckReport classical_limit_report(int pairs = 100, std::uint64_t seed = 7) {
  CheckReport r{"classical limit", {}};
  sampling::Rng rng(seed);
  sampling::PolySpec shape;
  shape.max_degree = 4;
  shape.max_terms = 4;
  int limit_fail = 0, factor_fail = 0, jacobi_fail = 0;
  for (int k = 0; k < pairs; ++k) {
    const PhasePoly f = sampling::random_poly(rng, shape);
    const PhasePoly g = sampling::random_poly(rng, shape);
    const PhasePoly h = sampling::random_poly(rng, shape);
    if (!classical_limit_check(f, g)) ++limit_fail;
    if (!(hbar_set_zero(moyal4_star(Multivector(f), Multivector(g))) == Multivector(f * g))) ++factor_fail;
    const PhasePoly jac = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                          poisson_bracket(h, poisson_bracket(f, g));
    if (!jac.is_zero()) ++jacobi_fail;
  }
  const std::string n = " (" + std::to_string(pairs) + " random polynomials of degree <= 4)";
  r.add_true("lim_(hb->0) [f,g]_M/(i hb) = {f,g}" + n, limit_fail == 0, std::to_string(limit_fail) + " failures");
  r.add_true("lim_(hb->0) f *_M g = f g" + n, factor_fail == 0, std::to_string(factor_fail) + " failures");
  r.add_true("{f,{g,h}} + {g,{h,f}} + {h,{f,g}} = 0" + n, jacobi_fail == 0, std::to_string(jacobi_fail) + " failures");
  return r;
}

inline CheckReport classical_dynamics_report(std::uint64_t seed = 11) {
  CheckReport r{"proper-time dynamics", {}};
  const Metric m = Metric::nonstandard();
  auto lorentz = [&](const std::string& label, const CovariantHamiltonian& h) {
    const LorentzForceResidual res = lorentz_force_residual(h);
    std::vector<Multivector> force;
    for (const auto& f : res.force) force.push_back(Multivector(f));
    detail::add_all_zero(r, "d pi_m/ds = e F_mn dq^n/ds (" + label + ")", force);
    r.add_zero("d(pi_m pi^m)/ds = 0 (" + label + ")", Multivector(res.mass_shell_rate));
  };
  lorentz("homogeneous B_3 = 1", charged_hamiltonian(Rational(1), Rational(1), homogeneous_b_potential(Rational(1)), m));
  sampling::Rng rng(seed);
  for (int k = 0; k < 3; ++k) {
    Potential a{};
    for (auto& comp : a) comp = sampling::random_position_poly(rng, 2);
    lorentz("random quadratic potential " + std::to_string(k + 1),
            charged_hamiltonian(make_rational(2, 3), make_rational(3, 2), a, m));
  }

  // L = (m/2) eta_mn v^m v^n + e v^m A_m
  const Rational mass(2), charge(1);
  const Potential a = homogeneous_b_potential(Rational(3));
  PhasePoly lagrangian;
  for (int mu = 0; mu < 4; ++mu) {
    lagrangian += (velocity(mu) * velocity(mu)).scaled(ScalarH(mass / 2 * m.diag(mu)));
    lagrangian += (velocity(mu) * a[mu]).scaled(ScalarH(charge));
  }
  const LegendreResult leg = euler_lagrange_check(lagrangian);
  r.add_true("Euler-Lagrange and Hamilton equations agree for L = (m/2) v.v + e v.A", leg.consistent());
  r.add_zero("v^m p_m - L = eta^mn pi_m pi_n / 2m",
             Multivector(leg.hamiltonian) - charged_hamiltonian(charge, mass, a, m).k);
  return r;
}

inline CheckReport schrodinger_report(int order = 8) {
  CheckReport r{"proper-time star exponential", {}};
  const CovariantHamiltonian k = free_hamiltonian(Rational(1));
  const std::vector<Multivector> res = schrodinger_residual(k.k, order);
  detail::add_all_zero(r,
                       "i hb d/ds Exp(-i s K/hb) - K *_M Exp(-i s K/hb) = 0 through s^" + std::to_string(order - 1) +
                           " (free K, N = " + std::to_string(order) + ")",
                       std::vector<Multivector>(res.begin(), res.begin() + order));
  return r;
}

inline std::vector<CheckReport> classical_limit_suite(int order = 8) {
  return {canonical_relations_report(), classical_limit_report(), classical_dynamics_report(), schrodinger_report(order)};
}

// ---------------------------------------------------------------------------

/// [pi_m, pi_n]_M - i hb e F_mn over all index pairs.
inline std::vector<Multivector> kinetic_commutator_residuals(const Potential& a, const Rational& charge) {
  const CommutatorTable t = kinetic_commutator(a, charge);
  const FieldTensor f = field_tensor(a);
  std::vector<Multivector> out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      out.push_back(t[mu][nu] - Multivector(f[mu][nu].scaled(ScalarH(ComplexQ(Rational(0), charge), 1))));
    }
  }
  return out;
}

inline std::vector<CheckReport> spin_suite(std::uint64_t seed = 13) {
  CheckReport comm{"kinetic momentum commutators", {}};
  const Rational e(1), mass(1), b3(1);
  const Potential ab = homogeneous_b_potential(b3);
  detail::add_all_zero(comm, "[pi_m, pi_n]_M = i hb e F_mn (homogeneous B_3)", kinetic_commutator_residuals(ab, e));
  sampling::Rng rng(seed);
  std::vector<Multivector> random_res;
  for (int k = 0; k < 20; ++k) {
    Potential a{};
    for (auto& comp : a) comp = sampling::random_position_poly(rng, 1 + k % 2);
    const Rational charge = sampling::random_rational(rng, 4);
    for (auto& res : kinetic_commutator_residuals(a, charge)) random_res.push_back(res);
  }
  detail::add_all_zero(comm, "[pi_m, pi_n]_M = i hb e F_mn (20 random linear/quadratic potentials)", random_res);

  CheckReport spin{"spin Hamiltonian", {}};
  for (Metric m : {Metric::nonstandard(), Metric::standard()}) {
    const std::string tag = " (" + std::string(m.name()) + " metric)";
    const Multivector k = spin_hamiltonian(ab, e, mass, m);
    CovariantHamiltonian ch = charged_hamiltonian(e, mass, ab, m);
    spin.add_zero("<K>_0 = pi_m pi^m / 2m" + tag, grade_project(k, 0) - ch.k);
    spin.add_zero("<K>_2 = (i hb e/4m) F^mn g_m g_n" + tag, grade_project(k, 2) - spin_term_expected(ab, e, mass, m));
    const Multivector expect = Multivector::blade(Blade::from_indices({1, 2}))
                                   .scaled(ScalarH(ComplexQ(Rational(0), e * b3 / (2 * mass)), 1));
    spin.add_zero("<K>_2 = i (e hb/2m) B_3 g1g2" + tag, grade_project(k, 2) - expect);
    spin.add_true("K has no grade 1, 3, 4 parts" + tag,
                  grade_project(k, 1).is_zero() && grade_project(k, 3).is_zero() && grade_project(k, 4).is_zero());
  }

  CheckReport eig{"spin eigenfunctions in a homogeneous field", {}};
  const auto [wp, wm] = magnetic_spin_eigenfunctions();
  for (Metric m : {Metric::nonstandard(), Metric::standard()}) {
    const std::string tag = " (" + std::string(m.name()) + " metric)";
    const Multivector op = magnetic_spin_operator();
    detail::add_all_zero(eig, "(i g1g2) *_C W_+- = +-W_+-" + tag,
                         {clifford_star(op, wp, m) - wp, clifford_star(op, wm, m) + wm});
    detail::add_all_zero(eig, "W_+- *_C W_+- = W_+-, W_+ *_C W_- = 0" + tag,
                         {clifford_star(wp, wp, m) - wp, clifford_star(wm, wm, m) - wm, clifford_star(wp, wm, m)});
    const Multivector k2 = grade_project(spin_hamiltonian(ab, e, mass, m), 2);
    const ScalarH level(ComplexQ(e * b3 / (2 * mass)), 1);
    detail::add_all_zero(eig, "<K>_2 *_MC W_+- = +-(e hb B_3/2m) W_+-" + tag,
                         {mc_star(k2, wp, m) - wp.scaled(level), mc_star(k2, wm, m) + wm.scaled(level)});
  }
  eig.add_zero("W_+ + W_- = 1", wp + wm - Multivector(1L));
  return {comm, spin, eig};
}

/// Runs one named battery ("all" runs every one in order).
inline std::vector<CheckReport> run_suite(const std::string& name, int order = 8) {
  if (name == "dirac") return dirac_suite(order);
  if (name == "lorentz") return lorentz_suite();
  if (name == "poincare") return poincare_suite();
  if (name == "classical-limit") return classical_limit_suite(order);
  if (name == "spin") return spin_suite();
  if (name == "all") {
    std::vector<CheckReport> out;
    for (const std::string& n : suite_names()) {
      if (n == "all") continue;
      for (auto& r : run_suite(n, order)) out.push_back(std::move(r));
    }
    return out;
  }
  std::string known;
  for (const std::string& n : suite_names()) known += (known.empty() ? "" : "|") + n;
  throw UnknownSuiteError("unknown suite '" + name + "' (expected " + known + ")");
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.ok()) return false;
  }
  return true;
}

}  // namespace starprod
