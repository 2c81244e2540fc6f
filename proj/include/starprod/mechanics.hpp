#pragma once

// Parametrized (proper-time) relativistic mechanics: the four-space Poisson
// bracket, covariant Hamiltonians for free and charged particles, symbolic
// checks of the equations of motion, and fixed-step RK4 trajectories.

#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "starprod/calculus.hpp"

namespace starprod {

using Potential = std::array<PhasePoly, 4>;  // covariant components A_mu(q)
using FieldTensor = std::array<std::array<PhasePoly, 4>, 4>;

inline bool depends_only_on_q(const PhasePoly& f) {
  for (const auto& [e, c] : f.terms()) {
    for (int k = 4; k < kNumVars; ++k) {
      if (e[k] != 0) return false;
    }
  }
  return true;
}

struct CovariantHamiltonian {
  Multivector k;
  Rational charge{0};
  Rational mass{1};
  Potential potential{};
  Metric metric = Metric::nonstandard();

  /// pi_mu = p_mu - e A_mu.
  [[nodiscard]] PhasePoly kinetic_momentum(int mu) const {
    return PhasePoly::p(mu) - potential[mu].scaled(ScalarH(charge));
  }
  /// pi^mu = eta^{mu mu} pi_mu.
  [[nodiscard]] PhasePoly kinetic_momentum_upper(int mu) const {
    return kinetic_momentum(mu).scaled(ScalarH(static_cast<long>(metric.diag(mu))));
  }
  /// pi_mu pi^mu.
  [[nodiscard]] PhasePoly kinetic_square() const {
    PhasePoly out;
    for (int mu = 0; mu < 4; ++mu) out += kinetic_momentum(mu) * kinetic_momentum_upper(mu);
    return out;
  }
  /// The grade-0 coefficient; throws if K carries higher grades.
  [[nodiscard]] PhasePoly scalar() const {
    if (!k.is_scalar()) throw DomainError("classical dynamics needs a grade-0 Hamiltonian");
    return k.component(Blade::scalar());
  }
};

/// K = eta^{mu nu} (p_mu - e A_mu)(p_nu - e A_nu) / 2m.
inline CovariantHamiltonian charged_hamiltonian(const Rational& charge, const Rational& mass, const Potential& a,
                                                Metric metric = Metric::nonstandard()) {
  if (sgn(mass) <= 0) throw DomainError("mass must be positive");
  for (const auto& comp : a) {
    if (!depends_only_on_q(comp)) throw DomainError("potentials must depend on the positions only");
  }
  CovariantHamiltonian h{{}, charge, mass, a, metric};
  h.k = Multivector(h.kinetic_square().scaled(ScalarH(Rational(1) / (2 * mass))));
  return h;
}

/// K = eta^{mu nu} p_mu p_nu / 2m.
inline CovariantHamiltonian free_hamiltonian(const Rational& mass, Metric metric = Metric::nonstandard()) {
  return charged_hamiltonian(Rational(0), mass, Potential{}, metric);
}

/// A_1 = -B q^2 / 2, A_2 = B q^1 / 2: homogeneous field along the 3-axis.
inline Potential homogeneous_b_potential(const Rational& b3) {
  Potential a{};
  a[1] = PhasePoly::q(2).scaled(ScalarH(Rational(-b3 / 2)));
  a[2] = PhasePoly::q(1).scaled(ScalarH(Rational(b3 / 2)));
  return a;
}

/// F_{mu nu} = d_mu A_nu - d_nu A_mu with d_mu = d/dq^mu.
inline FieldTensor field_tensor(const Potential& a) {
  FieldTensor f{};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) f[mu][nu] = a[nu].partial(q_var(mu)) - a[mu].partial(q_var(nu));
  }
  return f;
}

/// {f,g} = sum_mu (df/dq^mu dg/dp_mu - df/dp_mu dg/dq^mu).
inline PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g) {
  PhasePoly out;
  for (int mu = 0; mu < 4; ++mu) {
    out += f.partial(q_var(mu)) * g.partial(p_var(mu));
    out -= f.partial(p_var(mu)) * g.partial(q_var(mu));
  }
  return out;
}

/// Parametrized Hamilton equations: entries 0..3 are dq^mu/ds = dK/dp_mu,
/// entries 4..7 are dp_mu/ds = -dK/dq^mu.
inline std::array<PhasePoly, 8> hamilton_rhs(const CovariantHamiltonian& h) {
  const PhasePoly k = h.scalar();
  std::array<PhasePoly, 8> out;
  for (int mu = 0; mu < 4; ++mu) {
    out[mu] = k.partial(p_var(mu));
    out[4 + mu] = -k.partial(q_var(mu));
  }
  return out;
}

/// df/ds = {f, K} + df/ds|explicit.
inline PhasePoly s_derivative(const PhasePoly& f, const CovariantHamiltonian& h) {
  return poisson_bracket(f, h.scalar()) + f.partial(Var::s);
}

struct LorentzForceResidual {
  std::array<PhasePoly, 4> force;  // d pi_mu/ds - e F_{mu nu} dq^nu/ds
  PhasePoly mass_shell_rate;       // d(pi_mu pi^mu)/ds
  [[nodiscard]] bool is_zero() const {
    for (const auto& r : force) {
      if (!r.is_zero()) return false;
    }
    return mass_shell_rate.is_zero();
  }
};

/// Both sides of the covariant Lorentz force law evaluated along the
/// Hamiltonian flow, plus the conservation of the kinetic mass shell.
inline LorentzForceResidual lorentz_force_residual(const CovariantHamiltonian& h) {
  const FieldTensor f = field_tensor(h.potential);
  std::array<PhasePoly, 4> velocity;
  for (int nu = 0; nu < 4; ++nu) velocity[nu] = s_derivative(PhasePoly::q(nu), h);
  LorentzForceResidual out;
  for (int mu = 0; mu < 4; ++mu) {
    PhasePoly rhs;
    for (int nu = 0; nu < 4; ++nu) rhs += f[mu][nu] * velocity[nu];
    out.force[mu] = s_derivative(h.kinetic_momentum(mu), h) - rhs.scaled(ScalarH(h.charge));
  }
  out.mass_shell_rate = s_derivative(h.kinetic_square(), h);
  return out;
}

/// lim_{hbar->0} [f,g]_M / (i hbar) == {f,g}.
inline bool classical_limit_check(const PhasePoly& f, const PhasePoly& g) {
  const Multivector comm = star_commutator(Multivector(f), Multivector(g), moyal4_kind());
  return hbar_set_zero(divide_by_ihbar(comm)) == Multivector(poisson_bracket(f, g));
}

using CommutatorTable = std::array<std::array<Multivector, 4>, 4>;

/// [pi_mu, pi_nu]_M for all index pairs.
inline CommutatorTable kinetic_commutator(const Potential& a, const Rational& charge) {
  const CovariantHamiltonian h{{}, charge, Rational(1), a, Metric{}};
  CommutatorTable out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      out[mu][nu] = star_commutator(Multivector(h.kinetic_momentum(mu)), Multivector(h.kinetic_momentum(nu)),
                                    moyal4_kind());
    }
  }
  return out;
}

/// K = (1/2m) pi *_MC pi with pi = pi^mu gamma_mu.
inline Multivector spin_hamiltonian(const Potential& a, const Rational& charge, const Rational& mass,
                                    Metric metric = Metric::nonstandard()) {
  const CovariantHamiltonian h{{}, charge, mass, a, metric};
  Multivector pi;
  for (int mu = 0; mu < 4; ++mu) pi += Multivector::blade(Blade::gamma(mu), h.kinetic_momentum_upper(mu));
  return mc_star(pi, pi, metric).scaled(ScalarH(Rational(1) / (2 * mass)));
}

/// (i hbar e / 4m) F^{mu nu} gamma_mu gamma_nu, summed over all mu, nu.
inline Multivector spin_term_expected(const Potential& a, const Rational& charge, const Rational& mass,
                                      Metric metric = Metric::nonstandard()) {
  const FieldTensor f = field_tensor(a);
  Multivector out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      const long raise = metric.diag(mu) * metric.diag(nu);
      out += grassmann_mul(Multivector(f[mu][nu].scaled(ScalarH(raise))),
                           grassmann_mul(Multivector::gamma(mu), Multivector::gamma(nu)));
    }
  }
  return out.scaled(ScalarH(ComplexQ(Rational(0), charge / (4 * mass)), 1));
}

// ---------------------------------------------------------------------------
// Legendre transform of polynomial Lagrangians

/// Velocities dq^mu/ds share the slots of p_mu inside a Lagrangian polynomial.
inline PhasePoly velocity(int mu) { return PhasePoly::p(mu); }

struct LegendreResult {
  PhasePoly hamiltonian;
  std::array<PhasePoly, 4> velocity_of_momentum;      // v^mu(q, p)
  std::array<PhasePoly, 4> velocity_residual;         // dK/dp_mu - v^mu(q,p)
  std::array<PhasePoly, 4> euler_lagrange_residual;   // dK/dq^mu + dL/dq^mu |_{v(q,p)}
  [[nodiscard]] bool consistent() const {
    for (int mu = 0; mu < 4; ++mu) {
      if (!velocity_residual[mu].is_zero() || !euler_lagrange_residual[mu].is_zero()) return false;
    }
    return true;
  }
};

/// Legendre transform K = v^mu p_mu - L for Lagrangians at most quadratic in
/// the velocities with a constant diagonal velocity Hessian. The residuals
/// vanish iff the parametrized Euler-Lagrange and Hamilton equations agree.
inline LegendreResult euler_lagrange_check(const PhasePoly& lagrangian) {
  std::array<PhasePoly, 4> b;
  std::array<Rational, 4> hess;
  for (int mu = 0; mu < 4; ++mu) {
    const PhasePoly dl = lagrangian.partial(p_var(mu));
    for (int nu = 0; nu < 4; ++nu) {
      const PhasePoly d2 = dl.partial(p_var(nu));
      if (!d2.is_constant()) throw UnsupportedError("Lagrangian is not quadratic in the velocities");
      if (nu != mu && !d2.is_zero()) throw UnsupportedError("velocity Hessian must be diagonal");
      if (nu == mu) {
        const ScalarH c = d2.constant_term();
        if (c.is_zero() || c.terms().size() != 1 || c.min_hbar_power() != 0 || !c.coefficient(0).is_real()) {
          throw UnsupportedError("velocity Hessian must be a nonzero real constant");
        }
        hess[mu] = c.coefficient(0).re;
      }
    }
    PhasePoly at_rest = dl;
    for (int nu = 0; nu < 4; ++nu) at_rest = at_rest.substitute(p_var(nu), PhasePoly{});
    b[mu] = at_rest;
  }

  LegendreResult out;
  for (int mu = 0; mu < 4; ++mu) {
    out.velocity_of_momentum[mu] = (PhasePoly::p(mu) - b[mu]).scaled(ScalarH(Rational(1) / hess[mu]));
  }
  // v^mu only involves its own slot p_mu, so sequential substitution is simultaneous
  auto on_shell = [&](const PhasePoly& f) {
    PhasePoly g = f;
    for (int mu = 0; mu < 4; ++mu) g = g.substitute(p_var(mu), out.velocity_of_momentum[mu]);
    return g;
  };
  PhasePoly k;
  for (int mu = 0; mu < 4; ++mu) k += out.velocity_of_momentum[mu] * PhasePoly::p(mu);
  k -= on_shell(lagrangian);
  out.hamiltonian = k;
  for (int mu = 0; mu < 4; ++mu) {
    out.velocity_residual[mu] = k.partial(p_var(mu)) - out.velocity_of_momentum[mu];
    out.euler_lagrange_residual[mu] = k.partial(q_var(mu)) + on_shell(lagrangian.partial(q_var(mu)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// numerics

/// Real polynomial compiled for binary64 evaluation.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const PhasePoly& f) {
    for (const auto& [e, c] : f.terms()) {
      if (c.terms().size() != 1 || c.min_hbar_power() != 0 || !c.coefficient(0).is_real()) {
        throw DomainError("numeric evaluation needs real hbar-free coefficients");
      }
      terms_.push_back({c.coefficient(0).re.get_d(), e});
    }
  }

  [[nodiscard]] double operator()(const std::array<double, kNumVars>& x) const {
    double total = 0.0;
    for (const auto& t : terms_) {
      double m = t.coeff;
      for (int i = 0; i < kNumVars; ++i) {
        for (int j = 0; j < t.exps[i]; ++j) m *= x[i];
      }
      total += m;
    }
    return total;
  }

 private:
  struct Term {
    double coeff;
    Exponents exps;
  };
  std::vector<Term> terms_;
};

struct TrajectorySample {
  double s = 0.0;
  std::array<double, 4> q{};
  std::array<double, 4> p{};
  double pi2_drift = 0.0;  // pi_mu pi^mu(s) - pi_mu pi^mu(0)
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double step = 0.0;
  std::string method = "rk4";
};

/// Raised when the state stops being finite; carries the samples so far.
class IntegrationDivergedError : public Error {
 public:
  IntegrationDivergedError(const std::string& what, Trajectory partial) : Error(what), partial_(std::move(partial)) {}
  [[nodiscard]] const Trajectory& partial() const { return partial_; }
  [[nodiscard]] const TrajectorySample& last_valid() const { return partial_.samples.back(); }

 private:
  Trajectory partial_;
};

/// Classical RK4 with a fixed step on the parametrized Hamilton equations.
/// Positions are contravariant q^mu, momenta covariant p_mu.
inline Trajectory integrate(const CovariantHamiltonian& h, const std::array<double, 4>& q0,
                            const std::array<double, 4>& p0, double s_max, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("step must be positive");
  if (!(s_max >= 0.0) || !std::isfinite(s_max)) throw DomainError("s_max must be a non-negative number");

  const auto rhs_poly = hamilton_rhs(h);
  std::array<NumericPoly, 8> rhs;
  for (int i = 0; i < 8; ++i) rhs[i] = NumericPoly(rhs_poly[i]);
  const NumericPoly pi2(h.kinetic_square());

  using State = std::array<double, 8>;
  auto point = [](const State& x, double s) {
    std::array<double, kNumVars> pt{};
    for (int i = 0; i < 8; ++i) pt[i] = x[i];
    pt[8] = s;
    return pt;
  };
  auto system = [&](const State& x, State& dxds, double s) {
    const auto pt = point(x, s);
    for (int i = 0; i < 8; ++i) dxds[i] = rhs[i](pt);
  };

  State x{};
  for (int mu = 0; mu < 4; ++mu) {
    x[mu] = q0[mu];
    x[4 + mu] = p0[mu];
  }
  const double pi2_start = pi2(point(x, 0.0));
  auto sample = [&](const State& st, double s) {
    TrajectorySample out;
    out.s = s;
    for (int mu = 0; mu < 4; ++mu) {
      out.q[mu] = st[mu];
      out.p[mu] = st[4 + mu];
    }
    out.pi2_drift = pi2(point(st, s)) - pi2_start;
    return out;
  };

  Trajectory traj;
  traj.step = step;
  const auto steps = static_cast<long>(std::floor(s_max / step + 1e-9));
  traj.samples.reserve(static_cast<std::size_t>(steps) + 1);
  traj.samples.push_back(sample(x, 0.0));

  boost::numeric::odeint::runge_kutta4<State> stepper;
  for (long n = 0; n < steps; ++n) {
    const double s = static_cast<double>(n) * step;
    stepper.do_step(system, x, s, step);
    for (double v : x) {
      if (!std::isfinite(v)) {
        throw IntegrationDivergedError("integration diverged at s = " + std::to_string(s + step), traj);
      }
    }
    traj.samples.push_back(sample(x, static_cast<double>(n + 1) * step));
  }
  return traj;
}

}  // namespace starprod
