#pragma once

// The Dirac sector: Hamiltonian, energy and spin Wigner functions, their
// products, and the spin eigenfunctions in a homogeneous magnetic field.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "starprod/calculus.hpp"

namespace starprod {

using Vec3Q = std::array<Rational, 3>;

inline Rational dot(const Vec3Q& a, const Vec3Q& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct DiracSystem {
  Rational mass;
  Vec3Q momentum;  // contravariant components p^i
  Rational energy;
  Metric metric = Metric::standard();
};

/// Builds a system at an exact mass-shell point; E must be rational.
inline DiracSystem make_dirac_system(const Rational& mass, const Vec3Q& momentum,
                                     Metric metric = Metric::standard()) {
  if (sgn(mass) <= 0) throw DomainError("mass must be positive");
  const Rational e2 = dot(momentum, momentum) + mass * mass;
  auto e = exact_sqrt(e2);
  if (!e) throw IrrationalEigenvalueError("E^2 = " + to_string(e2) + " is not a rational square");
  return {mass, momentum, *e, metric};
}

struct SpinAxis {
  Vec3Q u;
};

inline SpinAxis make_spin_axis(const Vec3Q& u) {
  if (dot(u, u) != 1) throw DomainError("spin axis must be a unit vector");
  return {u};
}

/// Catalogue of exact test points (m, p, E) with an axis orthogonal to p.
struct PythagoreanPoint {
  DiracSystem system;
  SpinAxis axis;
};

inline std::vector<PythagoreanPoint> pythagorean_points() {
  auto q = [](long n, long d = 1) { return make_rational(n, d); };
  return {
      {make_dirac_system(q(3), {q(0), q(0), q(4)}), make_spin_axis({q(1), q(0), q(0)})},
      {make_dirac_system(q(5), {q(12), q(0), q(0)}), make_spin_axis({q(0), q(0), q(1)})},
      {make_dirac_system(q(8), {q(9), q(12), q(0)}), make_spin_axis({q(4, 5), q(-3, 5), q(0)})},
  };
}

/// Generators with the Dirac-representation squares (+1, -1, -1, -1): gamma_mu
/// itself, or -i gamma_mu when the metric is (-,+,+,+).
inline Multivector dirac_gamma(int mu, Metric metric = Metric::standard()) {
  const Multivector g = Multivector::gamma(mu);
  return metric.signature() == Signature::standard ? g : g.scaled(ScalarH(ComplexQ(Rational(0), Rational(-1))));
}

inline Multivector beta(Metric metric = Metric::standard()) { return dirac_gamma(0, metric); }

/// alpha_i = beta gamma^i.
inline Multivector alpha(int i, Metric metric = Metric::standard()) {
  return clifford_star(dirac_gamma(0, metric), dirac_gamma(i, metric), metric);
}

inline Multivector dirac_hamiltonian(const DiracSystem& sys) {
  Multivector h = beta(sys.metric).scaled(ScalarH(sys.mass));
  for (int i = 1; i <= 3; ++i) h += alpha(i, sys.metric).scaled(ScalarH(sys.momentum[i - 1]));
  return h;
}

/// H_D with the momenta left as phase-space variables: p^i = eta^{ii} p_i.
inline Multivector dirac_hamiltonian_symbolic(const Rational& mass, Metric metric = Metric::standard()) {
  Multivector h = beta(metric).scaled(ScalarH(mass));
  for (int i = 1; i <= 3; ++i) {
    h += alpha(i, metric).scaled(PhasePoly::p(i).scaled(ScalarH(static_cast<long>(metric.diag(i)))));
  }
  return h;
}

inline ProjectorSplit energy_projectors(const DiracSystem& sys) {
  return projector_split(dirac_hamiltonian(sys), mc_kind(sys.metric), ScalarH(sys.energy));
}

/// gamma^5 = i gamma_0 gamma_1 gamma_2 gamma_3.
inline Multivector gamma5() { return Multivector::pseudoscalar().scaled(ScalarH::i()); }

/// S_u = (hbar/2) gamma^5 *_C (gamma_i u^i).
inline Multivector spin_operator(const SpinAxis& axis, Metric metric = Metric::standard()) {
  if (dot(axis.u, axis.u) != 1) throw DomainError("spin axis must be a unit vector");
  Multivector u;
  for (int i = 1; i <= 3; ++i) u += dirac_gamma(i, metric).scaled(ScalarH(axis.u[i - 1]));
  return clifford_star(gamma5(), u, metric).scaled(ScalarH(ComplexQ(make_rational(1, 2)), 1));
}

/// pi_{+-1/2} = 1/2 +- S_u / hbar.
inline ProjectorSplit spin_projectors(const SpinAxis& axis, Metric metric = Metric::standard()) {
  return projector_split(spin_operator(axis, metric), clifford_kind(metric),
                         ScalarH(ComplexQ(make_rational(1, 2)), 1));
}

/// The four functions pi_{E,s} = pi_E *_MC pi_s, indexed [energy sign][spin sign]
/// with index 0 = plus and 1 = minus.
struct CombinedProjectors {
  std::array<std::array<Multivector, 2>, 2> pi;
};

inline CombinedProjectors combined_projectors(const DiracSystem& sys, const SpinAxis& axis) {
  if (dot(axis.u, sys.momentum) != 0) throw DomainError("spin axis must be orthogonal to the momentum");
  const ProjectorSplit energy = energy_projectors(sys);
  const ProjectorSplit spin = spin_projectors(axis, sys.metric);
  CombinedProjectors out;
  const std::array<const Multivector*, 2> e{&energy.pi_plus, &energy.pi_minus};
  const std::array<const Multivector*, 2> s{&spin.pi_plus, &spin.pi_minus};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out.pi[a][b] = mc_star(*e[a], *s[b], sys.metric);
  }
  return out;
}

/// W_+- = 1/2 +- (i/2) gamma_1 gamma_2.
inline std::pair<Multivector, Multivector> magnetic_spin_eigenfunctions() {
  const Multivector half(make_rational(1, 2));
  const Multivector b12 = Multivector::blade(Blade::from_indices({1, 2})).scaled(ScalarH(ComplexQ(Rational(0), make_rational(1, 2))));
  return {half + b12, half - b12};
}

/// The operator i gamma_1 gamma_2 whose eigenfunctions W_+- are.
inline Multivector magnetic_spin_operator() {
  return Multivector::blade(Blade::from_indices({1, 2})).scaled(ScalarH::i());
}

}  // namespace starprod
