#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starprod/dirac.hpp"
#include "starprod/suites.hpp"

using namespace starprod;

namespace {

oracle::Mat scalar_matrix(const Rational& r) { return oracle::Mat::identity().scaled(ComplexQ(r)); }

oracle::Mat as_matrix(const Multivector& m, Metric metric) { return oracle::to_matrix(m, metric); }

}  // namespace

TEST(Dirac, CatalogueIsOnShell) {
  const auto points = pythagorean_points();
  ASSERT_EQ(points.size(), 3u);
  const std::array<std::array<long, 3>, 3> expected{{{3, 4, 5}, {5, 12, 13}, {8, 15, 17}}};
  for (std::size_t k = 0; k < points.size(); ++k) {
    const DiracSystem& s = points[k].system;
    EXPECT_EQ(s.mass, Rational(expected[k][0]));
    EXPECT_EQ(dot(s.momentum, s.momentum), Rational(expected[k][1] * expected[k][1]));
    EXPECT_EQ(s.energy, Rational(expected[k][2]));
    EXPECT_EQ(dot(s.momentum, points[k].axis.u), 0);
  }
}

TEST(Dirac, MatrixRelations) {
  EXPECT_TRUE(dirac_matrix_relations(Metric::standard()).ok());
  EXPECT_TRUE(dirac_matrix_relations(Metric::nonstandard()).ok());
  // alpha_i = g0 g_i in the matrix picture
  const Metric m = Metric::standard();
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(as_matrix(alpha(i, m), m), oracle::gamma_matrix(0, m) * oracle::gamma_matrix(i, m));
  }
}

TEST(Dirac, HamiltonianSquaresToEnergyInMatrixPicture) {
  for (const auto& pt : pythagorean_points()) {
    const Metric m = pt.system.metric;
    const auto h = as_matrix(dirac_hamiltonian(pt.system), m);
    EXPECT_EQ(h * h, scalar_matrix(pt.system.energy * pt.system.energy));
  }
}

TEST(Dirac, SymbolicMassShell) {
  for (Metric m : {Metric::standard(), Metric::nonstandard()}) {
    const Multivector h = dirac_hamiltonian_symbolic(Rational(3), m);
    PhasePoly shell(9L);
    for (int i = 1; i <= 3; ++i) shell += PhasePoly::p(i) * PhasePoly::p(i);
    EXPECT_EQ(mc_star(h, h, m), Multivector(shell)) << m.name();
  }
}

TEST(Dirac, EnergyProjectorsAgreeWithMatrixProjectors) {
  for (const auto& pt : pythagorean_points()) {
    const Metric m = pt.system.metric;
    const ProjectorSplit e = energy_projectors(pt.system);
    const auto h = as_matrix(dirac_hamiltonian(pt.system), m);
    const auto one = oracle::Mat::identity();
    const ComplexQ half_over_e(Rational(1) / (2 * pt.system.energy));
    // (1 +- H/E)/2 built from matrices
    EXPECT_EQ(as_matrix(e.pi_plus, m), one.scaled(ComplexQ(make_rational(1, 2))) + h.scaled(half_over_e));
    EXPECT_EQ(as_matrix(e.pi_minus, m), one.scaled(ComplexQ(make_rational(1, 2))) + h.scaled(-half_over_e));
    const auto pp = as_matrix(e.pi_plus, m);
    EXPECT_EQ(pp * pp, pp);
  }
}

TEST(Dirac, SpinOperatorAndProjectors) {
  for (const auto& pt : pythagorean_points()) {
    const Metric m = pt.system.metric;
    const Multivector s = spin_operator(pt.axis, m);
    const ScalarH half_hbar(ComplexQ(make_rational(1, 2)), 1);
    EXPECT_EQ(clifford_star(s, s, m), Multivector(half_hbar * half_hbar));
    // spin commutes with H_D when the axis is orthogonal to the momentum
    EXPECT_TRUE(star_commutator(s, dirac_hamiltonian(pt.system), mc_kind(m)).is_zero());
    const ProjectorSplit sp = spin_projectors(pt.axis, m);
    EXPECT_EQ(clifford_star(sp.pi_plus, sp.pi_plus, m), sp.pi_plus);
    EXPECT_TRUE(clifford_star(sp.pi_plus, sp.pi_minus, m).is_zero());
  }
}

TEST(Dirac, CombinedProjectorsResolveIdentity) {
  for (const auto& pt : pythagorean_points()) {
    const Metric m = pt.system.metric;
    const CombinedProjectors c = combined_projectors(pt.system, pt.axis);
    Multivector sum;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        sum += c.pi[a][b];
        // trace of a rank-one spectral projector in the 4x4 picture is 1
        const auto pm = as_matrix(c.pi[a][b], m);
        ComplexQ trace;
        for (int k = 0; k < 4; ++k) trace += pm.a[k][k];
        EXPECT_EQ(trace, ComplexQ(Rational(1)));
        EXPECT_EQ(pm * pm, pm);
      }
    }
    EXPECT_EQ(sum, Multivector(1L));
  }
}

TEST(Dirac, PointReportsPass) {
  for (const auto& pt : pythagorean_points()) {
    const CheckReport r = dirac_point_report(pt.system, pt.axis, 8);
    for (const auto& e : r.entries) EXPECT_TRUE(e.passed) << e.label << " " << e.detail;
  }
}

TEST(Dirac, NonstandardMetricPointsAndMatrices) {
  const Metric m = Metric::nonstandard();
  for (const auto& pt : pythagorean_points()) {
    DiracSystem sys = pt.system;
    sys.metric = m;
    const auto h = as_matrix(dirac_hamiltonian(sys), m);
    EXPECT_EQ(h * h, scalar_matrix(sys.energy * sys.energy));
    const CheckReport r = dirac_point_report(sys, pt.axis, 8);
    for (const auto& e : r.entries) EXPECT_TRUE(e.passed) << e.label << " " << e.detail;
  }
}

TEST(Dirac, InvalidInputs) {
  EXPECT_THROW(make_dirac_system(Rational(1), {Rational(1), Rational(0), Rational(0)}), IrrationalEigenvalueError);
  EXPECT_THROW(make_dirac_system(Rational(0), {Rational(3), Rational(4), Rational(0)}), DomainError);
  EXPECT_THROW(make_spin_axis({Rational(1), Rational(1), Rational(0)}), DomainError);
  const DiracSystem sys = make_dirac_system(Rational(3), {Rational(0), Rational(0), Rational(4)});
  EXPECT_THROW(combined_projectors(sys, make_spin_axis({Rational(0), Rational(0), Rational(1)})), DomainError);
}

TEST(Spin, MagneticEigenfunctions) {
  for (Metric m : {Metric::standard(), Metric::nonstandard()}) {
    const auto [wp, wm] = magnetic_spin_eigenfunctions();
    const Multivector op = magnetic_spin_operator();
    EXPECT_EQ(clifford_star(op, wp, m), wp) << m.name();
    EXPECT_EQ(clifford_star(op, wm, m), -wm) << m.name();
    EXPECT_EQ(clifford_star(wp, wp, m), wp);
    EXPECT_TRUE(clifford_star(wp, wm, m).is_zero());
  }
}

TEST(Spin, Gamma5Matrix) {
  const Metric m = Metric::standard();
  const auto g5 = as_matrix(gamma5(), m);
  EXPECT_EQ(g5 * g5, oracle::Mat::identity());
  for (int mu = 0; mu < 4; ++mu) {
    const auto gm = oracle::gamma_matrix(mu, m);
    EXPECT_EQ(g5 * gm + gm * g5, oracle::Mat{});
  }
}
