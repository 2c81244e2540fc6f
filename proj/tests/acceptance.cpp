// Acceptance battery: one PASS/FAIL line per criterion, each with its
// tolerance and wall-clock limit. Exit status is nonzero if any line fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "starprod/io.hpp"
#include "starprod/sampling.hpp"
#include "starprod/suites.hpp"

using namespace starprod;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

const std::array<Metric, 2> kMetrics{Metric::standard(), Metric::nonstandard()};

sampling::PolySpec small_spec(int degree = 3) {
  sampling::PolySpec shape;
  shape.max_degree = degree;
  shape.max_terms = 3;
  shape.max_coeff = 4;
  return shape;
}

Potential random_potential(sampling::Rng& rng, int degree) {
  Potential a;
  for (auto& comp : a) comp = sampling::random_position_poly(rng, degree, 3);
  return a;
}

// ---------------------------------------------------------------------------

Outcome clifford_relations() {
  Outcome o;
  int checked = 0;
  for (Metric m : kMetrics) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        const Multivector a = star_anticommutator(Multivector::gamma(mu), Multivector::gamma(nu), clifford_kind(m));
        o.require(a == Multivector(static_cast<long>(2 * m(mu, nu))), "pair " + std::to_string(mu) + std::to_string(nu));
        ++checked;
      }
    }
  }
  o.detail = o.ok ? std::to_string(checked) + " pairs exact" : o.detail;
  return o;
}

Outcome mass_shell() {
  Outcome o;
  for (Metric m : kMetrics) {
    for (long mass : {1L, 3L, 8L}) {
      const Multivector h = dirac_hamiltonian_symbolic(Rational(mass), m);
      PhasePoly shell(mass * mass);
      for (int i = 1; i <= 3; ++i) shell += PhasePoly::p(i) * PhasePoly::p(i);
      o.require(mc_star(h, h, m) == Multivector(shell), std::string(m.name()) + " m=" + std::to_string(mass));
    }
  }
  if (o.ok) o.detail = "H_D *_MC H_D - (p^2 + m^2) = 0 symbolically";
  return o;
}

Outcome dirac_wigner() {
  Outcome o;
  std::size_t identities = 0;
  for (const auto& pt : pythagorean_points()) {
    const CheckReport r = dirac_point_report(pt.system, pt.axis, 8);
    for (const auto& e : r.entries) o.require(e.passed, r.title + ": " + e.label);
    identities += r.entries.size();
    // matrix picture: the four combined projectors are rank-one spectral projectors
    const Metric m = pt.system.metric;
    const CombinedProjectors c = combined_projectors(pt.system, pt.axis);
    oracle::Mat sum;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const auto pm = oracle::to_matrix(c.pi[a][b], m);
        o.require(pm * pm == pm, "matrix idempotence");
        ComplexQ trace;
        for (int k = 0; k < 4; ++k) trace += pm.a[k][k];
        o.require(trace == ComplexQ(Rational(1)), "matrix trace");
        sum = sum + pm;
      }
    }
    o.require(sum == oracle::Mat::identity(), "matrix completeness");
  }
  if (o.ok) o.detail = "3 points, " + std::to_string(identities) + " identities, zero residuals";
  return o;
}

Outcome gamma_oracle() {
  Outcome o;
  sampling::Rng rng(4);
  for (Metric m : kMetrics) {
    for (int k = 0; k < 500; ++k) {
      const Multivector a = sampling::random_constant_multivector(rng);
      const Multivector b = sampling::random_constant_multivector(rng);
      o.require(oracle::to_matrix(clifford_star(a, b, m), m) == oracle::to_matrix(a, m) * oracle::to_matrix(b, m),
                a.str() + " * " + b.str());
    }
  }
  if (o.ok) o.detail = "500 pairs per metric, exact";
  return o;
}

Outcome passive_algebra() {
  Outcome o;
  for (Metric m : kMetrics) {
    const CheckReport r = passive_algebra_check(m);
    for (const auto& e : r.entries) o.require(e.passed, std::string(m.name()) + ": " + e.label);
  }
  if (o.ok) o.detail = "nonstandard exact; standard with I -> -I";
  return o;
}

Outcome active_and_poincare() {
  Outcome o;
  for (Metric m : kMetrics) {
    for (const CheckReport& r : {active_algebra_check(m), poincare_check(m)}) {
      for (const auto& e : r.entries) o.require(e.passed, std::string(m.name()) + ": " + e.label);
    }
    // quadratic generators: the commutator is exactly i hb times the Poisson closure
    auto mu_nu = [&](int a, int b) {
      return grassmann_mul(Multivector::q(a), p_upper(b, m)) - grassmann_mul(Multivector::q(b), p_upper(a, m));
    };
    auto eta = [&](int a, int b, const Multivector& x) { return x.scaled(ScalarH(static_cast<long>(m(a, b)))); };
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
          for (int d = 0; d < 4; ++d) {
            const Multivector closure = eta(a, c, mu_nu(b, d)) + eta(b, d, mu_nu(a, c)) - eta(b, c, mu_nu(a, d)) -
                                        eta(a, d, mu_nu(b, c));
            o.require(star_commutator(mu_nu(a, b), mu_nu(c, d), moyal4_kind(m)) == closure.scaled(ScalarH::i_hbar()),
                      "closure " + std::to_string(a) + std::to_string(b) + std::to_string(c) + std::to_string(d));
          }
        }
      }
    }
  }
  if (o.ok) o.detail = "256 + 64 index combinations per metric, zero residuals";
  return o;
}

Outcome finite_boost() {
  Outcome o;
  double boost_err = 0.0, metric_err = 0.0, agree_err = 0.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> num(-8, 8);
  for (Metric m : kMetrics) {
    const Vec4d e0{1.0, 0.0, 0.0, 0.0};
    for (int axis = 1; axis <= 3; ++axis) {
      const Vec4d out = active_transform(e0, boost_parameters(0.5, axis, m), m);
      boost_err = std::max({boost_err, std::abs(out[0] - std::cosh(0.5)), std::abs(out[axis] - std::sinh(0.5))});
    }
    Eigen::Matrix4d eta = Eigen::Matrix4d::Zero();
    for (int k = 0; k < 4; ++k) eta(k, k) = m.diag(k);
    for (int k = 0; k < 100; ++k) {
      Mat4<double> alpha{};
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          alpha[a][b] = unit(rng);
          alpha[b][a] = -alpha[a][b];
        }
      }
      const Eigen::Matrix4d lam = active_lorentz_matrix(alpha, m);
      metric_err = std::max(metric_err, (lam.transpose() * eta * lam - eta).cwiseAbs().maxCoeff());
    }
    for (int k = 0; k < 20; ++k) {
      Mat4<Rational> alpha{};
      Mat4<double> alpha_d{};
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          alpha[a][b] = 0;
          alpha_d[a][b] = 0.0;
        }
      }
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          alpha[a][b] = make_rational(num(rng), 8);
          alpha[b][a] = -alpha[a][b];
          alpha_d[a][b] = alpha[a][b].get_d();
          alpha_d[b][a] = -alpha_d[a][b];
        }
      }
      const Vec4d x{unit(rng), unit(rng), unit(rng), unit(rng)};
      const Vec4d act = active_transform(x, alpha_d, m);
      const Vec4d pas = passive_transform(x, passive_parameters_from_active(alpha, m), m);
      for (int r = 0; r < 4; ++r) agree_err = std::max(agree_err, std::abs(act[r] - pas[r]));
    }
  }
  o.require(boost_err < 1e-12, "boost mixing");
  o.require(metric_err < 1e-12, "metric preservation");
  o.require(agree_err < 1e-10, "passive/active agreement");
  std::ostringstream os;
  os << std::scientific << std::setprecision(1) << "boost " << boost_err << " < 1e-12, LtnL " << metric_err
     << " < 1e-12, passive/active " << agree_err << " < 1e-10";
  o.detail = o.ok ? os.str() : o.detail + "; " + os.str();
  return o;
}

Outcome star_laws() {
  Outcome o;
  sampling::Rng rng(8);
  const Multivector one(1L);
  for (Product p : {Product::clifford, Product::moyal3, Product::moyal4, Product::moyal_clifford}) {
    for (int k = 0; k < 200; ++k) {
      const ProductKind kind{p, kMetrics[static_cast<std::size_t>(k % 2)]};
      const Multivector a = sampling::random_multivector(rng, small_spec(), 2);
      const Multivector b = sampling::random_multivector(rng, small_spec(), 2);
      const Multivector c = sampling::random_multivector(rng, small_spec(), 2);
      o.require(star(star(a, b, kind), c, kind) == star(a, star(b, c, kind), kind),
                "associativity " + std::string(product_tag(p)));
      o.require(star(one, a, kind) == a && star(a, one, kind) == a, "unit " + std::string(product_tag(p)));
    }
  }
  for (int k = 0; k < 200; ++k) {
    const PhasePoly f = sampling::random_poly(rng, small_spec()), g = sampling::random_poly(rng, small_spec());
    o.require(hbar_set_zero(moyal4_star(Multivector(f), Multivector(g))) == Multivector(f * g), "factorization");
  }
  if (o.ok) o.detail = "4 products x 200 triples associative, unit, hb->0 factorization";
  return o;
}

Outcome classical_limit() {
  Outcome o;
  sampling::Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    const PhasePoly f = sampling::random_poly(rng, small_spec(4)), g = sampling::random_poly(rng, small_spec(4));
    const Multivector c = star_commutator(Multivector(f), Multivector(g), moyal4_kind());
    o.require(hbar_set_zero(divide_by_ihbar(c)) == Multivector(oracle::poisson_by_monomials(f, g)), f.str() + " , " + g.str());
  }
  if (o.ok) o.detail = "100 pairs of degree <= 4, exact";
  return o;
}

Outcome kinetic_and_spin() {
  Outcome o;
  sampling::Rng rng(10);
  std::vector<std::pair<Potential, Rational>> cases{{homogeneous_b_potential(Rational(1)), Rational(1)}};
  for (int k = 0; k < 20; ++k) cases.emplace_back(random_potential(rng, 1 + k % 2), sampling::random_rational(rng, 4));
  for (const auto& [a, e] : cases) {
    const auto table = kinetic_commutator(a, e);
    const auto f = field_tensor(a);
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        o.require(table[mu][nu] == Multivector(f[mu][nu].scaled(ScalarH::i_hbar() * ScalarH(e))), "commutator");
      }
    }
  }
  const Rational e(1), mass(1), b3(1);
  const Multivector expect = Multivector::blade(Blade::from_indices({1, 2}))
                                 .scaled(ScalarH(ComplexQ(Rational(0), e * b3 / (2 * mass)), 1));
  const auto [wp, wm] = magnetic_spin_eigenfunctions();
  for (Metric m : kMetrics) {
    o.require(grade_project(spin_hamiltonian(homogeneous_b_potential(b3), e, mass, m), 2) == expect, "spin term");
    o.require(clifford_star(magnetic_spin_operator(), wp, m) == wp, "W_+ eigen");
    o.require(clifford_star(magnetic_spin_operator(), wm, m) == -wm, "W_- eigen");
  }
  if (o.ok) o.detail = "B_3 + 20 random potentials; spin term i(e hb/2m)B_3 g1g2; W_+- eigen";
  return o;
}

Outcome schrodinger() {
  Outcome o;
  const int order = 8;
  const auto k = free_hamiltonian(Rational(1)).k;
  const auto r = schrodinger_residual(k, order);
  for (int n = 0; n < order; ++n) o.require(r[static_cast<std::size_t>(n)].is_zero(), "order " + std::to_string(n));
  if (o.ok) o.detail = "orders 0..7 vanish at N = 8";
  return o;
}

double drift_at(double step) {
  const auto h = charged_hamiltonian(Rational(1), Rational(1), homogeneous_b_potential(Rational(1)));
  const Trajectory t = integrate(h, {0, 0, 0, 0}, {-1.25, 0.75, 0, 0}, 10 * M_PI, step);
  return std::abs(t.samples.back().pi2_drift);
}

Outcome classical_dynamics() {
  Outcome o;
  sampling::Rng rng(12);
  for (Metric m : kMetrics) {
    o.require(lorentz_force_residual(charged_hamiltonian(Rational(1), Rational(1), homogeneous_b_potential(Rational(1)), m)).is_zero(),
              "Lorentz force (B_3)");
    for (int k = 0; k < 5; ++k) {
      o.require(lorentz_force_residual(charged_hamiltonian(Rational(2), Rational(3), random_potential(rng, 2), m)).is_zero(),
                "Lorentz force (random A)");
    }
  }
  // free particle: q^mu(s) = q^mu(0) + eta^{mu mu} p_mu s / m
  const Metric sm = Metric::standard();
  const std::array<double, 4> q0{0.5, -1.0, 2.0, 0.0}, p0{1.25, 0.0, 0.0, -0.75};
  const Trajectory free = integrate(free_hamiltonian(Rational(1), sm), q0, p0, 10.0, 1e-2);
  double free_err = 0.0;
  for (const auto& smp : free.samples) {
    for (int mu = 0; mu < 4; ++mu) free_err = std::max(free_err, std::abs(smp.q[mu] - (q0[mu] + sm.diag(mu) * p0[mu] * smp.s)));
  }
  o.require(free_err < 1e-12, "free particle");

  const auto h = charged_hamiltonian(Rational(1), Rational(1), homogeneous_b_potential(Rational(1)));
  const std::array<double, 4> cq{0, 0, 0, 0}, cp{-1.25, 0.75, 0, 0};
  const Trajectory cyc = integrate(h, cq, cp, 10 * M_PI, 1e-3);
  double circle_err = 0.0, drift = 0.0;
  for (const auto& smp : cyc.samples) {
    const auto exact = oracle::cyclotron(cq, cp, 1.0, 1.0, 1.0, -1.0, 1.0, smp.s);
    for (int k = 0; k < 4; ++k) circle_err = std::max({circle_err, std::abs(exact.q[k] - smp.q[k]), std::abs(exact.p[k] - smp.p[k])});
    drift = std::max(drift, std::abs(smp.pi2_drift));
  }
  o.require(circle_err < 1e-6, "cyclotron circle");
  o.require(drift < 1e-8, "pi^2 drift");
  const double d1 = drift_at(0.2), d2 = drift_at(0.1), d3 = drift_at(0.05);
  const double order = std::min(std::log2(d1 / d2), std::log2(d2 / d3));
  o.require(order >= 3.7, "drift convergence order");
  std::ostringstream os;
  os << std::scientific << std::setprecision(1) << "free " << free_err << ", circle " << circle_err << ", drift " << drift
     << std::fixed << std::setprecision(2) << ", order " << order;
  o.detail = o.ok ? os.str() : o.detail + "; " + os.str();
  return o;
}

Outcome poisson_laws() {
  Outcome o;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      o.require(poisson_bracket(PhasePoly::q(mu), PhasePoly::p(nu)) == PhasePoly(mu == nu ? 1L : 0L), "{q,p}");
      o.require(poisson_bracket(PhasePoly::q(mu), PhasePoly::q(nu)).is_zero(), "{q,q}");
      o.require(poisson_bracket(PhasePoly::p(mu), PhasePoly::p(nu)).is_zero(), "{p,p}");
    }
  }
  sampling::Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const PhasePoly f = sampling::random_poly(rng), g = sampling::random_poly(rng), h = sampling::random_poly(rng);
    const PhasePoly jac = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                          poisson_bracket(h, poisson_bracket(f, g));
    o.require(jac.is_zero(), "Jacobi");
    o.require(poisson_bracket(f, g) == oracle::poisson_by_monomials(f, g), "bracket vs oracle");
  }
  if (o.ok) o.detail = "canonical relations exact; Jacobi on 100 triples";
  return o;
}

Outcome cli_checks() {
  Outcome o;
  std::ifstream in(std::string(STARPROD_TEST_DATA) + "/corpus.txt");
  int count = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    ++count;
    try {
      const std::string once = expr::evaluate_mv(line).str();
      o.require(expr::evaluate_mv(once).str() == once, "round trip: " + line);
      const expr::NodePtr tree = expr::parse(line);
      o.require(expr::same_tree(tree, expr::parse(expr::to_source(tree))), "reprint: " + line);
    } catch (const Error& e) {
      o.require(false, line + ": " + e.what());
    }
  }
  o.require(count == 50, "corpus size " + std::to_string(count));

  const std::string cmd = std::string("'") + STARPROD_CLI + "' verify all 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (pipe != nullptr) {
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  }
  const int raw = pipe != nullptr ? pclose(pipe) : -1;
  o.require(raw != -1 && WIFEXITED(raw) && WEXITSTATUS(raw) == 0, "verify all exit status");
  std::istringstream lines(out);
  int labeled = 0;
  for (std::string l; std::getline(lines, l);) {
    if (l.rfind("  PASS  ", 0) == 0) {
      o.require(l.size() > 8 && l[8] != ' ', "unlabeled identity");
      ++labeled;
    }
    o.require(l.rfind("  FAIL  ", 0) != 0, "verify all: " + l);
  }
  o.require(labeled > 0, "no identities reported");
  if (o.ok) o.detail = "50 expressions round-trip; verify all exits 0 with " + std::to_string(labeled) + " labeled identities";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"Clifford relations {g_m, g_n}_C = 2 eta_mn", 1, clifford_relations},
      {"mass shell H_D *_MC H_D = p^2 + m^2", 1, mass_shell},
      {"Dirac Wigner functions at (3,4,5), (5,12,13), (8,15,17)", 5, dirac_wigner},
      {"gamma-matrix oracle for clifford_star", 10, gamma_oracle},
      {"passive Lorentz algebra", 5, passive_algebra},
      {"active Lorentz and Poincare algebras", 5, active_and_poincare},
      {"finite boost, metric preservation, passive/active", 5, finite_boost},
      {"star-product laws", 30, star_laws},
      {"classical limit of the Moyal commutator", 10, classical_limit},
      {"kinetic momentum commutator, spin term, spin eigenfunctions", 10, kinetic_and_spin},
      {"proper-time Schroedinger residual", 5, schrodinger},
      {"classical dynamics and RK4 trajectories", 60, classical_dynamics},
      {"Poisson bracket laws", 10, poisson_laws},
      {"CLI round trip and verify all", 60, cli_checks},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& c = criteria[k];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::cout << "AC" << std::setw(2) << std::setfill('0') << k + 1 << std::setfill(' ') << (pass ? "  PASS  " : "  FAIL  ")
              << c.name << "  [" << o.detail << (in_time ? "" : "; over time limit") << "]  " << std::fixed
              << std::setprecision(3) << secs << " s / " << std::setprecision(0) << c.limit_s << " s\n";
    std::cout.unsetf(std::ios::floatfield);
  }
  std::cout << (failed == 0 ? "all 14 criteria pass\n" : std::to_string(failed) + " of 14 criteria FAILED\n");
  return failed == 0 ? 0 : 1;
}
