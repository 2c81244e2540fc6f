#pragma once

// Reference computations that share no code path with the engine: explicit
// Dirac matrices, the sign-count rule for blade products, a brute-force
// bidifferential Moyal series, and closed-form trajectories.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "starprod/multivector.hpp"
#include "starprod/metric.hpp"

namespace oracle {

using starprod::Blade;
using starprod::ComplexQ;
using starprod::Metric;
using starprod::Multivector;
using starprod::PhasePoly;
using starprod::Rational;
using starprod::ScalarH;

// ---------------------------------------------------------------------------
// 4x4 matrices over Gaussian rationals

struct Mat {
  std::array<std::array<ComplexQ, 4>, 4> a{};

  static Mat identity() {
    Mat m;
    for (int k = 0; k < 4; ++k) m.a[k][k] = ComplexQ(Rational(1));
    return m;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat out;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        ComplexQ acc;
        for (int k = 0; k < 4; ++k) acc += x.a[r][k] * y.a[k][c];
        out.a[r][c] = acc;
      }
    }
    return out;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat out;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) out.a[r][c] = x.a[r][c] + y.a[r][c];
    }
    return out;
  }
  Mat scaled(const ComplexQ& z) const {
    Mat out;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) out.a[r][c] = a[r][c] * z;
    }
    return out;
  }
  friend bool operator==(const Mat& x, const Mat& y) { return x.a == y.a; }
};

/// Dirac representation for diag(+,-,-,-); the other signature uses i*gamma.
inline Mat gamma_matrix(int mu, const Metric& metric) {
  const ComplexQ one(Rational(1)), zero, i(Rational(0), Rational(1));
  Mat g;
  auto set = [&](std::array<std::array<ComplexQ, 4>, 4> v) { g.a = v; };
  const ComplexQ m1 = -one, mi = -i;
  switch (mu) {
    case 0: set({{{one, zero, zero, zero}, {zero, one, zero, zero}, {zero, zero, m1, zero}, {zero, zero, zero, m1}}}); break;
    case 1: set({{{zero, zero, zero, one}, {zero, zero, one, zero}, {zero, m1, zero, zero}, {m1, zero, zero, zero}}}); break;
    case 2: set({{{zero, zero, zero, mi}, {zero, zero, i, zero}, {zero, i, zero, zero}, {mi, zero, zero, zero}}}); break;
    default: set({{{zero, zero, one, zero}, {zero, zero, zero, m1}, {m1, zero, zero, zero}, {zero, one, zero, zero}}}); break;
  }
  if (metric.signature() == starprod::Signature::nonstandard) g = g.scaled(i);
  return g;
}

inline Mat blade_matrix(Blade b, const Metric& metric) {
  Mat m = Mat::identity();
  for (int mu : b.indices()) m = m * gamma_matrix(mu, metric);
  return m;
}

/// Matrix image of a multivector whose coefficients are hbar-free constants.
inline Mat to_matrix(const Multivector& x, const Metric& metric) {
  Mat out;
  for (const auto& [b, poly] : x.components()) {
    const ScalarH c = poly.constant_term();
    if (!poly.is_constant() || c.max_hbar_power() != 0 || c.min_hbar_power() != 0) {
      throw std::runtime_error("matrix oracle takes hbar-free constant coefficients");
    }
    out = out + blade_matrix(b, metric).scaled(c.coefficient(0));
  }
  return out;
}

// ---------------------------------------------------------------------------
// blade products by counting transpositions

/// e_A e_B = sign * prod_{k in A and B} eta_kk * e_(A xor B).
inline Multivector blade_product(Blade a, Blade b, const Metric& metric) {
  std::vector<int> word = a.indices();
  for (int k : b.indices()) word.push_back(k);
  int sign = 1;
  // bubble sort, one sign flip per swap of distinct generators
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
      }
    }
  }
  std::vector<int> reduced;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k + 1 < word.size() && word[k] == word[k + 1]) {
      sign *= metric.diag(word[k]);
      ++k;
    } else {
      reduced.push_back(word[k]);
    }
  }
  return Multivector::blade(Blade::from_indices(reduced)).scaled(ScalarH(static_cast<long>(sign)));
}

// ---------------------------------------------------------------------------
// Moyal product as an explicit sum over powers of the Poisson bivector

/// sum_n (i hb/2)^n / n! P^n(f, g), P = sum_mu d_q^mu (x) d_p_mu - d_p_mu (x) d_q^mu,
/// over the pairs mu in [first, last].
inline PhasePoly moyal_by_bidifferential(const PhasePoly& f, const PhasePoly& g, int first = 0, int last = 3) {
  struct Pair {
    PhasePoly left, right;
  };
  std::vector<Pair> level{{f, g}};
  PhasePoly out;
  ScalarH weight(1L);
  for (int n = 0; !level.empty(); ++n) {
    PhasePoly sum;
    for (const auto& p : level) sum += p.left * p.right;
    out += sum.scaled(weight);
    std::vector<Pair> next;
    for (const auto& p : level) {
      for (int mu = first; mu <= last; ++mu) {
        const auto q = starprod::q_var(mu);
        const auto pv = starprod::p_var(mu);
        PhasePoly a = p.left.partial(q), b = p.right.partial(pv);
        if (!a.is_zero() && !b.is_zero()) next.push_back({a, b});
        PhasePoly c = p.left.partial(pv), d = p.right.partial(q);
        if (!c.is_zero() && !d.is_zero()) next.push_back({-c, d});
      }
    }
    level = std::move(next);
    weight = weight * ScalarH(ComplexQ(Rational(0), Rational(1, 2)) * ComplexQ(Rational(1, n + 1)), 1);
  }
  return out;
}

/// {f,g} = sum_mu df/dq^mu dg/dp_mu - df/dp_mu dg/dq^mu, expanded one pair of
/// monomials at a time with the exponents lowered by hand.
inline PhasePoly poisson_by_monomials(const PhasePoly& f, const PhasePoly& g) {
  PhasePoly out;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (int mu = 0; mu < 4; ++mu) {
        const int q = mu, p = 4 + mu;
        for (int sign : {1, -1}) {
          // sign +1: d_q f * d_p g; sign -1: d_p f * d_q g
          const int df = sign > 0 ? q : p, dg = sign > 0 ? p : q;
          if (ef[df] == 0 || eg[dg] == 0) continue;
          starprod::Exponents e{};
          for (int k = 0; k < starprod::kNumVars; ++k) e[k] = static_cast<std::uint16_t>(ef[k] + eg[k]);
          --e[df];
          --e[dg];
          const long weight = static_cast<long>(sign) * ef[df] * eg[dg];
          out.add_term(e, cf * cg * ScalarH(weight));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// closed-form dynamics

/// Charged particle in A_1 = -B q^2/2, A_2 = B q^1/2 (any metric with
/// spatial sign sigma = eta^{11}); returns (q^mu, p_mu) at parameter s.
struct CyclotronState {
  std::array<double, 4> q{};
  std::array<double, 4> p{};
};

inline CyclotronState cyclotron(const std::array<double, 4>& q0, const std::array<double, 4>& p0, double e,
                                double m, double b, double eta00, double sigma, double s) {
  auto a1 = [&](double q2) { return -b * q2 / 2.0; };
  auto a2 = [&](double q1) { return b * q1 / 2.0; };
  // kinetic momenta pi^i = sigma * pi_i rotate at omega = sigma e B / m
  const double pi1 = p0[1] - e * a1(q0[2]);
  const double pi2 = p0[2] - e * a2(q0[1]);
  const double w = sigma * e * b / m;
  const double c = std::cos(w * s), sn = std::sin(w * s);
  // d pi_1/ds = w pi_2, d pi_2/ds = -w pi_1
  const double k1 = pi1 * c + pi2 * sn;
  const double k2 = -pi1 * sn + pi2 * c;
  CyclotronState out;
  // dq^i/ds = sigma pi_i / m
  out.q[1] = q0[1] + sigma / m * (pi1 * sn - pi2 * (c - 1.0)) / w;
  out.q[2] = q0[2] + sigma / m * (pi2 * sn + pi1 * (c - 1.0)) / w;
  out.q[0] = q0[0] + eta00 * p0[0] / m * s;
  out.q[3] = q0[3] + sigma * p0[3] / m * s;
  out.p[0] = p0[0];
  out.p[3] = p0[3];
  out.p[1] = k1 + e * a1(out.q[2]);
  out.p[2] = k2 + e * a2(out.q[1]);
  return out;
}

}  // namespace oracle
