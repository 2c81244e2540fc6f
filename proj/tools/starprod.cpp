// starprod: command-line front end for the star-product engine.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 evaluation error.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starprod/io.hpp"
#include "starprod/suites.hpp"

namespace {

using namespace starprod;
using io::json;
using io::render;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational from "3", "-3/4" or a plain decimal such as "0.25".
Rational exact_number(const std::string& text, const std::string& what) {
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rational(text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-") throw DomainError("empty");
    Rational r = parse_rational(digits);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(text.size() - dot - 1));
    r /= scale;
    return r;
  } catch (const Error&) {
    throw UsageError(what + ": '" + text + "' is not an exact number");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Vec3Q rational_vec3(const std::string& text, const std::string& what) {
  const auto parts = split_list(text);
  if (parts.size() != 3) throw UsageError(what + " needs three comma-separated components");
  return {exact_number(parts[0], what), exact_number(parts[1], what), exact_number(parts[2], what)};
}

std::array<double, 4> double_vec4(const std::string& text, const std::string& what) {
  const auto parts = split_list(text);
  if (parts.size() != 4) throw UsageError(what + " needs four comma-separated components");
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) {
    try {
      std::size_t used = 0;
      out[k] = std::stod(parts[k], &used);
      if (used != parts[k].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + parts[k] + "' is not a number");
    }
  }
  return out;
}

Metric metric_flag(const std::string& text) {
  try {
    return parse_metric(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct Globals {
  std::string format = "text";
  std::optional<std::string> metric;
  int order = 8;
  std::string product = "M4";

  [[nodiscard]] expr::SessionConfig config() const {
    expr::SessionConfig cfg;
    try {
      cfg.format = io::parse_format(format);
      cfg.product = parse_product(product);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (metric) cfg.metric = metric_flag(*metric);
    if (order < 0 || order > 64) throw UsageError("--order must lie in 0..64");
    cfg.order = order;
    return cfg;
  }
  [[nodiscard]] bool json_out() const { return format == "json"; }
};

int report_status(const std::vector<CheckReport>& reports, const Globals& g) {
  std::cout << render(reports, g.config().format) << (g.json_out() ? "\n" : "");
  return all_passed(reports) ? io::kOk : io::kVerificationFailed;
}

// ---------------------------------------------------------------------------
// dirac

struct DiracOptions {
  std::string mass = "3";
  std::string momentum = "0,0,4";
  std::optional<std::string> axis;
  std::string metric = "standard";
  bool point_given = false;
};

/// A rational unit axis orthogonal to p, preferring coordinate axes.
SpinAxis default_axis(const Vec3Q& p) {
  for (int i = 0; i < 3; ++i) {
    if (sgn(p[i]) == 0) {
      Vec3Q u{Rational(0), Rational(0), Rational(0)};
      u[i] = 1;
      return make_spin_axis(u);
    }
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    auto norm = exact_sqrt(p[i] * p[i] + p[j] * p[j]);
    if (norm) {
      Vec3Q u{Rational(0), Rational(0), Rational(0)};
      u[i] = p[j] / *norm;
      u[j] = -p[i] / *norm;
      return make_spin_axis(u);
    }
  }
  throw UsageError("no rational spin axis orthogonal to the momentum; pass --axis");
}

std::pair<DiracSystem, SpinAxis> dirac_point(const DiracOptions& o) {
  const Metric metric = metric_flag(o.metric);
  const Vec3Q p = rational_vec3(o.momentum, "--momentum");
  DiracSystem sys = make_dirac_system(exact_number(o.mass, "--mass"), p, metric);
  SpinAxis axis = o.axis ? make_spin_axis(rational_vec3(*o.axis, "--axis")) : default_axis(p);
  if (dot(axis.u, p) != 0) throw DomainError("--axis must be orthogonal to --momentum");
  return {sys, axis};
}

int run_dirac(const DiracOptions& o, const Globals& g) {
  const auto [sys, axis] = dirac_point(o);
  const Metric m = sys.metric;
  const Multivector h = dirac_hamiltonian(sys);
  const ProjectorSplit e = energy_projectors(sys);
  const ProjectorSplit s = spin_projectors(axis, m);
  const CombinedProjectors c = combined_projectors(sys, axis);
  const std::array<std::string, 2> es{"+E", "-E"}, ss{"+1/2", "-1/2"};
  if (g.json_out()) {
    json out{{"metric", std::string(m.name())},
             {"energy", to_string(sys.energy)},
             {"hamiltonian", io::to_json(h)},
             {"spin_operator", io::to_json(spin_operator(axis, m))},
             {"pi_+E", io::to_json(e.pi_plus)},
             {"pi_-E", io::to_json(e.pi_minus)},
             {"pi_+1/2", io::to_json(s.pi_plus)},
             {"pi_-1/2", io::to_json(s.pi_minus)}};
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) out["pi_(" + es[a] + "," + ss[b] + ")"] = io::to_json(c.pi[a][b]);
    }
    std::cout << out.dump() << "\n";
    return io::kOk;
  }
  std::cout << "metric = " << m.name() << "\n"
            << "E = " << to_string(sys.energy) << "\n"
            << "H_D = " << h.str() << "\n"
            << "S_u = " << spin_operator(axis, m).str() << "\n"
            << "pi_+E = " << e.pi_plus.str() << "\n"
            << "pi_-E = " << e.pi_minus.str() << "\n"
            << "pi_+1/2 = " << s.pi_plus.str() << "\n"
            << "pi_-1/2 = " << s.pi_minus.str() << "\n";
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) std::cout << "pi_(" << es[a] << "," << ss[b] << ") = " << c.pi[a][b].str() << "\n";
  }
  return io::kOk;
}

int run_dirac_verify(const DiracOptions& o, const Globals& g) {
  if (!o.point_given) return report_status(dirac_suite(g.order), g);
  const auto [sys, axis] = dirac_point(o);
  return report_status({dirac_matrix_relations(sys.metric), dirac_point_report(sys, axis, g.order)}, g);
}

// ---------------------------------------------------------------------------
// lorentz

std::vector<Metric> metrics_or_both(const Globals& g) {
  if (g.metric) return {metric_flag(*g.metric)};
  return {Metric::nonstandard(), Metric::standard()};
}

struct BoostOptions {
  double rapidity = 0.0;
  std::string vector = "1,0,0,0";
  int axis = 1;
};

int run_boost(const BoostOptions& o, const Globals& g) {
  const Metric m = g.metric ? metric_flag(*g.metric) : Metric::nonstandard();
  if (o.axis < 1 || o.axis > 3) throw UsageError("--axis must be 1, 2 or 3");
  const Vec4d x = double_vec4(o.vector, "--vector");
  const Eigen::Matrix4d lam = active_lorentz_matrix(boost_parameters(o.rapidity, o.axis, m), m);
  const Vec4d y = transform_vector(lam, x);
  if (g.json_out()) {
    json mat = json::array();
    for (int r = 0; r < 4; ++r) mat.push_back({lam(r, 0), lam(r, 1), lam(r, 2), lam(r, 3)});
    std::cout << json{{"metric", std::string(m.name())}, {"rapidity", o.rapidity}, {"axis", o.axis},
                      {"lambda", mat}, {"input", x}, {"output", y}}
                     .dump()
              << "\n";
    return io::kOk;
  }
  std::cout << std::setprecision(17) << "metric = " << m.name() << "\n"
            << "Lambda (rapidity " << o.rapidity << ", axis " << o.axis << "):\n";
  for (int r = 0; r < 4; ++r) {
    std::cout << "  ";
    for (int c = 0; c < 4; ++c) std::cout << std::setw(24) << lam(r, c);
    std::cout << "\n";
  }
  std::cout << "q' =";
  for (double v : y) std::cout << " " << v;
  std::cout << "\n";
  return io::kOk;
}

// ---------------------------------------------------------------------------
// mech

struct FieldOptions {
  std::string field = "homogeneous-b";
  std::string b3 = "1";
  std::string e = "1";
  std::string m = "1";
};

CovariantHamiltonian field_hamiltonian(const FieldOptions& o, Metric metric) {
  const Rational mass = exact_number(o.m, "--m");
  if (sgn(mass) <= 0) throw UsageError("--m must be positive");
  if (o.field == "free") return free_hamiltonian(mass, metric);
  if (o.field == "homogeneous-b") {
    return charged_hamiltonian(exact_number(o.e, "--e"), mass, homogeneous_b_potential(exact_number(o.b3, "--b3")),
                               metric);
  }
  throw UsageError("unknown --field '" + o.field + "' (expected free|homogeneous-b)");
}

PhasePoly scalar_poly(const Multivector& m, const std::string& what) {
  if (!m.is_scalar()) throw DomainError(what + " must be a grade-0 phase-space function");
  return m.component(Blade::scalar());
}

int run_hamilton(const FieldOptions& o, const Globals& g) {
  const Metric metric = g.metric ? metric_flag(*g.metric) : Metric::nonstandard();
  const CovariantHamiltonian h = field_hamiltonian(o, metric);
  const auto rhs = hamilton_rhs(h);
  const LorentzForceResidual res = lorentz_force_residual(h);
  if (g.json_out()) {
    json eqs = json::object();
    for (int mu = 0; mu < 4; ++mu) {
      eqs["d" + std::string(kVarNames[mu]) + "/ds"] = io::to_json(Multivector(rhs[mu]));
      eqs["d" + std::string(kVarNames[4 + mu]) + "/ds"] = io::to_json(Multivector(rhs[4 + mu]));
    }
    std::cout << json{{"metric", std::string(metric.name())}, {"K", io::to_json(h.k)}, {"equations", eqs},
                      {"lorentz_force_residual_zero", res.is_zero()}}
                     .dump()
              << "\n";
  } else {
    std::cout << "K = " << h.k.str() << "\n";
    for (int mu = 0; mu < 4; ++mu) std::cout << "d" << kVarNames[mu] << "/ds = " << rhs[mu].str() << "\n";
    for (int mu = 0; mu < 4; ++mu) std::cout << "d" << kVarNames[4 + mu] << "/ds = " << rhs[4 + mu].str() << "\n";
    std::cout << "Lorentz force residual: " << (res.is_zero() ? "0" : "NONZERO") << "\n";
  }
  return res.is_zero() ? io::kOk : io::kVerificationFailed;
}

struct SimulateOptions {
  FieldOptions field;
  double step = 1e-3;
  double smax = 31.4159;
  std::string q = "0,0,0,0";
  std::optional<std::string> p;
  std::optional<std::string> out;
};

int run_simulate(const SimulateOptions& o, const Globals& g) {
  const Metric metric = g.metric ? metric_flag(*g.metric) : Metric::nonstandard();
  const CovariantHamiltonian h = field_hamiltonian(o.field, metric);
  if (!(o.step > 0.0) || !(o.smax >= 0.0)) throw UsageError("--step must be positive and --smax non-negative");
  const std::array<double, 4> q0 = double_vec4(o.q, "--q");
  std::array<double, 4> p0{};
  if (o.p) {
    p0 = double_vec4(*o.p, "--p");
  } else {
    // on-shell start with spatial momentum 3/4 along the 1-axis; q^0 runs forward
    const double mass = exact_number(o.field.m, "--m").get_d();
    const double energy = std::sqrt(mass * mass + 0.5625);
    p0 = {metric.diag(0) * energy, metric.diag(1) * 0.75, 0.0, 0.0};
  }

  std::ofstream file;
  if (o.out) {
    file.open(*o.out);
    if (!file) throw UsageError("cannot write '" + *o.out + "'");
  }
  std::ostream& csv = o.out ? static_cast<std::ostream&>(file) : std::cout;
  auto write = [&](const Trajectory& t) {
    csv << "s,q0,q1,q2,q3,p0,p1,p2,p3,pi2_drift\n" << std::setprecision(17);
    for (const auto& smp : t.samples) {
      csv << smp.s;
      for (double v : smp.q) csv << "," << v;
      for (double v : smp.p) csv << "," << v;
      csv << "," << smp.pi2_drift << "\n";
    }
  };

  Trajectory traj;
  int status = io::kOk;
  try {
    traj = integrate(h, q0, p0, o.smax, o.step);
  } catch (const IntegrationDivergedError& e) {
    std::cerr << "starprod: " << e.what() << "\n";
    traj = e.partial();
    status = io::kEvalError;
  }
  write(traj);
  if (o.out) {
    double worst = 0.0;
    for (const auto& smp : traj.samples) worst = std::max(worst, std::abs(smp.pi2_drift));
    const auto& last = traj.samples.back();
    if (g.json_out()) {
      std::cout << json{{"samples", traj.samples.size()}, {"step", o.step}, {"s_final", last.s},
                        {"max_abs_pi2_drift", worst}, {"out", *o.out}}
                       .dump()
                << "\n";
    } else {
      std::cout << "wrote " << traj.samples.size() << " samples to " << *o.out << "\n"
                << "s_final = " << last.s << ", max |pi2 drift| = " << worst << "\n";
    }
  }
  return status;
}

// ---------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_eval(const std::vector<std::string>& exprs, const std::optional<std::string>& file, const Globals& g) {
  io::Session session(g.config(), std::cout, std::cerr);
  if (file) {
    std::ifstream in(*file);
    if (!in) throw UsageError("cannot open '" + *file + "'");
    return session.run(in, *file, true);
  }
  if (exprs.empty()) throw UsageError("eval needs an expression or --file");
  std::string joined;
  for (const auto& e : exprs) joined += (joined.empty() ? "" : " ") + e;
  // JSON input is echoed back in canonical form
  if (joined.find_first_not_of(" \t") != std::string::npos && joined[joined.find_first_not_of(" \t")] == '{') {
    std::cout << render(io::from_json_text(joined), g.config().format) << "\n";
    return io::kOk;
  }
  return session.execute(joined, 1, "<command line>");
}

int run_exp(const std::string& text, const Globals& g) {
  const expr::SessionConfig cfg = g.config();
  const Multivector k = io::read_value(text, cfg);
  const TruncatedExp ex = star_exp_truncated(k, cfg.order, cfg.kind());
  if (g.json_out()) {
    json coeffs = json::array();
    for (const auto& c : ex.coefficients) coeffs.push_back(io::to_json(c));
    std::cout << json{{"product", std::string(product_tag(cfg.product))}, {"order", ex.order},
                      {"coefficients", coeffs}, {"series", io::to_json(ex.as_series())}}
                     .dump()
              << "\n";
  } else {
    for (std::size_t n = 0; n < ex.coefficients.size(); ++n) {
      std::cout << "c" << n << " = " << ex.coefficients[n].str() << "\n";
    }
  }
  return io::kOk;
}

int run_split(const std::string& text, const Globals& g) {
  const expr::SessionConfig cfg = g.config();
  const Multivector a = io::read_value(text, cfg);
  std::cout << render(expr::Value{expr::SplitValue{cfg.kind(), projector_split(a, cfg.kind())}}, cfg.format) << "\n";
  return io::kOk;
}

int run_eigencheck(const std::string& ht, const std::string& wt, const std::string& lt, const Globals& g) {
  const expr::SessionConfig cfg = g.config();
  const Multivector h = io::read_value(ht, cfg);
  const Multivector w = io::read_value(wt, cfg);
  const Multivector l = io::read_value(lt, cfg);
  if (!l.is_scalar() || !l.has_constant_coefficients()) throw DomainError("the eigenvalue must be a constant scalar");
  const ScalarH lambda = l.component(Blade::scalar()).constant_term();
  const expr::EigenValue v{star_eigencheck(h, w, lambda, cfg.kind()), star(h, w, cfg.kind()) - w.scaled(lambda)};
  std::cout << render(expr::Value{v}, cfg.format) << "\n";
  return v.holds ? io::kOk : io::kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starprod: exact star products, Wigner projectors, Lorentz algebra checks and proper-time mechanics"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "output format: text|json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--metric", g.metric, "metric signature: standard|nonstandard");
  app.add_option("--order", g.order, "truncation order for star exponentials");
  app.add_option("--product", g.product, "default product kind: C|M3|M4|MC");

  std::function<int()> action;

  auto* eval = app.add_subcommand("eval", "evaluate expressions (or multivector JSON)");
  std::vector<std::string> exprs;
  std::optional<std::string> eval_file;
  eval->add_option("expr", exprs, "expression");
  eval->add_option("--file", eval_file, "script file, one expression or :command per line");
  eval->callback([&] { action = [&] { return run_eval(exprs, eval_file, g); }; });

  auto* repl = app.add_subcommand("repl", "interactive session reading standard input");
  repl->callback([&] {
    action = [&] {
      io::Session session(g.config(), std::cout, std::cerr);
      session.run(std::cin, "<stdin>", false, isatty(STDIN_FILENO) != 0);
      return static_cast<int>(io::kOk);
    };
  });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "dirac|lorentz|poincare|classical-limit|spin|all")->required();
  verify->callback([&] { action = [&] { return report_status(run_suite(suite, g.order), g); }; });

  auto* dirac = app.add_subcommand("dirac", "Dirac Hamiltonian and Wigner projectors at a mass-shell point");
  DiracOptions dopt;
  auto add_point_flags = [&](CLI::App* cmd) {
    cmd->add_option("--mass", dopt.mass, "rest mass (exact)");
    cmd->add_option("--momentum", dopt.momentum, "p^1,p^2,p^3 (exact)");
    cmd->add_option("--axis", dopt.axis, "unit spin axis orthogonal to the momentum");
    cmd->add_option("--metric", dopt.metric, "metric signature (default standard)");
  };
  add_point_flags(dirac);
  auto* dverify = dirac->add_subcommand("verify", "full Dirac identity battery");
  add_point_flags(dverify);
  dirac->callback([&] {
    dopt.point_given = dirac->count("--mass") + dirac->count("--momentum") + dverify->count("--mass") +
                           dverify->count("--momentum") >
                       0;
    if (dverify->parsed()) action = [&] { return run_dirac_verify(dopt, g); };
    else action = [&] { return run_dirac(dopt, g); };
  });

  auto* lorentz = app.add_subcommand("lorentz", "Lorentz and Poincare algebra");
  lorentz->require_subcommand(1);
  lorentz->add_subcommand("passive-check", "passive bivector algebra")->callback([&] {
    action = [&] {
      std::vector<CheckReport> r;
      for (Metric m : metrics_or_both(g)) r.push_back(passive_algebra_check(m));
      return report_status(r, g);
    };
  });
  lorentz->add_subcommand("active-check", "active Moyal generator algebra")->callback([&] {
    action = [&] {
      std::vector<CheckReport> r;
      for (Metric m : metrics_or_both(g)) r.push_back(active_algebra_check(m));
      return report_status(r, g);
    };
  });
  lorentz->add_subcommand("poincare-check", "Poincare extension")->callback([&] {
    action = [&] {
      std::vector<CheckReport> r;
      for (Metric m : metrics_or_both(g)) r.push_back(poincare_check(m));
      return report_status(r, g);
    };
  });
  BoostOptions bopt;
  auto* boost = lorentz->add_subcommand("boost", "finite active boost of a four-vector");
  boost->add_option("--rapidity", bopt.rapidity, "rapidity")->required();
  boost->add_option("--vector", bopt.vector, "w,x,y,z");
  boost->add_option("--axis", bopt.axis, "spatial axis 1..3");
  boost->callback([&] { action = [&] { return run_boost(bopt, g); }; });

  auto* mech = app.add_subcommand("mech", "proper-time classical mechanics");
  mech->require_subcommand(1);
  std::string fa, ga;
  auto* bracket = mech->add_subcommand("bracket", "four-space Poisson bracket {f,g}");
  bracket->add_option("f", fa)->required();
  bracket->add_option("g", ga)->required();
  bracket->callback([&] {
    action = [&] {
      const auto cfg = g.config();
      const Multivector f = io::read_value(fa, cfg);
      const Multivector gg = io::read_value(ga, cfg);
      std::cout << render(expr::poisson_bracket(f, gg), cfg.format) << "\n";
      return static_cast<int>(io::kOk);
    };
  });
  auto* limit = mech->add_subcommand("limit-check", "check lim (1/i hb)[f,g]_M = {f,g}");
  limit->add_option("f", fa)->required();
  limit->add_option("g", ga)->required();
  limit->callback([&] {
    action = [&] {
      const auto cfg = g.config();
      const PhasePoly f = scalar_poly(io::read_value(fa, cfg), "f");
      const PhasePoly gg = scalar_poly(io::read_value(ga, cfg), "g");
      const bool holds = classical_limit_check(f, gg);
      if (g.json_out()) {
        std::cout << json{{"holds", holds}, {"poisson_bracket", io::to_json(Multivector(poisson_bracket(f, gg)))}}.dump()
                  << "\n";
      } else {
        std::cout << "{f,g} = " << poisson_bracket(f, gg).str() << "\n"
                  << (holds ? "classical limit holds" : "classical limit FAILS") << "\n";
      }
      return holds ? io::kOk : io::kVerificationFailed;
    };
  });
  FieldOptions hopt;
  auto add_field_flags = [](CLI::App* cmd, FieldOptions& o) {
    cmd->add_option("--field", o.field, "free|homogeneous-b");
    cmd->add_option("--b3", o.b3, "field strength B_3 (exact)");
    cmd->add_option("--e", o.e, "charge (exact)");
    cmd->add_option("--m", o.m, "mass (exact)");
  };
  auto* hamilton = mech->add_subcommand("hamilton", "Hamiltonian, equations of motion and Lorentz force check");
  add_field_flags(hamilton, hopt);
  hamilton->callback([&] { action = [&] { return run_hamilton(hopt, g); }; });
  SimulateOptions sopt;
  auto* simulate = mech->add_subcommand("simulate", "RK4 trajectory to CSV");
  add_field_flags(simulate, sopt.field);
  simulate->add_option("--step", sopt.step, "fixed step in s");
  simulate->add_option("--smax", sopt.smax, "final value of s");
  simulate->add_option("--q", sopt.q, "initial q^0,q^1,q^2,q^3");
  simulate->add_option("--p", sopt.p, "initial p_0,p_1,p_2,p_3");
  simulate->add_option("--out", sopt.out, "CSV output path (default standard output)");
  simulate->callback([&] { action = [&] { return run_simulate(sopt, g); }; });

  std::string exp_text;
  auto* exp = app.add_subcommand("exp", "truncated star exponential Exp(-i s K/hb)");
  exp->add_option("K", exp_text)->required();
  exp->callback([&] { action = [&] { return run_exp(exp_text, g); }; });

  std::string split_text;
  auto* split = app.add_subcommand("split", "Wigner projectors of A with A*A a constant scalar");
  split->add_option("A", split_text)->required();
  split->callback([&] { action = [&] { return run_split(split_text, g); }; });

  std::string eh, ew, el;
  auto* eig = app.add_subcommand("eigencheck", "check H * W = lambda W");
  eig->add_option("H", eh)->required();
  eig->add_option("W", ew)->required();
  eig->add_option("lambda", el)->required();
  eig->callback([&] { action = [&] { return run_eigencheck(eh, ew, el, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return io::kUsageError;
  }

  try {
    return action ? action() : io::kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "starprod: " << e.what() << "\n";
    return io::kUsageError;
  } catch (const UnknownSuiteError& e) {
    std::cerr << "starprod: " << e.what() << "\n" << app.help();
    return io::kUsageError;
  } catch (const expr::ParseError& e) {
    std::cerr << "starprod: parse error: " << e.what() << "\n";
    return io::kUsageError;
  } catch (const io::FormatError& e) {
    std::cerr << "starprod: bad input: " << e.what() << "\n";
    return io::kUsageError;
  } catch (const Error& e) {
    std::cerr << "starprod: evaluation error: " << e.what() << "\n";
    return io::kEvalError;
  }
}
