#pragma once

// Text and JSON forms of values and reports, JSON ingestion, and the
// line-oriented session used by the REPL and by script files.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "starprod/expr.hpp"
#include "starprod/report.hpp"

namespace starprod::io {

using json = nlohmann::ordered_json;
using expr::Format;

class FormatError : public Error {
 public:
  using Error::Error;
};

inline Format parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  throw DomainError("unknown format '" + std::string(text) + "' (expected text|json)");
}

// ---------------------------------------------------------------------------
// JSON

inline json scalar_to_json(const ScalarH& c) {
  json out = json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    out.push_back({{"hb", it->first}, {"re", to_string(it->second.re)}, {"im", to_string(it->second.im)}});
  }
  return out;
}

inline json to_json(const Multivector& m) {
  json terms = json::array();
  for (const auto& [blade, poly] : m.components()) {
    for (const auto& [e, c] : poly.terms()) {
      json exps = json::object();
      for (int k = 0; k < kNumVars; ++k) {
        if (e[k] != 0) exps[std::string(kVarNames[k])] = e[k];
      }
      terms.push_back({{"blade", blade.indices()}, {"coeff", scalar_to_json(c)}, {"exps", exps}});
    }
  }
  return {{"terms", terms}};
}

inline Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw FormatError(std::string("coefficient needs a string '") + key + "'");
  try {
    return parse_rational(j[key].get<std::string>());
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

inline ScalarH scalar_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("'coeff' must be an array");
  ScalarH out;
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("hb") || !t["hb"].is_number_integer()) {
      throw FormatError("each coefficient entry needs an integer 'hb'");
    }
    out.add_term(t["hb"].get<int>(), ComplexQ(rational_field(t, "re"), rational_field(t, "im")));
  }
  return out;
}

inline Multivector from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw FormatError("multivector JSON needs a 'terms' array");
  }
  Multivector out;
  for (const json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("blade") || !t["blade"].is_array()) throw FormatError("term needs a 'blade' array");
    std::vector<int> idx;
    for (const json& b : t["blade"]) {
      if (!b.is_number_integer()) throw FormatError("blade indices must be integers");
      idx.push_back(b.get<int>());
    }
    Blade blade;
    try {
      blade = Blade::from_indices(idx);
    } catch (const DomainError& e) {
      throw FormatError(e.what());
    }
    Exponents e{};
    if (t.contains("exps")) {
      if (!t["exps"].is_object()) throw FormatError("'exps' must be an object");
      for (const auto& [name, power] : t["exps"].items()) {
        auto v = parse_var(name);
        if (!v) throw FormatError("unknown variable '" + name + "'");
        if (!power.is_number_unsigned() || power.get<unsigned>() > 65535) {
          throw FormatError("exponent of " + name + " must be a natural number");
        }
        e[index_of(*v)] = static_cast<std::uint16_t>(power.get<unsigned>());
      }
    }
    out.add(blade, PhasePoly::monomial(e, scalar_from_json(t.contains("coeff") ? t["coeff"] : json::array())));
  }
  return out;
}

inline Multivector from_json_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

inline json to_json(const CheckReport& r) {
  json checks = json::array();
  for (const auto& e : r.entries) checks.push_back({{"label", e.label}, {"passed", e.passed}, {"detail", e.detail}});
  return {{"title", r.title}, {"passed", r.ok()}, {"checks", checks}};
}

inline json to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    ok = ok && r.ok();
  }
  return {{"passed", ok}, {"reports", arr}};
}

// ---------------------------------------------------------------------------
// rendering

inline std::string render(const CheckReport& r, Format f) {
  if (f == Format::json) return to_json(r).dump();
  std::ostringstream os;
  os << "== " << r.title << " ==\n";
  for (const auto& e : r.entries) {
    os << (e.passed ? "  PASS  " : "  FAIL  ") << e.label;
    if (!e.detail.empty()) os << "  [" << e.detail << "]";
    os << "\n";
  }
  return os.str();
}

inline std::string render(const std::vector<CheckReport>& reports, Format f) {
  if (f == Format::json) return to_json(reports).dump();
  std::ostringstream os;
  std::size_t total = 0, failed = 0;
  for (const auto& r : reports) {
    os << render(r, f);
    total += r.entries.size();
    failed += r.failures();
  }
  os << (failed == 0 ? "all " + std::to_string(total) + " identities hold\n"
                     : std::to_string(failed) + " of " + std::to_string(total) + " identities FAILED\n");
  return os.str();
}

inline std::string render(const Multivector& m, Format f) { return f == Format::json ? to_json(m).dump() : m.str(); }

inline std::string render(const expr::Value& v, Format f) {
  if (const auto* m = std::get_if<Multivector>(&v)) return render(*m, f);
  if (const auto* s = std::get_if<expr::SplitValue>(&v)) {
    if (f == Format::json) {
      json j{{"product", std::string(product_tag(s->kind.kind))},
             {"eigenvalue", scalar_to_json(s->split.eigenvalue)},
             {"pi_plus", to_json(s->split.pi_plus)},
             {"pi_minus", to_json(s->split.pi_minus)}};
      return j.dump();
    }
    return "eigenvalue = " + s->split.eigenvalue.str() + "\npi_+ = " + s->split.pi_plus.str() +
           "\npi_- = " + s->split.pi_minus.str();
  }
  const auto& e = std::get<expr::EigenValue>(v);
  if (f == Format::json) return json{{"holds", e.holds}, {"residual", to_json(e.residual)}}.dump();
  return e.holds ? "eigen equation holds" : "eigen equation FAILS, residual " + e.residual.str();
}

/// Reads a value given either as an expression or as multivector JSON.
inline Multivector read_value(std::string_view text, const expr::SessionConfig& cfg) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return from_json_text(text);
  return expr::evaluate_mv(text, cfg);
}

// ---------------------------------------------------------------------------
// session

enum Status : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2, kEvalError = 3 };

/// Line-oriented command loop shared by `repl`, `eval --file` and `:load`.
class Session {
 public:
  Session(expr::SessionConfig cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  [[nodiscard]] const expr::SessionConfig& config() const { return cfg_; }
  [[nodiscard]] bool finished() const { return quit_; }

  /// Executes one line; returns a Status.
  int execute(const std::string& raw, int line_no = 1, const std::string& source = "<input>") {
    const std::string line = strip(raw);
    if (line.empty()) return kOk;
    if (line[0] == ':') return directive(line, line_no, source);
    try {
      const expr::Value v = expr::Evaluator(cfg_).eval(expr::parse(line, line_no));
      out_ << render(v, cfg_.format) << "\n";
      return kOk;
    } catch (const expr::ParseError& e) {
      err_ << source << ": parse error: " << e.what() << "\n";
      return kUsageError;
    } catch (const Error& e) {
      err_ << source << ": evaluation error: " << e.what() << "\n";
      return kEvalError;
    }
  }

  /// Runs every line of a script; stops at the first failure when asked.
  int run(std::istream& in, const std::string& source, bool stop_on_error, bool prompt = false) {
    int worst = kOk;
    std::string line;
    int line_no = 0;
    if (prompt) out_ << "> " << std::flush;
    while (!quit_ && std::getline(in, line)) {
      ++line_no;
      const int status = execute(line, line_no, source);
      if (status != kOk) {
        worst = status;
        if (stop_on_error) return status;
      }
      if (prompt && !quit_) out_ << "> " << std::flush;
    }
    return worst;
  }

 private:
  static std::string strip(const std::string& s) {
    std::string t = s;
    // a '#' comment runs to the end of the line
    if (auto hash = t.find('#'); hash != std::string::npos) t.erase(hash);
    const auto b = t.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = t.find_last_not_of(" \t\r\n");
    return t.substr(b, e - b + 1);
  }

  int directive(const std::string& line, int line_no, const std::string& source) {
    std::istringstream is(line);
    std::string cmd, key, value;
    is >> cmd >> key;
    std::getline(is, value);
    value = strip(value);
    try {
      if (cmd == ":quit" || cmd == ":q") {
        quit_ = true;
        return kOk;
      }
      if (cmd == ":set") {
        if (key == "metric") cfg_.metric = parse_metric(value);
        else if (key == "order") cfg_.order = parse_order(value);
        else if (key == "product") cfg_.product = parse_product(value);
        else if (key == "format") cfg_.format = parse_format(value);
        else throw DomainError("unknown setting '" + key + "' (metric|order|product|format)");
        return kOk;
      }
      if (cmd == ":load") {
        std::string path = key;
        if (!value.empty()) path += " " + value;
        std::ifstream file(path);
        if (!file) throw DomainError("cannot open '" + path + "'");
        return run(file, path, false);
      }
      throw DomainError("unknown command '" + cmd + "' (:set, :load, :quit)");
    } catch (const Error& e) {
      err_ << source << ":" << line_no << ": " << e.what() << "\n";
      return kUsageError;
    }
  }

  static int parse_order(const std::string& v) {
    std::size_t used = 0;
    int n = -1;
    try {
      n = std::stoi(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || n < 0 || n > 64) throw DomainError("order must be an integer in 0..64");
    return n;
  }

  expr::SessionConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
  bool quit_ = false;
};

}  // namespace starprod::io
