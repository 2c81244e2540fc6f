#pragma once

// Expression language: lexer, recursive-descent parser, source printer and
// evaluator over Multivector values.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'*C'|'*M3'|'*M4'|'*MC') factor)*
//   factor := '-' factor | atom ('^' '-'? nat)?
//   atom   := rational | 'i' | 'hb' | var | blade | call | '(' expr ')'
//
// Plain '*' is the undeformed product (pointwise on coefficients, exterior on
// blades), so canonical printed values parse back to themselves.

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "starprod/calculus.hpp"
#include "starprod/mechanics.hpp"

namespace starprod::expr {

struct Location {
  int line = 1;
  int column = 1;
};

inline std::string describe(const Location& loc) {
  return "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column);
}

class ParseError : public Error {
 public:
  ParseError(const std::string& message, Location loc, std::vector<std::string> expected = {})
      : Error(compose(message, loc, expected)), loc_(loc), expected_(std::move(expected)) {}

  [[nodiscard]] const Location& location() const { return loc_; }
  [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string compose(const std::string& message, const Location& loc, const std::vector<std::string>& exp) {
    std::string out = describe(loc) + ": " + message;
    if (!exp.empty()) {
      out += "; expected one of:";
      for (const auto& e : exp) out += " " + e;
    }
    return out;
  }
  Location loc_;
  std::vector<std::string> expected_;
};

class EvalError : public Error {
 public:
  EvalError(const std::string& message, Location loc) : Error(describe(loc) + ": " + message), loc_(loc) {}
  [[nodiscard]] const Location& location() const { return loc_; }

 private:
  Location loc_;
};

// ---------------------------------------------------------------------------
// lexer

enum class Tok { integer, rational, ident, plus, minus, star, star_c, star_m3, star_m4, star_mc, caret, lparen,
                 rparen, comma, semicolon, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  Location loc;
};

inline std::string token_name(Tok t) {
  switch (t) {
    case Tok::integer: return "integer";
    case Tok::rational: return "rational";
    case Tok::ident: return "identifier";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::star_c: return "'*C'";
    case Tok::star_m3: return "'*M3'";
    case Tok::star_m4: return "'*M4'";
    case Tok::star_mc: return "'*MC'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::semicolon: return "';'";
    case Tok::end: return "end of input";
  }
  return "?";
}

inline std::vector<Token> tokenize(std::string_view src, int first_line = 1) {
  std::vector<Token> out;
  Location loc{first_line, 1};
  std::size_t k = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n && k < src.size(); ++j, ++k) {
      if (src[k] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
  };
  auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; };

  while (k < src.size()) {
    const char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (k < src.size() && src[k] != '\n') advance(1);
      continue;
    }
    const Location start = loc;
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = k;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])) != 0) ++j;
      if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1])) != 0) {
        std::size_t d = j + 1;
        while (d < src.size() && std::isdigit(static_cast<unsigned char>(src[d])) != 0) ++d;
        out.push_back({Tok::rational, std::string(src.substr(k, d - k)), start});
        advance(d - k);
      } else {
        out.push_back({Tok::integer, std::string(src.substr(k, j - k)), start});
        advance(j - k);
      }
      if (k < src.size() && (src[k] == '.' || std::isalpha(static_cast<unsigned char>(src[k])) != 0)) {
        throw ParseError("malformed number (only exact integers and a/b rationals are accepted)", start);
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      std::size_t j = k;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      out.push_back({Tok::ident, std::string(src.substr(k, j - k)), start});
      advance(j - k);
      continue;
    }
    if (c == '*') {
      std::size_t j = k + 1;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      const std::string_view tag = src.substr(k + 1, j - k - 1);
      Tok kind = Tok::star;
      if (tag == "C") kind = Tok::star_c;
      else if (tag == "M3") kind = Tok::star_m3;
      else if (tag == "M4") kind = Tok::star_m4;
      else if (tag == "MC") kind = Tok::star_mc;
      const std::size_t len = kind == Tok::star ? 1 : j - k;
      out.push_back({kind, std::string(src.substr(k, len)), start});
      advance(len);
      continue;
    }
    Tok kind = Tok::end;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case ';': kind = Tok::semicolon; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::end, "", loc});
  return out;
}

// ---------------------------------------------------------------------------
// syntax tree

enum class NodeKind { rational, imag_unit, hbar, variable, blade, negate, add, sub, product, power, call };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind = NodeKind::rational;
  Location loc;
  Rational value;                       // rational
  Var var = Var::q0;                    // variable
  Blade blade;                          // blade
  std::optional<Product> product;       // product: empty means the undeformed '*'; call: explicit kind
  int exponent = 0;                     // power
  std::string name;                     // call
  std::vector<NodePtr> args;            // operands
};

struct FunctionInfo {
  std::string_view name;
  int arity;
  bool takes_kind;
};

inline constexpr std::array<FunctionInfo, 8> kFunctions = {{
    {"comm", 2, true},
    {"acomm", 2, true},
    {"pb", 2, false},
    {"grade", 2, false},
    {"exp", 1, true},
    {"split", 1, true},
    {"eigencheck", 3, true},
    {"spow", 2, true},
}};

inline const FunctionInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

/// Generator indices of a blade literal such as "g0g2"; empty when the text is
/// not of that shape. Order is checked by the parser.
inline std::optional<std::vector<int>> blade_literal_indices(std::string_view text) {
  if (text.size() < 2 || text.size() % 2 != 0) return std::nullopt;
  std::vector<int> idx;
  for (std::size_t k = 0; k < text.size(); k += 2) {
    if (text[k] != 'g' || text[k + 1] < '0' || text[k + 1] > '3') return std::nullopt;
    idx.push_back(text[k + 1] - '0');
  }
  return idx;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  NodePtr parse_all() {
    NodePtr e = parse_expr();
    if (peek().kind != Tok::end) {
      fail("unexpected " + token_name(peek().kind), {"'+'", "'-'", "'*'", "'*C'", "'*M3'", "'*M4'", "'*MC'",
                                                     "end of input"});
    }
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    throw ParseError(message, peek().loc, std::move(expected));
  }

  void expect(Tok kind) {
    if (peek().kind != kind) fail("unexpected " + token_name(peek().kind), {token_name(kind)});
    next();
  }

  static NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = next();
      Node n;
      n.kind = op.kind == Tok::plus ? NodeKind::add : NodeKind::sub;
      n.loc = op.loc;
      n.args = {lhs, parse_term()};
      lhs = make(std::move(n));
    }
    return lhs;
  }

  static std::optional<std::optional<Product>> product_op(Tok t) {
    switch (t) {
      case Tok::star: return std::optional<Product>{};
      case Tok::star_c: return Product::clifford;
      case Tok::star_m3: return Product::moyal3;
      case Tok::star_m4: return Product::moyal4;
      case Tok::star_mc: return Product::moyal_clifford;
      default: return std::nullopt;
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (auto op = product_op(peek().kind)) {
      const Location loc = next().loc;
      Node n;
      n.kind = NodeKind::product;
      n.loc = loc;
      n.product = *op;
      n.args = {lhs, parse_factor()};
      lhs = make(std::move(n));
    }
    return lhs;
  }

  NodePtr parse_factor() {
    if (peek().kind == Tok::minus) {
      Node n;
      n.kind = NodeKind::negate;
      n.loc = next().loc;
      n.args = {parse_factor()};
      return make(std::move(n));
    }
    NodePtr base = parse_atom();
    if (peek().kind != Tok::caret) return base;
    const Location loc = next().loc;
    bool negative = false;
    if (peek().kind == Tok::minus) {
      next();
      negative = true;
    }
    if (peek().kind != Tok::integer) fail("exponent must be a natural number", {"integer"});
    const Token& num = next();
    if (num.text.size() > 6) throw ParseError("exponent too large", num.loc);
    Node n;
    n.kind = NodeKind::power;
    n.loc = loc;
    n.exponent = std::stoi(num.text) * (negative ? -1 : 1);
    n.args = {base};
    return make(std::move(n));
  }

  NodePtr parse_atom() {
    const Token& t = peek();
    Node n;
    n.loc = t.loc;
    switch (t.kind) {
      case Tok::integer:
      case Tok::rational: {
        next();
        Rational r;
        if (r.set_str(t.text, 10) != 0) throw ParseError("malformed rational '" + t.text + "'", t.loc);
        if (sgn(r.get_den()) == 0) throw ParseError("zero denominator", t.loc);
        r.canonicalize();
        n.kind = NodeKind::rational;
        n.value = r;
        return make(std::move(n));
      }
      case Tok::lparen: {
        next();
        NodePtr inner = parse_expr();
        expect(Tok::rparen);
        return inner;
      }
      case Tok::ident: return parse_identifier();
      default:
        fail("unexpected " + token_name(t.kind), {"rational", "'i'", "'hb'", "variable", "blade", "function", "'('",
                                                  "'-'"});
    }
  }

  NodePtr parse_identifier() {
    const Token t = next();
    Node n;
    n.loc = t.loc;
    if (t.text == "i") {
      n.kind = NodeKind::imag_unit;
      return make(std::move(n));
    }
    if (t.text == "hb") {
      n.kind = NodeKind::hbar;
      return make(std::move(n));
    }
    if (auto v = parse_var(t.text)) {
      n.kind = NodeKind::variable;
      n.var = *v;
      return make(std::move(n));
    }
    if (auto idx = blade_literal_indices(t.text)) {
      if (!std::is_sorted(idx->begin(), idx->end()) || std::adjacent_find(idx->begin(), idx->end()) != idx->end()) {
        throw ParseError("blade literal '" + t.text + "' must list generators in ascending order", t.loc);
      }
      n.kind = NodeKind::blade;
      n.blade = Blade::from_indices(*idx);
      return make(std::move(n));
    }
    if (const FunctionInfo* f = find_function(t.text)) return parse_call(*f, t.loc);
    throw ParseError("unknown identifier '" + t.text + "'", t.loc,
                     {"'i'", "'hb'", "q0..q3", "p0..p3", "s", "blade g0..g3", "comm", "acomm", "pb", "grade", "exp",
                      "split", "eigencheck", "spow"});
  }

  NodePtr parse_call(const FunctionInfo& f, Location loc) {
    Node n;
    n.kind = NodeKind::call;
    n.loc = loc;
    n.name = std::string(f.name);
    expect(Tok::lparen);
    if (f.takes_kind && peek().kind == Tok::ident && peek(1).kind == Tok::semicolon) {
      const Token& tag = next();
      try {
        n.product = parse_product(tag.text);
      } catch (const DomainError&) {
        throw ParseError("unknown product kind '" + tag.text + "'", tag.loc, {"C", "M3", "M4", "MC"});
      }
      next();
    }
    for (int a = 0; a < f.arity; ++a) {
      if (a > 0) {
        if (peek().kind != Tok::comma) {
          fail(std::string(f.name) + " takes " + std::to_string(f.arity) + " arguments", {"','"});
        }
        next();
      }
      n.args.push_back(parse_expr());
    }
    if (peek().kind != Tok::rparen) {
      fail(std::string(f.name) + " takes " + std::to_string(f.arity) + " arguments", {"')'"});
    }
    next();
    return make(std::move(n));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline NodePtr parse(std::string_view source, int first_line = 1) {
  return Parser(tokenize(source, first_line)).parse_all();
}

/// Source text with minimal parentheses; parse(to_source(e)) rebuilds e.
inline std::string to_source(const NodePtr& e, int context = 0) {
  // binding strength: 1 additive, 2 product, 3 unary minus, 4 power, 5 atom
  auto wrap = [&](const std::string& s, int own) { return own < context ? "(" + s + ")" : s; };
  switch (e->kind) {
    case NodeKind::rational: return to_string(e->value);
    case NodeKind::imag_unit: return "i";
    case NodeKind::hbar: return "hb";
    case NodeKind::variable: return std::string(var_name(e->var));
    case NodeKind::blade: return e->blade.str();
    case NodeKind::negate: return wrap("-" + to_source(e->args[0], 3), 3);
    case NodeKind::add: return wrap(to_source(e->args[0], 1) + " + " + to_source(e->args[1], 2), 1);
    case NodeKind::sub: return wrap(to_source(e->args[0], 1) + " - " + to_source(e->args[1], 2), 1);
    case NodeKind::product: {
      const std::string op = e->product ? " *" + std::string(product_tag(*e->product)) + " " : "*";
      return wrap(to_source(e->args[0], 2) + op + to_source(e->args[1], 3), 2);
    }
    case NodeKind::power:
      return wrap(to_source(e->args[0], 5) + "^" + std::to_string(e->exponent), 4);
    case NodeKind::call: {
      std::string out = e->name + "(";
      if (e->product) out += std::string(product_tag(*e->product)) + "; ";
      for (std::size_t k = 0; k < e->args.size(); ++k) {
        if (k > 0) out += ", ";
        out += to_source(e->args[k], 0);
      }
      return out + ")";
    }
  }
  return "?";
}

inline bool same_tree(const NodePtr& a, const NodePtr& b) {
  if (a->kind != b->kind || a->args.size() != b->args.size()) return false;
  switch (a->kind) {
    case NodeKind::rational:
      if (a->value != b->value) return false;
      break;
    case NodeKind::variable:
      if (a->var != b->var) return false;
      break;
    case NodeKind::blade:
      if (a->blade != b->blade) return false;
      break;
    case NodeKind::product:
      if (a->product != b->product) return false;
      break;
    case NodeKind::power:
      if (a->exponent != b->exponent) return false;
      break;
    case NodeKind::call:
      if (a->name != b->name || a->product != b->product) return false;
      break;
    default: break;
  }
  for (std::size_t k = 0; k < a->args.size(); ++k) {
    if (!same_tree(a->args[k], b->args[k])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// evaluation

enum class Format { text, json };

struct SessionConfig {
  Metric metric = Metric::nonstandard();
  Product product = Product::moyal4;
  int order = 8;
  Format format = Format::text;

  [[nodiscard]] ProductKind kind() const { return {product, metric}; }
  [[nodiscard]] ProductKind kind(Product p) const { return {p, metric}; }
};

struct SplitValue {
  ProductKind kind;
  ProjectorSplit split;
};

struct EigenValue {
  bool holds = false;
  Multivector residual;
};

using Value = std::variant<Multivector, SplitValue, EigenValue>;

/// Pointwise power; negative exponents need a single-term constant scalar.
inline Multivector pointwise_power(const Multivector& base, int n) {
  Multivector b = base;
  if (n < 0) {
    if (!base.is_scalar() || !base.has_constant_coefficients()) {
      throw DomainError("negative powers need a constant scalar base");
    }
    const ScalarH c = base.component(Blade::scalar()).constant_term();
    if (c.terms().size() != 1) throw DomainError("negative powers need a single c*hb^k base");
    b = Multivector(ScalarH(1L).divided_by_monomial(c));
    n = -n;
  }
  Multivector out(1L);
  for (int k = 0; k < n; ++k) out = grassmann_mul(out, b);
  return out;
}

/// Generalized Poisson bracket: sum_mu df/dq^mu ^ dg/dp_mu - df/dp_mu ^ dg/dq^mu.
inline Multivector poisson_bracket(const Multivector& f, const Multivector& g) {
  Multivector out;
  for (int mu = 0; mu < 4; ++mu) {
    out += grassmann_mul(partial(f, q_var(mu)), partial(g, p_var(mu)));
    out -= grassmann_mul(partial(f, p_var(mu)), partial(g, q_var(mu)));
  }
  return out;
}

class Evaluator {
 public:
  explicit Evaluator(const SessionConfig& cfg) : cfg_(cfg) {}

  Value eval(const NodePtr& e) const {
    try {
      return eval_inner(e);
    } catch (const EvalError&) {
      throw;
    } catch (const Error& err) {
      throw EvalError(err.what(), e->loc);
    }
  }

  Multivector eval_mv(const NodePtr& e) const {
    Value v = eval(e);
    if (auto* m = std::get_if<Multivector>(&v)) return std::move(*m);
    throw EvalError("this value is a report and cannot be used inside an expression", e->loc);
  }

 private:
  Value eval_inner(const NodePtr& e) const {
    switch (e->kind) {
      case NodeKind::rational: return Multivector(e->value);
      case NodeKind::imag_unit: return Multivector::i();
      case NodeKind::hbar: return Multivector::hbar();
      case NodeKind::variable: return Multivector::var(e->var);
      case NodeKind::blade: return Multivector::blade(e->blade);
      case NodeKind::negate: return -eval_mv(e->args[0]);
      case NodeKind::add: return eval_mv(e->args[0]) + eval_mv(e->args[1]);
      case NodeKind::sub: return eval_mv(e->args[0]) - eval_mv(e->args[1]);
      case NodeKind::product: {
        const Multivector a = eval_mv(e->args[0]);
        const Multivector b = eval_mv(e->args[1]);
        if (!e->product) return grassmann_mul(a, b);
        return star(a, b, cfg_.kind(*e->product));
      }
      case NodeKind::power: return pointwise_power(eval_mv(e->args[0]), e->exponent);
      case NodeKind::call: return eval_call(e);
    }
    throw EvalError("unknown node", e->loc);
  }

  int integer_arg(const NodePtr& e) const {
    const Multivector v = eval_mv(e);
    if (v.is_zero()) return 0;
    if (v.is_scalar() && v.has_constant_coefficients()) {
      const ScalarH c = v.component(Blade::scalar()).constant_term();
      if (c.terms().size() == 1 && c.min_hbar_power() == 0) {
        const ComplexQ z = c.coefficient(0);
        if (z.is_real() && z.re.get_den() == 1 && abs(z.re) < 1000000) return static_cast<int>(z.re.get_d());
      }
    }
    throw EvalError("expected an integer argument, got " + v.str(), e->loc);
  }

  Value eval_call(const NodePtr& e) const {
    const ProductKind kind = cfg_.kind(e->product.value_or(cfg_.product));
    const std::string& f = e->name;
    if (f == "comm") return star_commutator(eval_mv(e->args[0]), eval_mv(e->args[1]), kind);
    if (f == "acomm") return star_anticommutator(eval_mv(e->args[0]), eval_mv(e->args[1]), kind);
    if (f == "pb") return poisson_bracket(eval_mv(e->args[0]), eval_mv(e->args[1]));
    if (f == "grade") return grade_project(eval_mv(e->args[0]), integer_arg(e->args[1]));
    if (f == "spow") return star_power(eval_mv(e->args[0]), integer_arg(e->args[1]), kind);
    if (f == "exp") {
      const Multivector k = eval_mv(e->args[0]);
      for (const auto& [b, c] : k.components()) {
        if (!c.partial(Var::s).is_zero()) throw EvalError("exp: K must not depend on s", e->args[0]->loc);
      }
      return star_exp_truncated(k, cfg_.order, kind).as_series(Var::s);
    }
    if (f == "split") return SplitValue{kind, projector_split(eval_mv(e->args[0]), kind)};
    if (f == "eigencheck") {
      const Multivector h = eval_mv(e->args[0]);
      const Multivector w = eval_mv(e->args[1]);
      const Multivector lambda = eval_mv(e->args[2]);
      if (!lambda.is_scalar() || !lambda.has_constant_coefficients()) {
        throw EvalError("eigencheck: the eigenvalue must be a constant scalar", e->args[2]->loc);
      }
      const ScalarH l = lambda.component(Blade::scalar()).constant_term();
      return EigenValue{star_eigencheck(h, w, l, kind), star(h, w, kind) - w.scaled(l)};
    }
    throw EvalError("unknown function '" + f + "'", e->loc);
  }

  SessionConfig cfg_;
};

inline Value evaluate(std::string_view source, const SessionConfig& cfg = {}) {
  return Evaluator(cfg).eval(parse(source));
}

inline Multivector evaluate_mv(std::string_view source, const SessionConfig& cfg = {}) {
  return Evaluator(cfg).eval_mv(parse(source));
}

}  // namespace starprod::expr
