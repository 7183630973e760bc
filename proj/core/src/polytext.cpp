#include "lgq/polytext.hpp"

#include <cctype>
#include <vector>

namespace lgq {

namespace {

struct Piece {
  bool negative = false;
  std::string coeff;    // empty for a unit coefficient
  std::string factors;  // empty for the unit monomial
};

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    if (p.negative)
      out += '-';
    else if (i > 0)
      out += '+';
    if (p.factors.empty())
      out += p.coeff.empty() ? "1" : p.coeff;
    else if (p.coeff.empty())
      out += p.factors;
    else
      out += p.coeff + "*" + p.factors;
  }
  return out;
}

std::string factor_text(const Monomial& m, const VarSet* names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names ? names->name(i) : "v" + std::to_string(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

/// Scales (n, d) by a common rational so every coefficient is an integer,
/// the integer content is 1 and d's leading coefficient is positive.
std::pair<ParamPoly, ParamPoly> integral_form(const ParamPoly& n, const ParamPoly& d) {
  mpz_class l = 1, g = 0;
  for (const auto* p : {&n, &d})
    for (const auto& t : p->terms()) l = lcm(l, t.second.den());
  for (const auto* p : {&n, &d})
    for (const auto& t : p->terms()) g = gcd(g, t.second.num() * (l / t.second.den()));
  BigRat s(l, g == 0 ? mpz_class(1) : g);
  if (!d.is_zero() && d.lex_leading().second.sign() < 0) s = -s;
  return {n.scale(s), d.scale(s)};
}

bool is_plain_power(const ParamPoly& p) {
  if (p.size() != 1 || !p.lex_leading().second.is_one()) return false;
  int vars = 0;
  for (auto e : p.lex_leading().first.exponents()) vars += e != 0;
  return vars == 1;
}

/// Sign and magnitude text of a parameter-field coefficient.
Piece coefficient_piece(const RatFunc& c) {
  Piece piece;
  const VarSetPtr& params = c.params();
  if (c.is_constant()) {
    BigRat v = c.constant_value();
    piece.negative = v.sign() < 0;
    if (!v.abs().is_one()) piece.coeff = v.abs().to_string();
    return piece;
  }
  if (c.den().is_constant()) {
    ParamPoly n = c.num().scale(c.den().constant_term().inverse());
    piece.negative = n.lex_leading().second.sign() < 0;
    if (piece.negative) n = -n;
    std::string text = to_string(n, params);
    piece.coeff = n.size() > 1 ? "(" + text + ")" : text;
    return piece;
  }
  auto [n, d] = integral_form(c.num(), c.den());
  piece.negative = n.lex_leading().second.sign() < 0;
  if (piece.negative) n = -n;
  std::string nt = to_string(n, params);
  std::string dt = to_string(d, params);
  if (n.size() > 1) nt = "(" + nt + ")";
  if (!is_plain_power(d)) dt = "(" + dt + ")";
  piece.coeff = nt + "/" + dt;
  return piece;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(std::string_view text, VarSetPtr vars, VarSetPtr params)
      : s_(text), vars_(std::move(vars)), params_(std::move(params)) {}

  RationalExpr parse_all() {
    RationalExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly constant(const RatFunc& c) const { return LaurentPoly::constant(vars_, params_, c); }

  static RationalExpr tidy(const RationalExpr& e) {
    if (e.den().terms().size() == 1) return RationalExpr(e.to_laurent());
    return e;
  }

  RationalExpr expr() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    RationalExpr acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = tidy(acc + term());
      else if (accept('-'))
        acc = tidy(acc - term());
      else
        return acc;
    }
  }

  RationalExpr term() {
    RationalExpr acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = tidy(acc * unary());
      } else if (accept('/')) {
        RationalExpr d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = tidy(acc / d);
      } else {
        return acc;
      }
    }
  }

  RationalExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalExpr power() {
    RationalExpr base = primary();
    if (!accept('^')) return base;
    long k = signed_int();
    if (k >= 0)
      return RationalExpr(base.num().pow(static_cast<int>(k)), base.den().pow(static_cast<int>(k)));
    if (base.is_zero()) fail("negative power of zero");
    return tidy(RationalExpr(base.den().pow(static_cast<int>(-k)), base.num().pow(static_cast<int>(-k))));
  }

  long signed_int() {
    bool paren = accept('(');
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 6) fail("exponent too large");
    long k = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -k : k;
  }

  static bool ident_char(char c, bool first) {
    auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || std::isalpha(u) || c == '_') return true;
    return !first && (std::isdigit(u) || c == '\'');
  }

  RationalExpr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      RationalExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalExpr(constant(RatFunc(BigRat(mpz_class(std::string(s_.substr(start, pos_ - start)))))));
    }
    if (ident_char(c, true)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_], pos_ == start)) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (vars_)
        if (auto i = vars_->find(name)) return RationalExpr(LaurentPoly::variable(vars_, params_, *i));
      if (params_ && params_->find(name)) return RationalExpr(constant(RatFunc::param(params_, name)));
      fail("unknown name '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  VarSetPtr vars_;
  VarSetPtr params_;
};

}  // namespace

std::string to_string(const BigRat& v) { return v.to_string(); }

std::string to_string(const ParamPoly& p, const VarSetPtr& params) {
  std::vector<Piece> pieces;
  pieces.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Piece piece;
    piece.negative = c.sign() < 0;
    BigRat a = c.abs();
    piece.factors = factor_text(m, params.get());
    if (!a.is_one() || piece.factors.empty()) piece.coeff = a.to_string();
    pieces.push_back(std::move(piece));
  }
  return join(pieces);
}

std::string to_string(const RatFunc& v) {
  if (v.is_zero()) return "0";
  Piece p = coefficient_piece(v);
  if (!v.is_constant() && v.den().is_constant() && !p.coeff.empty() && p.coeff.front() == '(')
    p.coeff = p.coeff.substr(1, p.coeff.size() - 2);
  return join({p});
}

std::string to_string(const LaurentPoly& p) {
  std::vector<Piece> pieces;
  pieces.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    Piece piece = coefficient_piece(c);
    piece.factors = factor_text(m, p.vars().get());
    pieces.push_back(std::move(piece));
  }
  return join(pieces);
}

std::string to_string(const RationalExpr& e) {
  if (e.den().is_constant() && e.den().constant_term().is_one()) return to_string(e.num());
  return "(" + to_string(e.num()) + ")/(" + to_string(e.den()) + ")";
}

std::string to_string(const CubicExt& v) {
  std::vector<Piece> pieces;
  for (int i = 2; i >= 0; --i) {
    const RatFunc& c = v.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    Piece piece = coefficient_piece(c);
    if (i == 1) piece.factors = "xi";
    if (i == 2) piece.factors = "xi^2";
    pieces.push_back(std::move(piece));
  }
  return join(pieces);
}

RatFunc parse_scalar(std::string_view text, const VarSetPtr& params) {
  static const VarSetPtr none = make_varset(std::vector<std::string>{});
  RationalExpr e = Parser(text, none, params).parse_all();
  RatFunc r = e.num().constant_term() / e.den().constant_term();
  return params ? r.embed(params) : r;
}

LaurentPoly parse_laurent(std::string_view text, const VarSetPtr& vars, const VarSetPtr& params) {
  RationalExpr e = Parser(text, vars, params).parse_all();
  if (e.den().terms().size() != 1) throw ParseError("not a Laurent polynomial: '" + std::string(text) + "'");
  return e.to_laurent();
}

RationalExpr parse_rational(std::string_view text, const VarSetPtr& vars, const VarSetPtr& params) {
  return Parser(text, vars, params).parse_all();
}

}  // namespace lgq
