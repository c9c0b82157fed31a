#include "ncalc/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace ncalc {

namespace {

enum class Tok { Number, Basis, Var, Coord, Map, Pi, LParen, RParen, Plus, Minus, Star, Slash, Caret, Tensor, End };

struct Token {
  Tok kind;
  double number = 0.0;
  std::size_t index = 0;  // basis, coordinate or map index
  std::size_t pos = 0;
};

std::string normalise(std::string_view text) {
  std::string s(text);
  auto replace_all = [&](std::string_view from, std::string_view to) {
    for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
      s.replace(p, from.size(), to);
  };
  replace_all("\xE2\x8A\x97", "@");  // tensor sign
  replace_all("\xE2\x88\x92", "-");  // minus sign
  replace_all("\xC2\xB7", "*");      // middle dot
  replace_all("\xCF\x80", "pi");     // greek pi
  return s;
}

class Lexer {
 public:
  Lexer(const AlgebraPtr& algebra, std::string text) : alg_(algebra), text_(std::move(text)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') { out.push_back(number(i)); continue; }
      if (std::isalpha(static_cast<unsigned char>(c))) { out.push_back(identifier(i)); continue; }
      Tok k;
      switch (c) {
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '@': k = Tok::Tensor; break;
        default: fail(i, std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, 0.0, 0, i++});
    }
    out.push_back({Tok::End, 0.0, 0, text_.size()});
    return out;
  }

 private:
  [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos) + " in '" + text_ + "'");
  }

  Token number(std::size_t& i) {
    std::size_t j = i;
    while (j < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[j])) || text_[j] == '.')) ++j;
    // "2e1" reads as 2 times the basis element e1; exponents need a sign
    // ("1e-5") or an uppercase E ("1E5").
    if (j < text_.size() && (text_[j] == 'e' || text_[j] == 'E')) {
      std::size_t k = j + 1;
      const bool signed_exp = k < text_.size() && (text_[k] == '+' || text_[k] == '-');
      if (signed_exp) ++k;
      if ((signed_exp || text_[j] == 'E') && k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) {
        while (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) ++k;
        j = k;
      }
    }
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text_.data() + i, text_.data() + j, v);
    if (ec != std::errc() || end != text_.data() + j) fail(i, "malformed number");
    Token t{Tok::Number, v, 0, i};
    i = j;
    return t;
  }

  // Longest known token starting at i.
  Token identifier(std::size_t& i) {
    const std::string_view rest(text_.data() + i, text_.size() - i);
    std::size_t best_len = 0;
    Token best{Tok::End, 0.0, 0, i};
    auto consider = [&](std::string_view name, Token t) {
      if (name.size() > best_len && rest.substr(0, name.size()) == name) best_len = name.size(), best = t;
    };
    consider("pi", {Tok::Pi, 0.0, 0, i});
    const auto& names = alg_->basis_names();
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (!names[k].empty() && std::isalpha(static_cast<unsigned char>(names[k][0])))
        consider(names[k], {Tok::Basis, 0.0, k, i});
      consider("e" + std::to_string(k), {Tok::Basis, 0.0, k, i});
    }
    for (std::size_t k = 0; k < alg_->basis_map_count(); ++k) {
      const auto& name = alg_->basis_map_name(k);
      const std::size_t after = i + name.size();
      if (rest.substr(0, name.size()) == name && after < text_.size() && text_[after] == '(')
        consider(name, {Tok::Map, 0.0, k, i});
    }
    if (rest[0] == 'x') {
      std::size_t j = 1;
      while (j < rest.size() && std::isdigit(static_cast<unsigned char>(rest[j]))) ++j;
      if (j > 1) consider(rest.substr(0, j), {Tok::Coord, 0.0, std::stoul(std::string(rest.substr(1, j - 1))), i});
      else consider("x", {Tok::Var, 0.0, 0, i});
    }
    if (best_len == 0) fail(i, "unknown symbol");
    i += best_len;
    return best;
  }

  AlgebraPtr alg_;
  std::string text_;
};

using Factors = std::vector<NoncommPoly>;

class Parser {
 public:
  Parser(const AlgebraPtr& algebra, std::string text)
      : alg_(algebra), text_(text), tokens_(Lexer(algebra, std::move(text)).run()) {}

  // Sum of terms; each term is a list of tensor factors.
  std::vector<std::pair<double, Factors>> terms() {
    std::vector<std::pair<double, Factors>> out;
    double sign = 1.0;
    if (peek().kind == Tok::Plus) next();
    else if (peek().kind == Tok::Minus) next(), sign = -1.0;
    for (;;) {
      Factors f{product()};
      while (peek().kind == Tok::Tensor) {
        next();
        f.push_back(product());
      }
      out.emplace_back(sign, std::move(f));
      if (peek().kind == Tok::Plus) next(), sign = 1.0;
      else if (peek().kind == Tok::Minus) next(), sign = -1.0;
      else break;
    }
    return out;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail(peek().pos, "unexpected trailing input");
  }

  [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos) + " in '" + text_ + "'");
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  static bool starts_atom(Tok k) {
    return k == Tok::Number || k == Tok::Basis || k == Tok::Var || k == Tok::Coord || k == Tok::Map ||
           k == Tok::Pi || k == Tok::LParen;
  }

  NoncommPoly sum() {
    NoncommPoly total(alg_);
    for (auto& [sign, factors] : terms()) {
      if (factors.size() != 1) fail(peek().pos, "tensor sign inside parentheses");
      total += factors[0].scaled(sign);
    }
    return total;
  }

  NoncommPoly product() {
    NoncommPoly p = power();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::Star) {
        next();
        p = p * power();
      } else if (k == Tok::Slash) {
        next();
        const NoncommPoly d = power();
        if (d.degree() != 0) fail(peek().pos, "division by a non-constant");
        const Element c = d.eval(Element::zero(alg_));
        const double s = c[alg_->unit_index()];
        if ((c - Element::scalar(alg_, s)).coord_norm() != 0.0) fail(peek().pos, "division by a non-real number");
        if (s == 0.0) fail(peek().pos, "division by zero");
        p = p.scaled(1.0 / s);
      } else if (starts_atom(k)) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  NoncommPoly power() {
    NoncommPoly base = atom();
    if (peek().kind != Tok::Caret) return base;
    next();
    const Token e = next();
    if (e.kind != Tok::Number || e.number != std::floor(e.number) || e.number < 0 || e.number > 64)
      fail(e.pos, "exponent must be a small non-negative integer");
    return base.power(static_cast<unsigned>(e.number));
  }

  NoncommPoly atom() {
    const Token t = next();
    switch (t.kind) {
      case Tok::Number: return NoncommPoly::scalar(alg_, t.number);
      case Tok::Pi: return NoncommPoly::scalar(alg_, std::numbers::pi);
      case Tok::Basis: return NoncommPoly::constant(Element::basis(alg_, t.index));
      case Tok::Var: return NoncommPoly::variable(alg_);
      case Tok::Coord:
        try {
          return coordinate_poly(alg_, t.index);
        } catch (const Error& e) {
          fail(t.pos, e.what());
        }
      case Tok::Map: {
        if (next().kind != Tok::LParen) fail(t.pos, "expected '(' after basis map");
        const NoncommPoly inner = sum();
        if (next().kind != Tok::RParen) fail(t.pos, "missing ')'");
        return apply_map(t, inner);
      }
      case Tok::LParen: {
        NoncommPoly inner = sum();
        if (next().kind != Tok::RParen) fail(t.pos, "missing ')'");
        return inner;
      }
      default: fail(t.pos, "expected a number, symbol or '('");
    }
  }

  // F applied to constants and to scalar multiples of x.
  NoncommPoly apply_map(const Token& t, const NoncommPoly& inner) {
    NoncommPoly out(alg_);
    auto is_scalar = [&](const Element& e) {
      return (e - Element::scalar(alg_, e[alg_->unit_index()])).coord_norm() == 0.0;
    };
    for (const auto& m : inner.monomials()) {
      if (m.degree() == 0) {
        out += NoncommPoly::constant(apply_basis_map(t.index, m.coeffs[0])).scaled(m.weight);
      } else if (m.degree() == 1 && m.slots[0] == 0 && is_scalar(m.coeffs[0]) && is_scalar(m.coeffs[1])) {
        const double s = m.weight * m.coeffs[0][alg_->unit_index()] * m.coeffs[1][alg_->unit_index()];
        out += NoncommPoly::variable(alg_, t.index).scaled(s);
      } else {
        fail(t.pos, "basis maps apply only to x and constants");
      }
    }
    return out;
  }

  AlgebraPtr alg_;
  std::string text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

NoncommPoly coordinate_poly(const AlgebraPtr& algebra, std::size_t index) {
  if (algebra->dim() != 2 || !algebra->has_basis_map("I"))
    throw Error(ErrorKind::Parse, "coordinates x0, x1 need a 2-dimensional algebra with conjugation I");
  if (index > 1) throw Error(ErrorKind::Parse, "coordinate index must be 0 or 1");
  const std::size_t conj = algebra->basis_map_index("I");
  const Element one = Element::unit(algebra);
  const std::size_t other = algebra->unit_index() == 0 ? 1 : 0;
  const Element left = index == 0 ? one : inv(Element::basis(algebra, other));
  const double sign = index == 0 ? 1.0 : -1.0;
  return NoncommPoly(algebra, {Monomial{0.5, {left, one}, {0}}, Monomial{0.5 * sign, {left, one}, {conj}}});
}

NoncommPoly parse_poly(const AlgebraPtr& algebra, std::string_view text) {
  Parser parser(algebra, normalise(text));
  NoncommPoly total(algebra);
  for (auto& [sign, factors] : parser.terms()) {
    if (factors.size() != 1) parser.fail(0, "polynomials cannot contain a tensor sign");
    total += factors[0].scaled(sign);
  }
  parser.expect_end();
  return total;
}

TensorPoly parse_form(const AlgebraPtr& algebra, std::string_view text) {
  Parser parser(algebra, normalise(text));
  TensorPoly form(algebra, 1);
  for (auto& [sign, factors] : parser.terms()) {
    if (factors.size() != 2) parser.fail(0, "each form term needs exactly one tensor sign");
    form.add_term(TensorTerm{sign, {factors[0], factors[1]}, {0}, Permutation::identity(1)});
  }
  parser.expect_end();
  return form;
}

Element parse_element(const AlgebraPtr& algebra, std::string_view text) {
  const NoncommPoly p = parse_poly(algebra, text);
  if (p.degree() != 0) throw Error(ErrorKind::Parse, "expected a constant, got a polynomial in x");
  return p.eval(Element::zero(algebra));
}

}  // namespace ncalc
