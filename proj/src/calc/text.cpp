#include "courant/calc/text.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <vector>

#include "courant/errors.hpp"

namespace courant {

namespace {

using NameFn = std::function<std::string(std::size_t)>;

void write_monomial(std::ostream& os, const Monomial& m, const NameFn& name) {
  bool first = true;
  for (std::size_t i = 0; i < m.support_size(); ++i) {
    const unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << name(i);
    if (e > 1) os << '^' << e;
  }
}

// Writes one term with its sign folded into the separator.
void write_term(std::ostream& os, const Term& t, bool leading, const NameFn& name, const std::string& basis) {
  const bool negative = sgn(t.coeff) < 0;
  if (leading)
    os << (negative ? "-" : "");
  else
    os << (negative ? " - " : " + ");
  const Rational mag = abs(t.coeff);
  const bool unit = mag == 1;
  if (t.mono.is_one()) {
    if (!unit || basis.empty()) {
      os << to_string(mag);
      if (!basis.empty()) os << ' ';
    }
  } else {
    if (!unit) os << to_string(mag) << ' ';
    write_monomial(os, t.mono, name);
    if (!basis.empty()) os << ' ';
  }
  os << basis;
}

void write_poly(std::ostream& os, const Poly& p, const NameFn& name) {
  if (p.is_zero()) {
    os << '0';
    return;
  }
  bool leading = true;
  for (const auto& t : p.terms()) {
    write_term(os, t, leading, name, "");
    leading = false;
  }
}

std::string basis_name(IndexMask m, std::span<const std::string> names) {
  std::string out;
  for (auto i : mask_indices(m)) {
    if (!out.empty()) out += '^';
    out += names[i];
  }
  return out;
}

std::vector<std::string> prefixed(const Chart& chart, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& n : chart.names()) out.push_back(prefix + n);
  return out;
}

}  // namespace

std::string render_tensor(const AltTensor& t, const Chart& chart, std::span<const std::string> basis_names) {
  NameFn name = [&](std::size_t i) { return chart.name(i); };
  std::ostringstream os;
  if (t.degree() == 0) {
    write_poly(os, t[0], name);
    return os.str();
  }
  if (t.is_zero()) return "0";
  bool leading = true;
  for (const auto& [m, p] : t.components()) {
    const std::string basis = basis_name(m, basis_names);
    if (p.terms().size() == 1) {
      write_term(os, p.terms()[0], leading, name, basis);
    } else {
      os << (leading ? "(" : " + (");
      write_poly(os, p, name);
      os << ") " << basis;
    }
    leading = false;
  }
  return os.str();
}

namespace {

// ---- parsing ----

enum class Tok { Number, Ident, Caret, Plus, Minus, Star, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      if (j < s.size() && (s[j] == '.' || s[j] == 'e' || s[j] == 'E'))
        throw ParseError("floating-point literals are not accepted", 1, j + 1);
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '/')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
      i = j;
    } else {
      Tok k;
      switch (c) {
        case '^': k = Tok::Caret; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", 1, col);
      }
      out.push_back({k, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

enum class Kind { Scalar, Form, Vector };

struct Graded {
  Kind kind;
  AltTensor t;
};

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart) : toks_(tokenize(text)), chart_(chart) {}

  Graded parse() {
    Graded g = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return g;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, peek().column); }

  Graded scalar(const Poly& p) const { return {Kind::Scalar, AltTensor::scalar(chart_.dim(), p)}; }

  Graded combine_sum(Graded a, const Graded& b, bool subtract) {
    if (b.t.is_zero()) return a;
    if (a.t.is_zero()) {
      Graded r = b;
      if (subtract) r.t = -r.t;
      return r;
    }
    if (a.t.degree() != b.t.degree()) fail("sum of terms with different degrees");
    if (a.kind != b.kind && a.kind != Kind::Scalar && b.kind != Kind::Scalar) fail("sum mixes forms and multivectors");
    if (subtract)
      a.t -= b.t;
    else
      a.t += b.t;
    if (a.kind == Kind::Scalar) a.kind = b.kind;
    return a;
  }

  Graded combine_product(const Graded& a, const Graded& b) {
    if (a.kind != b.kind && a.kind != Kind::Scalar && b.kind != Kind::Scalar) fail("product mixes forms and multivectors");
    return {a.kind == Kind::Scalar ? b.kind : a.kind, wedge(a.t, b.t)};
  }

  Graded expr() {
    bool negate = false;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) negate = next().kind == Tok::Minus;
    Graded acc = term();
    if (negate) acc.t = -acc.t;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool sub = next().kind == Tok::Minus;
      acc = combine_sum(std::move(acc), term(), sub);
    }
    return acc;
  }

  Graded term() {
    Graded acc = factor();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::Star) {
        next();
        acc = combine_product(acc, factor());
      } else if (k == Tok::Number || k == Tok::Ident || k == Tok::LParen) {
        acc = combine_product(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Graded factor() {
    Graded acc = primary();
    while (peek().kind == Tok::Caret) {
      next();
      if (peek().kind == Tok::Number) {
        const Token t = next();
        if (t.text.find('/') != std::string::npos) fail("exponent must be a non-negative integer");
        if (acc.t.degree() != 0) fail("power of a basis element");
        const unsigned long e = std::stoul(t.text);
        if (e > 255) fail("exponent exceeds 255");
        const Poly base = acc.t[0];
        Poly p(1);
        for (unsigned long k = 0; k < e; ++k) p *= base;
        acc.t = AltTensor::scalar(chart_.dim(), p);
      } else {
        acc = combine_product(acc, primary());
      }
    }
    return acc;
  }

  Graded primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return scalar(Poly(parse_rational(t.text)));
      case Tok::LParen: {
        next();
        Graded g = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return g;
      }
      case Tok::Ident: {
        next();
        if (auto i = chart_.index_of(t.text)) return scalar(Poly::variable(*i));
        if (t.text.rfind("d/d", 0) == 0) {
          if (auto i = chart_.index_of(t.text.substr(3)))
            return {Kind::Vector, AltTensor::basis(chart_.dim(), IndexMask(1) << *i, Poly(1))};
        } else if (t.text.size() > 1 && t.text[0] == 'd') {
          if (auto i = chart_.index_of(t.text.substr(1)))
            return {Kind::Form, AltTensor::basis(chart_.dim(), IndexMask(1) << *i, Poly(1))};
        }
        throw ParseError("unknown identifier '" + t.text + "'", 1, t.column);
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Chart& chart_;
};

}  // namespace

std::string to_string(const Poly& p, const Chart& chart) {
  std::ostringstream os;
  write_poly(os, p, [&](std::size_t i) { return chart.name(i); });
  return os.str();
}

std::string to_string(const Poly& p) {
  std::ostringstream os;
  write_poly(os, p, [](std::size_t i) { return "x" + std::to_string(i + 1); });
  return os.str();
}

std::string to_string(const MultiVector& v) { return render_tensor(v.tensor(), *v.chart(), prefixed(*v.chart(), "d/d")); }

std::string to_string(const DiffForm& w) { return render_tensor(w.tensor(), *w.chart(), prefixed(*w.chart(), "d")); }

Poly parse_poly(std::string_view text, const Chart& chart) {
  Graded g = Parser(text, chart).parse();
  if (g.t.degree() != 0 || g.kind != Kind::Scalar) {
    if (!g.t.is_zero()) throw ParseError("expected a polynomial, found a degree-" + std::to_string(g.t.degree()) + " element", 1, 1);
    return Poly();
  }
  return g.t[0];
}

MultiVector parse_multivector(std::string_view text, const ChartPtr& chart) {
  Graded g = Parser(text, *chart).parse();
  if (g.kind == Kind::Form && !g.t.is_zero()) throw ParseError("expected a multivector, found a form", 1, 1);
  return MultiVector(chart, std::move(g.t));
}

DiffForm parse_form(std::string_view text, const ChartPtr& chart) {
  Graded g = Parser(text, *chart).parse();
  if (g.kind == Kind::Vector && !g.t.is_zero()) throw ParseError("expected a form, found a multivector", 1, 1);
  return DiffForm(chart, std::move(g.t));
}

}  // namespace courant
