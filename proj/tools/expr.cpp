#include "expr.hpp"

#include <cctype>
#include <cmath>
#include <fmt/format.h>

#include <algorithm>
#include <array>

namespace sta::cli {

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::vector<std::string> expected)
    : Error(message), offset_(offset), expected_(std::move(expected)) {}

UnknownSymbolError::UnknownSymbolError(const std::string& name, std::size_t offset)
    : ParseError(fmt::format("unknown symbol '{}' at offset {}", name, offset), offset) {}

namespace {

enum class Tok { Number, Imaginary, Ident, Op, LParen, RParen, LAngle, RAngle, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // canonical spelling for operators
  double value = 0.0;
  std::size_t offset = 0;
};

struct Spelling {
  std::string_view text;
  Tok kind;
  std::string_view canonical;
};

// Longest spellings first.
constexpr std::array<Spelling, 18> kSpellings{{
    {"\xE2\x88\x98", Tok::Op, "o"},    // ring operator
    {"\xE2\x8A\x97", Tok::Op, "x"},    // circled times
    {"\xE2\x88\xA7", Tok::Op, "/\\"},  // logical and
    {"\xE2\x88\x92", Tok::Op, "-"},    // minus sign
    {"\xE2\x9F\xA8", Tok::LAngle, "<"},
    {"\xE2\x9F\xA9", Tok::RAngle, ">"},
    {"\xC2\xB7", Tok::Op, "."},  // middle dot
    {"/\\", Tok::Op, "/\\"},
    {"+", Tok::Op, "+"},
    {"-", Tok::Op, "-"},
    {"*", Tok::Op, "*"},
    {".", Tok::Op, "."},
    {"^", Tok::Op, "^"},
    {"~", Tok::Op, "~"},
    {"#", Tok::Op, "#"},
    {"!", Tok::Op, "!"},
    {"(", Tok::LParen, "("},
    {")", Tok::RParen, ")"},
}};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (digit(c)) {
      while (i < s.size() && digit(s[i])) ++i;
      if (i + 1 < s.size() && s[i] == '.' && digit(s[i + 1])) {
        ++i;
        while (i < s.size() && digit(s[i])) ++i;
      }
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        if (j < s.size() && digit(s[j])) {
          while (j < s.size() && digit(s[j])) ++j;
          i = j;
        }
      }
      Token t{Tok::Number, std::string(s.substr(start, i - start)), 0.0, start};
      t.value = std::stod(t.text);
      if (i < s.size() && s[i] == 'i' && (i + 1 == s.size() || !ident_char(s[i + 1]))) {
        t.kind = Tok::Imaginary;
        ++i;
      }
      out.push_back(std::move(t));
      continue;
    }
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      if (word == "o" || word == "x") {
        out.push_back({Tok::Op, word, 0.0, start});
      } else {
        out.push_back({Tok::Ident, word, 0.0, start});
      }
      continue;
    }
    if (c == '<' || c == '>') {
      out.push_back({c == '<' ? Tok::LAngle : Tok::RAngle, std::string(1, c), 0.0, start});
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& sp : kSpellings) {
      if (s.substr(i, sp.text.size()) == sp.text) {
        out.push_back({sp.kind, std::string(sp.canonical), 0.0, start});
        i += sp.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError(fmt::format("unexpected character at offset {}", start), start,
                       {"number", "symbol", "operator"});
    }
  }
  out.push_back({Tok::End, "", 0.0, s.size()});
  return out;
}

constexpr std::array<std::string_view, 10> kSymbols{"g0", "g1", "g2", "g3", "e1",
                                                    "e2", "e3", "I",  "J",  "i"};
constexpr std::array<std::string_view, 4> kFunctions{"exp", "inv", "matrix", "det"};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& a, std::string_view s) {
  return std::find(a.begin(), a.end(), s) != a.end();
}

const std::vector<std::string>& atom_expected() {
  static const std::vector<std::string> e{"number", "symbol", "function", "(", "<",
                                          "~",      "#",      "!"};
  return e;
}

bool product_op(const Token& t, BinaryOp& op) {
  if (t.kind != Tok::Op) return false;
  if (t.text == "*") op = BinaryOp::Geometric;
  else if (t.text == "o") op = BinaryOp::Symmetric;
  else if (t.text == "x") op = BinaryOp::Antisymmetric;
  else if (t.text == "/\\") op = BinaryOp::Outer;
  else if (t.text == ".") op = BinaryOp::Inner;
  else return false;
  return true;
}

ExprPtr make(ExprKind k) {
  auto e = std::make_unique<Expr>();
  e->kind = k;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (peek().kind != Tok::End) {
      fail("unexpected token", {"+", "-", "*", "o", "x", "/\\", ".", "^", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool at_op(std::string_view s) const { return peek().kind == Tok::Op && peek().text == s; }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    std::string list;
    for (const auto& e : expected) list += (list.empty() ? "" : ", ") + ("'" + e + "'");
    throw ParseError(fmt::format("syntax error at offset {}: {}; expected one of {}",
                                 peek().offset, what, list),
                     peek().offset, std::move(expected));
  }

  void expect(Tok kind, const std::string& spelling) {
    if (peek().kind != kind) fail("unexpected token", {spelling});
    take();
  }

  ExprPtr parse_expr() {
    ExprPtr lhs;
    if (at_op("-")) {
      take();
      lhs = make(ExprKind::Unary);
      lhs->unary = UnaryOp::Negate;
      lhs->children.push_back(parse_term());
    } else {
      lhs = parse_term();
    }
    while (at_op("+") || at_op("-")) {
      const bool add = take().text == "+";
      ExprPtr node = make(ExprKind::Binary);
      node->binary = add ? BinaryOp::Add : BinaryOp::Sub;
      node->children.push_back(std::move(lhs));
      node->children.push_back(parse_term());
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    std::string chain;
    BinaryOp op{};
    while (product_op(peek(), op)) {
      if (!chain.empty() && peek().text != chain) {
        fail("mixing product operators requires parentheses", {chain, "(", ")"});
      }
      chain = take().text;
      ExprPtr node = make(ExprKind::Binary);
      node->binary = op;
      node->children.push_back(std::move(lhs));
      node->children.push_back(parse_factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_unary();
    if (!at_op("^")) return base;
    take();
    bool negative = false;
    if (at_op("-")) {
      take();
      negative = true;
    }
    const Token& t = peek();
    if (t.kind != Tok::Number || t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail("exponent must be an integer", {"integer"});
    }
    take();
    ExprPtr node = make(ExprKind::Power);
    node->integer = static_cast<int>(negative ? -t.value : t.value);
    node->children.push_back(std::move(base));
    return node;
  }

  ExprPtr parse_unary() {
    if (at_op("~") || at_op("#") || at_op("!")) {
      const std::string op = take().text;
      ExprPtr node = make(ExprKind::Unary);
      node->unary = op == "~" ? UnaryOp::Reverse : op == "#" ? UnaryOp::Involute : UnaryOp::Conjugate;
      node->children.push_back(parse_unary());
      return node;
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
      case Tok::Imaginary: {
        take();
        ExprPtr node = make(ExprKind::Number);
        node->number = t.kind == Tok::Number ? Complex{t.value, 0.0} : Complex{0.0, t.value};
        return node;
      }
      case Tok::Ident: {
        take();
        if (contains(kFunctions, t.text)) {
          expect(Tok::LParen, "(");
          ExprPtr node = make(ExprKind::Call);
          node->name = t.text;
          node->children.push_back(parse_expr());
          expect(Tok::RParen, ")");
          return node;
        }
        if (!contains(kSymbols, t.text)) throw UnknownSymbolError(t.text, t.offset);
        ExprPtr node = make(ExprKind::Symbol);
        node->name = t.text;
        return node;
      }
      case Tok::LParen: {
        take();
        ExprPtr inner = parse_expr();
        expect(Tok::RParen, ")");
        return inner;
      }
      case Tok::LAngle: {
        take();
        ExprPtr inner = parse_expr();
        expect(Tok::RAngle, ">");
        const Token& g = peek();
        if (g.kind != Tok::Number || g.text.size() != 1 || g.text[0] > '4') {
          fail("grade must be a digit 0..4", {"0", "1", "2", "3", "4"});
        }
        take();
        ExprPtr node = make(ExprKind::Grade);
        node->integer = g.text[0] - '0';
        node->children.push_back(std::move(inner));
        return node;
      }
      default:
        fail("unexpected token", atom_expected());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string number_text(double v) { return fmt::format("{:.17g}", v); }

const char* binary_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Geometric: return "*";
    case BinaryOp::Symmetric: return "o";
    case BinaryOp::Antisymmetric: return "x";
    case BinaryOp::Outer: return "/\\";
    case BinaryOp::Inner: return ".";
  }
  return "?";
}

Multivector symbol_value(const std::string& s) {
  using namespace basis;
  if (s.size() == 2 && s[0] == 'g') return gamma(s[1] - '0');
  if (s.size() == 2 && s[0] == 'e') return e(s[1] - '0');
  if (s == "I") return pseudoscalar();
  if (s == "J") return J();
  return imag();
}

std::string coeff_text(double v) { return fmt::format("{:.12g}", v + 0.0); }

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case ExprKind::Number:
      if (a.number != b.number) return false;
      break;
    case ExprKind::Symbol:
    case ExprKind::Call:
      if (a.name != b.name) return false;
      break;
    case ExprKind::Unary:
      if (a.unary != b.unary) return false;
      break;
    case ExprKind::Binary:
      if (a.binary != b.binary) return false;
      break;
    case ExprKind::Power:
    case ExprKind::Grade:
      if (a.integer != b.integer) return false;
      break;
  }
  for (std::size_t k = 0; k < a.children.size(); ++k) {
    if (!(*a.children[k] == *b.children[k])) return false;
  }
  return true;
}

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number:
      if (e.number.imag() == 0.0) return number_text(e.number.real());
      if (e.number.real() == 0.0) return number_text(e.number.imag()) + "i";
      return "(" + number_text(e.number.real()) + " + " + number_text(e.number.imag()) + "i)";
    case ExprKind::Symbol:
      return e.name;
    case ExprKind::Unary: {
      const std::string arg = to_string(*e.children[0]);
      switch (e.unary) {
        case UnaryOp::Reverse: return "~" + arg;
        case UnaryOp::Involute: return "#" + arg;
        case UnaryOp::Conjugate: return "!" + arg;
        case UnaryOp::Negate: return "(-" + arg + ")";
      }
      return arg;
    }
    case ExprKind::Binary:
      return "(" + to_string(*e.children[0]) + " " + binary_text(e.binary) + " " +
             to_string(*e.children[1]) + ")";
    case ExprKind::Power:
      return "(" + to_string(*e.children[0]) + ")^" + std::to_string(e.integer);
    case ExprKind::Grade:
      return "<" + to_string(*e.children[0]) + ">" + std::to_string(e.integer);
    case ExprKind::Call:
      return e.name + "(" + to_string(*e.children[0]) + ")";
  }
  return {};
}

EvalResult evaluate(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number:
      return {Multivector::scalar(e.number)};
    case ExprKind::Symbol:
      return {symbol_value(e.name)};
    case ExprKind::Unary: {
      EvalResult r = evaluate(*e.children[0]);
      switch (e.unary) {
        case UnaryOp::Reverse: r.value = reverse(r.value); break;
        case UnaryOp::Involute: r.value = grade_involute(r.value); break;
        case UnaryOp::Conjugate: r.value = complex_conjugate(r.value); break;
        case UnaryOp::Negate: r.value = -r.value; break;
      }
      return r;
    }
    case ExprKind::Binary: {
      EvalResult a = evaluate(*e.children[0]);
      const EvalResult b = evaluate(*e.children[1]);
      a.show_matrix = a.show_matrix || b.show_matrix;
      switch (e.binary) {
        case BinaryOp::Add: a.value = a.value + b.value; break;
        case BinaryOp::Sub: a.value = a.value - b.value; break;
        case BinaryOp::Geometric: a.value = a.value * b.value; break;
        case BinaryOp::Symmetric: a.value = sym_product(a.value, b.value); break;
        case BinaryOp::Antisymmetric: a.value = antisym_product(a.value, b.value); break;
        case BinaryOp::Outer: a.value = outer_product(a.value, b.value); break;
        case BinaryOp::Inner: a.value = inner_product(a.value, b.value); break;
      }
      return a;
    }
    case ExprKind::Power: {
      EvalResult r = evaluate(*e.children[0]);
      r.value = power(r.value, e.integer);
      return r;
    }
    case ExprKind::Grade: {
      EvalResult r = evaluate(*e.children[0]);
      r.value = grade_project(r.value, e.integer);
      return r;
    }
    case ExprKind::Call: {
      EvalResult r = evaluate(*e.children[0]);
      if (e.name == "exp") r.value = exp(r.value);
      else if (e.name == "inv") r.value = inverse(r.value);
      else if (e.name == "det") r.value = Multivector::scalar(det4(to_matrix(r.value)));
      else r.show_matrix = true;
      return r;
    }
  }
  return {};
}

std::string format_multivector(const Multivector& g, double zero_tol) {
  std::string out;
  for (unsigned mask : kCanonicalOrder) {
    const Complex c = g[mask];
    if (std::abs(c) <= zero_tol) continue;
    const bool real = std::abs(c.imag()) <= zero_tol;
    std::string coeff;
    if (real) {
      const double v = c.real();
      if (!out.empty()) out += v < 0.0 ? " - " : " + ";
      coeff = coeff_text(out.empty() ? v : std::abs(v));
    } else {
      if (!out.empty()) out += " + ";
      coeff = fmt::format("({}{:+.12g}i)", coeff_text(c.real()), c.imag() + 0.0);
    }
    out += mask == 0 ? coeff : coeff + "\xC2\xB7" + blade_name(mask);
  }
  return out.empty() ? "0" : out;
}

std::string format_matrix(const MatrixRep& m) {
  std::string out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const Complex z = m(r, c);
      if (c > 0) out += "  ";
      out += fmt::format("{}{:+.12g}i", coeff_text(z.real()), z.imag() + 0.0);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sta::cli
