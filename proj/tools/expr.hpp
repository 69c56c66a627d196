#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sta/errors.hpp"
#include "sta/matrix_bridge.hpp"
#include "sta/multivector.hpp"

namespace sta::cli {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::vector<std::string> expected = {});

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownSymbolError : public ParseError {
 public:
  UnknownSymbolError(const std::string& name, std::size_t offset);
};

enum class ExprKind { Number, Symbol, Unary, Binary, Power, Grade, Call };
enum class UnaryOp { Reverse, Involute, Conjugate, Negate };
enum class BinaryOp { Add, Sub, Geometric, Symmetric, Antisymmetric, Outer, Inner };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  ExprKind kind = ExprKind::Number;
  Complex number{};
  std::string name;  // symbol or function name
  UnaryOp unary = UnaryOp::Negate;
  BinaryOp binary = BinaryOp::Add;
  int integer = 0;  // exponent or grade
  std::vector<ExprPtr> children;
};

bool operator==(const Expr& a, const Expr& b);

// expr    := ['-'] term (('+' | '-') term)*
// term    := factor (op factor)*      one product operator per chain
// factor  := unary ['^' ['-'] integer]
// unary   := ('~' | '#' | '!')* atom
// atom    := number | symbol | call '(' expr ')' | '(' expr ')' | '<' expr '>' digit
ExprPtr parse(std::string_view text);

// Reparses to an equal tree.
std::string to_string(const Expr& e);

struct EvalResult {
  Multivector value;
  bool show_matrix = false;  // set by matrix(...)
};

EvalResult evaluate(const Expr& e);

// Nonzero blades in canonical order, e.g. "1·g0 + (0+2i)·g12".
std::string format_multivector(const Multivector& g, double zero_tol = 1e-12);
// Four rows of "a+bi" entries at 12 significant digits.
std::string format_matrix(const MatrixRep& m);

}  // namespace sta::cli
