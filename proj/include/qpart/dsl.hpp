#ifndef QPART_DSL_HPP
#define QPART_DSL_HPP

// A small expression language for q-series.
//
//   expr    := [ "-" ] term { ("+"|"-") term }
//   term    := factor { ("*"|"/") factor }
//   factor  := base [ "^" intatom ]
//   base    := integer | qpow | poch | sum | ident | "(" expr ")"
//   qpow    := "q" [ "^" intatom ]
//   poch    := "(" signedq { "," signedq } ";" qpow ")" "_" ( "inf" | intatom )
//   signedq := [ "-" ] qpow
//   sum     := "sum" "(" ident "=" ( intexp | "-inf" ) ".." ( "inf" | intexp ) "," expr ")"
//   intexp  := intterm { ("+"|"-") intterm }
//   intterm := intatom { "*" intatom }
//   intatom := integer | ident | "-" intatom | "(" intexp ")"
//
// Whitespace is ignored. A "-inf" lower bound requires an "inf" upper bound
// and sums over all integers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpart/errors.hpp"
#include "qpart/series.hpp"

namespace qpart::dsl {

struct IntExpr;
using IntExprPtr = std::shared_ptr<const IntExpr>;

// Integer-valued expression over bound summation indices.
struct IntExpr {
  enum class Kind { Literal, Index, Add, Sub, Mul, Neg };

  Kind kind;
  std::int64_t value = 0;  // Literal
  std::string name;        // Index
  IntExprPtr lhs;          // Add/Sub/Mul, operand of Neg
  IntExprPtr rhs;

  static IntExprPtr literal(std::int64_t v);
  static IntExprPtr index(std::string name);
  static IntExprPtr binary(Kind k, IntExprPtr a, IntExprPtr b);
  static IntExprPtr negate(IntExprPtr a);
};

bool operator==(const IntExpr& a, const IntExpr& b);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// ±q^exponent as a Pochhammer argument.
struct SignedQ {
  bool negative = false;
  IntExprPtr exponent;
};

struct Expr {
  enum class Kind { Integer, QPower, Poch, Add, Sub, Mul, Div, Neg, Power, Sum, IndexRef };

  Kind kind;
  qpart::Integer integer;        // Integer
  IntExprPtr exponent;           // QPower, Power
  std::vector<SignedQ> args;     // Poch
  IntExprPtr step;               // Poch base exponent
  IntExprPtr length;             // Poch; null means inf
  ExprPtr lhs;                   // binary ops, operand of Neg/Power, Sum body
  ExprPtr rhs;
  std::string index;             // Sum index, IndexRef name
  IntExprPtr lower;              // Sum; null means -inf
  IntExprPtr upper;              // Sum; null means inf
};

bool operator==(const Expr& a, const Expr& b);

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected, std::string found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
  std::string found_;
};

/// An index identifier used outside every sum that binds it.
class UnboundIndex : public ParseError {
 public:
  UnboundIndex(std::size_t line, std::size_t column, const std::string& name);
};

ExprPtr parse(std::string_view source);

/// Canonical text; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);
std::string print(const IntExpr& e);

/// Evaluates to a series of the given order. Throws NegativeQExponent,
/// InvalidSpecialization, NonUnitConstantTerm, NonIntegralQuotient,
/// NonTerminatingSum or IntegerOverflow.
Series evaluate(const Expr& e, std::size_t order);

/// Index assignment used by the evaluator.
using Environment = std::map<std::string, std::int64_t, std::less<>>;
std::int64_t evaluate_int(const IntExpr& e, const Environment& env);

}  // namespace qpart::dsl

#endif  // QPART_DSL_HPP
