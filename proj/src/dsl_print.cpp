#include <string>

#include "qpart/dsl.hpp"

namespace qpart::dsl {
namespace {

// Levels: 0 sum of terms, 1 product of factors, 2 atom.
std::string int_str(const IntExpr& e, int level) {
  auto wrap = [](std::string s, bool yes) { return yes ? "(" + s + ")" : s; };
  switch (e.kind) {
    case IntExpr::Kind::Literal:
      return std::to_string(e.value);
    case IntExpr::Kind::Index:
      return e.name;
    case IntExpr::Kind::Add:
      return wrap(int_str(*e.lhs, 0) + "+" + int_str(*e.rhs, 1), level > 0);
    case IntExpr::Kind::Sub:
      return wrap(int_str(*e.lhs, 0) + "-" + int_str(*e.rhs, 1), level > 0);
    case IntExpr::Kind::Mul:
      return wrap(int_str(*e.lhs, 1) + "*" + int_str(*e.rhs, 2), level > 1);
    case IntExpr::Kind::Neg:
      return wrap("-" + int_str(*e.lhs, 2), level > 0);
  }
  return {};
}

std::string atom(const IntExpr& e) {
  if (e.kind == IntExpr::Kind::Literal && e.value >= 0) return std::to_string(e.value);
  if (e.kind == IntExpr::Kind::Index) return e.name;
  return "(" + int_str(e, 0) + ")";
}

std::string qpow(const IntExpr& exponent) {
  if (exponent.kind == IntExpr::Kind::Literal && exponent.value == 1) return "q";
  return "q^" + atom(exponent);
}

// Levels: 0 expression, 1 term, 2 factor, 3 base.
std::string str(const Expr& e, int level) {
  auto wrap = [](std::string s, bool yes) { return yes ? "(" + s + ")" : s; };
  switch (e.kind) {
    case Expr::Kind::Integer:
      return e.integer.get_str();
    case Expr::Kind::IndexRef:
      return e.index;
    case Expr::Kind::QPower:
      return qpow(*e.exponent);
    case Expr::Kind::Poch: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) s += ",";
        if (e.args[i].negative) s += "-";
        s += qpow(*e.args[i].exponent);
      }
      s += ";" + qpow(*e.step) + ")_";
      s += e.length ? atom(*e.length) : "inf";
      return s;
    }
    case Expr::Kind::Add:
      return wrap(str(*e.lhs, 0) + " + " + str(*e.rhs, 1), level > 0);
    case Expr::Kind::Sub:
      return wrap(str(*e.lhs, 0) + " - " + str(*e.rhs, 1), level > 0);
    case Expr::Kind::Neg:
      return wrap("-" + str(*e.lhs, 1), level > 0);
    case Expr::Kind::Mul:
      return wrap(str(*e.lhs, 1) + "*" + str(*e.rhs, 2), level > 1);
    case Expr::Kind::Div:
      return wrap(str(*e.lhs, 1) + "/" + str(*e.rhs, 2), level > 1);
    case Expr::Kind::Power: {
      // q^k alone would read back as a single q-power.
      const bool qbase = e.lhs->kind == Expr::Kind::QPower;
      return wrap(wrap(str(*e.lhs, 3), qbase) + "^" + atom(*e.exponent), level > 2);
    }
    case Expr::Kind::Sum: {
      std::string s = "sum(" + e.index + "=";
      s += e.lower ? int_str(*e.lower, 0) : "-inf";
      s += "..";
      s += e.upper ? int_str(*e.upper, 0) : "inf";
      return s + ", " + str(*e.lhs, 0) + ")";
    }
  }
  return {};
}

}  // namespace

std::string print(const Expr& e) { return str(e, 0); }

std::string print(const IntExpr& e) { return int_str(e, 0); }

}  // namespace qpart::dsl
