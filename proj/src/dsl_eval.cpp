#include <cstdint>
#include <optional>
#include <string>

#include "qpart/dsl.hpp"
#include "qpart/qfactory.hpp"

namespace qpart::dsl {
namespace {

[[noreturn]] void overflow() { throw IntegerOverflow("integer expression overflows 64 bits"); }

bool is_constant(const Series& s) {
  for (std::size_t i = 1; i <= s.order(); ++i) {
    if (s[i] != 0) return false;
  }
  return true;
}

class Evaluator {
 public:
  explicit Evaluator(std::size_t order) : order_(order) {}

  Series eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Integer:
        return Series::constant(e.integer, order_);
      case Expr::Kind::IndexRef:
        return Series::constant(Integer(static_cast<long>(lookup(e.index))), order_);
      case Expr::Kind::QPower: {
        const std::int64_t k = evaluate_int(*e.exponent, env_);
        if (k < 0) throw NegativeQExponent("q^" + std::to_string(k) + " is not a power series");
        return Series::monomial(static_cast<std::size_t>(k), 1, order_);
      }
      case Expr::Kind::Poch:
        return poch(e);
      case Expr::Kind::Add:
        return eval(*e.lhs) + eval(*e.rhs);
      case Expr::Kind::Sub:
        return eval(*e.lhs) - eval(*e.rhs);
      case Expr::Kind::Mul:
        return eval(*e.lhs) * eval(*e.rhs);
      case Expr::Kind::Div:
        return divide(eval(*e.lhs), eval(*e.rhs));
      case Expr::Kind::Neg:
        return -eval(*e.lhs);
      case Expr::Kind::Power:
        return pow(eval(*e.lhs), evaluate_int(*e.exponent, env_));
      case Expr::Kind::Sum:
        return sum(e);
    }
    return Series(order_);
  }

 private:
  std::int64_t lookup(const std::string& name) const {
    const auto it = env_.find(name);
    if (it == env_.end()) throw UnknownName("unbound index '" + name + "'");
    return it->second;
  }

  Series divide(const Series& a, const Series& b) {
    if (is_constant(b) && b[0] != 1 && b[0] != -1) {
      if (b[0] == 0) throw NonUnitConstantTerm("division by zero");
      return divide_exact(a, b[0]);
    }
    return a * invert(b);
  }

  Series poch(const Expr& e) {
    const std::int64_t step = evaluate_int(*e.step, env_);
    if (step < 1) throw InvalidSpecialization("Pochhammer base q^" + std::to_string(step));
    std::optional<std::int64_t> length;
    if (e.length) length = evaluate_int(*e.length, env_);
    Series result = Series::one(order_);
    for (const SignedQ& arg : e.args) {
      const std::int64_t a = evaluate_int(*arg.exponent, env_);
      const int sign = arg.negative ? -1 : 1;
      if (a < 0) throw NegativeQExponent("Pochhammer argument q^" + std::to_string(a));
      if (length) {
        result = result * finite_pochhammer(FinitePochSpec(sign, a, step, *length), order_);
      } else {
        if (a == 0) {
          throw InvalidSpecialization("infinite Pochhammer symbol with argument q^0");
        }
        result = result * pochhammer(PochSpec(sign, a, step), order_);
      }
    }
    return result;
  }

  Series term(const Expr& body, const std::string& index, std::int64_t n) {
    env_[index] = n;
    return eval(body);
  }

  Series sum(const Expr& e) {
    const auto outer = env_.find(e.index);
    const bool shadows = outer != env_.end();
    const std::int64_t saved = shadows ? outer->second : 0;
    Series total(order_);
    if (e.lower && e.upper) {
      const std::int64_t lo = evaluate_int(*e.lower, env_);
      const std::int64_t hi = evaluate_int(*e.upper, env_);
      for (std::int64_t n = lo; n <= hi; ++n) total = total + term(*e.lhs, e.index, n);
    } else {
      // Infinite: stop after two consecutive summands that vanish to this order.
      const std::size_t limit = 10 * (order_ + 2);
      int quiet = 0;
      std::size_t steps = 0;
      const bool bilateral = !e.lower;
      std::int64_t n = bilateral ? 0 : evaluate_int(*e.lower, env_);
      while (quiet < 2) {
        if (++steps > limit) {
          throw NonTerminatingSum("sum over '" + e.index + "' did not settle after " +
                                  std::to_string(limit) + " terms");
        }
        Series level = term(*e.lhs, e.index, n);
        if (bilateral && n > 0) level = level + term(*e.lhs, e.index, -n);
        total = total + level;
        quiet = level.is_zero() ? quiet + 1 : 0;
        if (__builtin_add_overflow(n, 1, &n)) overflow();
      }
    }
    if (shadows) {
      env_[e.index] = saved;
    } else {
      env_.erase(e.index);
    }
    return total;
  }

  std::size_t order_;
  Environment env_;
};

}  // namespace

std::int64_t evaluate_int(const IntExpr& e, const Environment& env) {
  if (e.kind == IntExpr::Kind::Literal) return e.value;
  if (e.kind == IntExpr::Kind::Index) {
    const auto it = env.find(e.name);
    if (it == env.end()) throw UnknownName("unbound index '" + e.name + "'");
    return it->second;
  }
  const std::int64_t a = evaluate_int(*e.lhs, env);
  std::int64_t r = 0;
  bool bad = false;
  switch (e.kind) {
    case IntExpr::Kind::Add:
      bad = __builtin_add_overflow(a, evaluate_int(*e.rhs, env), &r);
      break;
    case IntExpr::Kind::Sub:
      bad = __builtin_sub_overflow(a, evaluate_int(*e.rhs, env), &r);
      break;
    case IntExpr::Kind::Mul:
      bad = __builtin_mul_overflow(a, evaluate_int(*e.rhs, env), &r);
      break;
    case IntExpr::Kind::Neg:
      bad = __builtin_sub_overflow(std::int64_t{0}, a, &r);
      break;
    default:
      break;
  }
  if (bad) overflow();
  return r;
}

Series evaluate(const Expr& e, std::size_t order) { return Evaluator(order).eval(e); }

}  // namespace qpart::dsl
