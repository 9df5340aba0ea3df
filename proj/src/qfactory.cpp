#include "qpart/qfactory.hpp"

#include <string>
#include <vector>

#include "qpart/errors.hpp"
#include "quadratic_terms.hpp"

namespace qpart {
namespace {

void check_sign(int sign, const char* what) {
  if (sign != 1 && sign != -1) {
    throw InvalidSpecialization(std::string(what) + ": sign must be +1 or -1, got " +
                                std::to_string(sign));
  }
}

// v *= (1 - sign q^d), in place, truncated to v.size() - 1.
void multiply_binomial(std::vector<Integer>& v, int sign, std::size_t d) {
  if (d == 0) {
    const int factor = 1 - sign;
    for (auto& c : v) c *= factor;
    return;
  }
  for (std::size_t i = v.size(); i-- > d;) {
    if (sign > 0) {
      v[i] -= v[i - d];
    } else {
      v[i] += v[i - d];
    }
  }
}

// v /= (1 - sign q^d) for d >= 1.
void divide_binomial(std::vector<Integer>& v, int sign, std::size_t d) {
  for (std::size_t i = d; i < v.size(); ++i) {
    if (sign > 0) {
      v[i] += v[i - d];
    } else {
      v[i] -= v[i - d];
    }
  }
}

}  // namespace

PochSpec::PochSpec(int sign_, std::int64_t offset_, std::int64_t step_, std::int64_t exponent_)
    : sign(sign_), offset(offset_), step(step_), exponent(exponent_) {
  check_sign(sign, "PochSpec");
  if (offset < 1) {
    throw InvalidSpecialization("infinite Pochhammer symbol needs an argument exponent >= 1, got " +
                                std::to_string(offset));
  }
  if (step < 1) {
    throw InvalidSpecialization("Pochhammer base exponent must be >= 1, got " +
                                std::to_string(step));
  }
}

FinitePochSpec::FinitePochSpec(int sign_, std::int64_t offset_, std::int64_t step_,
                               std::int64_t length_)
    : sign(sign_), offset(offset_), step(step_), length(length_) {
  check_sign(sign, "FinitePochSpec");
  if (offset < 0) {
    throw NegativeQExponent("finite Pochhammer argument exponent must be >= 0, got " +
                            std::to_string(offset));
  }
  if (step < 1) {
    throw InvalidSpecialization("Pochhammer base exponent must be >= 1, got " +
                                std::to_string(step));
  }
  if (length < 0) {
    throw InvalidSpecialization("finite Pochhammer length must be >= 0, got " +
                                std::to_string(length));
  }
}

ThetaSpec::ThetaSpec(std::int64_t quad_, std::int64_t lin_, int alt_, std::int64_t shift_)
    : quad(quad_), lin(lin_), alt(alt_), shift(shift_) {
  if (quad < 1) throw InvalidSpecialization("theta quadratic coefficient must be >= 1");
  check_sign(alt, "ThetaSpec");
  if (shift < 0) throw InvalidSpecialization("theta shift must be >= 0");
}

Series pochhammer(const PochSpec& spec, std::size_t order) {
  std::vector<Integer> v(order + 1);
  v[0] = 1;
  const auto n = static_cast<std::int64_t>(order);
  for (std::int64_t d = spec.offset; d <= n; d += spec.step) {
    const auto ud = static_cast<std::size_t>(d);
    if (spec.exponent >= 0) {
      for (std::int64_t e = 0; e < spec.exponent; ++e) multiply_binomial(v, spec.sign, ud);
    } else {
      for (std::int64_t e = 0; e < -spec.exponent; ++e) divide_binomial(v, spec.sign, ud);
    }
  }
  return Series(std::move(v));
}

Series finite_pochhammer(const FinitePochSpec& spec, std::size_t order) {
  std::vector<Integer> v(order + 1);
  v[0] = 1;
  const auto n = static_cast<std::int64_t>(order);
  for (std::int64_t k = 0; k < spec.length; ++k) {
    const std::int64_t d = spec.offset + k * spec.step;
    if (d > n) break;
    multiply_binomial(v, spec.sign, static_cast<std::size_t>(d));
  }
  return Series(std::move(v));
}

Series theta(const ThetaSpec& spec, std::size_t order) {
  std::vector<Integer> v(order + 1);
  const detail::Quadratic f{spec.quad, spec.lin, spec.shift};
  detail::for_each_quadratic_term(f, order, [&](std::int64_t n, std::size_t e) {
    const bool negative = spec.alt < 0 && (n % 2 != 0);
    if (negative) {
      v[e] -= 1;
    } else {
      v[e] += 1;
    }
  });
  return Series(std::move(v));
}

JacobiSides jacobi_triple_product_sides(std::int64_t qscale, std::int64_t xexp, int xsign,
                                        std::size_t order) {
  if (qscale < 1) throw InvalidSpecialization("JTP: q-scale must be >= 1");
  check_sign(xsign, "JTP");
  // Factors: (q^Q;q^Q), (-x q^Q;q^Q) = (-xsign q^{xexp+Q};q^Q), (-1/x;q^Q) = (-xsign q^{-xexp};q^Q).
  if (xexp + qscale < 1 || -xexp < 1) {
    throw InvalidSpecialization("JTP: x = " + std::string(xsign < 0 ? "-" : "") + "q^" +
                                std::to_string(xexp) + " with q -> q^" + std::to_string(qscale) +
                                " gives a factor with non-positive exponent");
  }
  Series product = pochhammer(PochSpec(1, qscale, qscale), order) *
                   pochhammer(PochSpec(-xsign, xexp + qscale, qscale), order) *
                   pochhammer(PochSpec(-xsign, -xexp, qscale), order);

  // x^n q^{Q n(n+1)/2} = xsign^n q^{(Q/2) n^2 + (Q/2 + xexp) n}; work with the
  // doubled exponent so odd Q stays integral.
  std::vector<Integer> v(order + 1);
  const detail::Quadratic doubled{qscale, qscale + 2 * xexp, 0};
  detail::for_each_quadratic_term(doubled, 2 * order + 1, [&](std::int64_t n, std::size_t e2) {
    // n(n+1) is even, so e2 is even.
    const std::size_t e = e2 / 2;
    if (e > order) return;
    if (xsign < 0 && n % 2 != 0) {
      v[e] -= 1;
    } else {
      v[e] += 1;
    }
  });
  return {std::move(product), Series(std::move(v))};
}

}  // namespace qpart
