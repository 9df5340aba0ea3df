#include "qpart/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qpart/errors.hpp"

namespace qpart {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("a series needs at least the constant coefficient");
  }
}

Series Series::constant(const Integer& c, std::size_t order) {
  std::vector<Integer> v(order + 1);
  v[0] = c;
  return Series(std::move(v));
}

Series Series::monomial(std::size_t exponent, const Integer& c, std::size_t order) {
  std::vector<Integer> v(order + 1);
  if (exponent <= order) v[exponent] = c;
  return Series(std::move(v));
}

const Integer& Series::coefficient(std::size_t n) const {
  if (n > order()) {
    throw IndexBeyondOrder("coefficient index " + std::to_string(n) +
                           " exceeds series order " + std::to_string(order()));
  }
  return coeffs_[n];
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return i;
  }
  return std::nullopt;
}

Series Series::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw IndexBeyondOrder("cannot extend a series of order " + std::to_string(this->order()) +
                           " to order " + std::to_string(order));
  }
  return Series(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::dilated(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i * k < v.size(); ++i) v[i * k] = coeffs_[i];
  return Series(std::move(v));
}

Series Series::shifted(std::size_t k) const {
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = k; i < v.size(); ++i) v[i] = coeffs_[i - k];
  return Series(std::move(v));
}

std::string Series::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ' ';
    os << coeffs_[i].get_str();
  }
  return os.str();
}

Series operator+(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Integer> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] + b[i];
  return Series(std::move(v));
}

Series operator-(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Integer> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] - b[i];
  return Series(std::move(v));
}

Series operator-(const Series& a) {
  std::vector<Integer> v(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) v[i] = -a[i];
  return Series(std::move(v));
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Integer> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(v[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return Series(std::move(v));
}

Series operator*(const Integer& c, const Series& a) {
  std::vector<Integer> v(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) v[i] = c * a[i];
  return Series(std::move(v));
}

bool operator==(const Series& a, const Series& b) {
  return !first_divergence(a, b).has_value();
}

Series invert(const Series& a) {
  const Integer& a0 = a[0];
  if (a0 != 1 && a0 != -1) {
    throw NonUnitConstantTerm("cannot invert a series with constant term " + a0.get_str() +
                              " (must be +1 or -1)");
  }
  // a0 * b_n = -sum_{k=1..n} a_k b_{n-k}, and 1/a0 == a0.
  const std::size_t n = a.order();
  std::vector<Integer> b(n + 1);
  b[0] = a0;
  Integer acc;
  for (std::size_t m = 1; m <= n; ++m) {
    acc = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (sgn(a[k]) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[m - k].get_mpz_t());
    }
    b[m] = a0 == 1 ? Integer(-acc) : acc;
  }
  return Series(std::move(b));
}

Series pow(const Series& a, std::int64_t k) {
  if (k < 0) {
    // -k would overflow for INT64_MIN; peel one factor first.
    const Series inv = invert(a);
    return pow(inv, -(k + 1)) * inv;
  }
  Series result = Series::one(a.order());
  Series base = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Series divide_exact(const Series& a, const Integer& c) {
  if (sgn(c) == 0) throw NonIntegralQuotient("division of a series by zero");
  std::vector<Integer> v(a.order() + 1);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (!mpz_divisible_p(a[i].get_mpz_t(), c.get_mpz_t())) {
      throw NonIntegralQuotient("coefficient " + a[i].get_str() + " of q^" + std::to_string(i) +
                                " is not divisible by " + c.get_str());
    }
    mpz_divexact(v[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  }
  return Series(std::move(v));
}

std::optional<std::size_t> first_divergence(const Series& a, const Series& b, std::size_t from) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = from; i <= n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

}  // namespace qpart
