#ifndef QPART_SERIES_HPP
#define QPART_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qpart {

using Integer = mpz_class;

// A formal power series in q truncated at a fixed order N: the coefficients
// of q^0 .. q^N are stored exactly, everything above is unknown.
//
// Values are immutable. Binary operations silently truncate to the smaller
// of the two input orders, the way hand computation carries an O(q^{N+1})
// tail.
class Series {
 public:
  /// Zero series of the given order.
  explicit Series(std::size_t order);

  /// Takes ownership of the coefficient vector; order is size() - 1.
  /// Throws std::invalid_argument on an empty vector.
  explicit Series(std::vector<Integer> coeffs);

  static Series constant(const Integer& c, std::size_t order);
  static Series one(std::size_t order) { return constant(1, order); }
  /// c * q^exponent, which is the zero series when exponent > order.
  static Series monomial(std::size_t exponent, const Integer& c, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  /// Checked access; throws IndexBeyondOrder when n > order().
  const Integer& coefficient(std::size_t n) const;
  const Integer& operator[](std::size_t n) const noexcept { return coeffs_[n]; }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  /// Smallest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  /// Drops coefficients above `order`. Requires order <= this->order().
  Series truncated(std::size_t order) const;
  /// Substitutes q -> q^k (k >= 1), keeping the same order.
  Series dilated(std::size_t k) const;
  /// Multiplies by q^k, keeping the same order.
  Series shifted(std::size_t k) const;

  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Integer& c, const Series& a);

/// Coefficientwise equality up to the smaller of the two orders.
bool operator==(const Series& a, const Series& b);

/// Multiplicative inverse. The constant term must be +1 or -1, otherwise
/// NonUnitConstantTerm is thrown.
Series invert(const Series& a);

/// a^k for any integer k; negative powers go through invert().
Series pow(const Series& a, std::int64_t k);

/// Divides every coefficient by c exactly; throws NonIntegralQuotient if
/// some coefficient is not a multiple of c (or c is zero).
Series divide_exact(const Series& a, const Integer& c);

/// Smallest n in [from, min order] where the coefficients differ.
std::optional<std::size_t> first_divergence(const Series& a, const Series& b,
                                            std::size_t from = 0);

}  // namespace qpart

#endif  // QPART_SERIES_HPP
