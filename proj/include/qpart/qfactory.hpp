#ifndef QPART_QFACTORY_HPP
#define QPART_QFACTORY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpart/series.hpp"

namespace qpart {

// (±q^offset; q^step)_∞ raised to `exponent`, i.e.
//   prod_{k>=0} (1 - sign * q^{offset + k*step})^exponent.
// sign = +1 gives (q^a;q^m)_∞, sign = -1 gives (-q^a;q^m)_∞.
struct PochSpec {
  PochSpec(int sign, std::int64_t offset, std::int64_t step, std::int64_t exponent = 1);

  int sign;
  std::int64_t offset;
  std::int64_t step;
  std::int64_t exponent;
};

// (±q^offset; q^step)_length = prod_{k=0}^{length-1} (1 - sign * q^{offset + k*step}).
// offset may be zero here; the product is finite.
struct FinitePochSpec {
  FinitePochSpec(int sign, std::int64_t offset, std::int64_t step, std::int64_t length);

  int sign;
  std::int64_t offset;
  std::int64_t step;
  std::int64_t length;
};

// sum_{n in Z} alt^n q^{quad*n^2 + lin*n + shift}
struct ThetaSpec {
  ThetaSpec(std::int64_t quad, std::int64_t lin, int alt, std::int64_t shift = 0);

  std::int64_t quad;
  std::int64_t lin;
  int alt;
  std::int64_t shift;
};

Series pochhammer(const PochSpec& spec, std::size_t order);
Series finite_pochhammer(const FinitePochSpec& spec, std::size_t order);

/// Exact bilateral sum truncated at `order`. Throws InvalidSpecialization if
/// some term would carry a negative exponent.
Series theta(const ThetaSpec& spec, std::size_t order);

struct JacobiSides {
  Series product;
  Series sum;
};

/// Both sides of the Jacobi triple product
///   (q, -xq, -1/x; q)_∞ = sum_n x^n q^{n(n+1)/2}
/// after q -> q^qscale and x = xsign * q^xexp. The product side is built
/// from Pochhammer factors, the sum side by direct summation.
/// Throws InvalidSpecialization unless every factor has a positive exponent
/// (equivalently 1 - qscale <= xexp <= -1).
JacobiSides jacobi_triple_product_sides(std::int64_t qscale, std::int64_t xexp, int xsign,
                                        std::size_t order);

struct CatalogEntry {
  std::string_view key;
  std::string_view formula;  // human-readable rendering
};

/// Every named generating function, in a stable order.
const std::vector<CatalogEntry>& catalog();

/// Builds the named series to `order`; throws UnknownName.
Series named_series(std::string_view name, std::size_t order);

bool is_catalog_key(std::string_view name);

}  // namespace qpart

#endif  // QPART_QFACTORY_HPP
