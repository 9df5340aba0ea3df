#ifndef QPART_SRC_QUADRATIC_TERMS_HPP
#define QPART_SRC_QUADRATIC_TERMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "qpart/errors.hpp"

namespace qpart::detail {

// e(n) = a n^2 + b n + c with a >= 1.
struct Quadratic {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  __int128 operator()(std::int64_t n) const {
    const __int128 m = n;
    return a * m * m + b * m + c;
  }
};

inline std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t d = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
  return d;
}

// Calls fn(n, e(n)) for every integer n with e(n) <= limit.
//
// e is convex, so it is nonincreasing up to floor(-b / 2a) and nondecreasing
// after it; walking outward from there in both directions visits exactly the
// terms at or below `limit`, whatever the size of b. Throws
// InvalidSpecialization if the minimum is negative.
template <typename Fn>
void for_each_quadratic_term(const Quadratic& e, std::size_t limit, Fn&& fn) {
  const std::int64_t vertex = floor_div(-e.b, 2 * e.a);
  const __int128 lo = e(vertex) < e(vertex + 1) ? e(vertex) : e(vertex + 1);
  if (lo < 0) {
    throw InvalidSpecialization("quadratic exponent " + std::to_string(e.a) + "n^2 + " +
                                std::to_string(e.b) + "n + " + std::to_string(e.c) +
                                " takes negative values");
  }
  const auto cap = static_cast<__int128>(limit);
  for (std::int64_t n = vertex; e(n) <= cap; --n) fn(n, static_cast<std::size_t>(e(n)));
  for (std::int64_t n = vertex + 1; e(n) <= cap; ++n) fn(n, static_cast<std::size_t>(e(n)));
}

}  // namespace qpart::detail

#endif  // QPART_SRC_QUADRATIC_TERMS_HPP
