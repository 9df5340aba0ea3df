#ifndef QPART_COMBINAT_HPP
#define QPART_COMBINAT_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpart/series.hpp"

namespace qpart {

enum class Color : std::uint8_t { Blue, Red };

struct ColoredPart {
  std::uint32_t value;  // >= 1
  Color color;

  bool operator==(const ColoredPart&) const = default;
};

/// Canonical order: value descending, blue before red at equal value.
bool canonical_before(const ColoredPart& a, const ColoredPart& b);

// A multiset of colored parts, kept in canonical order.
class ColoredPartition {
 public:
  ColoredPartition() = default;
  /// Sorts the parts into canonical order; throws std::invalid_argument on a
  /// zero-valued part.
  explicit ColoredPartition(std::vector<ColoredPart> parts);

  std::span<const ColoredPart> parts() const noexcept { return parts_; }
  std::uint64_t weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// `3_b+1_r`, or `(empty)` for the empty partition.
  std::string to_string() const;

  bool operator==(const ColoredPartition&) const = default;

 private:
  std::vector<ColoredPart> parts_;
  std::uint64_t weight_ = 0;
};

struct FamilyStats {
  std::uint32_t red_odd_count = 0;
  std::uint32_t even_part_count = 0;
  std::uint32_t total_part_count = 0;

  bool operator==(const FamilyStats&) const = default;
};

FamilyStats stats(const ColoredPartition& p);

// mex_{A,a}(pi, blue). modulus must be even and positive, 1 <= residue <= modulus.
struct MexSpec {
  MexSpec(std::uint32_t modulus, std::uint32_t residue);

  std::uint32_t modulus;
  std::uint32_t residue;
};

enum class MexSide { Plain, Bar };

/// Enumeration beyond this weight is refused by the CLI unless raised.
inline constexpr std::size_t kDefaultEnumerationBound = 20;

/// Two-color partitions of n whose even parts are all blue, each once, in
/// canonical order.
std::vector<ColoredPartition> enumerate_F(std::size_t n);
/// The members of enumerate_F(n) with no repeated (value, color) pair.
std::vector<ColoredPartition> enumerate_H(std::size_t n);

/// Streaming variants; the callback sees the parts in canonical order and
/// their running stats.
using PartitionVisitor = std::function<void(std::span<const ColoredPart>, const FamilyStats&)>;
void for_each_F(std::size_t n, const PartitionVisitor& visit);
void for_each_H(std::size_t n, const PartitionVisitor& visit);

enum class Family { F, F0, F1, F2, F3, H, H0, H1, H2, H3 };

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);
bool family_accepts(Family f, const FamilyStats& s);

Integer count_family(Family family, std::size_t n);

/// p̄(n): each distinct part value may have its first occurrence overlined.
Integer count_overpartitions(std::size_t n);
/// p̄_o(n): overpartitions into odd parts.
Integer count_overpartitions_odd(std::size_t n);

/// Least x ≡ residue (mod modulus), x >= residue, that is not the value of any
/// part of p. A part of either color blocks x.
std::uint64_t mex_blue(const ColoredPartition& p, const MexSpec& spec);
std::uint64_t mex_blue(std::span<const ColoredPart> parts, const MexSpec& spec);

/// p_{A,a}(n, blue) for Plain, p̄_{A,a}(n, blue) for Bar.
Integer count_mex_class(std::size_t n, const MexSpec& spec, MexSide side);

/// Two-color partitions of n: blue parts are unrestricted, a red part of
/// value v is allowed only when red_allowed(v).
Integer count_restricted_two_color(std::size_t n,
                                   const std::function<bool(std::uint32_t)>& red_allowed);

using Counter = std::function<Integer(std::size_t)>;

/// Series whose coefficient of q^n is counter(n), n = 0..order.
Series series_from_counts(const Counter& counter, std::size_t order);

// Counts of every family for all weights 0..order in one sweep.
struct FamilyTable {
  std::size_t order = 0;
  std::vector<std::array<Integer, 10>> counts;  // counts[n][family]
  std::vector<Integer> mex_plain;               // p_{4,2}(n, blue)
  std::vector<Integer> mex_bar;                 // p̄_{4,2}(n, blue)

  Series series(Family f) const;
  Series mex_series(MexSide side) const;
};

FamilyTable tabulate_families(std::size_t order);

}  // namespace qpart

#endif  // QPART_COMBINAT_HPP
