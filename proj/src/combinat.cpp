// Brute-force enumeration of the colored partition sets. Everything here is
// deliberately naive: it is the ground truth the generating functions are
// checked against, so it must not share any algebra with them.

#include "qpart/combinat.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace qpart {
namespace {

constexpr std::size_t kFamilyCount = 10;

std::size_t index_of(Family f) { return static_cast<std::size_t>(f); }

bool is_h_family(Family f) {
  return f == Family::H || f == Family::H0 || f == Family::H1 || f == Family::H2 ||
         f == Family::H3;
}

// Recursive descent over part values from the largest down. At each value
// the number of copies runs from high to low and, for a fixed count, blue
// copies come first, which reproduces the listing order used for the worked
// examples (4_b, 3_b+1_b, 3_b+1_r, 3_r+1_b, ...).
class TwoColorWalker {
 public:
  TwoColorWalker(std::uint32_t cap, const PartitionVisitor& visit) : cap_(cap), visit_(visit) {}

  void run(std::size_t n) {
    parts_.clear();
    stats_ = {};
    descend(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n));
  }

 private:
  void descend(std::uint32_t value, std::uint32_t remaining) {
    if (remaining == 0) {
      visit_(parts_, stats_);
      return;
    }
    value = std::min(value, remaining);
    if (value == 0) return;
    const bool even = value % 2 == 0;
    const std::uint32_t max_copies = remaining / value;
    const std::uint32_t blue_cap = std::min(cap_, max_copies);
    const std::uint32_t red_cap = even ? 0 : std::min(cap_, max_copies);
    for (std::uint32_t total = std::min(max_copies, blue_cap + red_cap) + 1; total-- > 0;) {
      for (std::uint32_t red = 0; red <= std::min(total, red_cap); ++red) {
        const std::uint32_t blue = total - red;
        if (blue > blue_cap) continue;
        push(value, blue, red);
        descend(value - 1, remaining - total * value);
        pop(value, blue, red);
      }
    }
  }

  void push(std::uint32_t value, std::uint32_t blue, std::uint32_t red) {
    for (std::uint32_t i = 0; i < blue; ++i) parts_.push_back({value, Color::Blue});
    for (std::uint32_t i = 0; i < red; ++i) parts_.push_back({value, Color::Red});
    adjust(value, blue, red, +1);
  }

  void pop(std::uint32_t value, std::uint32_t blue, std::uint32_t red) {
    parts_.resize(parts_.size() - blue - red);
    adjust(value, blue, red, -1);
  }

  void adjust(std::uint32_t value, std::uint32_t blue, std::uint32_t red, int dir) {
    const auto count = static_cast<std::uint32_t>(blue + red);
    auto bump = [dir](std::uint32_t& field, std::uint32_t by) {
      field = dir > 0 ? field + by : field - by;
    };
    bump(stats_.total_part_count, count);
    if (value % 2 == 0) {
      bump(stats_.even_part_count, count);
    } else {
      bump(stats_.red_odd_count, red);
    }
  }

  std::uint32_t cap_;
  const PartitionVisitor& visit_;
  std::vector<ColoredPart> parts_;
  FamilyStats stats_;
};

constexpr std::uint32_t kUnbounded = 0xffffffffU;

std::vector<ColoredPartition> collect(std::size_t n, std::uint32_t cap) {
  std::vector<ColoredPartition> out;
  const PartitionVisitor visit = [&](std::span<const ColoredPart> parts, const FamilyStats&) {
    out.emplace_back(std::vector<ColoredPart>(parts.begin(), parts.end()));
  };
  TwoColorWalker(cap, visit).run(n);
  return out;
}

bool has_repeated_pair(std::span<const ColoredPart> parts) {
  return std::adjacent_find(parts.begin(), parts.end()) != parts.end();
}

// Overpartitions: parts chosen from the largest value down; every value that
// occurs branches on whether its first occurrence is overlined.
std::uint64_t count_overpartitions_from(std::uint32_t value, std::uint32_t remaining,
                                        bool odd_only) {
  if (remaining == 0) return 1;
  value = std::min(value, remaining);
  if (odd_only && value % 2 == 0 && value > 0) --value;
  if (value == 0) return 0;
  const std::uint32_t next = odd_only ? (value >= 2 ? value - 2 : 0) : value - 1;
  std::uint64_t total = count_overpartitions_from(next, remaining, odd_only);
  for (std::uint32_t copies = 1; copies * value <= remaining; ++copies) {
    for (int overlined = 0; overlined < 2; ++overlined) {
      total += count_overpartitions_from(next, remaining - copies * value, odd_only);
    }
  }
  return total;
}

std::uint64_t count_restricted_from(std::uint32_t value, std::uint32_t remaining,
                                    const std::function<bool(std::uint32_t)>& red_allowed) {
  if (remaining == 0) return 1;
  value = std::min(value, remaining);
  if (value == 0) return 0;
  const bool red = red_allowed(value);
  std::uint64_t total = 0;
  for (std::uint32_t blue = 0; blue * value <= remaining; ++blue) {
    const std::uint32_t left = remaining - blue * value;
    if (!red) {
      total += count_restricted_from(value - 1, left, red_allowed);
      continue;
    }
    for (std::uint32_t r = 0; r * value <= left; ++r) {
      total += count_restricted_from(value - 1, left - r * value, red_allowed);
    }
  }
  return total;
}

bool is_mex_side(std::uint64_t mex, const MexSpec& spec, MexSide side) {
  const std::uint64_t period = 2ULL * spec.modulus;
  const std::uint64_t target =
      side == MexSide::Plain ? spec.residue % period : (spec.modulus + spec.residue) % period;
  return mex % period == target;
}

}  // namespace

bool canonical_before(const ColoredPart& a, const ColoredPart& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.color == Color::Blue && b.color == Color::Red;
}

ColoredPartition::ColoredPartition(std::vector<ColoredPart> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    if (p.value == 0) throw std::invalid_argument("partition parts must be positive");
    weight_ += p.value;
  }
  std::stable_sort(parts_.begin(), parts_.end(), canonical_before);
}

std::string ColoredPartition::to_string() const {
  if (parts_.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i].value);
    s += parts_[i].color == Color::Blue ? "_b" : "_r";
  }
  return s;
}

FamilyStats stats(const ColoredPartition& p) {
  FamilyStats s;
  for (const auto& part : p.parts()) {
    ++s.total_part_count;
    if (part.value % 2 == 0) {
      ++s.even_part_count;
    } else if (part.color == Color::Red) {
      ++s.red_odd_count;
    }
  }
  return s;
}

MexSpec::MexSpec(std::uint32_t modulus_, std::uint32_t residue_)
    : modulus(modulus_), residue(residue_) {
  if (modulus == 0 || modulus % 2 != 0) {
    throw std::invalid_argument("mex modulus must be a positive even integer");
  }
  if (residue < 1 || residue > modulus) {
    throw std::invalid_argument("mex residue must lie in 1..modulus");
  }
}

std::vector<ColoredPartition> enumerate_F(std::size_t n) { return collect(n, kUnbounded); }

std::vector<ColoredPartition> enumerate_H(std::size_t n) { return collect(n, 1); }

void for_each_F(std::size_t n, const PartitionVisitor& visit) {
  TwoColorWalker(kUnbounded, visit).run(n);
}

void for_each_H(std::size_t n, const PartitionVisitor& visit) { TwoColorWalker(1, visit).run(n); }

std::optional<Family> family_from_name(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Family>, kFamilyCount> names = {{
      {"F", Family::F},
      {"F0", Family::F0},
      {"F1", Family::F1},
      {"F2", Family::F2},
      {"F3", Family::F3},
      {"H", Family::H},
      {"H0", Family::H0},
      {"H1", Family::H1},
      {"H2", Family::H2},
      {"H3", Family::H3},
  }};
  for (const auto& [key, f] : names) {
    if (key == name) return f;
  }
  return std::nullopt;
}

std::string_view family_name(Family f) {
  static constexpr std::array<std::string_view, kFamilyCount> names = {
      "F", "F0", "F1", "F2", "F3", "H", "H0", "H1", "H2", "H3"};
  return names[index_of(f)];
}

bool family_accepts(Family f, const FamilyStats& s) {
  switch (f) {
    case Family::F:
    case Family::H:
      return true;
    case Family::F0:
      return s.red_odd_count % 2 == 0;
    case Family::F1:
      return s.red_odd_count % 2 == 1;
    case Family::F2:
    case Family::H0:
      return s.even_part_count % 2 == 0;
    case Family::F3:
    case Family::H1:
      return s.even_part_count % 2 == 1;
    case Family::H2:
      return s.total_part_count % 2 == 0;
    case Family::H3:
      return s.total_part_count % 2 == 1;
  }
  return false;
}

Integer count_family(Family family, std::size_t n) {
  std::uint64_t count = 0;
  const PartitionVisitor visit = [&](std::span<const ColoredPart>, const FamilyStats& s) {
    if (family_accepts(family, s)) ++count;
  };
  if (is_h_family(family)) {
    for_each_H(n, visit);
  } else {
    for_each_F(n, visit);
  }
  return Integer(static_cast<unsigned long>(count));
}

Integer count_overpartitions(std::size_t n) {
  const auto m = static_cast<std::uint32_t>(n);
  return Integer(static_cast<unsigned long>(count_overpartitions_from(m, m, false)));
}

Integer count_overpartitions_odd(std::size_t n) {
  const auto m = static_cast<std::uint32_t>(n);
  return Integer(static_cast<unsigned long>(count_overpartitions_from(m, m, true)));
}

std::uint64_t mex_blue(std::span<const ColoredPart> parts, const MexSpec& spec) {
  std::uint64_t x = spec.residue;
  auto present = [&](std::uint64_t v) {
    return std::any_of(parts.begin(), parts.end(),
                       [v](const ColoredPart& p) { return p.value == v; });
  };
  while (present(x)) x += spec.modulus;
  return x;
}

std::uint64_t mex_blue(const ColoredPartition& p, const MexSpec& spec) {
  return mex_blue(p.parts(), spec);
}

Integer count_mex_class(std::size_t n, const MexSpec& spec, MexSide side) {
  std::uint64_t count = 0;
  for_each_F(n, [&](std::span<const ColoredPart> parts, const FamilyStats&) {
    if (is_mex_side(mex_blue(parts, spec), spec, side)) ++count;
  });
  return Integer(static_cast<unsigned long>(count));
}

Integer count_restricted_two_color(std::size_t n,
                                   const std::function<bool(std::uint32_t)>& red_allowed) {
  const auto m = static_cast<std::uint32_t>(n);
  return Integer(static_cast<unsigned long>(count_restricted_from(m, m, red_allowed)));
}

Series series_from_counts(const Counter& counter, std::size_t order) {
  std::vector<Integer> v(order + 1);
  for (std::size_t i = 0; i <= order; ++i) v[i] = counter(i);
  return Series(std::move(v));
}

Series FamilyTable::series(Family f) const {
  return series_from_counts([&](std::size_t n) { return counts[n][index_of(f)]; }, order);
}

Series FamilyTable::mex_series(MexSide side) const {
  const auto& v = side == MexSide::Plain ? mex_plain : mex_bar;
  return Series(v);
}

FamilyTable tabulate_families(std::size_t order) {
  FamilyTable table;
  table.order = order;
  table.counts.resize(order + 1);
  table.mex_plain.resize(order + 1);
  table.mex_bar.resize(order + 1);
  const MexSpec spec(4, 2);
  for (std::size_t n = 0; n <= order; ++n) {
    std::array<std::uint64_t, kFamilyCount> c{};
    std::uint64_t plain = 0;
    std::uint64_t bar = 0;
    for_each_F(n, [&](std::span<const ColoredPart> parts, const FamilyStats& s) {
      for (std::size_t f = 0; f < kFamilyCount; ++f) {
        const auto fam = static_cast<Family>(f);
        if (is_h_family(fam) && has_repeated_pair(parts)) continue;
        if (family_accepts(fam, s)) ++c[f];
      }
      if (is_mex_side(mex_blue(parts, spec), spec, MexSide::Plain)) {
        ++plain;
      } else {
        ++bar;
      }
    });
    for (std::size_t f = 0; f < kFamilyCount; ++f) {
      table.counts[n][f] = Integer(static_cast<unsigned long>(c[f]));
    }
    table.mex_plain[n] = Integer(static_cast<unsigned long>(plain));
    table.mex_bar[n] = Integer(static_cast<unsigned long>(bar));
  }
  return table;
}

}  // namespace qpart
