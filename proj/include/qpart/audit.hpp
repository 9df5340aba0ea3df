#ifndef QPART_AUDIT_HPP
#define QPART_AUDIT_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpart/combinat.hpp"
#include "qpart/series.hpp"

namespace qpart {

enum class AuditStatus { Verified, Diverges, VariantResolved, Failed };

std::string_view status_name(AuditStatus s);

struct Divergence {
  std::size_t index;
  Integer left;
  Integer right;
  std::string left_side;
  std::string right_side;
};

struct VariantOutcome {
  std::string name;
  std::string description;
  AuditStatus status;  // Verified, Diverges or Failed
  std::optional<Divergence> divergence;
  std::string error;
};

struct AuditReport {
  std::string id;
  std::size_t order = 0;
  AuditStatus status = AuditStatus::Failed;
  std::optional<Divergence> divergence;
  std::optional<std::string> verified_variant;
  std::vector<VariantOutcome> variants;
  /// Set when oracle-backed comparisons stopped below `order`.
  std::optional<std::size_t> oracle_order;
  std::string error;
  double millis = 0;
};

/// True for Verified, and for VariantResolved with a verified variant.
bool passed(const AuditReport& r);

enum class SourceKind { Series, Dsl, Oracle };

// Enumeration results shared by the checks of one run.
class OracleCache {
 public:
  explicit OracleCache(std::size_t bound);

  std::size_t bound() const noexcept { return bound_; }

  Series family(Family f, std::size_t order);
  Series mex(MexSide side, std::size_t order);
  Series overpartitions(std::size_t order);
  Series overpartitions_odd(std::size_t order);

 private:
  const FamilyTable& table(std::size_t order);

  std::size_t bound_;
  std::optional<FamilyTable> table_;
  std::vector<Integer> pbar_;
  std::vector<Integer> pbar_odd_;
};

struct Side {
  std::string label;
  SourceKind source;
  std::function<Series(std::size_t order, OracleCache& oracle)> build;
};

struct Comparison {
  Side left;
  Side right;
};

struct Variant {
  std::string name;
  std::string description;
  std::vector<Comparison> comparisons;
};

// How a check's variants affect its status. Resolve: the status is
// VariantResolved when some variant verifies. Annotate: the status comes
// from the main comparisons alone and the variants are reported alongside
// (used for printed forms known to be misprints).
enum class VariantRole { Resolve, Annotate };

struct IdentityCheck {
  std::string id;
  std::string description;
  std::size_t default_order;
  std::size_t first_index = 0;  // coefficients below this are not compared
  std::vector<Comparison> comparisons;
  std::vector<Variant> variants;
  VariantRole variant_role = VariantRole::Resolve;
};

/// Every registered check in a stable order.
const std::vector<IdentityCheck>& registry();

/// Throws UnknownIdentity.
const IdentityCheck& find_check(std::string_view id);

struct AuditOptions {
  std::size_t enum_bound = kDefaultEnumerationBound;
};

/// kDefaultEnumerationBound, or QPART_MAX_ENUM when that is set to a larger
/// integer.
std::size_t enumeration_bound_from_env();

/// Runs one check at `order` (its default order when absent). Evaluation
/// errors produce a Failed report. Throws UnknownIdentity.
AuditReport run_check(std::string_view id, std::optional<std::size_t> order,
                      const AuditOptions& options = {});
AuditReport run_check(const IdentityCheck& check, std::optional<std::size_t> order,
                      OracleCache& oracle);

/// One report per selected check, in registry order; an empty filter selects
/// all. Unknown ids in the filter throw UnknownIdentity before anything runs.
std::vector<AuditReport> run_suite(std::optional<std::size_t> order,
                                   const std::vector<std::string>& ids = {},
                                   const AuditOptions& options = {});

/// One JSON object; big integers are decimal strings. indent < 0 is compact.
std::string to_json(const AuditReport& r, int indent = -1);

}  // namespace qpart

#endif  // QPART_AUDIT_HPP
