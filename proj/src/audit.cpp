#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#include "qpart/audit.hpp"
#include "qpart/errors.hpp"

namespace qpart {

std::string_view status_name(AuditStatus s) {
  switch (s) {
    case AuditStatus::Verified:
      return "Verified";
    case AuditStatus::Diverges:
      return "Diverges";
    case AuditStatus::VariantResolved:
      return "VariantResolved";
    case AuditStatus::Failed:
      return "Failed";
  }
  return "Failed";
}

bool passed(const AuditReport& r) {
  return r.status == AuditStatus::Verified ||
         (r.status == AuditStatus::VariantResolved && r.verified_variant.has_value());
}

OracleCache::OracleCache(std::size_t bound) : bound_(bound) {}

const FamilyTable& OracleCache::table(std::size_t order) {
  if (!table_ || table_->order < order) table_ = tabulate_families(order);
  return *table_;
}

Series OracleCache::family(Family f, std::size_t order) {
  return table(order).series(f).truncated(order);
}

Series OracleCache::mex(MexSide side, std::size_t order) {
  return table(order).mex_series(side).truncated(order);
}

Series OracleCache::overpartitions(std::size_t order) {
  while (pbar_.size() <= order) pbar_.push_back(count_overpartitions(pbar_.size()));
  return Series(std::vector<Integer>(pbar_.begin(), pbar_.begin() + order + 1));
}

Series OracleCache::overpartitions_odd(std::size_t order) {
  while (pbar_odd_.size() <= order) pbar_odd_.push_back(count_overpartitions_odd(pbar_odd_.size()));
  return Series(std::vector<Integer>(pbar_odd_.begin(), pbar_odd_.begin() + order + 1));
}

std::size_t enumeration_bound_from_env() {
  const char* raw = std::getenv("QPART_MAX_ENUM");
  if (raw == nullptr) return kDefaultEnumerationBound;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return kDefaultEnumerationBound;
  return std::max<std::size_t>(kDefaultEnumerationBound, static_cast<std::size_t>(v));
}

const IdentityCheck& find_check(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw UnknownIdentity("no identity check named '" + std::string(id) + "'");
}

namespace {

bool uses_oracle(const Comparison& c) {
  return c.left.source == SourceKind::Oracle || c.right.source == SourceKind::Oracle;
}

struct Outcome {
  std::optional<Divergence> divergence;
  std::optional<std::size_t> capped;
};

// Compares every pair; the first divergence in listing order wins.
Outcome compare_all(const std::vector<Comparison>& comparisons, std::size_t order,
                    std::size_t first_index, OracleCache& oracle) {
  Outcome out;
  for (const Comparison& c : comparisons) {
    std::size_t n = order;
    if (uses_oracle(c) && oracle.bound() < order) {
      n = oracle.bound();
      out.capped = n;
    }
    const Series a = c.left.build(n, oracle).truncated(n);
    const Series b = c.right.build(n, oracle).truncated(n);
    if (const auto i = first_divergence(a, b, first_index)) {
      out.divergence = Divergence{*i, a[*i], b[*i], c.left.label, c.right.label};
      return out;
    }
  }
  return out;
}

}  // namespace

AuditReport run_check(const IdentityCheck& check, std::optional<std::size_t> order,
                      OracleCache& oracle) {
  const auto start = std::chrono::steady_clock::now();
  AuditReport r;
  r.id = check.id;
  r.order = order.value_or(check.default_order);
  try {
    const Outcome main = compare_all(check.comparisons, r.order, check.first_index, oracle);
    r.oracle_order = main.capped;
    for (const Variant& v : check.variants) {
      VariantOutcome vo{v.name, v.description, AuditStatus::Verified, std::nullopt, {}};
      try {
        const Outcome o = compare_all(v.comparisons, r.order, check.first_index, oracle);
        if (o.capped) r.oracle_order = o.capped;
        if (o.divergence) {
          vo.status = AuditStatus::Diverges;
          vo.divergence = o.divergence;
        }
      } catch (const Error& e) {
        vo.status = AuditStatus::Failed;
        vo.error = e.what();
      }
      r.variants.push_back(std::move(vo));
    }

    if (main.divergence) {
      r.status = AuditStatus::Diverges;
      r.divergence = main.divergence;
    } else if (check.variants.empty() || check.variant_role == VariantRole::Annotate) {
      r.status = AuditStatus::Verified;
    } else {
      const auto hit = std::find_if(r.variants.begin(), r.variants.end(), [](const auto& v) {
        return v.status == AuditStatus::Verified;
      });
      if (hit != r.variants.end()) {
        r.status = AuditStatus::VariantResolved;
        r.verified_variant = hit->name;
      } else {
        const auto diverged = std::find_if(r.variants.begin(), r.variants.end(),
                                           [](const auto& v) { return v.divergence.has_value(); });
        if (diverged != r.variants.end()) {
          r.status = AuditStatus::Diverges;
          r.divergence = diverged->divergence;
        } else {
          r.status = AuditStatus::Failed;
          r.error = "no variant could be evaluated";
        }
      }
    }
  } catch (const Error& e) {
    r.status = AuditStatus::Failed;
    r.error = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

AuditReport run_check(std::string_view id, std::optional<std::size_t> order,
                      const AuditOptions& options) {
  const IdentityCheck& check = find_check(id);
  OracleCache oracle(options.enum_bound);
  return run_check(check, order, oracle);
}

std::vector<AuditReport> run_suite(std::optional<std::size_t> order,
                                   const std::vector<std::string>& ids,
                                   const AuditOptions& options) {
  for (const auto& id : ids) find_check(id);
  OracleCache oracle(options.enum_bound);
  std::vector<AuditReport> out;
  for (const auto& check : registry()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), check.id) == ids.end()) continue;
    out.push_back(run_check(check, order, oracle));
  }
  return out;
}

namespace {

void put_divergence(nlohmann::ordered_json& j, const Divergence& d) {
  j["firstDivergence"] = d.index;
  j["leftValue"] = d.left.get_str();
  j["rightValue"] = d.right.get_str();
  j["leftSide"] = d.left_side;
  j["rightSide"] = d.right_side;
}

}  // namespace

std::string to_json(const AuditReport& r, int indent) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["status"] = status_name(r.status);
  if (r.divergence) put_divergence(j, *r.divergence);
  if (r.verified_variant) j["verifiedVariant"] = *r.verified_variant;
  if (!r.variants.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : r.variants) {
      nlohmann::ordered_json o;
      o["variant"] = v.name;
      o["description"] = v.description;
      o["status"] = status_name(v.status);
      if (v.divergence) put_divergence(o, *v.divergence);
      if (!v.error.empty()) o["error"] = v.error;
      arr.push_back(std::move(o));
    }
    j["variantOutcomes"] = std::move(arr);
  }
  if (r.oracle_order) j["oracleOrder"] = *r.oracle_order;
  if (!r.error.empty()) j["error"] = r.error;
  j["millis"] = r.millis;
  return j.dump(indent);
}

}  // namespace qpart
