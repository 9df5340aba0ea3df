#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qpart/audit.hpp"
#include "qpart/cli.hpp"
#include "qpart/combinat.hpp"
#include "qpart/dsl.hpp"
#include "qpart/errors.hpp"

namespace qpart {
namespace {

enum class Format { Text, Csv, Json };

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t parse_weight(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError("invalid weight '" + s + "'");
  }
  return static_cast<std::size_t>(std::stoull(s));
}

Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = parse_weight(s);
    return {n, n};
  }
  const Range r{parse_weight(s.substr(0, dots)), parse_weight(s.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("empty range '" + s + "'");
  return r;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) ids.push_back(item);
  }
  return ids;
}

void check_bound(std::size_t n) {
  const std::size_t bound = enumeration_bound_from_env();
  if (n > bound) {
    throw EnumerationBoundExceeded("weight " + std::to_string(n) + " exceeds the enumeration bound " +
                                   std::to_string(bound) + " (raise it with QPART_MAX_ENUM)");
  }
}

void cmd_expand(const std::string& source, std::size_t order, Format fmt, std::ostream& out) {
  const Series s = dsl::evaluate(*dsl::parse(source), order);
  switch (fmt) {
    case Format::Text:
      out << s.to_string() << "\n";
      break;
    case Format::Csv:
      out << "n,coefficient\n";
      for (std::size_t n = 0; n <= s.order(); ++n) out << n << "," << s[n].get_str() << "\n";
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["expression"] = source;
      j["order"] = order;
      auto coeffs = nlohmann::ordered_json::array();
      for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
      j["coefficients"] = std::move(coeffs);
      out << j.dump() << "\n";
      break;
    }
  }
}

std::vector<Integer> family_counts(const std::string& name, Range r) {
  check_bound(r.hi);
  std::vector<Integer> counts;
  if (name == "pbar" || name == "pbar_odd") {
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
      counts.push_back(name == "pbar" ? count_overpartitions(n) : count_overpartitions_odd(n));
    }
    return counts;
  }
  const auto family = family_from_name(name);
  if (!family && name != "mex_plain" && name != "mex_bar") {
    throw UsageError("unknown family '" + name +
                     "' (expected F, F0..F3, H, H0..H3, pbar, pbar_odd, mex_plain, mex_bar)");
  }
  const FamilyTable table = tabulate_families(r.hi);
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    if (family) {
      counts.push_back(table.counts[n][static_cast<std::size_t>(*family)]);
    } else {
      counts.push_back(name == "mex_plain" ? table.mex_plain[n] : table.mex_bar[n]);
    }
  }
  return counts;
}

void cmd_count(const std::string& name, Range r, Format fmt, std::ostream& out) {
  const auto counts = family_counts(name, r);
  if (fmt == Format::Csv) out << "family,n,count\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const std::size_t n = r.lo + i;
    switch (fmt) {
      case Format::Text:
        out << counts[i].get_str() << "\n";
        break;
      case Format::Csv:
        out << name << "," << n << "," << counts[i].get_str() << "\n";
        break;
      case Format::Json: {
        nlohmann::ordered_json j;
        j["family"] = name;
        j["n"] = n;
        j["count"] = counts[i].get_str();
        out << j.dump() << "\n";
        break;
      }
    }
  }
}

void cmd_enumerate(const std::string& name, Range r, Format fmt, std::ostream& out) {
  if (name != "F" && name != "H") {
    throw UsageError("enumerate supports the families F and H, not '" + name + "'");
  }
  check_bound(r.hi);
  if (fmt == Format::Csv) out << "n,partition\n";
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    for (const auto& p : name == "F" ? enumerate_F(n) : enumerate_H(n)) {
      switch (fmt) {
        case Format::Text:
          out << p.to_string() << "\n";
          break;
        case Format::Csv:
          out << n << "," << p.to_string() << "\n";
          break;
        case Format::Json: {
          nlohmann::ordered_json j;
          j["n"] = n;
          j["partition"] = p.to_string();
          out << j.dump() << "\n";
          break;
        }
      }
    }
  }
}

std::string text_line(const AuditReport& r) {
  std::ostringstream s;
  s << r.id << " " << status_name(r.status) << " order=" << r.order;
  if (r.oracle_order) s << " oracle-order=" << *r.oracle_order;
  if (r.verified_variant) s << " variant=" << *r.verified_variant;
  if (r.divergence) {
    s << " first-divergence=" << r.divergence->index << " left=" << r.divergence->left.get_str()
      << " right=" << r.divergence->right.get_str();
  }
  for (const auto& v : r.variants) {
    s << " [" << v.name << ": " << status_name(v.status);
    if (v.divergence) {
      s << " at " << v.divergence->index << " (" << v.divergence->left.get_str() << " vs "
        << v.divergence->right.get_str() << ")";
    }
    s << "]";
  }
  if (!r.error.empty()) s << " error=\"" << r.error << "\"";
  return s.str();
}

int cmd_verify(const std::string& ids, std::optional<std::size_t> order, Format fmt,
               std::ostream& out) {
  const auto reports =
      run_suite(order, split_ids(ids), AuditOptions{.enum_bound = enumeration_bound_from_env()});
  if (fmt == Format::Csv) {
    out << "id,order,status,first_divergence,left_value,right_value,verified_variant,millis\n";
  }
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && passed(r);
    switch (fmt) {
      case Format::Text:
        out << text_line(r) << "\n";
        break;
      case Format::Csv:
        out << r.id << "," << r.order << "," << status_name(r.status) << ",";
        if (r.divergence) {
          out << r.divergence->index << "," << r.divergence->left.get_str() << ","
              << r.divergence->right.get_str();
        } else {
          out << ",,";
        }
        out << "," << r.verified_variant.value_or("") << "," << r.millis << "\n";
        break;
      case Format::Json:
        out << to_json(r) << "\n";
        break;
    }
  }
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series expansion, partition counting and identity verification", "qpart"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("qpart 0.1.0"));

  const std::map<std::string, Format> formats = {
      {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  Format fmt = Format::Text;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "Output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string expression;
  std::size_t order = 20;
  auto* expand = app.add_subcommand("expand", "Print the coefficients of a q-series expression");
  expand->add_option("expression", expression, "Expression, e.g. \"1/(q;q)_inf\"")->required();
  expand->add_option("-N,--order", order, "Truncation order")->capture_default_str();
  add_format(expand);

  std::string family;
  std::string weights;
  auto* count = app.add_subcommand("count", "Count partitions of a family by weight");
  count->add_option("family", family,
                    "F, F0..F3, H, H0..H3, pbar, pbar_odd, mex_plain or mex_bar")
      ->required();
  count->add_option("--n", weights, "Weight n or range a..b")->required();
  add_format(count);

  auto* enumerate = app.add_subcommand("enumerate", "List the partitions of F(n) or H(n)");
  enumerate->add_option("family", family, "F or H")->required();
  enumerate->add_option("--n", weights, "Weight n or range a..b")->required();
  add_format(enumerate);

  std::string ids;
  std::optional<std::size_t> verify_order;
  auto* verify = app.add_subcommand("verify", "Audit the registered identities");
  verify->add_option("--ids", ids, "Comma-separated check ids (default: all)");
  verify->add_option("-N,--order", verify_order, "Order (default: per check)");
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (expand->parsed()) {
      cmd_expand(expression, order, fmt, out);
    } else if (count->parsed()) {
      cmd_count(family, parse_range(weights), fmt, out);
    } else if (enumerate->parsed()) {
      cmd_enumerate(family, parse_range(weights), fmt, out);
    } else if (verify->parsed()) {
      return cmd_verify(ids, verify_order, fmt, out);
    }
  } catch (const dsl::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EnumerationBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSpecialization& e) {
    err << "error: invalid specialization: " << e.what() << "\n";
    return kExitEvaluation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitEvaluation;
  }
  return kExitOk;
}

}  // namespace qpart
