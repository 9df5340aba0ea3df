#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qpart/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qpart::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> csv_column(const std::string& s, std::size_t col) {
  std::vector<std::string> v;
  auto ls = lines(s);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::istringstream row(ls[i]);
    std::string cell;
    for (std::size_t c = 0; c <= col; ++c) std::getline(row, cell, ',');
    v.push_back(cell);
  }
  return v;
}

}  // namespace

TEST(CliExpand, Text) {
  auto r = run({"expand", "1/((q;q^2)_inf^2*(q^2;q^2)_inf)", "--order", "5"});
  EXPECT_EQ(r.code, qpart::kExitOk);
  EXPECT_EQ(r.out, "1 2 4 8 14 24\n");
  r = run({"expand", "q^0", "-N", "2"});
  EXPECT_EQ(r.out, "1 0 0\n");
}

TEST(CliExpand, DefaultOrderIsTwenty) {
  const auto r = run({"expand", "1"});
  EXPECT_EQ(lines(r.out).size(), 1u);
  std::istringstream in(r.out);
  int count = 0;
  for (std::string tok; in >> tok;) ++count;
  EXPECT_EQ(count, 21);
}

TEST(CliExpand, CatalogNamesAreNotIdentifiers) {
  EXPECT_EQ(run({"expand", "GEN_F"}).code, qpart::kExitUsage);
}

TEST(CliExpand, FormatsCarrySameNumbers) {
  const std::string e = "(-q;q)_inf/(q;q)_inf";
  const auto text = run({"expand", e, "-N", "12"});
  const auto csv = run({"expand", e, "-N", "12", "--format", "csv"});
  const auto json = run({"expand", e, "-N", "12", "--format", "json"});
  ASSERT_EQ(text.code, 0);
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(json.code, 0);
  std::vector<std::string> from_text;
  std::istringstream in(text.out);
  for (std::string tok; in >> tok;) from_text.push_back(tok);
  EXPECT_EQ(lines(csv.out).front(), "n,coefficient");
  EXPECT_EQ(csv_column(csv.out, 1), from_text);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["order"], 12);
  EXPECT_EQ(j["coefficients"].get<std::vector<std::string>>(), from_text);
}

TEST(CliExpand, ErrorExitCodes) {
  auto r = run({"expand", "1/(q^0;q)_inf"});
  EXPECT_EQ(r.code, qpart::kExitEvaluation);
  EXPECT_NE(r.err.find("invalid specialization"), std::string::npos);
  EXPECT_EQ(run({"expand", "(q;q"}).code, qpart::kExitUsage);
  EXPECT_EQ(run({"expand", "(1+q)/2"}).code, qpart::kExitEvaluation);
  EXPECT_EQ(run({"expand", "sum(n=0..inf, 1)"}).code, qpart::kExitEvaluation);
}

TEST(CliCount, Examples) {
  EXPECT_EQ(run({"count", "F2", "--n", "4"}).out, "10\n");
  EXPECT_EQ(run({"count", "mex_bar", "--n", "4"}).out, "4\n");
  EXPECT_EQ(run({"count", "F", "--n", "0..5"}).out, "1\n2\n4\n8\n14\n24\n");
  EXPECT_EQ(run({"count", "pbar_odd", "--n", "4"}).out, "6\n");
}

TEST(CliCount, FormatsCarrySameNumbers) {
  const auto text = run({"count", "H", "--n", "0..10"});
  const auto csv = run({"count", "H", "--n", "0..10", "--format", "csv"});
  const auto json = run({"count", "H", "--n", "0..10", "--format", "json"});
  EXPECT_EQ(csv_column(csv.out, 2), lines(text.out));
  std::vector<std::string> from_json;
  for (const auto& l : lines(json.out)) from_json.push_back(nlohmann::json::parse(l)["count"]);
  EXPECT_EQ(from_json, lines(text.out));
}

TEST(CliCount, Errors) {
  EXPECT_EQ(run({"count", "G", "--n", "4"}).code, qpart::kExitUsage);
  EXPECT_EQ(run({"count", "F", "--n", "5..2"}).code, qpart::kExitUsage);
  EXPECT_EQ(run({"count", "F", "--n", "x"}).code, qpart::kExitUsage);
  EXPECT_EQ(run({"count", "F", "--n", "21"}).code, qpart::kExitUsage);
  EXPECT_EQ(run({"count", "F"}).code, qpart::kExitUsage);
}

TEST(CliEnumerate, Listings) {
  const auto h = run({"enumerate", "H", "--n", "4"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out, "4_b\n3_b+1_b\n3_b+1_r\n3_r+1_b\n3_r+1_r\n2_b+1_b+1_r\n");
  EXPECT_EQ(run({"enumerate", "F", "--n", "0"}).out, "(empty)\n");
  EXPECT_EQ(lines(run({"enumerate", "F", "--n", "4"}).out).size(), 14u);
  const auto csv = run({"enumerate", "F", "--n", "1", "--format", "csv"});
  EXPECT_EQ(csv.out, "n,partition\n1,1_b\n1,1_r\n");
}

TEST(CliEnumerate, BoundAndEnvironment) {
  const auto r = run({"enumerate", "F", "--n", "21"});
  EXPECT_EQ(r.code, qpart::kExitUsage);
  EXPECT_NE(r.err.find("QPART_MAX_ENUM"), std::string::npos);
  setenv("QPART_MAX_ENUM", "21", 1);
  EXPECT_EQ(run({"count", "F", "--n", "21"}).out, "9904\n");
  unsetenv("QPART_MAX_ENUM");
  EXPECT_EQ(run({"enumerate", "F2", "--n", "3"}).code, qpart::kExitUsage);
}

TEST(CliVerify, SingleChecks) {
  auto r = run({"verify", "--ids", "EQ_F_ID", "--order", "50"});
  EXPECT_EQ(r.code, qpart::kExitOk);
  EXPECT_EQ(r.out.rfind("EQ_F_ID Verified order=50", 0), 0u) << r.out;
  r = run({"verify", "--ids", "THM_F0_PRODUCT", "--order", "40", "--format", "json"});
  EXPECT_EQ(r.code, qpart::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "VariantResolved");
  EXPECT_EQ(j["variantOutcomes"].size(), 2u);
}

TEST(CliVerify, FullSuite) {
  // The two corollary checks diverge, so the whole suite reports failure.
  const auto r = run({"verify", "--order", "30"});
  EXPECT_EQ(r.code, qpart::kExitVerification) << r.out;
  for (const auto& l : lines(r.out)) {
    const bool corollary = l.rfind("COR_F", 0) == 0;
    std::istringstream fields(l);
    std::string id, status;
    fields >> id >> status;
    EXPECT_EQ(status == "Diverges", corollary) << l;
  }
  const auto rest = run({"verify", "--order", "30", "--ids", "EQ_GEN_F,THM_F0_PRODUCT,EQ_GEN_H2"});
  EXPECT_EQ(rest.code, qpart::kExitOk) << rest.out;
  const auto csv = run({"verify", "--order", "30", "--format", "csv"});
  EXPECT_EQ(lines(csv.out).size(), lines(r.out).size() + 1);
  EXPECT_EQ(lines(csv.out).front(),
            "id,order,status,first_divergence,left_value,right_value,verified_variant,millis");
}

TEST(CliVerify, DivergingCheckExitsThree) {
  const auto r = run({"verify", "--ids", "COR_F0,COR_F1"});
  EXPECT_EQ(r.code, qpart::kExitVerification);
  EXPECT_NE(r.out.find("COR_F0 Diverges"), std::string::npos);
  const auto csv = run({"verify", "--ids", "COR_F0", "--format", "csv"});
  EXPECT_EQ(csv_column(csv.out, 3), std::vector<std::string>{"6"});
}

TEST(CliVerify, UnknownId) {
  EXPECT_EQ(run({"verify", "--ids", "NOPE"}).code, qpart::kExitUsage);
}

TEST(Cli, UsageAndHelp) {
  EXPECT_EQ(run({}).code, qpart::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, qpart::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, qpart::kExitOk);
  EXPECT_EQ(run({"expand", "q", "--format", "xml"}).code, qpart::kExitUsage);
  const auto v = run({"--version"});
  EXPECT_EQ(v.code, qpart::kExitOk);
  EXPECT_NE(v.out.find("qpart"), std::string::npos);
}
