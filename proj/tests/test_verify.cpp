#include <gtest/gtest.h>

#include <set>

#include "congruence/error.hpp"
#include "congruence/report.hpp"
#include "congruence/verify.hpp"

using namespace congruence;

namespace {

RunOptions untimed() {
  RunOptions o;
  o.timing = false;
  return o;
}

}  // namespace

TEST(Registry, IdsAndStatementsAreUnique) {
  std::set<std::string> ids, statements;
  for (const auto& c : claim_registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_TRUE(statements.insert(c.statement).second) << c.id;
    EXPECT_FALSE(c.description.empty()) << c.id;
    EXPECT_NE(c.lhs_route, c.rhs_route) << c.id;
    EXPECT_TRUE(static_cast<bool>(c.evaluate)) << c.id;
  }
  EXPECT_GE(ids.size(), 60u);
}

TEST(Registry, FindClaim) {
  EXPECT_EQ(find_claim("wilson.glaisher").modulus_power, 2u);
  try {
    find_claim("no.such.claim");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownClaim);
  }
}

TEST(RunClaim, SingleSubject) {
  auto r = run_claim("wilson.glaisher", 7, untimed());
  EXPECT_EQ(r.claim, "wilson.glaisher");
  EXPECT_EQ(r.p, 7u);
  EXPECT_EQ(r.modulus, "7^2");
  EXPECT_EQ(r.lhs, "34");  // 720 mod 49
  EXPECT_EQ(r.lhs, r.rhs);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.ns, 0);
}

TEST(RunClaim, KnownFailureCarriesMismatchDetail) {
  auto r = run_claim("harmonic.penultimate", 7, untimed());
  EXPECT_FALSE(r.holds);
  bool found = false;
  for (const auto& [name, value] : r.details) found |= name == "mismatch";
  EXPECT_TRUE(found);
}

TEST(RunClaim, RejectsInadmissibleSubjects) {
  try {
    run_claim("wilson.glaisher", 9);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
  EXPECT_THROW(run_claim("nope", 7), Error);
}

TEST(Sweep, EmptyAndOrdered) {
  EXPECT_TRUE(sweep("wilson.glaisher", 24, 28).empty());
  auto serial = sweep("bernoulli.kummer", 5, 400, 1, untimed());
  auto parallel = sweep("bernoulli.kummer", 5, 400, 4, untimed());
  ASSERT_EQ(serial.size(), parallel.size());
  ASSERT_FALSE(serial.empty());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_TRUE(serial[i].same_outcome(parallel[i])) << i;
    if (i > 0) EXPECT_LT(serial[i - 1].p, serial[i].p);
  }
}

TEST(Sweep, IntegerSubjects) {
  auto reports = sweep("giuga.korselt", 3, 3000, 1, untimed());
  std::vector<std::uint64_t> subjects;
  for (const auto& r : reports) subjects.push_back(r.p);
  EXPECT_EQ(subjects, (std::vector<std::uint64_t>{561, 1105, 1729, 2465, 2821}));
}

TEST(Builder, ModulusMismatchAndLists) {
  ReportBuilder b;
  EXPECT_THROW(b.add(ResidueModPk(5, 1, 1), ResidueModPk(5, 2, 1)), Error);
  b.add(ResidueModPk(5, 2, 3), ResidueModPk(5, 2, 3), "k=1");
  b.add(ResidueModPk(5, 2, 4), ResidueModPk(5, 2, 9), "k=2");
  auto r = b.finish("demo", 5);
  EXPECT_EQ(r.modulus, "5^2");
  EXPECT_EQ(r.lhs, "[3,4]");
  EXPECT_EQ(r.rhs, "[3,9]");
  EXPECT_FALSE(r.holds);
}

TEST(Report, JsonAndCsvRoundTrip) {
  auto reports = sweep("wilson.fermat_quotient", 3, 60, 1, untimed());
  reports.push_back(CongruenceReport{"demo", 7, "exact", "1/2", "a, \"b\"", false, 12, {}});
  auto json = to_json(reports);
  auto back = reports_from_json(json);
  ASSERT_EQ(back.size(), reports.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_TRUE(back[i].same_outcome(reports[i]));
  EXPECT_EQ(to_json(back), json);
  auto csv = to_csv(reports);
  auto from_csv = reports_from_csv(csv);
  ASSERT_EQ(from_csv.size(), reports.size());
  for (std::size_t i = 0; i < from_csv.size(); ++i) EXPECT_TRUE(from_csv[i].same_outcome(reports[i]));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "claim,p,modulus,lhs,rhs,holds,ns");
  EXPECT_THROW(reports_from_json("{"), Error);
  EXPECT_THROW(reports_from_csv("a,b\n"), Error);
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::Csv);
  EXPECT_THROW(parse_output_format("xml"), Error);
}
