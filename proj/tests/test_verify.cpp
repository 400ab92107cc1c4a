#include <gtest/gtest.h>

#include "powerspec/connectivity.hpp"
#include "powerspec/power_graph.hpp"
#include "powerspec/verify.hpp"

using namespace powerspec;

namespace {

void expect_pass(const ClaimReport& r) {
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.claim_id << " " << r.params.dump() << ": " << r.witness;
}

}  // namespace

TEST(CyclicAlgcon, Examples) {
  const auto r15 = check_cyclic_algcon(15);
  expect_pass(r15);
  EXPECT_EQ(r15.evidence["algcon"], 9);
  EXPECT_TRUE(r15.evidence["predicate"].get<bool>());

  const auto r12 = check_cyclic_algcon(12);
  expect_pass(r12);
  EXPECT_FALSE(r12.evidence["predicate"].get<bool>());
  EXPECT_TRUE(r12.evidence["algcon"].is_number_float());

  const auto r7 = check_cyclic_algcon(7);
  expect_pass(r7);
  EXPECT_EQ(r7.evidence["algcon"], 7);

  EXPECT_EQ(check_cyclic_algcon(1).verdict, Verdict::Inapplicable);
}

TEST(CyclicRadiusMultiplicity, Examples) {
  const auto r4 = check_cyclic_radius_mult(4);
  expect_pass(r4);
  EXPECT_EQ(r4.evidence["multiplicity"], 3);

  const auto r8 = check_cyclic_radius_mult(8);
  expect_pass(r8);
  EXPECT_EQ(r8.evidence["multiplicity"], 7);
  EXPECT_EQ(r8.evidence["phi_plus_one"], 5);

  const auto r12 = check_cyclic_radius_mult(12);
  expect_pass(r12);
  EXPECT_EQ(r12.evidence["multiplicity"], 5);
  EXPECT_TRUE(r12.evidence["block_shift"].get<bool>());
}

TEST(CyclicKappaEqAlgcon, Examples) {
  const auto r6 = check_cyclic_kappa_eq_mu(6);
  expect_pass(r6);
  EXPECT_EQ(r6.evidence["kappa"], 3);
  EXPECT_EQ(r6.evidence["algcon"], 3);

  const auto r9 = check_cyclic_kappa_eq_mu(9);
  expect_pass(r9);
  EXPECT_EQ(r9.evidence["kappa"], 8);
  EXPECT_EQ(r9.evidence["algcon"], 9);

  const auto r12 = check_cyclic_kappa_eq_mu(12);
  expect_pass(r12);
  EXPECT_FALSE(r12.evidence["predicate"].get<bool>());
}

TEST(CompletePowerGraph, Examples) {
  expect_pass(check_complete_power_graph(cyclic_group(1)));
  expect_pass(check_complete_power_graph(cyclic_group(16)));
  expect_pass(check_complete_power_graph(cyclic_group(10)));
  expect_pass(check_complete_power_graph(direct_product(cyclic_group(2), cyclic_group(2))));
  EXPECT_FALSE(check_complete_power_graph(direct_product(cyclic_group(2), cyclic_group(2))).evidence["complete"].get<bool>());
}

TEST(ReducedCyclicDisconnection, Examples) {
  const auto r6 = check_reduced_cyclic_disconnection(6);
  expect_pass(r6);
  EXPECT_EQ(r6.evidence["components"], 2);
  expect_pass(check_reduced_cyclic_disconnection(12));
  EXPECT_EQ(check_reduced_cyclic_disconnection(7).verdict, Verdict::Inapplicable);
  EXPECT_EQ(check_reduced_cyclic_disconnection(3).verdict, Verdict::Inapplicable);
}

TEST(GeneralizedQuaternionClosedForm, MatchesComputedSpectra) {
  // alpha = 2 merges 2^alpha = 4 into the 4-eigenvalue.
  EXPECT_EQ(generalized_quaternion_charpoly(2), (FactoredCharPoly{{0, 1}, {2, 2}, {4, 3}, {8, 2}}));
  EXPECT_EQ(generalized_quaternion_charpoly(3), (FactoredCharPoly{{0, 1}, {2, 4}, {4, 4}, {8, 5}, {16, 2}}));
  EXPECT_EQ(generalized_quaternion_charpoly(4), (FactoredCharPoly{{0, 1}, {2, 8}, {4, 8}, {16, 13}, {32, 2}}));
  for (unsigned alpha = 2; alpha <= 5; ++alpha)
    EXPECT_EQ(spectrum(power_graph(generalized_quaternion(alpha))).exact, generalized_quaternion_charpoly(alpha))
        << alpha;
}

TEST(DicyclicBundle, Examples) {
  const auto r4 = check_dicyclic_bundle(4);
  expect_pass(r4);
  EXPECT_EQ(r4.evidence["kappa"], 2);
  EXPECT_EQ(r4.evidence["kappa_witness"], nlohmann::json({0, 4}));
  EXPECT_EQ(r4.evidence["statements"], nlohmann::json({true, true, true, true, true}));

  const auto r8 = check_dicyclic_bundle(8);
  expect_pass(r8);
  EXPECT_EQ(spectrum(power_graph(dicyclic_group(8))).exact,
            (FactoredCharPoly{{0, 1}, {2, 8}, {4, 8}, {16, 13}, {32, 2}}));

  const auto r3 = check_dicyclic_bundle(3);
  expect_pass(r3);
  EXPECT_EQ(r3.evidence["statements"], nlohmann::json({false, false, false, false, false}));
  EXPECT_EQ(r3.evidence["radius_multiplicity"], 1);

  const auto r2 = check_dicyclic_bundle(2);
  expect_pass(r2);
  EXPECT_EQ(r2.evidence["statements"], nlohmann::json({true, true, true, true, true}));
  EXPECT_EQ(r2.evidence["radius_multiplicity"], 2);

  EXPECT_EQ(check_dicyclic_bundle(1).verdict, Verdict::Inapplicable);
}

TEST(DicyclicBundle, SeparatorWitnessMatchesFlow) {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    const Graph g = power_graph(dicyclic_group(n));
    const auto cut = vertex_connectivity(g);
    EXPECT_EQ(cut.size, 2u);
    EXPECT_TRUE(separates(g, {0, n}));
  }
}

TEST(PGroupBundle, Examples) {
  const auto z33 = check_pgroup_bundle(direct_product(cyclic_group(3), cyclic_group(3)));
  expect_pass(z33);
  EXPECT_EQ(z33.evidence["spectrum"], nlohmann::json::parse("[[9,1],[3,4],[1,3],[0,1]]"));
  EXPECT_EQ(z33.evidence["decomposition"], "K1 v 4*K2");

  const auto z8 = check_pgroup_bundle(cyclic_group(8));
  expect_pass(z8);
  EXPECT_EQ(z8.evidence["kappa"], 7);
  EXPECT_EQ(z8.evidence["algcon"], 8);
  EXPECT_EQ(z8.evidence["radius_multiplicity"], 7);

  const auto q2 = check_pgroup_bundle(dicyclic_group(2));
  expect_pass(q2);
  EXPECT_EQ(q2.evidence["kappa"], 2);
  EXPECT_EQ(q2.evidence["algcon"], 2);
  EXPECT_TRUE(q2.evidence["generalized_quaternion"].get<bool>());

  const auto z6 = check_pgroup_bundle(cyclic_group(6));
  EXPECT_EQ(z6.verdict, Verdict::Inapplicable);
  EXPECT_FALSE(z6.witness.empty());
}

TEST(PGroupBundle, DeskGroupsUpTo32) {
  for (const auto& g : desk_pgroups(32)) expect_pass(check_pgroup_bundle(g));
}

TEST(ProperShift, Examples) {
  expect_pass(check_proper_shift(cyclic_group(12)));
  expect_pass(check_proper_shift(dicyclic_group(3)));
  expect_pass(check_proper_shift(direct_product(cyclic_group(3), cyclic_group(3))));
  EXPECT_EQ(check_proper_shift(cyclic_group(2)).verdict, Verdict::Inapplicable);
}

TEST(JoinShiftMismatch, DetectsWrongSpectra) {
  const auto full = spectrum(power_graph(cyclic_group(8)));
  EXPECT_TRUE(detail::join_shift_mismatch(full, spectrum(proper_power_graph(cyclic_group(8))), 1).empty());
  EXPECT_FALSE(detail::join_shift_mismatch(full, spectrum(complete_graph(6)), 1).empty());
}

TEST(ConjectureScan, Rows) {
  const auto r6 = conjecture_row(6);
  EXPECT_TRUE(r6.algcon_integer);
  EXPECT_TRUE(r6.laplacian_integral);
  EXPECT_TRUE(r6.predicate_strict);

  const auto r8 = conjecture_row(8);
  EXPECT_TRUE(r8.algcon_integer && r8.laplacian_integral && r8.predicate_strict && r8.predicate_loose);

  const auto r12 = conjecture_row(12);
  EXPECT_FALSE(r12.predicate_strict);
  EXPECT_FALSE(r12.predicate_loose);
  EXPECT_FALSE(r12.laplacian_integral);
  EXPECT_FALSE(r12.algcon_integer);
}

TEST(ConjectureScan, SummaryAndStructuralImplication) {
  const auto scan = scan_conjecture(60);
  ASSERT_EQ(scan.rows.size(), 59u);
  EXPECT_TRUE(scan.failures_strict.empty());
  for (const auto& row : scan.rows) {
    EXPECT_TRUE(!row.laplacian_integral || row.algcon_integer) << row.n;
    // p^2 is a prime power, so both readings classify every n the same way.
    EXPECT_EQ(row.predicate_strict, row.predicate_loose) << row.n;
  }
  EXPECT_EQ(scan.failures_loose, scan.failures_strict);
  EXPECT_THROW(scan_conjecture(1), std::domain_error);
}

TEST(ConjectureScan, TsvAndJson) {
  const auto scan = scan_conjecture(6);
  EXPECT_EQ(scan_to_tsv(scan),
            "n\talgcon_integer\tlaplacian_integral\tpredicate_strict\tpredicate_loose\n"
            "2\t1\t1\t1\t1\n3\t1\t1\t1\t1\n4\t1\t1\t1\t1\n5\t1\t1\t1\t1\n6\t1\t1\t1\t1\n");
  const auto j = scan_to_json(scan);
  EXPECT_EQ(j["rows"].size(), 5u);
  EXPECT_TRUE(j["failures_strict"].empty());
}

TEST(Reports, JsonSchemaAndDeterminism) {
  const auto a = report_to_json(check_cyclic_algcon(15));
  const auto b = report_to_json(check_cyclic_algcon(15));
  EXPECT_EQ(a.dump(), b.dump());
  for (const char* key : {"claim", "params", "verdict", "witness", "evidence"}) EXPECT_TRUE(a.contains(key)) << key;
  EXPECT_FALSE(a.contains("elapsed"));
  EXPECT_EQ(a["verdict"], "pass");
  EXPECT_TRUE(a["witness"].is_null());

  const auto skipped = report_to_json(check_cyclic_algcon(1));
  EXPECT_EQ(skipped["verdict"], "inapplicable");
  EXPECT_TRUE(skipped["witness"].is_string());
}

TEST(Reports, FailureCarriesWitness) {
  const auto r = detail::run_claim("synthetic", {{"n", 1}}, [](ClaimReport&, auto& c) {
    c.require(true, "fine");
    c.require(false, "eigenvalue 5 is wrong");
  });
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_NE(r.witness.find("eigenvalue 5"), std::string::npos);

  const auto thrown = detail::run_claim("synthetic", {}, [](ClaimReport&, auto&) { throw std::runtime_error("boom"); });
  EXPECT_EQ(thrown.verdict, Verdict::Fail);
  EXPECT_NE(thrown.witness.find("boom"), std::string::npos);
}

TEST(Suite, CheckersAreTotalOverSmallRanges) {
  SuiteOptions opt;
  opt.cyclic_max = 40;
  opt.dicyclic_max = 8;
  opt.pgroup_max = 16;
  opt.scan_max = 40;
  const auto reports = run_suite(opt);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_FALSE(r.failed()) << r.claim_id << " " << r.params.dump() << ": " << r.witness;
  std::string first, second;
  for (const auto& r : reports) first += report_to_json(r).dump();
  for (const auto& r : run_suite(opt)) second += report_to_json(r).dump();
  EXPECT_EQ(first, second);
}

TEST(Suite, FiltersAndRejectsUnknownIds) {
  SuiteOptions opt;
  opt.cyclic_max = 10;
  const auto only = run_suite(opt, {"cyclic.algcon"});
  ASSERT_EQ(only.size(), 9u);
  for (const auto& r : only) EXPECT_EQ(r.claim_id, "cyclic.algcon");
  EXPECT_THROW(run_suite(opt, {"no.such.claim"}), std::invalid_argument);
}
