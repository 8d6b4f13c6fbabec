#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace dicritical;
using dicritical::testing::fixture;

namespace fs = std::filesystem;

namespace {

const fs::path kScenarios = fs::path(DICRITICAL_TEST_DATA_DIR) / "scenarios";

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("dicritical-test-" + name);
  fs::remove_all(p);
  return p;
}

Json fixture_json(const std::string& name) {
  for (const auto& [n, text] : builtin_fixtures())
    if (n == name) return Json::parse(text);
  throw InputError("unknown fixture");
}

}  // namespace

TEST(Fixtures, AllVerify) {
  for (const auto& [name, text] : builtin_fixtures()) {
    const auto sc = fixture(std::string(name));
    const VerifyReport rep = run_verify(sc, solve(sc));
    EXPECT_TRUE(rep.pass()) << format_verify(sc.name, rep);
    for (const auto& row : rep.rows) EXPECT_EQ(row.symbolic, row.predicted) << name << " E_" << row.index;
  }
}

TEST(Fixtures, NamesAreUnique) {
  std::set<std::string_view> seen;
  for (const auto& [name, text] : builtin_fixtures()) EXPECT_TRUE(seen.insert(name).second);
  EXPECT_FALSE(builtin_fixture("no-such-fixture"));
}

TEST(Json, ScenarioRoundTrip) {
  for (const auto& [name, text] : builtin_fixtures()) {
    const auto sc = fixture(std::string(name));
    const Json once = to_json(sc);
    const Json twice = to_json(scenario_from_json(once));
    EXPECT_EQ(once, twice) << name;
  }
}

TEST(Json, CertificateRoundTrip) {
  for (const auto& [name, text] : builtin_fixtures()) {
    const auto sc = fixture(std::string(name));
    const Certificate cert = solve(sc);
    const Json doc = certificate_document(sc, cert);
    const Certificate back = certificate_from_document(Json::parse(doc.dump()));
    EXPECT_EQ(certificate_body(back), doc.at("result")) << name;
    EXPECT_EQ(predicted_orders(back), predicted_orders(cert));
  }
}

TEST(Json, BigIntegersSurvive) {
  const BigInt big("123456789012345678901234567890");
  EXPECT_EQ(int_from_json(to_json_int(big), "test"), big);
  EXPECT_EQ(int_from_json(to_json_int(BigInt(-7)), "test"), -7);
  EXPECT_EQ(rational_from_json(to_json_rational(Rational(-3, 4)), "test"), Rational(-3, 4));
}

TEST(Json, RejectsNonIntegers) {
  EXPECT_THROW(int_from_json(Json(1.5), "test"), InputError);
  EXPECT_THROW(int_from_json(Json("12a"), "test"), InputError);
  Json j = fixture_json("ex1-pi");
  j["descriptor"]["centers"][1]["T_row"][0] = 0.5;
  EXPECT_THROW(scenario_from_json(j), InputError);
}

TEST(Json, TermListPolynomials) {
  Json j = fixture_json("ex1-pi");
  j["equations"]["curvettes"]["2"][0] = Json::array({Json{{"c", 2}, {"e", {1, 0, 0}}}, Json{{"c", 3}, {"e", {0, 1, 0}}}});
  const auto sc = scenario_from_json(j);
  EXPECT_EQ(sc.equations.curvette(2, 0), dicritical::testing::poly("2*x + 3*y"));
}

TEST(Loading, RejectsMismatchedTower) {
  Json j = fixture_json("ex-4.2");
  j["tower"]["steps"].erase(2);
  EXPECT_THROW(scenario_from_json(j), InputError);
  Json k = fixture_json("ex-4.2");
  k["descriptor"]["centers"][2]["D"] = {1};
  EXPECT_THROW(scenario_from_json(k), InputError);
}

TEST(Loading, RejectsUnknownSchemaAndKinds) {
  Json j = fixture_json("ex-4.2");
  j["schema_version"] = 2;
  EXPECT_THROW(scenario_from_json(j), InputError);
  Json k = fixture_json("ex-4.2");
  k["request"]["kind"] = "magic";
  EXPECT_THROW(scenario_from_json(k), InputError);
}

TEST(Loading, ForcedScalarAppliesToAllLaterCurvettes) {
  const auto sc = load_scenario_file(kScenarios / "ex-4.4-k2l6.json");
  const auto& r = std::get<Thm4Request>(*sc.request);
  ASSERT_TRUE(r.force);
  EXPECT_EQ(r.force->k.at(2), 2);
  EXPECT_TRUE(run_verify(sc, solve(sc)).pass());
}

TEST(Probes, OutsideWindowFlagsLastDivisor) {
  const auto sc = load_scenario_file(kScenarios / "ex-4.5-l20.json");
  const VerifyReport rep = run_verify(sc, solve(sc));
  EXPECT_FALSE(rep.pass());
  EXPECT_FALSE(rep.rows[3].ok());
  EXPECT_TRUE(rep.rows[3].dicritical);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(rep.rows[i].ok()) << format_verify(sc.name, rep);
}

TEST(Probes, BoundaryChoiceFlagsSecondDivisor) {
  const auto sc = load_scenario_file(kScenarios / "ex-4.4-k1l4.json");
  const VerifyReport rep = run_verify(sc, solve(sc));
  EXPECT_FALSE(rep.pass());
  EXPECT_TRUE(rep.rows[0].ok());
  EXPECT_TRUE(rep.rows[1].dicritical);
  EXPECT_FALSE(rep.rows[1].ok());
}

TEST(Verify, MissingTowerIsAnInputError) {
  Json j = fixture_json("ex-4.2");
  j.erase("tower");
  j.erase("equations");
  const auto sc = scenario_from_json(j);
  EXPECT_THROW(run_verify(sc, solve(sc)), InputError);
}

TEST(Verify, ByteStableUnderFixedSeed) {
  for (const std::string name : {"ex-4.2-main", "ex-4.5"}) {
    const auto sc = fixture(name);
    const std::string a = to_json(run_verify(sc, solve(sc))).dump(2);
    const std::string b = to_json(run_verify(sc, solve(sc))).dump(2);
    EXPECT_EQ(a, b);
  }
}

TEST(Verify, SeedChangesOnlyTheRandomParts) {
  auto sc = fixture("ex-4.2-main");
  const VerifyReport a = run_verify(sc, solve(sc));
  sc.seed = 99;
  const VerifyReport b = run_verify(sc, solve(sc));
  EXPECT_TRUE(a.pass());
  EXPECT_TRUE(b.pass());
  EXPECT_NE(to_string(a.mobius[0].second.a), to_string(b.mobius[0].second.a));
}

TEST(Artifacts, AppendOnly) {
  const fs::path dir = scratch_dir("artifacts");
  const auto p1 = write_artifact(dir, "s.solve", ".json", "one\n");
  const auto p2 = write_artifact(dir, "s.solve", ".json", "one\n");
  EXPECT_EQ(p1, p2);
  const auto p3 = write_artifact(dir, "s.solve", ".json", "two\n");
  EXPECT_EQ(p3.filename(), "s.solve.1.json");
  const auto p4 = write_artifact(dir, "s.solve", ".json", "two\n");
  EXPECT_EQ(p4, p3);
  std::ifstream in(p1);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "one");
  fs::remove_all(dir);
}

TEST(Matrix, ReportsSpecialRowsForTarget) {
  const MatrixReport rep = run_matrix(fixture("ex-4.2"));
  ASSERT_TRUE(rep.b);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.a.stacked(*rep.b), (IntMatrix{{1, 1, 2}, {1, 2, 3}, {1, 2, 4}, {2, 4, 7}, {3, 5, 9}}));
}
