#include "lspace/certificate.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace lspace;

namespace {

std::vector<GeometryFixture> shipped() { return load_fixtures(LSPACE_FIXTURE_FILE); }

std::vector<GeometryFixture> link_only() {
  std::vector<GeometryFixture> out;
  for (const auto& f : shipped())
    if (f.subject == "K0_link") out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("shipped fixtures") {
  const auto fixtures = shipped();
  CHECK(fixtures.size() == 14);
  int knots = 0;
  for (const auto& f : fixtures) {
    if (f.subject == "K_n") {
      ++knots;
      CHECK(f.hyperbolic);
      CHECK(f.symmetry_group_order == 1);
    }
    if (f.subject == "m239") CHECK(f.symmetry_group_order >= 2);
  }
  CHECK(knots == 12);
}

TEST_CASE("fixture JSON round trips bit-exactly") {
  std::ifstream in(LSPACE_FIXTURE_FILE);
  std::stringstream raw;
  raw << in.rdbuf();
  const auto fixtures = parse_fixtures(nlohmann::json::parse(raw.str()));
  CHECK(fixtures_to_json(fixtures).dump(2) + "\n" == raw.str());
  CHECK(parse_fixtures(nlohmann::json::parse(fixtures_to_json(fixtures).dump())) == fixtures);
}

TEST_CASE("fixture validation") {
  CHECK_THROWS_AS(parse_fixtures(nlohmann::json::object()), CertificateError);
  CHECK_THROWS_AS(parse_fixtures(nlohmann::json::parse(
                      R"([{"subject":"K_n","hyperbolic":true,"symmetry_group_order":1}])")),
                  CertificateError);
  CHECK_THROWS_AS(parse_fixtures(nlohmann::json::parse(
                      R"([{"subject":"x","hyperbolic":true,"symmetry_group_order":0}])")),
                  CertificateError);
  CHECK_THROWS_AS(
      parse_fixtures(nlohmann::json::parse(
          R"([{"subject":"x","hyperbolic":true,"symmetry_group_order":1,"cusp_shape":{"re":0,"im":-1}}])")),
      CertificateError);
  CHECK_THROWS_AS(load_fixtures("/nonexistent/fixtures.json"), CertificateError);
}

TEST_CASE("n = 1 with shipped fixtures") {
  const auto c = build_certificate(1, shipped());
  CHECK(c.count(ClaimStatus::Unverified) == 0);
  CHECK(c.count(ClaimStatus::Failed) == 0);
  CHECK(c.passes());
  CHECK(c.computed.genus == 12);
  CHECK(c.computed.braid_index == 4);
  CHECK(c.claim("braid_index").status == ClaimStatus::Verified);
  CHECK(c.claim("genus").status == ClaimStatus::Verified);
  CHECK(c.claim("twist_hypothesis").status == ClaimStatus::Verified);
  CHECK(c.claim("lens_space_filling").status == ClaimStatus::Consistent);
  CHECK(c.claim("asymmetric").status == ClaimStatus::Fixture);
  CHECK(c.claim("fibered").status == ClaimStatus::Assumed);
  CHECK(c.computed.meets_threshold == false);

  const auto j = certificate_to_json(c);
  CHECK(j["schema_version"] == 1);
  CHECK(j["computed"]["genus"] == 12);
  CHECK(j["computed"]["braid_index"] == 4);
  const std::string dumped = j.dump();
  CHECK(dumped.find("\"genus\":12") != std::string::npos);
  CHECK(dumped.find("\"braid_index\":4") != std::string::npos);
}

TEST_CASE("n = 13 needs only the link fixture") {
  const auto c = build_certificate(13, link_only());
  CHECK(c.claim("asymmetric").status == ClaimStatus::Verified);
  CHECK(c.claim("hyperbolic").status == ClaimStatus::Verified);
  CHECK(c.passes());
  CHECK(c.fixtures_used == std::vector<std::string>{"K0_link (SnapPy)"});
  CHECK(*c.computed.normalized_length >= 10.1);
}

TEST_CASE("n = 0 asymmetry is not applicable") {
  const auto c = build_certificate(0, shipped());
  CHECK(c.claim("asymmetric").status == ClaimStatus::NotApplicable);
  CHECK(c.claim("hyperbolic").status == ClaimStatus::Fixture);
  CHECK(c.claim("lspace_knot").status == ClaimStatus::Assumed);
  CHECK(c.claim("asymmetric").evidence.find("strongly invertible") != std::string::npos);
  CHECK(c.passes());
}

TEST_CASE("missing fixtures downgrade to UNVERIFIED") {
  const auto c = build_certificate(5, {});
  CHECK(c.claim("asymmetric").status == ClaimStatus::Unverified);
  CHECK(c.claim("asymmetric").evidence.rfind("needs fixture, n <= 12", 0) == 0);
  CHECK(c.count(ClaimStatus::Unverified) == 2);
  CHECK_FALSE(c.passes());
  const std::string text = render_report(c, ReportFormat::Text);
  CHECK(text.find("UNVERIFIED  needs fixture, n <= 12") != std::string::npos);
  CHECK(text.find("result: INCOMPLETE") != std::string::npos);

  // Per-n fixtures do not help for n >= 13 without the link cusp shape.
  CHECK(build_certificate(13, {}).claim("asymmetric").status == ClaimStatus::Unverified);
}

TEST_CASE("a contradicting fixture fails the claim") {
  auto fixtures = shipped();
  for (auto& f : fixtures)
    if (f.subject == "K_n" && f.n == 2) f.symmetry_group_order = 2;
  const auto c = build_certificate(2, fixtures);
  CHECK(c.claim("asymmetric").status == ClaimStatus::Failed);
  CHECK_FALSE(c.passes());
}

TEST_CASE("large n skips HOMFLY") {
  const auto c = build_certificate(20, link_only());
  CHECK(c.computed.h1_twist_check == "Z/109");
  CHECK(c.computed.image_slope == "109");
  CHECK(c.claim("braid_index").status == ClaimStatus::Consistent);
  CHECK(c.claim("braid_index").evidence.find("MFW unverified") != std::string::npos);
  CHECK_FALSE(c.computed.homfly);
  CHECK(certificate_to_json(c).dump().find("\"h1_twist_check\":\"Z/109\"") != std::string::npos);

  CertificateConfig config;
  config.homfly_max_n = 0;
  CHECK(build_certificate(1, shipped(), config).claim("braid_index").status ==
        ClaimStatus::Consistent);
}

TEST_CASE("twist hypothesis is in every certificate") {
  for (int n : {0, 1, 7, 13, 40}) {
    const auto c = build_certificate(n, {}, CertificateConfig{0, 10.1, 1.48});
    CHECK(c.claim("twist_hypothesis").status == ClaimStatus::Verified);
    CHECK(c.claim("twist_hypothesis").evidence.rfind("29 >= 21", 0) == 0);
  }
}

TEST_CASE("reports are deterministic") {
  const auto fixtures = shipped();
  for (auto format : {ReportFormat::Json, ReportFormat::Text}) {
    const std::string a = render_report(build_certificate(3, fixtures), format);
    const std::string b = render_report(build_certificate(3, fixtures), format);
    CHECK(a == b);
  }
  CHECK(parse_report_format("json") == ReportFormat::Json);
  CHECK(parse_report_format("text") == ReportFormat::Text);
  CHECK_THROWS_AS(parse_report_format("xml"), CertificateError);
  CHECK_THROWS_AS(build_certificate(-1, {}), CertificateError);
}
