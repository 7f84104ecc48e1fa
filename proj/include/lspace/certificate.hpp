#pragma once

#include "lspace/cusp.hpp"

#include <json.hpp>

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lspace {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed data of the twist family: K_n is K_0 after −1/n surgery on an unknot
/// c with lk(K_0, c) = 2, and (K_0 ∪ c)(29, 0) is the lens-space filling.
struct FamilyData {
  static constexpr long long surgery_slope = 29;
  static constexpr long long linking_number = 2;
  static constexpr int base_genus = 11;
  static constexpr long long lens_order = 4;
  /// Twists that need a per-knot geometry fixture; the filling threshold
  /// covers everything above.
  static constexpr int last_fixture_twist = 12;
};

struct Provenance {
  std::string engine;
  std::string version;
  std::string date;
  std::string note;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Geometric facts computed elsewhere (by a hyperbolic-geometry engine) and
/// ingested here. Subjects are "K_n" (with `n`), "K0_link" for the complement
/// of K_0 ∪ c, or a census name such as "m239".
struct GeometryFixture {
  std::string subject;
  std::optional<int> n;
  bool hyperbolic = false;
  int symmetry_group_order = 1;
  std::optional<std::complex<double>> cusp_shape;
  std::optional<double> shortest_geodesic_lower_bound;
  std::optional<std::string> identified_with;
  Provenance provenance;

  /// Checks the invariants; throws CertificateError.
  void validate() const;

  nlohmann::ordered_json to_json() const;
  static GeometryFixture from_json(const nlohmann::json& j);

  friend bool operator==(const GeometryFixture&, const GeometryFixture&) = default;
};

std::vector<GeometryFixture> parse_fixtures(const nlohmann::json& j);
std::vector<GeometryFixture> load_fixtures(const std::filesystem::path& path);
nlohmann::ordered_json fixtures_to_json(const std::vector<GeometryFixture>& fixtures);

struct CertificateConfig {
  /// HOMFLY (and so the MFW braid-index bound) runs for n up to this value.
  int homfly_max_n = 5;
  /// Normalized length from which c-cusp fillings stay hyperbolic and asymmetric.
  double length_threshold = 10.1;
  /// Shortest-geodesic hypothesis the link-complement fixture must meet.
  double geodesic_lower_bound = 1.48;
};

enum class ClaimStatus {
  Verified,       // computed here
  Consistent,     // computed here, and agrees with a stronger statement not computed here
  Assumed,        // literature fact taken as given
  Fixture,        // external input from the geometry engine
  Unverified,     // needed input absent or computation skipped without a fallback
  Failed,         // computed here and contradicts the claim
  NotApplicable,
};

std::string_view to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string statement;
  ClaimStatus status = ClaimStatus::Unverified;
  std::string evidence;
};

struct Assumption {
  std::string id;
  std::string statement;
};

struct ComputedFacts {
  std::string braid;
  int strands = 0;
  int letters = 0;
  bool knot_closure = false;
  bool twist_positive = false;
  std::optional<int> genus;
  std::string alexander;
  int alexander_span = 0;
  bool lspace_form_ok = false;
  std::optional<std::string> homfly;
  std::optional<int> mfw_bound;
  std::optional<int> braid_index;
  int braid_index_upper_bound = 0;
  std::string h1_lens_check;
  std::string h1_twist_check;
  std::string image_slope;
  std::string homological_longitude_slope;
  bool twist_hypothesis = false;
  std::optional<double> normalized_length;
  std::optional<bool> meets_threshold;
};

struct LSpaceCertificate {
  static constexpr int schema_version = 1;

  int n = 0;
  CertificateConfig config;
  ComputedFacts computed;
  std::vector<Claim> claims;
  std::vector<Assumption> assumptions;
  std::vector<std::string> fixtures_used;

  const Claim& claim(std::string_view id) const;
  std::size_t count(ClaimStatus s) const;
  /// No claim is UNVERIFIED or FAILED.
  bool passes() const;
};

LSpaceCertificate build_certificate(int n, const std::vector<GeometryFixture>& fixtures,
                                    const CertificateConfig& config = {});

enum class ReportFormat { Text, Json };
ReportFormat parse_report_format(std::string_view name);

nlohmann::ordered_json certificate_to_json(const LSpaceCertificate& c);
std::string render_report(const LSpaceCertificate& c, ReportFormat format);

}  // namespace lspace
