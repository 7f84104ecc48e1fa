#include "lspace/certificate.hpp"

#include "lspace/alexander.hpp"
#include "lspace/braid.hpp"
#include "lspace/homfly.hpp"
#include "lspace/surgery.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lspace {

// --- Fixtures ---------------------------------------------------------------

void GeometryFixture::validate() const {
  if (subject.empty()) throw CertificateError("fixture without subject");
  if (subject == "K_n" && !n) throw CertificateError("K_n fixture without n");
  if (n && *n < 0) throw CertificateError("fixture with negative n");
  if (symmetry_group_order < 1)
    throw CertificateError("fixture " + subject + ": symmetry_group_order must be >= 1");
  if (cusp_shape && !(cusp_shape->imag() > 0))
    throw CertificateError("fixture " + subject + ": cusp shape needs Im > 0");
}

nlohmann::ordered_json GeometryFixture::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  if (n) j["n"] = *n;
  j["hyperbolic"] = hyperbolic;
  j["symmetry_group_order"] = symmetry_group_order;
  if (cusp_shape) j["cusp_shape"] = {{"re", cusp_shape->real()}, {"im", cusp_shape->imag()}};
  if (shortest_geodesic_lower_bound) j["shortest_geodesic_lower_bound"] = *shortest_geodesic_lower_bound;
  if (identified_with) j["identified_with"] = *identified_with;
  j["provenance"] = {{"engine", provenance.engine},
                     {"version", provenance.version},
                     {"date", provenance.date},
                     {"note", provenance.note}};
  return j;
}

GeometryFixture GeometryFixture::from_json(const nlohmann::json& j) {
  GeometryFixture f;
  f.subject = j.at("subject").get<std::string>();
  if (j.contains("n")) f.n = j.at("n").get<int>();
  f.hyperbolic = j.at("hyperbolic").get<bool>();
  f.symmetry_group_order = j.at("symmetry_group_order").get<int>();
  if (j.contains("cusp_shape")) {
    const auto& z = j.at("cusp_shape");
    f.cusp_shape = std::complex<double>(z.at("re").get<double>(), z.at("im").get<double>());
  }
  if (j.contains("shortest_geodesic_lower_bound"))
    f.shortest_geodesic_lower_bound = j.at("shortest_geodesic_lower_bound").get<double>();
  if (j.contains("identified_with")) f.identified_with = j.at("identified_with").get<std::string>();
  if (j.contains("provenance")) {
    const auto& p = j.at("provenance");
    f.provenance.engine = p.value("engine", "");
    f.provenance.version = p.value("version", "");
    f.provenance.date = p.value("date", "");
    f.provenance.note = p.value("note", "");
  }
  f.validate();
  return f;
}

std::vector<GeometryFixture> parse_fixtures(const nlohmann::json& j) {
  if (!j.is_array()) throw CertificateError("fixture file must hold a JSON array");
  std::vector<GeometryFixture> out;
  for (const auto& item : j) out.push_back(GeometryFixture::from_json(item));
  return out;
}

std::vector<GeometryFixture> load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CertificateError("cannot open fixture file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CertificateError("malformed fixture file " + path.string() + ": " + e.what());
  }
  return parse_fixtures(j);
}

nlohmann::ordered_json fixtures_to_json(const std::vector<GeometryFixture>& fixtures) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : fixtures) arr.push_back(f.to_json());
  return arr;
}

// --- Claims -----------------------------------------------------------------

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "VERIFIED";
    case ClaimStatus::Consistent: return "CONSISTENT";
    case ClaimStatus::Assumed: return "ASSUMED";
    case ClaimStatus::Fixture: return "FIXTURE";
    case ClaimStatus::Unverified: return "UNVERIFIED";
    case ClaimStatus::Failed: return "FAILED";
    case ClaimStatus::NotApplicable: return "NOT-APPLICABLE";
  }
  return "?";
}

const Claim& LSpaceCertificate::claim(std::string_view id) const {
  for (const auto& c : claims)
    if (c.id == id) return c;
  throw CertificateError("no claim " + std::string(id));
}

std::size_t LSpaceCertificate::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; }));
}

bool LSpaceCertificate::passes() const {
  return count(ClaimStatus::Unverified) == 0 && count(ClaimStatus::Failed) == 0;
}

namespace {

std::string fmt_double(double x) {
  // shortest text that reads back to the same double
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string fixture_label(const GeometryFixture& f) {
  std::string s = f.subject;
  if (f.n && f.subject == "K_n") s = "K_" + std::to_string(*f.n);
  if (!f.provenance.engine.empty()) s += " (" + f.provenance.engine + ")";
  return s;
}

const GeometryFixture* find_knot_fixture(const std::vector<GeometryFixture>& fixtures, int n) {
  for (const auto& f : fixtures)
    if (f.subject == "K_n" && f.n == n) return &f;
  if (n == 0)
    for (const auto& f : fixtures)
      if (f.subject == "m239") return &f;
  return nullptr;
}

const GeometryFixture* find_link_fixture(const std::vector<GeometryFixture>& fixtures) {
  for (const auto& f : fixtures)
    if (f.subject == "K0_link") return &f;
  return nullptr;
}

std::vector<Assumption> standard_assumptions(const CertificateConfig& config) {
  return {
      {"k0_lspace_knot", "K_0, the census knot m239, is an L-space knot"},
      {"lens_space_filling",
       "(K_0 ∪ c)(29, 0) is the lens space L(4,-1); only its first homology is recomputed here"},
      {"large_surgery", "K(r) is an L-space whenever K is an L-space knot and r >= 2g(K) - 1"},
      {"slope_interval",
       "L-space filling slopes of a knot in a closed 3-manifold form an interval missing the "
       "homological longitude"},
      {"fibered", "closures of positive braids are fibered, so genus is read off the braid"},
      {"filling_threshold",
       "c-cusp fillings of the K_0 ∪ c complement with normalized length >= " +
           fmt_double(config.length_threshold) +
           " stay hyperbolic and asymmetric when the shortest geodesic is >= " +
           fmt_double(config.geodesic_lower_bound)},
  };
}

// Result of trying the normalized-length route for one n.
struct ThresholdRoute {
  bool applies = false;
  std::string why;
};

ThresholdRoute threshold_route(int n, const GeometryFixture* link, const CertificateConfig& config,
                               ComputedFacts& facts) {
  if (!link) return {false, "no K0_link fixture"};
  if (!link->cusp_shape) return {false, "K0_link fixture has no cusp shape"};
  const CuspShape<double> shape(*link->cusp_shape);
  const double len = normalized_length(shape, -1, n);
  facts.normalized_length = len;
  facts.meets_threshold = len >= config.length_threshold;
  const std::string len_text = "normalized length of -1/" + std::to_string(n) + " is " +
                               fmt_double(len);
  if (!*facts.meets_threshold)
    return {false, len_text + " < " + fmt_double(config.length_threshold)};
  if (!link->hyperbolic) return {false, "K0_link fixture is not hyperbolic"};
  if (link->symmetry_group_order != 1) return {false, "K0_link fixture is not asymmetric"};
  if (!link->shortest_geodesic_lower_bound ||
      *link->shortest_geodesic_lower_bound < config.geodesic_lower_bound)
    return {false, "K0_link fixture lacks shortest geodesic >= " +
                       fmt_double(config.geodesic_lower_bound)};
  return {true, len_text + " >= " + fmt_double(config.length_threshold) +
                    " on a hyperbolic asymmetric link complement"};
}

}  // namespace

LSpaceCertificate build_certificate(int n, const std::vector<GeometryFixture>& fixtures,
                                    const CertificateConfig& config) {
  if (n < 0) throw CertificateError("certificate index must be non-negative");
  for (const auto& f : fixtures) f.validate();

  LSpaceCertificate cert;
  cert.n = n;
  cert.config = config;
  cert.assumptions = standard_assumptions(config);
  ComputedFacts& facts = cert.computed;
  auto add = [&](std::string id, std::string statement, ClaimStatus status, std::string evidence) {
    cert.claims.push_back({std::move(id), std::move(statement), status, std::move(evidence)});
  };
  auto use_fixture = [&](const GeometryFixture& f) {
    const std::string label = fixture_label(f);
    if (std::find(cert.fixtures_used.begin(), cert.fixtures_used.end(), label) ==
        cert.fixtures_used.end())
      cert.fixtures_used.push_back(label);
  };

  const std::string knot = "K_" + std::to_string(n);
  const BraidWord braid = family_braid(n);
  facts.braid = braid.to_string();
  facts.strands = braid.strands();
  facts.letters = static_cast<int>(braid.letter_count());

  // Knot-ness and genus.
  facts.knot_closure = is_knot_closure(braid);
  add("knot_closure", knot + " is a knot (closure of a one-cycle braid)",
      facts.knot_closure ? ClaimStatus::Verified : ClaimStatus::Failed,
      "braid permutation cycle type " + [&] {
        std::string s;
        for (int len : permutation(braid).cycle_type()) s += (s.empty() ? "" : ",") + std::to_string(len);
        return "[" + s + "]";
      }());

  facts.genus = bennequin_genus(braid);
  const LaurentPoly1 delta = alexander_poly(braid);
  facts.alexander = delta.to_string();
  facts.alexander_span = breadth(delta, 0);
  const int alexander_genus = genus_from_alexander(delta);
  const int expected_genus = n + FamilyData::base_genus;
  {
    const bool ok = *facts.genus == expected_genus && alexander_genus == expected_genus;
    add("genus", knot + " has genus " + std::to_string(expected_genus),
        ok ? ClaimStatus::Verified : ClaimStatus::Failed,
        "positive braid: (crossings - strands + 1)/2 = " + std::to_string(*facts.genus) +
            "; Alexander span/2 = " + std::to_string(alexander_genus));
  }
  add("fibered", knot + " is fibered", ClaimStatus::Assumed,
      "positive braid closure (assumption: fibered)");

  facts.lspace_form_ok = lspace_form_check(delta);
  add("lspace_alexander_form", "Alexander polynomial of " + knot + " has L-space-knot form",
      facts.lspace_form_ok ? ClaimStatus::Consistent : ClaimStatus::Failed,
      std::string("coefficients ±1 alternating from the top: ") +
          (facts.lspace_form_ok ? "yes" : "no") + " (necessary condition only)");

  // Braid index.
  facts.twist_positive = is_twist_positive(braid);
  facts.braid_index_upper_bound = braid.strands();
  if (n <= config.homfly_max_n) {
    const LaurentPoly2 p = homfly(braid);
    facts.homfly = p.to_string();
    facts.mfw_bound = mfw_lower_bound(p);
    const BraidIndexResult bounds{*facts.mfw_bound, braid.strands()};
    facts.braid_index = bounds.certified();
    if (facts.braid_index) {
      add("braid_index", knot + " has braid index " + std::to_string(braid.strands()),
          ClaimStatus::Verified,
          "MFW lower bound " + std::to_string(*facts.mfw_bound) + " = strand count " +
              std::to_string(braid.strands()));
    } else {
      add("braid_index", knot + " has braid index " + std::to_string(braid.strands()),
          ClaimStatus::Unverified, "braid index " + bounds.to_string());
    }
  } else {
    add("braid_index", knot + " has braid index " + std::to_string(braid.strands()),
        ClaimStatus::Consistent,
        "upper bound " + std::to_string(braid.strands()) + " from the presentation" +
            (facts.twist_positive ? ", twist positive" : "") + "; MFW unverified (n > " +
            std::to_string(config.homfly_max_n) + ")");
  }

  // Surgery homology.
  const long long r = FamilyData::surgery_slope;
  const long long w = FamilyData::linking_number;
  const AbelianGroup lens = first_homology(two_component_diagram(Slope(r), Slope(0), w));
  facts.h1_lens_check = lens.to_string();
  add("lens_space_filling", "(K_0 ∪ c)(29, 0) is the lens space L(4,-1)",
      lens.is_cyclic() && lens.order() == FamilyData::lens_order ? ClaimStatus::Consistent
                                                                 : ClaimStatus::Failed,
      "H_1 = " + facts.h1_lens_check + ", consistent with L(4,-1); Kirby moves not mechanized");

  const Slope image = twist_image_slope(Slope(r), w, n);
  facts.image_slope = image.to_string();
  const AbelianGroup twisted = first_homology(two_component_diagram(Slope(r), Slope(-1, n), w));
  facts.h1_twist_check = twisted.to_string();
  {
    const bool ok = image.is_integral() && twisted.is_cyclic() && twisted.order() == image.p();
    add("image_slope", "(K_0 ∪ c)(29, -1/" + std::to_string(n) + ") = " + knot + "(" +
                           facts.image_slope + ")",
        ok ? ClaimStatus::Verified : ClaimStatus::Failed,
        "twisted slope 29 + 4n = " + facts.image_slope + "; H_1 = " + facts.h1_twist_check);
  }

  const long long bound = 2LL * FamilyData::base_genus - 1;
  const Slope longitude = homological_longitude_slope(Slope(r), w);
  facts.homological_longitude_slope = longitude.to_string();
  facts.twist_hypothesis = r >= bound && w > 1 && longitude.p() > 0;
  add("twist_hypothesis", "slope 29 >= 2g(K_0) - 1 and lk(K_0, c) > 1",
      facts.twist_hypothesis ? ClaimStatus::Verified : ClaimStatus::Failed,
      "29 >= " + std::to_string(bound) + ", w = " + std::to_string(w) +
          ", homological longitude slope " + facts.homological_longitude_slope + " > 0");

  if (n == 0) {
    add("lspace_knot", knot + " is an L-space knot", ClaimStatus::Assumed, "K_0 is census knot m239");
  } else {
    const bool covered = twist_slopes_covered(Slope(r), w)(n);
    const bool ok = covered && facts.twist_hypothesis && facts.lspace_form_ok;
    add("lspace_knot", knot + " is an L-space knot",
        ok ? ClaimStatus::Consistent : ClaimStatus::Failed,
        "twist family over K_0 with fillings 29 and 0; -1/" + std::to_string(n) +
            " is a covered slope, so " + knot + "(" + facts.image_slope +
            ") is an L-space given the assumptions");
  }

  // Hyperbolicity and asymmetry.
  const GeometryFixture* link = find_link_fixture(fixtures);
  const GeometryFixture* own = find_knot_fixture(fixtures, n);
  ThresholdRoute route;
  if (n > 0) route = threshold_route(n, link, config, facts);

  if (n > 0 && route.applies) {
    use_fixture(*link);
    add("hyperbolic", knot + " is hyperbolic", ClaimStatus::Verified, route.why);
    add("asymmetric", knot + " is asymmetric", ClaimStatus::Verified, route.why);
  } else if (own) {
    use_fixture(*own);
    add("hyperbolic", knot + " is hyperbolic",
        own->hyperbolic ? ClaimStatus::Fixture : ClaimStatus::Failed,
        fixture_label(*own) + ": hyperbolic = " + (own->hyperbolic ? "true" : "false"));
    if (n == 0) {
      add("asymmetric", knot + " is asymmetric", ClaimStatus::NotApplicable,
          "K_0 is strongly invertible; symmetry group order " +
              std::to_string(own->symmetry_group_order));
    } else {
      add("asymmetric", knot + " is asymmetric",
          own->symmetry_group_order == 1 ? ClaimStatus::Fixture : ClaimStatus::Failed,
          fixture_label(*own) + ": symmetry group order " +
              std::to_string(own->symmetry_group_order));
    }
  } else {
    const std::string why =
        n == 0 ? "needs fixture for K_0" : "needs fixture, n <= " +
                                               std::to_string(FamilyData::last_fixture_twist) +
                                               (route.why.empty() ? "" : "; " + route.why);
    add("hyperbolic", knot + " is hyperbolic", ClaimStatus::Unverified, why);
    if (n == 0) {
      add("asymmetric", knot + " is asymmetric", ClaimStatus::NotApplicable,
          "K_0 is strongly invertible");
    } else {
      add("asymmetric", knot + " is asymmetric", ClaimStatus::Unverified, why);
    }
  }
  return cert;
}

// --- Reports ----------------------------------------------------------------

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  throw CertificateError("unknown report format \"" + std::string(name) + "\"");
}

nlohmann::ordered_json certificate_to_json(const LSpaceCertificate& c) {
  using json = nlohmann::ordered_json;
  const ComputedFacts& f = c.computed;
  auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };

  json j;
  j["schema_version"] = LSpaceCertificate::schema_version;
  j["n"] = c.n;
  j["config"] = {{"homfly_max_n", c.config.homfly_max_n},
                 {"length_threshold", c.config.length_threshold},
                 {"geodesic_lower_bound", c.config.geodesic_lower_bound}};
  j["computed"] = {{"braid", f.braid},
                   {"strands", f.strands},
                   {"letters", f.letters},
                   {"knot_closure", f.knot_closure},
                   {"twist_positive", f.twist_positive},
                   {"genus", opt(f.genus)},
                   {"alexander", f.alexander},
                   {"alexander_span", f.alexander_span},
                   {"lspace_form_ok", f.lspace_form_ok},
                   {"homfly", opt(f.homfly)},
                   {"mfw_bound", opt(f.mfw_bound)},
                   {"braid_index", opt(f.braid_index)},
                   {"braid_index_upper_bound", f.braid_index_upper_bound},
                   {"h1_lens_check", f.h1_lens_check},
                   {"h1_twist_check", f.h1_twist_check},
                   {"image_slope", f.image_slope},
                   {"homological_longitude_slope", f.homological_longitude_slope},
                   {"twist_hypothesis", f.twist_hypothesis},
                   {"normalized_length", opt(f.normalized_length)},
                   {"meets_threshold", opt(f.meets_threshold)}};
  auto claims = json::array();
  for (const auto& cl : c.claims)
    claims.push_back({{"claim", cl.id},
                      {"statement", cl.statement},
                      {"status", std::string(to_string(cl.status))},
                      {"evidence", cl.evidence}});
  j["claims"] = std::move(claims);
  auto assumptions = json::array();
  for (const auto& a : c.assumptions) assumptions.push_back({{"id", a.id}, {"statement", a.statement}});
  j["assumptions"] = std::move(assumptions);
  j["fixtures_used"] = c.fixtures_used;
  j["passes"] = c.passes();
  return j;
}

std::string render_report(const LSpaceCertificate& c, ReportFormat format) {
  if (format == ReportFormat::Json) return certificate_to_json(c).dump(2) + "\n";

  std::ostringstream os;
  const ComputedFacts& f = c.computed;
  os << "Certificate for K_" << c.n << "\n";
  os << "braid: [" << f.braid << "] on " << f.strands << " strands (" << f.letters
     << " letters)\n\n";

  std::size_t id_width = 5, status_width = 6;
  for (const auto& cl : c.claims) {
    id_width = std::max(id_width, cl.id.size());
    status_width = std::max(status_width, to_string(cl.status).size());
  }
  auto pad = [](std::string_view s, std::size_t width) {
    std::string out(s);
    out.resize(std::max(width, s.size()), ' ');
    return out;
  };
  os << pad("claim", id_width) << "  " << pad("status", status_width) << "  evidence\n";
  os << std::string(id_width, '-') << "  " << std::string(status_width, '-') << "  --------\n";
  for (const auto& cl : c.claims)
    os << pad(cl.id, id_width) << "  " << pad(to_string(cl.status), status_width) << "  "
       << cl.evidence << "\n";

  os << "\ncomputed:\n";
  os << "  genus                " << (f.genus ? std::to_string(*f.genus) : "-") << "\n";
  os << "  alexander            " << f.alexander << "\n";
  os << "  homfly               " << (f.homfly ? *f.homfly : "(skipped)") << "\n";
  os << "  mfw bound            " << (f.mfw_bound ? std::to_string(*f.mfw_bound) : "-") << "\n";
  os << "  H1 (29, 0)           " << f.h1_lens_check << "\n";
  os << "  H1 (29, -1/n)        " << f.h1_twist_check << "\n";
  os << "  image slope          " << f.image_slope << "\n";
  os << "  normalized length    "
     << (f.normalized_length ? fmt_double(*f.normalized_length) : "-") << "\n";

  os << "\nassumptions:\n";
  for (const auto& a : c.assumptions) os << "  " << a.id << ": " << a.statement << "\n";
  os << "\nfixtures used:";
  if (c.fixtures_used.empty()) os << " none";
  os << "\n";
  for (const auto& u : c.fixtures_used) os << "  " << u << "\n";
  os << "\nresult: " << (c.passes() ? "PASS" : "INCOMPLETE") << "\n";
  return os.str();
}

}  // namespace lspace
