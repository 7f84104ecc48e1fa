// Command-line front end: braid generation, invariants, certificates, cusp
// lengths and surgery homology.

#include "lspace/alexander.hpp"
#include "lspace/braid.hpp"
#include "lspace/certificate.hpp"
#include "lspace/cusp.hpp"
#include "lspace/homfly.hpp"
#include "lspace/surgery.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

namespace {

using namespace lspace;
using ordered_json = nlohmann::ordered_json;

std::string full_precision(double x) {
  // shortest text that reads back to the same double
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

ordered_json invariants_json(const BraidWord& b) {
  ordered_json j;
  j["braid"] = b.to_string();
  j["strands"] = b.strands();
  j["letters"] = b.letter_count();
  j["exponent_sum"] = b.exponent_sum();
  j["components"] = closure_components(b);
  j["positive"] = b.is_positive();
  j["twist_positive"] = is_twist_positive(b);
  const bool knot = is_knot_closure(b);
  if (knot && b.is_positive()) {
    j["genus"] = bennequin_genus(b);
  } else {
    j["genus"] = nullptr;
  }
  if (knot) {
    const LaurentPoly1 delta = alexander_poly(b);
    j["alexander"] = delta.to_string();
    j["alexander_span"] = delta.is_zero() ? 0 : breadth(delta, 0);
    j["lspace_form_ok"] = lspace_form_check(delta);
  } else {
    j["alexander"] = nullptr;
  }
  const LaurentPoly2 p = homfly(b);
  j["homfly"] = p.to_string();
  const BraidIndexResult bounds{mfw_lower_bound(p), b.strands()};
  j["mfw_bound"] = bounds.lower_bound;
  j["braid_index"] = bounds.to_string();
  return j;
}

void print_invariants(const ordered_json& j) {
  for (const auto& [key, value] : j.items()) {
    std::cout << std::left << std::setw(16) << key << "  ";
    if (value.is_string()) {
      std::cout << value.get<std::string>();
    } else if (value.is_null()) {
      std::cout << "-";
    } else {
      std::cout << value.dump();
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and certificates for the twisted braid family K_n"};
  app.require_subcommand(1);

  int gen_n = 0;
  bool gen_pd = false;
  auto* gen = app.add_subcommand("gen", "print the braid word of K_n");
  gen->add_option("--n", gen_n, "twist parameter")->required()->check(CLI::NonNegativeNumber);
  gen->add_flag("--pd", gen_pd, "print the closure's PD code as JSON instead");

  std::optional<std::string> inv_braid;
  std::optional<int> inv_n, inv_strands;
  bool inv_json = false;
  auto* inv = app.add_subcommand("invariants", "invariants of a braid closure");
  auto* braid_opt = inv->add_option("--braid", inv_braid, "braid word, e.g. \"(1,2,3)^4,2,1\"");
  auto* n_opt = inv->add_option("--n", inv_n, "use K_n")->check(CLI::NonNegativeNumber);
  inv->add_option("--strands", inv_strands, "strand count (default: from the word)");
  inv->add_flag("--json", inv_json, "JSON output");
  braid_opt->excludes(n_opt);
  n_opt->excludes(braid_opt);

  int cert_n = 0;
  std::optional<std::string> cert_fixtures;
  bool cert_json = false;
  int cert_homfly_max = CertificateConfig{}.homfly_max_n;
  auto* certify = app.add_subcommand("certify", "build the certificate for K_n");
  certify->add_option("--n", cert_n, "twist parameter")->required()->check(CLI::NonNegativeNumber);
  certify->add_option("--fixtures", cert_fixtures, "geometry fixture JSON file")
      ->check(CLI::ExistingFile);
  certify->add_option("--homfly-max-n", cert_homfly_max, "largest n for which HOMFLY runs");
  certify->add_flag("--json", cert_json, "JSON output");

  std::string cusp_z;
  double cusp_threshold = CertificateConfig{}.length_threshold;
  auto* cusp = app.add_subcommand("cusp", "normalized lengths of -1/n on a cusp");
  cusp->add_option("--z", cusp_z, "cusp shape as RE,IM")->required();
  cusp->add_option("--threshold", cusp_threshold, "normalized length threshold");

  std::string diagram_file;
  auto* homology = app.add_subcommand("homology", "first homology of a surgery diagram");
  homology->add_option("--diagram", diagram_file, "diagram JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const BraidWord b = family_braid(gen_n);
      if (gen_pd) {
        std::cout << closure_pd_code(b).to_json().dump() << "\n";
      } else {
        std::cout << b.to_string() << "\n";
      }
      return 0;
    }

    if (inv->parsed()) {
      if (!inv_braid && !inv_n) throw CLI::RequiredError("--braid or --n");
      const BraidWord b = inv_n ? family_braid(*inv_n) : parse_braid(*inv_braid, inv_strands);
      const ordered_json j = invariants_json(b);
      if (inv_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        print_invariants(j);
      }
      return 0;
    }

    if (certify->parsed()) {
      std::vector<GeometryFixture> fixtures;
      if (cert_fixtures) fixtures = load_fixtures(*cert_fixtures);
      CertificateConfig config;
      config.homfly_max_n = cert_homfly_max;
      const LSpaceCertificate c = build_certificate(cert_n, fixtures, config);
      std::cout << render_report(c, cert_json ? ReportFormat::Json : ReportFormat::Text);
      return c.passes() ? 0 : 1;
    }

    if (cusp->parsed()) {
      const CuspShape<double> shape = parse_cusp_shape(cusp_z);
      const int n = min_twist_meeting_threshold(shape, cusp_threshold);
      std::cout << "z                 " << full_precision(shape.z().real()) << " + "
                << full_precision(shape.z().imag()) << "i\n";
      std::cout << "threshold         " << full_precision(cusp_threshold) << "\n";
      std::cout << "monotone from n = " << monotone_from(shape) << "\n";
      if (n > 1)
        std::cout << "L(-1/" << n - 1 << ")" << std::string(12 - std::to_string(n - 1).size(), ' ')
                  << full_precision(normalized_length(shape, -1, n - 1)) << "\n";
      std::cout << "L(-1/" << n << ")" << std::string(12 - std::to_string(n).size(), ' ')
                << full_precision(normalized_length(shape, -1, n)) << "\n";
      std::cout << "min n             " << n << "\n";
      return 0;
    }

    if (homology->parsed()) {
      std::ifstream in(diagram_file);
      const SurgeryDiagram d = SurgeryDiagram::from_json(nlohmann::json::parse(in));
      std::cout << first_homology(d).to_string() << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
