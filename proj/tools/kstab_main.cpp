// Batch front end: analyzes links of weighted homogeneous polynomials for
// extremal-metric obstructions, reproduces the published tables, and prints
// |bP_{4m}| group orders.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "kstab/kstab.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kstab::Error(kstab::ErrorCode::Validation, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw kstab::Error(kstab::ErrorCode::Validation, "cannot write '" + path + "'");
  out << text;
}

int run_analyze(const std::string& input, const std::string& output, bool json_mode) {
  std::string text = read_file(input);
  std::vector<kstab::LinkSpec> specs = kstab::parse_linkspecs(text);
  kstab::Json reports = kstab::Json::array();
  for (const auto& s : specs) reports.push_back(kstab::analyze_spec(s));
  write_output(output, json_mode ? kstab::to_machine(reports) : kstab::render_text(reports));
  return 0;
}

void print_table_line(std::ostream& os, const kstab::CatalogEntry& e) {
  std::ostringstream params;
  bool first = true;
  for (const auto& [k, v] : e.params) {
    params << (first ? "" : ",") << k << "=" << v;
    first = false;
  }
  std::ostringstream weights;
  weights << "(";
  bool w1 = true;
  for (long w : e.link.weights()) {
    weights << (w1 ? "" : ",") << w;
    w1 = false;
  }
  weights << ")";
  kstab::ObstructionVerdict v = e.link.whp_obstruction();
  os << std::left << std::setw(28) << e.family << " " << std::setw(12) << params.str() << " "
     << std::setw(24) << weights.str() << " dim " << e.link.cone_dimension() << "  "
     << kstab::verdict_tag_name(v.tag) << "\n";
}

int run_tables(int which, int cap) {
  auto entries = which == 1 ? kstab::table1_instances(cap) : kstab::table2_instances(cap);
  for (const auto& e : entries) print_table_line(std::cout, e);
  return 0;
}

int run_bp(int max_m) {
  for (int m = 2; m <= max_m; ++m)
    std::cout << "|bP_" << 4 * m << "| = " << kstab::bp_group_order(m).get_str() << "\n";
  return 0;
}

int run_catalog(const std::string& family, const std::string& params_str) {
  std::map<std::string, long> params;
  if (!params_str.empty()) {
    for (const auto& part : kstab::detail::split(params_str, ',')) {
      size_t eq = part.find('=');
      if (eq == std::string::npos)
        throw kstab::Error(kstab::ErrorCode::Parse, "expected 'k=v' in --params");
      params[kstab::detail::trim(part.substr(0, eq))] =
          kstab::detail::parse_long(part.substr(eq + 1));
    }
  }
  kstab::CatalogEntry e = kstab::catalog(family, params);
  std::cout << "family: " << e.family << "\n";
  std::cout << "manifold: " << e.manifold << "\n";
  std::cout << "polynomial: " << e.polynomial << "\n";
  std::cout << "weights: (";
  bool first = true;
  for (long w : e.link.weights()) {
    std::cout << (first ? "" : ", ") << w;
    first = false;
  }
  std::cout << ")  degree: " << e.link.degree() << "\n";
  std::cout << "cone dimension: " << e.link.cone_dimension()
            << "  (expected: " << e.expected_cone_dim << ")\n";
  std::cout << "table claims obstructed: " << (e.expected_obstructed ? "yes" : "no") << "\n";
  kstab::ObstructionVerdict v = e.link.whp_obstruction();
  std::cout << "computed verdict: " << kstab::verdict_tag_name(v.tag)
            << " (inequality value " << v.decisive.str() << ")\n";
  for (const auto& n : e.notes) std::cout << "note: " << n << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact obstruction tests for extremal Sasaki metrics on links of "
               "weighted homogeneous polynomials"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyze links from a spec file");
  std::string input, output;
  bool json_mode = false;
  analyze->add_option("--input", input, "spec file path")->required();
  analyze->add_option("--output", output, "output path (default stdout)");
  analyze->add_flag("--json", json_mode, "machine-readable output");

  auto* tables = app.add_subcommand("tables", "reproduce the published tables");
  int which = 1, cap = 2;
  tables->add_option("--which", which, "table number (1 or 2)")->required()->check(CLI::Range(1, 2));
  tables->add_option("--max-param", cap, "instances per row (default 2)")->check(CLI::Range(1, 8));

  auto* bp = app.add_subcommand("bp", "orders of the groups bP_{4m}");
  int max_m = 4;
  bp->add_option("--max", max_m, "largest m")->required();

  auto* cat = app.add_subcommand("catalog", "one catalog entry");
  std::string family, params_str;
  cat->add_option("--family", family, "family id")->required();
  cat->add_option("--params", params_str, "comma-separated k=v pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }

  try {
    if (*analyze) return run_analyze(input, output, json_mode);
    if (*tables) return run_tables(which, cap);
    if (*bp) return run_bp(max_m);
    if (*cat) return run_catalog(family, params_str);
  } catch (const kstab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_parse() ? kExitParse : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
