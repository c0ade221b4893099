// starlab: finite rings with involution, from the command line.
//
// Exit codes: 0 ok, 1 suite violation or fixture mismatch, 2 input error, 3 size cap.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starlab/error.hpp"
#include "starlab/fixtures.hpp"
#include "starlab/parse.hpp"
#include "starlab/report.hpp"

namespace {

using namespace starlab;
using report::Json;

struct Common {
  std::string format = "json";
  std::size_t cap = 0;
  unsigned jobs = 1;

  RingOptions options() const {
    auto o = RingOptions::from_environment();
    if (cap) o.size_cap = cap;
    return o;
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Property> properties_from(const std::string& list) {
  if (list.empty() || list == "all") return all_properties();
  std::vector<Property> out;
  for (const auto& n : split_list(list)) out.push_back(property_from_name(n));
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int check(const Common& c, const std::string& ring, const std::string& inv, const std::string& props,
          const std::string& elem, bool timing) {
  const auto s = build_involution(build_ring(parse_ring_spec(ring), c.options()), parse_involution_spec(inv));
  if (!elem.empty()) {
    const Elem a = s.ring().parse_element(elem);
    if (c.format == "text") std::cout << report::element_text(s, a);
    else emit(report::element_json(s, a));
    return 0;
  }
  const auto rep = property_report(s, properties_from(props));
  if (c.format == "text") {
    std::cout << report::property_text(s, rep);
  } else if (c.format == "csv") {
    std::cout << "property,verdict,witness\n";
    for (const auto& [p, v] : rep.verdicts) {
      std::string w;
      for (auto x : v.counterexample) w += (w.empty() ? "" : " ; ") + s.ring().render(x);
      std::cout << name(p) << ',' << (v.holds ? "true" : "false") << ",\"" << w << "\"\n";
    }
  } else {
    emit(report::property_json(s, rep, timing));
  }
  return 0;
}

int suite(const Common& c, const std::string& corpus_path, const std::string& suites) {
  auto file = read_corpus_file(corpus_path);
  const auto corpus = load_corpus(file.entries, c.options());
  std::vector<std::string> tags;
  if (suites == "all" || (suites.empty() && file.suites.empty())) tags = suite_tags();
  else if (suites.empty()) tags = file.suites;
  else tags = split_list(suites);
  const auto results = run_suites(corpus, tags, c.jobs);
  if (c.format == "text") std::cout << report::suites_text(results);
  else if (c.format == "csv") std::cout << report::suites_csv(results);
  else emit(report::suites_json(corpus, results));
  for (const auto& r : results)
    if (!r.passed()) return 1;
  return 0;
}

int corpus_matrix(const Common& c, const std::string& corpus_path, const std::string& props) {
  const auto corpus = load_corpus(read_corpus_file(corpus_path).entries, c.options());
  const auto m = report::corpus_matrix(corpus, properties_from(props), c.jobs);
  if (c.format == "text") std::cout << report::corpus_matrix_text(m);
  else if (c.format == "json") emit(report::corpus_matrix_json(m));
  else std::cout << report::corpus_matrix_csv(m);
  return 0;
}

int numeric_cmd(const Common& c, const std::string& path, const std::string& mode_name, double tol) {
  const auto mode = numeric::involution_from_name(mode_name);
  const auto d = numeric::is_spsr_matrix(numeric::read_matrix_file(path), mode, tol);
  if (c.format == "text") std::cout << report::numeric_text(d);
  else emit(report::numeric_json(d, mode, tol));
  return 0;
}

int fixture(const Common& c, const std::string& name) {
  std::vector<std::string> names = name == "all" ? fixture_names() : std::vector<std::string>{name};
  Json all = Json::array();
  bool ok = true;
  for (const auto& n : names) {
    const auto f = run_fixture(n, c.options());
    ok = ok && f.ok();
    if (c.format == "text") {
      std::cout << f.name << ": " << f.ring << " with " << f.involution << "  " << (f.ok() ? "OK" : "MISMATCH") << '\n';
      for (const auto& k : f.checks)
        std::cout << "  " << (k.ok() ? "ok   " : "FAIL ") << k.what << ": " << k.actual
                  << (k.ok() ? "" : " (expected " + k.expected + ")") << '\n';
      continue;
    }
    Json checks = Json::array();
    for (const auto& k : f.checks)
      checks.push_back(Json{{"check", k.what}, {"expected", k.expected}, {"actual", k.actual}, {"ok", k.ok()}});
    all.push_back(Json{{"fixture", f.name}, {"ring", f.ring}, {"involution", f.involution}, {"ok", f.ok()},
                       {"checks", std::move(checks)}});
  }
  if (c.format != "text") emit(all);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starlab: decide clean, *-clean, strongly pi-*-regular and stable range properties of finite *-rings"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();
  app.add_option("--cap", common.cap, "Maximum ring size (overrides STARLAB_SIZE_CAP)");
  app.add_option("--jobs", common.jobs, "Worker threads")->capture_default_str();

  std::string ring, inv, props, elem, corpus = "default", suites, matrix, mode = "transpose", fixture_name;
  bool timing = true;
  double tol = 1e-8;

  auto* check_cmd = app.add_subcommand("check", "Ring-level properties, or element classification with --elem");
  check_cmd->add_option("--ring", ring, "Ring spec, e.g. M2(Z3)")->required();
  check_cmd->add_option("--inv", inv, "Involution spec, e.g. tr(id)")->required();
  check_cmd->add_option("--prop", props, "Comma-separated properties or 'all'");
  check_cmd->add_option("--elem", elem, "Element literal to classify");
  check_cmd->add_flag("!--no-timing", timing, "Omit elapsed-ms");

  auto* element_cmd = app.add_subcommand("element", "All certificates for one element");
  element_cmd->add_option("--ring", ring, "Ring spec")->required();
  element_cmd->add_option("--inv", inv, "Involution spec")->required();
  element_cmd->add_option("--elem", elem, "Element literal")->required();

  auto* suite_cmd = app.add_subcommand("suite", "Run theorem suites over a corpus");
  suite_cmd->add_option("--corpus", corpus, "Corpus JSON file or 'default'")->capture_default_str();
  suite_cmd->add_option("--suites", suites, "Comma-separated suite tags or 'all'");

  auto* matrix_cmd = app.add_subcommand("corpus-matrix", "Property verdicts for every corpus member");
  matrix_cmd->add_option("--corpus", corpus, "Corpus JSON file or 'default'")->capture_default_str();
  matrix_cmd->add_option("--prop", props, "Comma-separated properties or 'all'");

  auto* numeric_sub = app.add_subcommand("numeric", "Strong pi-*-regularity of a complex matrix");
  numeric_sub->add_option("matrix", matrix, "CSV or JSON matrix file")->required();
  numeric_sub->add_option("--inv", mode, "transpose or conjugate-transpose")->capture_default_str();
  numeric_sub->add_option("--tol", tol, "Relative tolerance")->capture_default_str();

  auto* fixture_cmd = app.add_subcommand("fixture", "Reproduce a bundled worked example");
  fixture_cmd->add_option("name", fixture_name, "Fixture name or 'all'")->required();

  for (auto* sub : {check_cmd, element_cmd, suite_cmd, matrix_cmd, numeric_sub, fixture_cmd}) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--cap", common.cap, "Maximum ring size");
    sub->add_option("--jobs", common.jobs, "Worker threads");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check_cmd) return check(common, ring, inv, props, elem, timing);
    if (*element_cmd) return check(common, ring, inv, "", elem, false);
    if (*suite_cmd) return suite(common, corpus, suites);
    if (*matrix_cmd) return corpus_matrix(common, corpus, props);
    if (*numeric_sub) return numeric_cmd(common, matrix, mode, tol);
    if (*fixture_cmd) return fixture(common, fixture_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::SpecTooLarge ? 3 : 2;
  }
  return 0;
}
