// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "starlab/fixtures.hpp"
#include "starlab/numeric.hpp"
#include "starlab/ring_props.hpp"
#include "starlab/suites.hpp"
#include "support/random_matrices.hpp"

namespace {

using namespace starlab;

constexpr double kNumericTol = 1e-8;
constexpr double kDrazinResidualMax = 1e-8;
constexpr int kNumericSamples = 1000;
constexpr double kSuiteBudgetSeconds = 300.0;
constexpr std::size_t kMinCorpus = 15;
constexpr std::size_t kLargestMember = 256;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << title;
  if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

template <class F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

std::vector<CorpusMember> corpus() {
  static const auto c = load_corpus(default_corpus(), RingOptions{});
  return c;
}

Outcome fixtures() {
  Outcome o;
  for (const char* name : {"swap-boolean", "z4-identity", "m2z2-transpose", "m2z3-transpose"}) {
    const auto f = run_fixture(name);
    for (const auto& c : f.checks)
      if (!c.ok()) {
        o.pass = false;
        o.detail += std::string(name) + ": " + c.what + " = " + c.actual + " (expected " + c.expected + "); ";
      }
  }
  if (o.pass) o.detail = "4 fixtures, every check exact";
  return o;
}

Outcome theorem_suites() {
  const std::vector<std::string> tags = {"ELEM-EQUIV", "RING-EQUIV", "JAC-EQUIV",  "SPR-SPLIT",   "MATRIX-NEG", "CORNER",
                                         "GROUPRING",  "SRC-EQUIV",  "SSC-PSR",    "PSR-SC",      "LOCAL-EQUIV", "TWO-UNIT",
                                         "BOOL",       "QUOT",       "PROPER-NIL", "IDPROJ-ABELIAN", "FINAL-EQUIV"};
  const auto start = std::chrono::steady_clock::now();
  const auto c = corpus();
  const auto results = run_suites(c, tags, 1);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Outcome o;
  std::size_t largest = 0;
  for (const auto& m : c) largest = std::max(largest, m.star.ring().size());
  for (const auto& r : results)
    if (!r.passed()) {
      o.pass = false;
      o.detail += r.suite + " has " + std::to_string(r.count(Status::Violation)) + " violations; ";
    }
  if (c.size() < kMinCorpus) o.pass = false;
  if (largest < kLargestMember) o.pass = false;
  if (secs > kSuiteBudgetSeconds) o.pass = false;
  std::ostringstream d;
  d << results.size() << " suites, " << c.size() << " members, largest " << largest << ", " << secs << " s";
  o.detail += d.str();
  return o;
}

Outcome stable_range_chain() {
  Outcome o;
  bool m2z2 = false, m2z3 = false;
  for (const auto& m : corpus()) {
    const auto sr = stable_range_checks(m.star);
    if ((sr.psr1.holds && !sr.isr1.holds) || (sr.isr1.holds && !sr.sr1.holds)) {
      o.pass = false;
      o.detail += m.entry.label + " breaks the chain; ";
    }
    if (m.entry.ring == "M2(Z2)" && sr.isr1.holds && !sr.psr1.holds) m2z2 = true;
    if (m.entry.ring == "M2(Z3)" && sr.psr1.holds && !ring_property(m.star, Property::StronglyStarClean).holds)
      m2z3 = true;
  }
  if (!m2z2) o.detail += "M2(Z2) does not separate isr1 from psr1; ";
  if (!m2z3) o.detail += "M2(Z3) does not separate psr1 from strongly-star-clean; ";
  o.pass = o.pass && m2z2 && m2z3;
  if (o.pass) o.detail = "chain holds on every member, both separating witnesses present";
  return o;
}

Outcome numeric_module() {
  using numeric::Involution;
  using numeric::is_spsr_matrix;
  using numeric::SpsrDiagnostics;
  using V = numeric::Verdict;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> dim(2, 6);
  int sym_true = 0, cn_false = 0, disagreements = 0, ill = 0;
  double worst_residual = 0.0;

  auto track = [&](const SpsrDiagnostics& d) {
    if (d.verdict == V::IllConditioned) {
      ++ill;
      return;
    }
    if (d.self_adjoint_test != d.cross_gram_test) ++disagreements;
    worst_residual = std::max({worst_residual, d.drazin.commute_residual, d.drazin.reflexive_residual,
                               d.drazin.nilpotent_residual});
  };

  for (int i = 0; i < kNumericSamples; ++i) {
    const auto d = is_spsr_matrix(testing::random_symmetric(rng, dim(rng)), Involution::Transpose, kNumericTol);
    track(d);
    if (d.verdict == V::True) ++sym_true;
  }
  for (int i = 0; i < kNumericSamples; ++i) {
    const int n = dim(rng);
    const int r = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const auto cn = testing::random_core_nilpotent(rng, n, r);
    const auto d = is_spsr_matrix(cn.a, Involution::Transpose, kNumericTol);
    track(d);
    if (d.verdict == V::False) ++cn_false;
  }

  Outcome o;
  o.pass = sym_true == kNumericSamples && cn_false == kNumericSamples && worst_residual <= kDrazinResidualMax &&
           disagreements == 0;
  std::ostringstream d;
  d << "symmetric true " << sym_true << "/" << kNumericSamples << ", core-nilpotent false " << cn_false << "/"
    << kNumericSamples << ", worst Drazin residual " << worst_residual << ", test disagreements " << disagreements
    << ", ill-conditioned " << ill;
  o.detail = d.str();
  return o;
}

Outcome property_based() {
  Outcome o;
  std::size_t false_verdicts = 0;
  for (const auto& m : corpus()) {
    const auto& s = m.star;
    const auto& r = s.ring();
    const auto n = static_cast<Elem>(r.size());
    auto fail = [&](const std::string& what) {
      o.pass = false;
      o.detail += m.entry.label + ": " + what + "; ";
    };
    bool axioms = true;
    for (Elem a = 0; a < n && axioms; ++a) {
      if (s.star(s.star(a)) != a) axioms = false;
      for (Elem b = 0; b < n && axioms; ++b)
        if (s.star(r.add(a, b)) != r.add(s.star(a), s.star(b)) || s.star(r.mul(a, b)) != r.mul(s.star(b), s.star(a)))
          axioms = false;
    }
    if (!axioms) fail("involution axioms");
    if (!s.projections().is_subset_of(r.idempotents())) fail("P not inside Id");
    if (!ring_property(s, Property::DirectlyFinite).holds) fail("not directly finite");
    if (ring_property(s, Property::IdempotentsAreProjections).holds && !ring_property(s, Property::Abelian).holds)
      fail("Id = P without abelian");
    for (auto p : all_properties()) {
      const auto v = ring_property(s, p);
      if (v.holds) continue;
      ++false_verdicts;
      if (!counterexample_valid(s, p, v.counterexample)) fail(std::string(name(p)) + " witness rejected");
    }
  }
  if (o.pass) o.detail = std::to_string(false_verdicts) + " false verdicts, every witness re-validated";
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Outcome determinism() {
  const std::string cmd = std::string(STARLAB_CLI_PATH) + " suite --corpus default --suites all --jobs 8";
  int s1 = 0, s2 = 0;
  const auto a = capture(cmd, s1);
  const auto b = capture(cmd, s2);
  Outcome o;
  o.pass = s1 == 0 && s2 == 0 && !a.empty() && a == b;
  o.detail = std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different") + ", exit " +
             std::to_string(s1) + "/" + std::to_string(s2);
  return o;
}

}  // namespace

int main() {
  report(1, "worked example fixtures reproduce exactly", guarded(fixtures));
  report(2, "theorem suites pass on the default corpus", guarded(theorem_suites));
  report(3, "psr1 => isr1 => sr1 with strictness witnesses", guarded(stable_range_chain));
  report(4, "numeric module verdicts and residuals", guarded(numeric_module));
  report(5, "property invariants and witness re-validation", guarded(property_based));
  report(6, "suite JSON is byte-identical across --jobs 8 runs", guarded(determinism));
  return failures;
}
