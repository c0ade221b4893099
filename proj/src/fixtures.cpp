#include "starlab/fixtures.hpp"

#include <algorithm>

#include "starlab/element_classify.hpp"
#include "starlab/error.hpp"
#include "starlab/numeric.hpp"
#include "starlab/parse.hpp"
#include "starlab/ring_props.hpp"

namespace starlab {

bool FixtureResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok(); });
}

namespace {

std::string tf(bool b) { return b ? "true" : "false"; }

std::string render_set(const FiniteRing& r, const ElementSet& set) {
  std::string out = "{";
  set.for_each([&](Elem x) { out += (out.size() > 1 ? ", " : "") + r.render(x); });
  return out + "}";
}

ElementSet literal_set(const FiniteRing& r, const std::vector<std::string>& literals) {
  ElementSet set(r.size());
  for (const auto& l : literals) set.insert(r.parse_element(l));
  return set;
}

StarRing star_ring(const std::string& ring, const std::string& inv, const RingOptions& options) {
  return build_involution(build_ring(parse_ring_spec(ring), options), parse_involution_spec(inv));
}

bool holds(const StarRing& s, Property p) { return ring_property(s, p).holds; }

FixtureResult swap_boolean(const RingOptions& options) {
  FixtureResult f{"swap-boolean", "Z2xZ2", "swap", {}};
  const auto s = star_ring(f.ring, f.involution, options);
  const auto star_clean = ring_property(s, Property::StarClean);
  f.checks = {
      {"clean", "true", tf(holds(s, Property::Clean))},
      {"star-clean", "false", tf(star_clean.holds)},
      {"star-clean counterexample re-validates", "true",
       tf(!star_clean.holds && counterexample_valid(s, Property::StarClean, star_clean.counterexample))},
      {"(1,0) has no star-clean decomposition", "true",
       tf(clean_certificates(s, s.ring().parse_element("(1,0)"), CleanMode::StarClean).empty())},
      {"boolean", "true", tf(holds(s, Property::Boolean))},
      {"involution is the identity", "false", tf(s.is_identity_involution())},
  };
  return f;
}

FixtureResult z4_identity(const RingOptions& options) {
  FixtureResult f{"z4-identity", "Z4", "id", {}};
  const auto s = star_ring(f.ring, f.involution, options);
  const Elem two = s.ring().parse_element("2");
  const auto c = spsr_conditions(s, two);
  f.checks = {
      {"strongly-pi-star-regular", "true", tf(holds(s, Property::StronglyPiStarRegular))},
      {"2 strongly *-regular", "false", tf(strongly_star_regular_witness(s, two).has_value())},
      {"2 satisfies C1 C2 C3 C4", "true true true true",
       tf(c.holds(1)) + " " + tf(c.holds(2)) + " " + tf(c.holds(3)) + " " + tf(c.holds(4))},
      {"proper", "false", tf(is_proper(s))},
  };
  return f;
}

const std::pair<std::string, std::string> kM2Z2PsrPair = {"[[1,0],[0,0]]", "[[0,0],[1,0]]"};

FixtureResult m2z2_transpose(const RingOptions& options) {
  FixtureResult f{"m2z2-transpose", "M2(Z2)", "tr(id)", {}};
  const auto s = star_ring(f.ring, f.involution, options);
  const auto& r = s.ring();
  const auto expected_p = literal_set(r, {"[[0,0],[0,0]]", "[[1,0],[0,1]]", "[[1,0],[0,0]]", "[[0,0],[0,1]]"});
  const auto psr = ring_property(s, Property::ProjectionStableRangeOne);
  const std::vector<Elem> pair = {r.parse_element(kM2Z2PsrPair.first), r.parse_element(kM2Z2PsrPair.second)};
  f.checks = {
      {"P(S)", render_set(r, expected_p), render_set(r, s.projections())},
      {"unit-regular", "true", tf(holds(s, Property::UnitRegular))},
      {"isr1", "true", tf(holds(s, Property::IdempotentStableRangeOne))},
      {"psr1", "false", tf(psr.holds)},
      {"reported psr1 counterexample re-validates", "true",
       tf(!psr.holds && counterexample_valid(s, Property::ProjectionStableRangeOne, psr.counterexample))},
      {"(E11, E21) is a psr1 counterexample", "true", tf(counterexample_valid(s, Property::ProjectionStableRangeOne, pair))},
      {"star-clean", "true", tf(holds(s, Property::StarClean))},
      {"strongly-pi-star-regular", "false", tf(holds(s, Property::StronglyPiStarRegular))},
  };
  return f;
}

FixtureResult m2z3_transpose(const RingOptions& options) {
  FixtureResult f{"m2z3-transpose", "M2(Z3)", "tr(id)", {}};
  const auto s = star_ring(f.ring, f.involution, options);
  const auto& r = s.ring();
  const auto expected_p = literal_set(r, {"[[0,0],[0,0]]", "[[1,0],[0,1]]", "[[1,0],[0,0]]", "[[0,0],[0,1]]",
                                          "[[2,1],[1,2]]", "[[2,2],[2,2]]"});
  // {O, I} together with [[x,y],[z,1-x]] where yz = x - x^2 over Z3.
  std::vector<std::string> described = {"[[0,0],[0,0]]", "[[1,0],[0,1]]"};
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        if ((y * z) % 3 == ((x - x * x) % 3 + 3) % 3)
          described.push_back("[[" + std::to_string(x) + "," + std::to_string(y) + "],[" + std::to_string(z) + "," +
                              std::to_string((1 - x + 3) % 3) + "]]");
  const auto described_set = literal_set(r, described);
  f.checks = {
      {"P(S)", render_set(r, expected_p), render_set(r, s.projections())},
      {"strongly-star-clean", "false", tf(holds(s, Property::StronglyStarClean))},
      {"psr1", "true", tf(holds(s, Property::ProjectionStableRangeOne))},
      {"isr1", "true", tf(holds(s, Property::IdempotentStableRangeOne))},
      {"|Id(S)|", "14", std::to_string(r.idempotents().size())},
      {"Id(S) matches the yz = x - x^2 description", render_set(r, described_set), render_set(r, r.idempotents())},
  };
  return f;
}

FixtureResult matrix_criterion(const RingOptions&) {
  FixtureResult f{"matrix-criterion", "M2(R)", "transpose", {}};
  auto verdict = [](const char* text) {
    return numeric::to_string(numeric::is_spsr_matrix(numeric::parse_matrix(text)).verdict);
  };
  f.checks = {
      {"[[2,1],[1,2]]", "true", verdict("[[2,1],[1,2]]")},
      {"[[1,1],[0,0]]", "false", verdict("[[1,1],[0,0]]")},
      {"[[0,1],[0,0]]", "true", verdict("[[0,1],[0,0]]")},
      {"index of [[0,1],[0,0]]", "2", std::to_string(numeric::matrix_index(numeric::parse_matrix("[[0,1],[0,0]]")))},
  };
  return f;
}

using Runner = FixtureResult (*)(const RingOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"swap-boolean", swap_boolean},
      {"z4-identity", z4_identity},
      {"m2z2-transpose", m2z2_transpose},
      {"m2z3-transpose", m2z3_transpose},
      {"matrix-criterion", matrix_criterion},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, _] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

FixtureResult run_fixture(std::string_view name, const RingOptions& options) {
  for (const auto& [n, run] : registry())
    if (n == name) return run(options);
  throw Error(ErrorKind::ValidationError, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace starlab
