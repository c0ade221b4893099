#include <gtest/gtest.h>

#include "starlab/error.hpp"
#include "starlab/parse.hpp"
#include "starlab/ring_props.hpp"
#include "starlab/suites.hpp"
#include "support/print.hpp"

using namespace starlab;

namespace {

StarRing star(std::string_view ring, std::string_view inv) {
  return build_involution(build_ring(parse_ring_spec(ring)), parse_involution_spec(inv));
}

std::string verdict_row(const StarRing& s) {
  std::string row;
  for (auto p : all_properties()) row += ring_property(s, p).holds ? 'T' : '.';
  return row;
}

}  // namespace

TEST(RingProperties, NamesRoundTrip) {
  ASSERT_EQ(all_properties().size(), 23u);
  for (auto p : all_properties()) EXPECT_EQ(property_from_name(name(p)), p);
  EXPECT_EQ(property_from_name("psr1"), Property::ProjectionStableRangeOne);
  EXPECT_EQ(property_from_name("strongly-star-clean"), Property::StronglyStarClean);
  try {
    property_from_name("nice");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownProperty);
  }
}

struct Row {
  const char* ring;
  const char* inv;
  const char* verdicts;  ///< one character per property in all_properties() order
};

void PrintTo(const Row& r, std::ostream* os) { *os << r.ring << " with " << r.inv; }

class FrozenVerdicts : public ::testing::TestWithParam<Row> {};

TEST_P(FrozenVerdicts, MatchOracle) {
  EXPECT_EQ(verdict_row(star(GetParam().ring, GetParam().inv)), GetParam().verdicts);
}

INSTANTIATE_TEST_SUITE_P(Oracles, FrozenVerdicts,
                         ::testing::Values(Row{"Z2", "id", "TTTTTTTTTTTTTTTTTTTTTTT"},
                                           Row{"Z4", "id", "TTTTTTTT......TTTTTTTTT"},
                                           Row{"Z6", "id", "TTTTTTTTTTTTT.TT.TTTTTT"},
                                           Row{"Z2xZ2", "swap", "TT..TTT.TTT..TTT..TTTT."},
                                           Row{"Z2xZ2", "prod(id,id)", "TTTTTTTTTTTTTTTT.TTTTTT"},
                                           Row{"M2(Z2)", "tr(id)", "TTT.TTT.T.T.......TTTT."},
                                           Row{"M2(Z3)", "tr(id)", "TTT.TTT.T.TT......TTTTT"},
                                           Row{"GR(Z4,C2)", "grp(id)", "TTTTTTTT......TTTTTTTTT"}),
                         [](const auto& info) { return "row" + std::to_string(info.index); });

TEST(RingProperties, M2Z2Psr1Witness) {
  const auto s = star("M2(Z2)", "tr(id)");
  const auto& r = s.ring();
  const auto v = ring_property(s, Property::ProjectionStableRangeOne);
  ASSERT_FALSE(v.holds);
  ASSERT_EQ(v.counterexample.size(), 2u);
  EXPECT_TRUE(counterexample_valid(s, Property::ProjectionStableRangeOne, v.counterexample));
  const std::vector<Elem> pair = {r.parse_element("[[1,0],[0,0]]"), r.parse_element("[[0,0],[1,0]]")};
  EXPECT_TRUE(counterexample_valid(s, Property::ProjectionStableRangeOne, pair));
  const std::vector<Elem> bogus = {r.one(), r.zero()};
  EXPECT_FALSE(counterexample_valid(s, Property::ProjectionStableRangeOne, bogus));
  const std::vector<Elem> not_comaximal = {r.zero(), r.zero()};
  EXPECT_FALSE(counterexample_valid(s, Property::ProjectionStableRangeOne, not_comaximal));
}

TEST(RingProperties, BogusWitnessesRejected) {
  const auto s = star("Z4", "id");
  EXPECT_FALSE(counterexample_valid(s, Property::Regular, {1}));
  EXPECT_TRUE(counterexample_valid(s, Property::Regular, {2}));
  EXPECT_FALSE(counterexample_valid(s, Property::Boolean, {1}));
  EXPECT_TRUE(counterexample_valid(s, Property::Boolean, {3}));
  EXPECT_FALSE(counterexample_valid(s, Property::Clean, {2}));
  EXPECT_FALSE(counterexample_valid(s, Property::DirectlyFinite, {1, 1}));
}

TEST(RingProperties, ComaximalityMatchesBruteForce) {
  for (const char* text : {"Z6", "M2(Z2)", "Z2xZ2", "TP(Z2,2)"}) {
    const auto r = build_ring(parse_ring_spec(text));
    const Comaximality comax(r);
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = 0; b < r.size(); ++b) {
        bool brute = false;
        for (Elem x = 0; x < r.size() && !brute; ++x)
          for (Elem y = 0; y < r.size() && !brute; ++y)
            brute = r.add(r.mul(a, x), r.mul(b, y)) == r.one();
        ASSERT_EQ(comax(a, b), brute) << text << " " << r.render(a) << " " << r.render(b);
      }
  }
}

TEST(RingProperties, PropertyReportTimesEveryProperty) {
  const auto s = star("Z6", "id");
  const auto rep = property_report(s, all_properties());
  ASSERT_EQ(rep.verdicts.size(), all_properties().size());
  ASSERT_EQ(rep.elapsed_ms.size(), all_properties().size());
  for (double t : rep.elapsed_ms) EXPECT_GE(t, 0.0);
  EXPECT_EQ(rep.ring, "Z6");
}

TEST(RingProperties, LiftingOnLocalGroupRing) {
  const auto rep = lifting_checks(star("GR(Z4,C2)", "grp(id)"));
  EXPECT_TRUE(rep.idempotents_lift_to_central_projections.holds);
  EXPECT_TRUE(rep.projections_lift.holds);
  EXPECT_TRUE(rep.projections_central.holds);
}

TEST(RingProperties, LiftingFailsOnM2Z2) {
  const auto rep = lifting_checks(star("M2(Z2)", "tr(id)"));
  EXPECT_FALSE(rep.idempotents_lift_to_central_projections.holds);
  EXPECT_FALSE(rep.projections_central.holds);
}

class CorpusProperties : public ::testing::TestWithParam<CorpusEntry> {};

TEST_P(CorpusProperties, FalseVerdictsRevalidate) {
  const auto s = star(GetParam().ring, GetParam().involution);
  for (auto p : all_properties()) {
    const auto v = ring_property(s, p);
    if (!v.holds) {
      EXPECT_TRUE(counterexample_valid(s, p, v.counterexample)) << name(p);
    } else {
      EXPECT_TRUE(v.counterexample.empty()) << name(p);
    }
  }
}

TEST_P(CorpusProperties, StableRangeChain) {
  const auto s = star(GetParam().ring, GetParam().involution);
  const auto sr = stable_range_checks(s);
  EXPECT_EQ(sr.sr1.holds, ring_property(s, Property::StableRangeOne).holds);
  EXPECT_EQ(sr.isr1.holds, ring_property(s, Property::IdempotentStableRangeOne).holds);
  EXPECT_EQ(sr.psr1.holds, ring_property(s, Property::ProjectionStableRangeOne).holds);
  if (sr.psr1.holds) {
    EXPECT_TRUE(sr.isr1.holds);
  }
  if (sr.isr1.holds) {
    EXPECT_TRUE(sr.sr1.holds);
  }
}

TEST_P(CorpusProperties, OneSidedPsrAgreesInFiniteRings) {
  const auto s = star(GetParam().ring, GetParam().involution);
  const bool two_sided = psr_variant(s, Invertibility::TwoSided).holds;
  EXPECT_EQ(two_sided, ring_property(s, Property::ProjectionStableRangeOne).holds);
  EXPECT_EQ(psr_variant(s, Invertibility::Right).holds, two_sided);
  EXPECT_EQ(psr_variant(s, Invertibility::Left).holds, two_sided);
}

TEST_P(CorpusProperties, StandardImplications) {
  const auto s = star(GetParam().ring, GetParam().involution);
  auto holds = [&](Property p) { return ring_property(s, p).holds; };
  EXPECT_TRUE(holds(Property::DirectlyFinite));
  EXPECT_TRUE(holds(Property::StronglyPiRegular));
  EXPECT_TRUE(holds(Property::JacobsonNil));
  if (holds(Property::StronglyStarClean)) {
    EXPECT_TRUE(holds(Property::StarClean));
  }
  if (holds(Property::StarClean)) {
    EXPECT_TRUE(holds(Property::Clean));
  }
  if (holds(Property::StronglyClean)) {
    EXPECT_TRUE(holds(Property::Clean));
  }
  if (holds(Property::Clean)) {
    EXPECT_TRUE(holds(Property::Exchange));
  }
  if (holds(Property::Boolean)) {
    EXPECT_TRUE(holds(Property::StronglyRegular));
  }
  if (holds(Property::StronglyRegular)) {
    EXPECT_TRUE(holds(Property::UnitRegular));
  }
  if (holds(Property::UnitRegular)) {
    EXPECT_TRUE(holds(Property::Regular));
  }
  if (holds(Property::StarRegular)) {
    EXPECT_TRUE(holds(Property::Regular));
  }
  if (holds(Property::StronglyStarRegular)) {
    EXPECT_TRUE(holds(Property::StarRegular));
  }
  if (holds(Property::IdempotentsAreProjections)) {
    EXPECT_TRUE(holds(Property::Abelian));
  }
  if (holds(Property::Abelian)) {
    EXPECT_TRUE(holds(Property::StarAbelian));
  }
  if (holds(Property::Local)) {
    EXPECT_TRUE(holds(Property::Abelian));
  }
}

INSTANTIATE_TEST_SUITE_P(Default, CorpusProperties, ::testing::ValuesIn(default_corpus()), [](const auto& info) {
  return "member" + std::to_string(info.index);
});
