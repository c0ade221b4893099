#include <gtest/gtest.h>

#include "starlab/element_classify.hpp"
#include "starlab/parse.hpp"
#include "starlab/suites.hpp"
#include "support/print.hpp"

using namespace starlab;

namespace {

StarRing star(std::string_view ring, std::string_view inv) {
  return build_involution(build_ring(parse_ring_spec(ring)), parse_involution_spec(inv));
}

}  // namespace

TEST(CleanCertificates, Z4ElementTwo) {
  const auto s = star("Z4", "id");
  const Elem two = s.ring().parse_element("2");
  const auto certs = clean_certificates(s, two, CleanMode::Clean);
  ASSERT_EQ(certs.size(), 1u);
  EXPECT_EQ(s.ring().render(certs[0].part), "1");
  EXPECT_EQ(s.ring().render(certs[0].unit), "1");
  EXPECT_TRUE(certs[0].projection);
  EXPECT_TRUE(certs[0].commuting);
}

TEST(CleanCertificates, SwapHasNoStarCleanDecompositionOfE1) {
  const auto s = star("Z2xZ2", "swap");
  const Elem e1 = s.ring().parse_element("(1,0)");
  const auto clean = clean_certificates(s, e1, CleanMode::Clean);
  ASSERT_EQ(clean.size(), 1u);
  EXPECT_EQ(s.ring().render(clean[0].part), "(0,1)");
  EXPECT_FALSE(clean[0].projection);
  EXPECT_TRUE(clean_certificates(s, e1, CleanMode::StarClean).empty());
  EXPECT_FALSE(first_clean_certificate(s, e1, CleanMode::StronglyStarClean).has_value());
}

TEST(CleanCertificates, LimitAndOrdering) {
  const auto s = star("M2(Z3)", "tr(id)");
  const Elem a = s.ring().parse_element("[[1,0],[0,0]]");
  const auto all = clean_certificates(s, a, CleanMode::Clean);
  ASSERT_GT(all.size(), 2u);
  const auto two = clean_certificates(s, a, CleanMode::Clean, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], all[0]);
  EXPECT_EQ(two[1], all[1]);
  for (std::size_t i = 1; i < all.size(); ++i)
    EXPECT_LT(std::pair(all[i - 1].part, all[i - 1].unit), std::pair(all[i].part, all[i].unit));
}

TEST(CleanCertificates, CorruptedCertificateRejected) {
  const auto s = star("Z4", "id");
  auto cert = *first_clean_certificate(s, 2, CleanMode::Clean);
  EXPECT_TRUE(certificate_valid(s, cert));
  cert.unit = s.ring().parse_element("3");
  EXPECT_FALSE(certificate_valid(s, cert));
}

TEST(StronglyPiRegular, NilpotentWitness) {
  const auto r = build_ring(parse_ring_spec("Z4"));
  const auto w = strongly_pi_regular_witness(r, r.parse_element("2"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->n, 2u);
}

TEST(StronglyPiRegular, UnitHasExponentOne) {
  const auto r = build_ring(parse_ring_spec("M2(Z3)"));
  const Elem u = r.parse_element("[[1,1],[0,1]]");
  const auto w = strongly_pi_regular_witness(r, u);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->n, 1u);
  EXPECT_EQ(w->x, r.inverse(u));
}

TEST(StronglyStarRegular, Z4) {
  const auto s = star("Z4", "id");
  EXPECT_FALSE(strongly_star_regular_witness(s, 2).has_value());
  EXPECT_TRUE(strongly_star_regular_witness(s, 3).has_value());
  EXPECT_TRUE(strongly_star_regular_witness(s, 0).has_value());
}

TEST(SpsrConditions, Z4TwoSatisfiesAll) {
  const auto s = star("Z4", "id");
  const auto c = spsr_conditions(s, 2);
  for (int i = 1; i <= 4; ++i) {
    ASSERT_TRUE(c.holds(i)) << "C" << i;
    EXPECT_TRUE(certificate_valid(s, *c.certificates[i - 1]));
    EXPECT_EQ(c.certificates[i - 1]->condition, i);
  }
  EXPECT_EQ(c.certificates[2]->projection, 0u);
}

TEST(SpsrConditions, NonProjectionIdempotentFailsAll) {
  const auto s = star("M2(Z2)", "tr(id)");
  const auto c = spsr_conditions(s, s.ring().parse_element("[[1,1],[0,0]]"));
  for (int i = 1; i <= 4; ++i) EXPECT_FALSE(c.holds(i)) << "C" << i;
}

TEST(SpsrConditions, CorruptedCertificateRejected) {
  const auto s = star("M2(Z3)", "tr(id)");
  auto cert = *spsr_condition4(s, s.ring().parse_element("[[1,0],[0,0]]"));
  EXPECT_TRUE(certificate_valid(s, cert));
  cert.inner = s.ring().one();
  EXPECT_FALSE(certificate_valid(s, cert));
}

TEST(UnitSasr, Z3) {
  const auto s = star("Z3", "id");
  const auto d = unit_sasr_decomposition(s, 0);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(s.ring().mul(d->root, d->root), s.ring().one());
  EXPECT_TRUE(s.ring().is_unit(d->unit));
}

class CorpusElements : public ::testing::TestWithParam<CorpusEntry> {};

TEST_P(CorpusElements, CertificatesMatchBruteForce) {
  const auto s = star(GetParam().ring, GetParam().involution);
  const auto& r = s.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    std::size_t counts[4] = {0, 0, 0, 0};
    r.idempotents().for_each([&](Elem e) {
      const Elem u = r.sub(a, e);
      if (!r.is_unit(u)) return;
      const bool commuting = r.commute(e, u), projection = s.star(e) == e;
      ++counts[0];
      counts[1] += commuting;
      counts[2] += projection;
      counts[3] += commuting && projection;
    });
    const CleanMode modes[] = {CleanMode::Clean, CleanMode::StronglyClean, CleanMode::StarClean,
                               CleanMode::StronglyStarClean};
    for (int m = 0; m < 4; ++m) {
      const auto certs = clean_certificates(s, a, modes[m]);
      ASSERT_EQ(certs.size(), counts[m]) << r.render(a) << " " << to_string(modes[m]);
      for (const auto& c : certs) ASSERT_TRUE(certificate_valid(s, c));
    }
  }
}

TEST_P(CorpusElements, SpsrConditionsAgreeWithValidCertificates) {
  const auto s = star(GetParam().ring, GetParam().involution);
  for (Elem a = 0; a < s.ring().size(); ++a) {
    const auto c = spsr_conditions(s, a);
    ASSERT_TRUE(c.agree()) << s.ring().render(a);
    for (const auto& cert : c.certificates) {
      if (cert) {
        ASSERT_TRUE(certificate_valid(s, *cert));
      }
    }
    if (strongly_star_regular_witness(s, a)) {
      ASSERT_TRUE(c.holds(1));
    }
  }
}

TEST_P(CorpusElements, EveryElementStronglyPiRegular) {
  const auto s = star(GetParam().ring, GetParam().involution);
  const auto& r = s.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    const auto w = strongly_pi_regular_witness(r, a);
    ASSERT_TRUE(w.has_value());
    const Elem an = r.pow(a, w->n), an1 = r.pow(a, w->n + 1);
    ASSERT_EQ(an, r.mul(an1, w->x));
    ASSERT_EQ(an, r.mul(w->y, an1));
  }
}

INSTANTIATE_TEST_SUITE_P(Default, CorpusElements, ::testing::ValuesIn(default_corpus()), [](const auto& info) {
  return "member" + std::to_string(info.index);
});
