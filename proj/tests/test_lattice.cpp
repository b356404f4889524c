#include <gtest/gtest.h>

#include <random>

#include "ksplit/labelled_partition.hpp"
#include "oracles.hpp"

using ksplit::LabelledPartition;

namespace {

LabelledPartition P(const char* text) { return LabelledPartition::parse(text); }

LabelledPartition on(const char* text, const ksplit::GroundPtr& g) { return LabelledPartition::parse(text, g); }

}  // namespace

TEST(LabelledPartition, ParsesAndRendersBarNotation) {
  auto pi = P("45|12l|3");
  EXPECT_EQ(pi.to_string(), "12l|3|45");
  EXPECT_EQ(pi.block_count(), 3u);
  EXPECT_EQ(pi.labelled_count(), 1u);
  EXPECT_EQ(P("21l").to_string(), "12l");
}

TEST(LabelledPartition, MultiCharacterIdsUseCommas) {
  auto g = ksplit::make_ground({"x1", "x2", "x10"});
  auto pi = on("x10,x1l|x2", g);
  EXPECT_EQ(pi.to_string(), "x1,x10l|x2");
  EXPECT_EQ(on(pi.to_string().c_str(), g), pi);
  EXPECT_EQ(LabelledPartition::parse("x1,x2l|x10,y"), LabelledPartition::parse("x1,x2l|x10,y"));
}

TEST(LabelledPartition, RejectsInvalidInput) {
  EXPECT_THROW(P("12|2"), std::invalid_argument);
  EXPECT_THROW(P("1||2"), std::invalid_argument);
  auto g = ksplit::make_ground({"1", "2", "3"});
  EXPECT_THROW(on("12", g), std::invalid_argument);   // 3 missing
  EXPECT_THROW(on("124|3", g), std::invalid_argument);
  EXPECT_THROW(ksplit::make_ground({"a", "a"}), std::invalid_argument);
  EXPECT_THROW(ksplit::make_ground({"a|b"}), std::invalid_argument);
  EXPECT_THROW(ksplit::make_ground({"ab", "abl"}), std::invalid_argument);
}

TEST(LabelledPartition, NaturalOrderOfIds) {
  auto g = ksplit::make_ground({"10", "9", "b", "a"});
  EXPECT_EQ(g->ids(), (std::vector<std::string>{"9", "10", "a", "b"}));
}

TEST(Refines, BlockContainmentRespectsLabels) {
  auto g = ksplit::make_ground({"1", "2"});
  EXPECT_TRUE(ksplit::refines(on("1l|2", g), on("12l", g)));
  EXPECT_FALSE(ksplit::refines(on("1l|2", g), on("1|2l", g)));
  EXPECT_TRUE(ksplit::refines(on("1|2", g), on("1l|2", g)));
  EXPECT_FALSE(ksplit::refines(on("12l", g), on("1l|2l", g)));
}

TEST(Refines, GroundMismatchThrows) {
  EXPECT_THROW(ksplit::refines(P("1l|2l"), P("12|3")), std::invalid_argument);
  EXPECT_THROW(ksplit::join(P("1l|2l"), P("12|3")), std::invalid_argument);
}

TEST(Join, Examples) {
  auto g = ksplit::make_ground({"1", "2", "3"});
  EXPECT_EQ(ksplit::join(on("12l|3", g), on("1|23", g)), on("123l", g));
  auto pi = on("13|2l", g);
  EXPECT_EQ(ksplit::join(pi, pi), pi);
  auto xy = ksplit::make_ground({"x", "y"});
  EXPECT_EQ(ksplit::join(on("xl|y", xy), on("x|yl", xy)), on("xl|yl", xy));
}

TEST(Join, IsTheLeastUpperBoundOnSmallGrounds) {
  auto g = ksplit::make_ground({"1", "2", "3"});
  auto all = ksplit::all_labelled_partitions(g);
  for (const auto& a : all) {
    for (const auto& b : all) {
      auto j = ksplit::join(a, b);
      ASSERT_TRUE(ksplit::refines(a, j));
      ASSERT_TRUE(ksplit::refines(b, j));
      EXPECT_EQ(j, ksplit::join(b, a));
      for (const auto& u : all) {
        if (ksplit::refines(a, u) && ksplit::refines(b, u)) ASSERT_TRUE(ksplit::refines(j, u));
      }
    }
  }
}

TEST(Join, AssociativeOnRandomTriples) {
  auto g = ksplit::make_ground({"1", "2", "3", "4"});
  auto all = ksplit::all_labelled_partitions(g);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    EXPECT_EQ(ksplit::join(ksplit::join(a, b), c), ksplit::join(a, ksplit::join(b, c)));
  }
}

TEST(Restrict, Examples) {
  auto pi = P("12l|3|45");
  std::vector<std::string> y{"1", "3", "4"};
  EXPECT_EQ(ksplit::restrict_to(pi, y).to_string(), "1l|3|4");
  EXPECT_EQ(ksplit::restrict_to(pi, pi.ground().ids()), pi);
  std::vector<std::string> y2{"3", "5"};
  EXPECT_EQ(ksplit::restrict_to(P("12l|345l|67"), y2).to_string(), "35l");
}

TEST(Restrict, Errors) {
  std::vector<std::string> none;
  std::vector<std::string> outside{"9"};
  EXPECT_THROW(ksplit::restrict_to(P("12l|3"), none), std::invalid_argument);
  EXPECT_THROW(ksplit::restrict_to(P("12l|3"), outside), std::invalid_argument);
}

TEST(Indicators, MAndStar) {
  EXPECT_EQ(ksplit::m_indicator(P("12l|3")), 1);
  EXPECT_EQ(ksplit::m_indicator(P("1l|2l|3")), 0);
  EXPECT_EQ(ksplit::m_indicator(P("1|2|3")), 0);
  EXPECT_EQ(ksplit::star(P("1l|2l|3")).to_string(), "12l|3");
  EXPECT_EQ(ksplit::star(P("12l|3")).to_string(), "12l|3");
  EXPECT_EQ(ksplit::star(P("1l|2|3l|4")).to_string(), "13l|2|4");
  EXPECT_THROW(ksplit::star(P("1|2")), std::invalid_argument);
  auto pi = P("1l|2|3l|4");
  EXPECT_TRUE(ksplit::refines(pi, ksplit::star(pi)));
}

TEST(Moebius, WorkedExampleFactorsOverBlocks) {
  auto g = ksplit::make_ground({"1", "2", "3", "4", "5", "6", "7"});
  auto sigma = on("1l|2l|34|5|67", g);
  auto pi = on("12l|345l|67", g);
  // tilde-mu_2 * mu_2 * tilde-mu_1 = (-1)(1)(1)
  EXPECT_EQ(ksplit::moebius(sigma, pi), -1);
  EXPECT_EQ(ksplit::moebius_bruteforce(sigma, pi), -1);
}

TEST(Moebius, SmallCases) {
  auto g = ksplit::make_ground({"1", "2"});
  auto pi = on("12l", g);
  EXPECT_EQ(ksplit::moebius(pi, pi), 1);
  EXPECT_EQ(ksplit::moebius_bruteforce(pi, pi), 1);
  // [1l|2, 12l] is the chain 1l|2 < 1l|2l < 12l.
  EXPECT_EQ(ksplit::moebius(on("1l|2", g), pi), 0);
  EXPECT_EQ(ksplit::moebius_bruteforce(on("1l|2", g), pi), 0);
  EXPECT_THROW(ksplit::moebius(on("12l", g), on("1l|2", g)), std::invalid_argument);
  EXPECT_THROW(ksplit::moebius_bruteforce(on("12l", g), on("1l|2", g)), std::invalid_argument);
}

TEST(Moebius, ClosedFormsOnThreeElements) {
  auto g = ksplit::make_ground({"1", "2", "3"});
  auto bottom = ksplit::LabelledPartition::finest(g, 0);
  auto top = ksplit::LabelledPartition::coarsest(g, true);
  auto labelled_atoms = ksplit::LabelledPartition::finest(g, g->full_mask());
  EXPECT_EQ(ksplit::moebius_bruteforce(bottom, top), -2);
  EXPECT_EQ(ksplit::moebius_bruteforce(labelled_atoms, top), 2);
}

TEST(Moebius, ClosedFormMatchesInversionOnThreeElements) {
  auto g = ksplit::make_ground({"a", "b", "c"});
  auto all = ksplit::all_labelled_partitions(g);
  for (const auto& s : all) {
    for (const auto& p : all) {
      if (!ksplit::refines(s, p)) continue;
      EXPECT_EQ(ksplit::moebius(s, p), ksplit::moebius_bruteforce(s, p)) << s << " " << p;
    }
  }
}

TEST(Lambda, Examples) {
  EXPECT_EQ(ksplit::lambda_value(P("xl|y|z")), 0);
  EXPECT_EQ(ksplit::lambda_value(P("xyl")), 1);
  EXPECT_EQ(ksplit::lambda_value(P("xl|yl")), -1);
  EXPECT_THROW(ksplit::lambda_value(P("x|y")), std::invalid_argument);
}

TEST(Lambda, EqualsMoebiusTransformOfM) {
  // lambda(pi) = sum over sigma >= pi of mu(pi, sigma) m(sigma), by brute force.
  auto g = ksplit::make_ground({"x", "y"});
  auto pi = on("xl|yl", g);
  std::int64_t sum = 0;
  for (const auto& s : ksplit::coarsenings(pi)) sum += ksplit::moebius_bruteforce(pi, s) * ksplit::m_indicator(s);
  EXPECT_EQ(sum, -1);
}

TEST(Enumeration, LatticeSizesMatchNaiveOracle) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    auto all = ksplit::all_labelled_partitions(ksplit::make_ground(ids));
    EXPECT_EQ(all.size(), ksplit::oracle::all_partitions(n).size()) << n;
  }
}

TEST(Enumeration, RefinesAgreesWithNaiveOracle) {
  auto all = ksplit::oracle::all_partitions(3);
  auto g = ksplit::make_ground({"0", "1", "2"});
  auto convert = [&](const ksplit::oracle::RawPartition& raw) {
    std::vector<ksplit::Block> blocks;
    for (const auto& [members, label] : raw) {
      ksplit::ElementMask m = 0;
      for (int e : members) m |= ksplit::ElementMask{1} << e;
      blocks.push_back({m, label});
    }
    return LabelledPartition(g, blocks);
  };
  for (const auto& a : all) {
    for (const auto& b : all) {
      EXPECT_EQ(ksplit::refines(convert(a), convert(b)), ksplit::oracle::raw_refines(a, b));
    }
  }
}

TEST(Hashing, EqualPartitionsHashEqual) {
  auto a = P("3|12l");
  auto b = P("21l|3");
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::hash<LabelledPartition>{}(a), std::hash<LabelledPartition>{}(b));
}
