#include <gtest/gtest.h>

#include "ksplit/state_space.hpp"

using ksplit::LabelledPartition;
using ksplit::StateSpace;

TEST(StateSpace, TwoElementsNoTerminals) {
  StateSpace s({"x", "y"}, {});
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"xl|y", "x|yl", "xl|yl", "xyl"}));
  EXPECT_EQ(s.reduced_size(), 4u);
  EXPECT_EQ(s.base().to_string(), "x|y");
}

TEST(StateSpace, TerminalTraceFixesLabels) {
  StateSpace s({"x", "y"}, {"x"});
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"xl|y", "xl|yl", "xyl"}));
  StateSpace one({"x"}, {"x"});
  EXPECT_EQ(one.labels(), (std::vector<std::string>{"xl"}));
  StateSpace free_one({"x"}, {});
  EXPECT_EQ(free_one.labels(), (std::vector<std::string>{"xl"}));
}

TEST(StateSpace, ThreeElementsReducedSubset) {
  StateSpace s({"a", "b", "c"}, {});
  EXPECT_EQ(s.size(), 17u);
  EXPECT_EQ(s.reduced_size(), 14u);
  std::vector<std::string> dropped;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.reduced_position(i)) dropped.push_back(s.state(i).to_string());
  }
  EXPECT_EQ(dropped, (std::vector<std::string>{"al|b|c", "a|bl|c", "a|b|cl"}));
}

TEST(StateSpace, OrderIsALinearExtension) {
  for (auto trace : {std::vector<std::string>{}, std::vector<std::string>{"b"}, std::vector<std::string>{"a", "d"}}) {
    StateSpace s({"a", "b", "c", "d"}, trace);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        ASSERT_FALSE(ksplit::refines(s.state(i), s.state(j))) << s.state(i) << " before " << s.state(j);
      }
    }
  }
}

TEST(StateSpace, ReducedMeansAtMostOneUnlabelledBlock) {
  StateSpace s({"a", "b", "c", "d"}, {"c"});
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.reduced_position(i).has_value(), s.state(i).unlabelled_count() <= 1);
    EXPECT_EQ(s.index_of(s.state(i)), i);
    EXPECT_GE(s.state(i).labelled_count(), 1u);
    EXPECT_TRUE(ksplit::refines(s.base(), s.state(i)));
  }
  EXPECT_FALSE(s.index_of(LabelledPartition::parse("abl|c|d", s.ground())).has_value());
}

TEST(StateSpace, Errors) {
  EXPECT_THROW(StateSpace({}, {}), std::invalid_argument);
  EXPECT_THROW(StateSpace({"x"}, {"y"}), std::invalid_argument);
}
