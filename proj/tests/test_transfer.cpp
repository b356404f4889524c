#include <gtest/gtest.h>

#include "ksplit/transfer.hpp"
#include "oracles.hpp"

using namespace ksplit;

namespace {

std::vector<std::vector<std::string>> traces_of(const std::vector<std::string>& x) {
  std::vector<std::vector<std::string>> out;
  for (unsigned mask = 0; mask < (1U << x.size()); ++mask) {
    std::vector<std::string> t;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((mask >> i) & 1U) t.push_back(x[i]);
    }
    out.push_back(t);
  }
  return out;
}

std::vector<std::int64_t> row(const IntMatrix& m, std::size_t i) {
  auto r = m.row(i);
  return {r.begin(), r.end()};
}

}  // namespace

TEST(Transfer, TwoElementSpace) {
  auto b = build_bundle(StateSpace({"x", "y"}, {}));
  EXPECT_EQ(b.lambda, (std::vector<std::int64_t>{1, 1, -1, 1}));
  // state order xl|y, x|yl, xl|yl, xyl
  EXPECT_EQ(row(b.transfer, 2), (std::vector<std::int64_t>{0, 0, 0, 1}));
  EXPECT_EQ(row(b.transfer, 0), (std::vector<std::int64_t>{1, 0, 0, 1}));
  EXPECT_EQ(row(b.transfer, 3), (std::vector<std::int64_t>{1, 1, 1, 1}));
  EXPECT_EQ(b.reduced_transfer, b.transfer);
  EXPECT_TRUE(is_invertible_full(b.space));
}

TEST(Transfer, SingleStateSpace) {
  auto b = build_bundle(StateSpace({"x"}, {"x"}));
  ASSERT_EQ(b.space.size(), 1u);
  EXPECT_EQ(b.transfer(0, 0), 1);
  EXPECT_EQ(b.lambda, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(b.reduced_transfer_inverse(0, 0), Rational(1));
}

TEST(Transfer, InvertibilityOfFullMatrix) {
  EXPECT_TRUE(is_invertible_full(StateSpace({"x", "y"}, {})));
  EXPECT_FALSE(is_invertible_full(StateSpace({"a", "b", "c"}, {})));
  EXPECT_TRUE(is_invertible_full(StateSpace({"x"}, {"x"})));
}

TEST(Transfer, FactorizationDeterminantAndInverse) {
  for (const auto& x : {std::vector<std::string>{"a"}, std::vector<std::string>{"a", "b"},
                        std::vector<std::string>{"a", "b", "c"}}) {
    for (const auto& trace : traces_of(x)) {
      auto b = build_bundle(StateSpace(x, trace));
      const std::size_t n = b.space.size();
      // M = Z Lambda Z^T entrywise
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          std::int64_t sum = 0;
          for (std::size_t k = 0; k < n; ++k) sum += b.zeta(i, k) * b.lambda[k] * b.zeta(j, k);
          ASSERT_EQ(sum, b.transfer(i, j));
        }
      }
      BigInt prod = 1;
      for (auto l : b.reduced_lambda) prod *= static_cast<long>(l);
      EXPECT_EQ(oracle::determinant(b.reduced_transfer), prod);
      EXPECT_EQ(oracle::rank(b.transfer), b.space.reduced_size());
      if (n > b.space.reduced_size()) EXPECT_EQ(oracle::determinant(b.transfer), 0);

      const std::size_t r = b.space.reduced_size();
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          Rational sum = 0;
          for (std::size_t k = 0; k < r; ++k) sum += b.reduced_transfer(i, k) * b.reduced_transfer_inverse(k, j);
          ASSERT_EQ(sum, Rational(i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST(Transfer, ZetaInverseIsMoebius) {
  auto b = build_bundle(StateSpace({"a", "b", "c"}, {"b"}));
  auto zi = unit_upper_inverse(b.zeta);
  for (std::size_t i = 0; i < b.space.size(); ++i) {
    for (std::size_t j = 0; j < b.space.size(); ++j) {
      const auto& s = b.space.state(i);
      const auto& t = b.space.state(j);
      EXPECT_EQ(zi(i, j), refines(s, t) ? moebius(s, t) : 0);
    }
  }
  EXPECT_THROW(unit_upper_inverse(IntMatrix(2, 2, 0)), std::invalid_argument);
}

TEST(Transfer, DumpFormat) {
  auto b = build_bundle(StateSpace({"x", "y"}, {}));
  auto text = format_matrix<std::int64_t>("M", b.space.labels(), b.transfer);
  EXPECT_EQ(text,
            "M\txl|y\tx|yl\txl|yl\txyl\n"
            "xl|y\t1\t0\t0\t1\n"
            "x|yl\t0\t1\t0\t1\n"
            "xl|yl\t0\t0\t0\t1\n"
            "xyl\t1\t1\t1\t1\n");
}

TEST(BundleCache, ReusesBundles) {
  BundleCache cache;
  auto a = cache.get({"x", "y"}, {});
  auto b = cache.get({"x", "y"}, {});
  auto c = cache.get({"x", "y"}, {"x"});
  EXPECT_EQ(a.get(), b.get());
  EXPECT_NE(a.get(), c.get());
  EXPECT_EQ(cache.size(), 2u);
}
