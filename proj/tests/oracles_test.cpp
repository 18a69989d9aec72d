#include <gtest/gtest.h>

#include "coxhi/families.hpp"
#include "coxhi/hindex.hpp"
#include "coxhi/oracles.hpp"
#include "diagrams.hpp"
#include "test_util.hpp"

using namespace coxhi;
using coxhi::testing::diagram::cycle;
using coxhi::testing::diagram::path;
using oracles::GramVerdict;

TEST(Gram, Matrix) {
  const Eigen::MatrixXd g = oracles::gram_matrix(path({0}), GenSubset::full(2));
  EXPECT_DOUBLE_EQ(g(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(g(0, 1), -1.0);
  const Eigen::MatrixXd c = oracles::gram_matrix(path({2 + 1}), GenSubset::full(2));
  EXPECT_NEAR(c(1, 0), -0.5, 1e-15);
  EXPECT_NEAR(oracles::gram_matrix(path({3, 3}), GenSubset::of({0, 2}))(0, 1), 0.0, 1e-15);
}

TEST(Gram, Examples) {
  const auto a1 = oracles::gram_signature(path({0}), GenSubset::full(2));
  EXPECT_EQ(a1.verdict, GramVerdict::PSDSingular);
  EXPECT_NEAR(a1.min_eigenvalue, 0.0, 1e-12);
  EXPECT_EQ(oracles::gram_signature(path({5, 3, 3}), GenSubset::full(4)).verdict, GramVerdict::PositiveDefinite);
  const auto tri = oracles::gram_signature(cycle({3, 3, 7}), GenSubset::full(3));
  EXPECT_EQ(tri.verdict, GramVerdict::Indefinite);
  EXPECT_LT(tri.min_eigenvalue, -1e-3);
  EXPECT_EQ(tri.tolerance, 1e-9);
}

TEST(Gram, Errors) {
  EXPECT_THROW(oracles::gram_signature(path({3}), GenSubset::full(2), 0.0), InputError);
  EXPECT_THROW(oracles::gram_signature(path({3}), GenSubset::full(2), -1.0), InputError);
  EXPECT_THROW(oracles::gram_signature(path({3}), GenSubset(), 1e-9), InputError);
}

TEST(Gram, ClassificationDiagrams) {
  for (const auto& d : coxhi::testing::classification_diagrams()) {
    EXPECT_EQ(oracles::gram_signature(d.system, d.system.all()).verdict, d.gram) << d.label;
  }
}

TEST(NaiveMaximal, Examples) {
  EXPECT_EQ(oracles::naive_maximal({GenSubset(), GenSubset::of({1}), GenSubset::of({1, 2})}),
            std::vector<GenSubset>{GenSubset::of({1, 2})});
  const std::vector<GenSubset> anti{GenSubset::of({0, 1}), GenSubset::of({0, 2}), GenSubset::of({1, 2})};
  EXPECT_EQ(oracles::naive_maximal(anti), anti);
  EXPECT_EQ(oracles::naive_maximal({anti[2], anti[0], anti[1]}), anti);
  EXPECT_EQ(oracles::naive_maximal({GenSubset::of({3}), GenSubset::of({3})}), std::vector<GenSubset>{GenSubset::of({3})});
  EXPECT_TRUE(oracles::naive_maximal({}).empty());
}

TEST(NaiveMaximal, Figure4PreWideCandidates) {
  const CoxeterSystem sys = catalog("fig4");
  Classifier cls(sys);
  std::vector<GenSubset> pre;
  for_each_subset(sys.all(), [&](GenSubset t) {
    if (detail::pre_wide(cls, t)) pre.push_back(t);
  });
  std::vector<GenSubset> omega;
  for (const auto& w : wide_subsets(cls)) omega.push_back(w.subset);
  EXPECT_EQ(oracles::naive_maximal(pre), omega);
  EXPECT_EQ(omega.size(), 4U);
}

TEST(NaiveLambdaStep, Figure4) {
  const CoxeterSystem sys = catalog("fig4");
  Classifier cls(sys);
  const LambdaAnalysis la = lambda_sequence(cls);
  auto sph = [&](GenSubset t) { return cls.is_spherical(t); };
  EXPECT_EQ(oracles::naive_lambda_step(la.levels[0].sets, sph), la.levels[1].sets);
  EXPECT_EQ(oracles::naive_lambda_step(la.levels[1].sets, sph), la.levels[2].sets);
}

TEST(NaiveLambdaStep, PairwiseSphericalLevelIsFixed) {
  const CoxeterSystem d = catalog("fig7d");
  Classifier cls(d);
  const auto l0 = lambda_sequence(cls).levels[0].sets;
  EXPECT_EQ(oracles::naive_lambda_step(l0, [&](GenSubset t) { return cls.is_spherical(t); }), l0);
}
