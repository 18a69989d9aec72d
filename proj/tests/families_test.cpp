#include <gtest/gtest.h>

#include "coxhi/families.hpp"
#include "coxhi/hindex.hpp"
#include "test_util.hpp"

using namespace coxhi;

namespace {

GenSubset lift(GenSubset t, int rank) { return GenSubset(t.bits() | (t.bits() << rank)); }

GenSubset project(GenSubset x, int rank) {
  const std::uint64_t low = GenSubset::full(rank).bits();
  return GenSubset((x.bits() | (x.bits() >> rank)) & low);
}

std::vector<GenSubset> omega_sets(const Classifier& cls) {
  std::vector<GenSubset> out;
  for (const auto& w : wide_subsets(cls)) out.push_back(w.subset);
  return out;
}

const std::vector<Label> kMs{Label(2), Label(3), Label(4)};
const std::vector<Label> kNs{Label(5), Label(6), Label::infinity()};

}  // namespace

TEST(Duplex, AffineA1GivesFourCycle) {
  const CoxeterSystem a1 = CoxeterSystem::from_edges(2, Label(2), {{0, 1, Label::infinity()}});
  const CoxeterSystem d = duplex(a1, {Label(2), Label::infinity()});
  EXPECT_EQ(d.rank(), 4);
  EXPECT_TRUE(d.is_right_angled());
  EXPECT_EQ(d.label(0, 2), Label(2));
  EXPECT_EQ(d.label(1, 3), Label(2));
  EXPECT_EQ(dynkin_edge_count(d, d.all()), 4);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(d.dynkin_neighbors(v).size(), 2);
  EXPECT_EQ(d.names(), (std::vector<std::string>{"s1'", "s2'", "s1''", "s2''"}));
}

TEST(Duplex, LabelRules) {
  const CoxeterSystem g = gamma_d(3);
  const int r = g.rank();
  const CoxeterSystem d = duplex(g, {Label(3), Label(6)});
  ASSERT_EQ(d.rank(), 2 * r);
  for (int i = 0; i < r; ++i) {
    EXPECT_EQ(d.label(i, i + r), Label(3));
    EXPECT_EQ(d.name(i), g.name(i) + "'");
    EXPECT_EQ(d.name(i + r), g.name(i) + "''");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const Label want = g.label(i, j).is_infinite() ? Label(6) : Label(2);
      for (int a : {i, i + r})
        for (int b : {j, j + r}) EXPECT_EQ(d.label(a, b), want);
    }
  }
}

TEST(Duplex, Errors) {
  EXPECT_THROW(duplex(catalog("fig4"), {}), InputError);
  EXPECT_THROW(duplex(gamma_d(2), {Label(2), Label(4)}), InputError);
  EXPECT_THROW(duplex(gamma_d(2), {Label::infinity(), Label(5)}), InputError);
  EXPECT_THROW(duplex(gamma_d(2), {Label(1), Label(5)}), InputError);
  EXPECT_THROW(duplex(random_racg(33, 0.5, 1), {}), RankCapError);
  const CoxeterSystem g = gamma_d(1);  // a0 a1 b0 b1; a0 and a1 commute
  EXPECT_THROW(duplex(g, {}, {{{0, 1}, Label(5)}}), InputError);
  EXPECT_THROW(duplex(g, {}, {{{1, 0}, Label(5)}}), InputError);
  EXPECT_THROW(duplex(g, {}, {{{0, 2}, Label(4)}}), InputError);
  EXPECT_NO_THROW(duplex(g, {}, {{{0, 2}, Label(7)}}));
}

TEST(Duplex, PerEdgeLabels) {
  const CoxeterSystem g = gamma_d(1);
  const CoxeterSystem d = duplex(g, {Label(2), Label(5)}, {{{0, 2}, Label(9)}});
  EXPECT_EQ(d.label(0, 2), Label(9));
  EXPECT_EQ(d.label(4, 6), Label(9));
  EXPECT_EQ(d.label(1, 3), Label(5));
}

TEST(Duplex, GammaFamilyIndices) {
  for (int dd = 1; dd <= 3; ++dd)
    for (Label m : kMs)
      for (Label n : kNs)
        EXPECT_EQ(hypergraph_index(duplex(gamma_d(dd), {m, n})), HIndex::finite(dd - 1))
            << dd << " " << m.to_string() << " " << n.to_string();
}

TEST(Duplex, GammaVerticesLieInTriangles) {
  for (int dd = 1; dd <= 5; ++dd) {
    const CoxeterSystem g = gamma_d(dd);
    EXPECT_TRUE(g.is_right_angled());
    const CoxeterSystem d = duplex(g, {Label(2), Label::infinity()});
    for (int v = 0; v < d.rank(); ++v) {
      const GenSubset nb = d.commuting_with(v);
      bool triangle = false;
      for (int a : nb)
        if (d.commuting_with(a).intersects(nb)) triangle = true;
      EXPECT_TRUE(triangle) << dd << " " << d.name(v);
    }
  }
}

TEST(DuplexProperties, MinimalNonsphericalShapes) {
  coxhi::testing::SampleStream rs(61, 2, 5);
  for (int k = 0; k < 80; ++k) {
    const CoxeterSystem g = rs.racg(0.4);
    const Label m = kMs[static_cast<std::size_t>(k) % 3];
    const Label n = kNs[static_cast<std::size_t>(k / 3) % 3];
    const CoxeterSystem d = duplex(g, {m, n});
    Classifier cls(d);
    for (GenSubset a : cls.enumerate_minimal_nonspherical(d.all())) {
      if (n.is_infinite()) {
        ASSERT_EQ(a.size(), 2);
        const auto v = a.members();
        EXPECT_TRUE(d.label(v[0], v[1]).is_infinite());
      } else {
        ASSERT_EQ(a.size(), 3);
        const auto v = a.members();
        std::vector<Label> ls{d.label(v[0], v[1]), d.label(v[0], v[2]), d.label(v[1], v[2])};
        std::sort(ls.begin(), ls.end());
        EXPECT_EQ(ls[1], n);
        EXPECT_EQ(ls[2], n);
        EXPECT_TRUE(ls[0] == Label(2) || ls[0] == m || ls[0] == n);
      }
    }
  }
}

TEST(DuplexProperties, LiftsAndProjections) {
  coxhi::testing::SampleStream rs(62, 2, 6);
  for (int k = 0; k < 80; ++k) {
    const CoxeterSystem g = rs.racg(0.5);
    const int r = g.rank();
    const CoxeterSystem d = duplex(g, {kMs[static_cast<std::size_t>(k) % 3], kNs[static_cast<std::size_t>(k) % 3]});
    Classifier cg(g);
    Classifier cd(d);
    for (int j = 0; j < 10; ++j) {
      const GenSubset a = rs.subset(r);
      const GenSubset b = rs.subset(r) - a;
      EXPECT_EQ(commutes(g, a, b), commutes(d, lift(a, r), lift(b, r)));
      EXPECT_EQ(cg.is_spherical(a), cd.is_spherical(lift(a, r)));
      const GenSubset x = rs.subset(2 * r);
      if (!cd.is_spherical(x)) {
        EXPECT_FALSE(cg.is_spherical(project(x, r)));
      }
    }
  }
}

TEST(DuplexProperties, WideSubsetsAreLifts) {
  coxhi::testing::SampleStream rs(63, 2, 6);
  for (int k = 0; k < 80; ++k) {
    const CoxeterSystem g = rs.racg(0.5);
    const int r = g.rank();
    const CoxeterSystem d = duplex(g, {kMs[static_cast<std::size_t>(k) % 3], kNs[static_cast<std::size_t>(k / 3) % 3]});
    std::vector<GenSubset> lifted;
    for (GenSubset t : omega_sets(Classifier(g))) lifted.push_back(lift(t, r));
    std::sort(lifted.begin(), lifted.end());
    EXPECT_EQ(omega_sets(Classifier(d)), lifted) << k;
  }
}

TEST(DuplexProperties, IndexIsPreserved) {
  coxhi::testing::SampleStream rs(64, 1, 6);
  for (int k = 0; k < 60; ++k) {
    const CoxeterSystem g = rs.racg(0.5);
    const HIndex h = hypergraph_index(g);
    for (Label m : kMs)
      for (Label n : kNs) EXPECT_EQ(hypergraph_index(duplex(g, {m, n})), h) << k;
  }
}

TEST(DuplexProperties, IndexIsPreservedWithPerEdgeLabels) {
  coxhi::testing::SampleStream rs(65, 2, 6);
  std::mt19937_64 pick(650);
  for (int k = 0; k < 60; ++k) {
    const CoxeterSystem g = rs.racg(0.5);
    DuplexEdgeLabels per;
    for (int i = 0; i < g.rank(); ++i)
      for (int j = i + 1; j < g.rank(); ++j)
        if (g.label(i, j).is_infinite()) per[{i, j}] = Label(5 + static_cast<std::uint32_t>(uniform_below(pick, 4)));
    EXPECT_EQ(hypergraph_index(duplex(g, {Label(3), Label(5)}, per)), hypergraph_index(g)) << k;
  }
}

TEST(Collapse, Rules) {
  const CoxeterSystem sys = CoxeterSystem::from_edges(
      4, Label(2), {{0, 1, Label(12)}, {1, 2, Label(6)}, {2, 3, Label::infinity()}, {0, 3, Label(8)}});
  const CoxeterSystem c = collapse_labels(sys);
  EXPECT_EQ(c.label(0, 1), Label(7));
  EXPECT_EQ(c.label(1, 2), Label(6));
  EXPECT_TRUE(c.label(2, 3).is_infinite());
  EXPECT_EQ(c.label(0, 3), Label(7));
  EXPECT_EQ(collapse_labels(sys, 9).label(0, 1), Label(9));
  EXPECT_EQ(collapse_labels(sys, 9).label(0, 3), Label(8));
  EXPECT_THROW(collapse_labels(sys, 6), InputError);
  EXPECT_EQ(c.names(), sys.names());
}

TEST(CollapseProperties, AnalysisIsUnchanged) {
  coxhi::testing::SampleStream rs(71, 1, 7);
  for (int k = 0; k < 200; ++k) {
    const CoxeterSystem sys = rs.system(coxhi::testing::wide_alphabet());
    const LambdaAnalysis a = lambda_sequence(sys);
    const LambdaAnalysis b = lambda_sequence(collapse_labels(sys));
    ASSERT_EQ(a.h, b.h) << k;
    ASSERT_EQ(a.omega.size(), b.omega.size());
    for (std::size_t i = 0; i < a.omega.size(); ++i) EXPECT_EQ(a.omega[i].subset, b.omega[i].subset);
    ASSERT_EQ(a.psi.size(), b.psi.size());
    for (std::size_t i = 0; i < a.psi.size(); ++i) EXPECT_EQ(a.psi[i].subset, b.psi[i].subset);
    ASSERT_EQ(a.levels.size(), b.levels.size());
    for (std::size_t i = 0; i < a.levels.size(); ++i) EXPECT_EQ(a.levels[i].sets, b.levels[i].sets);
  }
}

TEST(GammaD, Edges) {
  const CoxeterSystem g1 = gamma_d(1);
  EXPECT_EQ(g1.names(), (std::vector<std::string>{"a0", "a1", "b0", "b1"}));
  EXPECT_TRUE(g1.is_right_angled());
  // defining graph is the 4-cycle a0 - b1 - b0 - a1 - a0
  auto idx = [](const CoxeterSystem& g, const std::string& n) { return *g.index_of(n); };
  EXPECT_EQ(g1.commuting_with(idx(g1, "a0")), GenSubset::of({idx(g1, "a1"), idx(g1, "b1")}));
  EXPECT_EQ(g1.commuting_with(idx(g1, "b0")), GenSubset::of({idx(g1, "a1"), idx(g1, "b1")}));

  const CoxeterSystem g3 = gamma_d(3);
  EXPECT_EQ(g3.rank(), 8);
  int commuting = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (g3.label(i, j) == Label(2)) ++commuting;
  EXPECT_EQ(commuting, 12);
  auto commute = [&](const std::string& x, const std::string& y) { return g3.label(idx(g3, x), idx(g3, y)) == Label(2); };
  EXPECT_TRUE(commute("b1", "b2"));
  EXPECT_TRUE(commute("a1", "b2"));
  EXPECT_TRUE(commute("a3", "a0"));
  EXPECT_TRUE(commute("a3", "b0"));
  EXPECT_TRUE(commute("b2", "b3"));
  EXPECT_TRUE(commute("b3", "a2"));
  EXPECT_FALSE(commute("b3", "a3"));
  EXPECT_THROW(gamma_d(0), InputError);
  EXPECT_THROW(gamma_d(32), RankCapError);
}

TEST(GammaD, Indices) {
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(hypergraph_index(gamma_d(d)), HIndex::finite(d - 1)) << d;
}

TEST(Path4, Shape) {
  const CoxeterSystem p = path4(5);
  EXPECT_EQ(p.label(0, 1), Label(4));
  EXPECT_EQ(p.label(3, 4), Label(4));
  EXPECT_EQ(p.label(0, 2), Label(2));
  EXPECT_THROW(path4(1), InputError);
  EXPECT_THROW(path4(65), RankCapError);
  EXPECT_EQ(Classifier(path4(3)).classify_irreducible(GenSubset::full(3)).name(), "affC_2");
}

TEST(Catalog, Entries) {
  EXPECT_THROW(catalog("fig9"), InputError);
  EXPECT_EQ(catalog("fig4").rank(), 9);
  EXPECT_EQ(Classifier(catalog("fig7a")).classify_irreducible(GenSubset::full(9)).name(), "affA_8");
  EXPECT_EQ(catalog("fig8").rank(), 13);
  EXPECT_EQ(betti(catalog("fig8")), 5);
  for (const auto& name : catalog_names()) EXPECT_NO_THROW(catalog(name)) << name;
}

TEST(Catalog, Figure8SubChainThenWhole) {
  bool gate = true;
  for (int i = 1; i <= 5; ++i) {
    const CoxeterSystem sub = catalog("fig8sub" + std::to_string(i));
    EXPECT_EQ(sub.rank(), 8 + i);
    EXPECT_EQ(betti(sub), i);
    const HIndex h = hypergraph_index(sub);
    EXPECT_EQ(h, HIndex::finite(i + 1)) << i;
    gate = gate && h == HIndex::finite(i + 1);
    EXPECT_EQ(sub, induced(catalog("fig8"), GenSubset::full(8 + i)).system);
  }
  ASSERT_TRUE(gate);
  EXPECT_EQ(hypergraph_index(catalog("fig8")), HIndex::finite(6));
}

TEST(Random, Determinism) {
  EXPECT_EQ(random_racg(6, 0.5, 1), random_racg(6, 0.5, 1));
  EXPECT_EQ(random_system(7, coxhi::testing::wide_alphabet(), 9), random_system(7, coxhi::testing::wide_alphabet(), 9));
  EXPECT_EQ(random_tree(9, coxhi::testing::wide_alphabet(), 4), random_tree(9, coxhi::testing::wide_alphabet(), 4));
  EXPECT_NE(random_racg(10, 0.5, 1), random_racg(10, 0.5, 2));
}

TEST(Random, Shapes) {
  coxhi::testing::SampleStream rs(81, 0, 12);
  for (int k = 0; k < 100; ++k) {
    const CoxeterSystem r = rs.racg(0.3);
    EXPECT_TRUE(r.is_right_angled());
    const CoxeterSystem t = rs.tree(coxhi::testing::wide_alphabet());
    EXPECT_EQ(betti(t), 0);
    if (t.rank() > 0) {
      EXPECT_TRUE(is_connected(t, t.all()));
    }
  }
  EXPECT_THROW(random_system(3, {Label(1)}, 0), InputError);
  EXPECT_THROW(random_system(3, {}, 0), InputError);
  EXPECT_THROW(random_racg(3, 1.5, 0), InputError);
  EXPECT_THROW(random_tree(3, {Label(2)}, 0), InputError);
  EXPECT_EQ(random_racg(5, 1.0, 3).is_right_angled(), true);
  EXPECT_EQ(dynkin_edge_count(random_racg(5, 1.0, 3), GenSubset::full(5)), 0);
}
