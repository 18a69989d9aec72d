#pragma once

// Ground-truth diagrams of the finite, affine and Lanner classifications, each
// with its expected type name and Gram verdict. Shared by the unit tests and the
// acceptance runner.

#include <string>
#include <vector>

#include "coxhi/core.hpp"
#include "coxhi/oracles.hpp"

namespace coxhi::testing {

struct NamedDiagram {
  std::string label;
  CoxeterSystem system;
  std::string type;
  oracles::GramVerdict gram;
};

namespace diagram {

inline Label lab(int m) { return m == 0 ? Label::infinity() : Label(static_cast<std::uint32_t>(m)); }

/// Path whose consecutive edges carry `labels` (0 means inf).
inline CoxeterSystem path(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size()) + 1;
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, lab(labels[i])});
  return CoxeterSystem::from_edges(n, Label(2), e);
}

inline CoxeterSystem cycle(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, lab(labels[i])});
  return CoxeterSystem::from_edges(n, Label(2), e);
}

/// Star-like tree: vertex 0 is the center, each arm lists its labels outward.
inline CoxeterSystem branched(const std::vector<std::vector<int>>& arms) {
  std::vector<Edge> e;
  int next = 1;
  for (const auto& arm : arms) {
    int prev = 0;
    for (int m : arm) {
      e.push_back({prev, next, lab(m)});
      prev = next++;
    }
  }
  return CoxeterSystem::from_edges(next, Label(2), e);
}

/// Chain of `inner` vertices with two extra leaves at each end, all labels 3.
inline CoxeterSystem two_forks(int inner) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < inner; ++i) e.push_back({i, i + 1, Label(3)});
  const int n = inner + 4;
  e.push_back({0, inner, Label(3)});
  e.push_back({0, inner + 1, Label(3)});
  e.push_back({inner - 1, inner + 2, Label(3)});
  e.push_back({inner - 1, inner + 3, Label(3)});
  return CoxeterSystem::from_edges(n, Label(2), e);
}

inline std::vector<int> threes(int k) { return std::vector<int>(k, 3); }

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace diagram

/// Figures of the three classifications, instantiated up to rank 9 (I2(m) up to m = 12).
inline std::vector<NamedDiagram> classification_diagrams() {
  using namespace diagram;
  using V = oracles::GramVerdict;
  std::vector<NamedDiagram> out;
  auto add = [&](std::string label, CoxeterSystem sys, std::string type, V v) {
    out.push_back({std::move(label), std::move(sys), std::move(type), v});
  };
  const auto PD = V::PositiveDefinite;
  const auto PSD = V::PSDSingular;
  const auto IND = V::Indefinite;

  // finite
  add("A_1", CoxeterSystem::from_edges(1, Label(2), {}), "A_1", PD);
  for (int n = 3; n <= 9; ++n) add("A_" + std::to_string(n), path(threes(n - 1)), "A_" + std::to_string(n), PD);
  for (int n = 3; n <= 9; ++n) {
    add("B_" + std::to_string(n), path(concat({4}, threes(n - 2))), "B_" + std::to_string(n), PD);
  }
  for (int n = 4; n <= 9; ++n) add("D_" + std::to_string(n), branched({{3}, {3}, threes(n - 3)}), "D_" + std::to_string(n), PD);
  add("E6", branched({{3}, {3, 3}, {3, 3}}), "E6", PD);
  add("E7", branched({{3}, {3, 3}, {3, 3, 3}}), "E7", PD);
  add("E8", branched({{3}, {3, 3}, {3, 3, 3, 3}}), "E8", PD);
  add("F4", path({3, 4, 3}), "F4", PD);
  add("H3", path({5, 3}), "H3", PD);
  add("H4", path({5, 3, 3}), "H4", PD);
  for (int m = 3; m <= 12; ++m) add("I2(" + std::to_string(m) + ")", path({m}), "I2(" + std::to_string(m) + ")", PD);

  // affine
  add("affA1", path({0}), "affA1", PSD);
  for (int n = 2; n <= 8; ++n) add("affA_" + std::to_string(n), cycle(threes(n + 1)), "affA_" + std::to_string(n), PSD);
  for (int n = 3; n <= 8; ++n) {
    add("affB_" + std::to_string(n), branched({{3}, {3}, concat(threes(n - 3), {4})}), "affB_" + std::to_string(n), PSD);
  }
  for (int n = 2; n <= 8; ++n) {
    add("affC_" + std::to_string(n), path(concat(concat({4}, threes(n - 2)), {4})), "affC_" + std::to_string(n), PSD);
  }
  add("affD_4", branched({{3}, {3}, {3}, {3}}), "affD_4", PSD);
  for (int n = 5; n <= 8; ++n) add("affD_" + std::to_string(n), two_forks(n - 3), "affD_" + std::to_string(n), PSD);
  add("affE6", branched({{3, 3}, {3, 3}, {3, 3}}), "affE6", PSD);
  add("affE7", branched({{3}, {3, 3, 3}, {3, 3, 3}}), "affE7", PSD);
  add("affE8", branched({{3}, {3, 3}, {3, 3, 3, 3, 3}}), "affE8", PSD);
  add("affF4", path({3, 3, 4, 3}), "affF4", PSD);
  add("affG2", path({6, 3}), "affG2", PSD);

  // Lanner, rank 3: every triangle and path below the affine threshold (sampled)
  for (auto [p, q] : std::vector<std::pair<int, int>>{{3, 7}, {3, 12}, {4, 5}, {4, 8}, {5, 5}, {6, 6}, {7, 7}, {11, 12}}) {
    add("path(" + std::to_string(p) + "," + std::to_string(q) + ")", path({p, q}), "lanner", IND);
  }
  for (auto t : std::vector<std::vector<int>>{{3, 3, 4}, {3, 3, 7}, {3, 4, 4}, {4, 4, 4}, {3, 5, 5}, {5, 6, 7}, {12, 12, 12}}) {
    add("triangle(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")", cycle(t), "lanner", IND);
  }
  // rank 4
  add("lanner4 path(3,5,3)", path({3, 5, 3}), "lanner", IND);
  add("lanner4 path(5,3,4)", path({5, 3, 4}), "lanner", IND);
  add("lanner4 path(5,3,5)", path({5, 3, 5}), "lanner", IND);
  add("lanner4 fork(5)", branched({{5}, {3}, {3}}), "lanner", IND);
  add("lanner4 cycle(4,3,3,3)", cycle({4, 3, 3, 3}), "lanner", IND);
  add("lanner4 cycle(5,3,3,3)", cycle({5, 3, 3, 3}), "lanner", IND);
  add("lanner4 cycle(4,3,4,3)", cycle({4, 3, 4, 3}), "lanner", IND);
  add("lanner4 cycle(5,3,5,3)", cycle({5, 3, 5, 3}), "lanner", IND);
  add("lanner4 cycle(5,3,4,3)", cycle({5, 3, 4, 3}), "lanner", IND);
  // rank 5
  add("lanner5 path(5,3,3,3)", path({5, 3, 3, 3}), "lanner", IND);
  add("lanner5 path(5,3,3,4)", path({5, 3, 3, 4}), "lanner", IND);
  add("lanner5 path(5,3,3,5)", path({5, 3, 3, 5}), "lanner", IND);
  add("lanner5 cycle(4,3,3,3,3)", cycle({4, 3, 3, 3, 3}), "lanner", IND);
  add("lanner5 fork(3,5)", branched({{3}, {3}, {3, 5}}), "lanner", IND);

  // nonspherical, neither affine nor Lanner
  add("path(4,4,4)", path({4, 4, 4}), "other", IND);
  add("path(3,3,4,4)", path({3, 3, 4, 4}), "other", IND);
  add("cycle(3,3,3,3,3,4)", cycle({3, 3, 3, 3, 3, 4}), "other", IND);
  add("fork(4,4,4)", branched({{4}, {4}, {4}}), "other", IND);
  add("fork(1,3,4)", branched({{3}, {3, 3, 3}, {3, 3, 3, 3}}), "other", IND);
  return out;
}

}  // namespace coxhi::testing
