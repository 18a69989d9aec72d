#pragma once

// Constructions (duplex, label collapse), named families and the example
// catalog, plus seeded random generators for property tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coxhi/core.hpp"

namespace coxhi {

struct DuplexParams {
  Label m{2};
  Label n = Label::infinity();

  void validate() const {
    if (m.is_infinite() || m.value() < 2) throw InputError("duplex: m must be a finite integer >= 2");
    if (n.is_finite() && n.value() < 5) throw InputError("duplex: n must be >= 5 or inf");
  }
};

/// Per-pair override of n for infinite edges, keyed by (i, j) with i < j.
using DuplexEdgeLabels = std::map<std::pair<int, int>, Label>;

/// Doubles a right-angled system: generator u becomes u' (index u) and u''
/// (index u + rank) with m(u', u'') = m; commuting pairs lift to four commuting
/// pairs and infinite pairs to four pairs labelled n.
inline CoxeterSystem duplex(const CoxeterSystem& sys, const DuplexParams& p, const DuplexEdgeLabels& per_edge = {}) {
  p.validate();
  if (!sys.is_right_angled()) throw InputError("duplex: input must be right-angled");
  const int r = sys.rank();
  if (2 * r > kMaxRank) throw RankCapError(2 * r, kMaxRank, "duplex");
  for (const auto& [key, n] : per_edge) {
    const auto [i, j] = key;
    if (i < 0 || j < 0 || i >= r || j >= r || i >= j) throw InputError("duplex: bad edge key in label map");
    if (!sys.label(i, j).is_infinite()) throw InputError("duplex: label override on a commuting pair");
    DuplexParams{p.m, n}.validate();
  }
  std::vector<std::vector<Label>> mat(2 * r, std::vector<Label>(2 * r, Label(2)));
  for (int i = 0; i < 2 * r; ++i) mat[i][i] = Label(1);
  for (int i = 0; i < r; ++i) {
    mat[i][i + r] = mat[i + r][i] = p.m;
    for (int j = i + 1; j < r; ++j) {
      if (!sys.label(i, j).is_infinite()) continue;
      Label n = p.n;
      if (auto it = per_edge.find({i, j}); it != per_edge.end()) n = it->second;
      for (int a : {i, i + r})
        for (int b : {j, j + r}) mat[a][b] = mat[b][a] = n;
    }
  }
  std::vector<std::string> names(2 * r);
  for (int i = 0; i < r; ++i) {
    names[i] = sys.name(i) + "'";
    names[i + r] = sys.name(i) + "''";
  }
  return CoxeterSystem(std::move(mat), std::move(names));
}

/// Replaces every finite label >= threshold by threshold.
inline CoxeterSystem collapse_labels(const CoxeterSystem& sys, int threshold = 7) {
  if (threshold < 7) throw InputError("collapse threshold must be >= 7");
  auto mat = sys.matrix();
  for (auto& row : mat)
    for (Label& l : row)
      if (l.is_finite() && l.value() >= static_cast<std::uint32_t>(threshold)) l = Label(threshold);
  return CoxeterSystem(std::move(mat), sys.names());
}

/// Right-angled system on a0..ad, b0..bd (only a0, a1, b0, b1 when d = 1).
inline CoxeterSystem gamma_d(int d) {
  if (d < 1) throw InputError("gamma_d: d must be >= 1");
  const int top = d == 1 ? 1 : d;
  const int r = 2 * (top + 1);
  if (r > kMaxRank) throw RankCapError(r, kMaxRank, "gamma_d");
  auto a = [](int i) { return i; };
  auto b = [top](int i) { return top + 1 + i; };
  std::vector<std::string> names;
  for (int i = 0; i <= top; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 0; i <= top; ++i) names.push_back("b" + std::to_string(i));
  std::vector<Edge> commuting{{b(1), a(0), Label(2)}, {b(1), b(0), Label(2)}, {a(1), a(0), Label(2)},
                              {a(1), b(0), Label(2)}};
  if (d >= 2) {
    commuting.push_back({b(1), b(2), Label(2)});
    commuting.push_back({a(1), b(2), Label(2)});
    for (int i = 2; i <= d; ++i) {
      commuting.push_back({a(i), a(0), Label(2)});
      commuting.push_back({a(i), b(0), Label(2)});
    }
    for (int i = 2; i <= d - 1; ++i) {
      commuting.push_back({b(i), b(i + 1), Label(2)});
      commuting.push_back({b(i + 1), a(i), Label(2)});
    }
  }
  return CoxeterSystem::from_edges(r, Label::infinity(), commuting, names);
}

/// Path s1 - ... - sn with every edge labelled 4.
inline CoxeterSystem path4(int n) {
  if (n < 2) throw InputError("path4: n must be >= 2");
  if (n > kMaxRank) throw RankCapError(n, kMaxRank, "path4");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Label(4)});
  return CoxeterSystem::from_edges(n, Label(2), edges);
}

namespace detail {

/// 1-based edge list helper for the catalog.
inline CoxeterSystem from_one_based(int rank, std::initializer_list<std::tuple<int, int, int>> edges) {
  std::vector<Edge> out;
  for (auto [i, j, m] : edges) out.push_back({i - 1, j - 1, Label(static_cast<std::uint32_t>(m))});
  return CoxeterSystem::from_edges(rank, Label(2), out);
}

/// Nine-cycle with label 4 on the listed cycle edges (given by their first vertex,
/// edge k joins s_k and s_{k+1}, edge 9 joins s9 and s1) and 3 elsewhere.
inline CoxeterSystem nine_cycle(std::initializer_list<int> fours) {
  std::vector<Edge> edges;
  for (int k = 1; k <= 9; ++k) {
    const bool four = std::find(fours.begin(), fours.end(), k) != fours.end();
    edges.push_back({k - 1, k % 9, Label(four ? 4 : 3)});
  }
  return CoxeterSystem::from_edges(9, Label(2), edges);
}

inline CoxeterSystem fig8_full() {
  return from_one_based(13, {{1, 2, 3},
                             {2, 3, 3},
                             {3, 4, 4},
                             {4, 5, 3},
                             {5, 6, 3},
                             {6, 7, 4},
                             {7, 8, 4},
                             {8, 1, 3},
                             {3, 9, 4},
                             {9, 10, 4},
                             {10, 8, 3},
                             {4, 11, 3},
                             {11, 7, 3},
                             {3, 12, 3},
                             {12, 8, 3},
                             {3, 13, 3},
                             {13, 7, 3}});
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  return {"fig4", "fig7a", "fig7b", "fig7c", "fig7d", "fig8", "fig8sub1", "fig8sub2", "fig8sub3", "fig8sub4", "fig8sub5"};
}

inline CoxeterSystem catalog(const std::string& name) {
  if (name == "fig4") {
    return detail::from_one_based(9, {{1, 2, 3},
                                      {2, 3, 3},
                                      {3, 4, 3},
                                      {4, 5, 3},
                                      {5, 6, 5},
                                      {6, 7, 3},
                                      {7, 8, 3},
                                      {8, 9, 3},
                                      {9, 1, 3},
                                      {1, 3, 3},
                                      {2, 4, 3},
                                      {1, 8, 3},
                                      {7, 9, 3}});
  }
  if (name == "fig7a") return detail::nine_cycle({});
  if (name == "fig7b") return detail::nine_cycle({1, 4, 5, 6, 9});
  if (name == "fig7c") return detail::nine_cycle({2, 3, 7, 8});
  if (name == "fig7d") return detail::nine_cycle({1, 3, 4, 6, 7, 9});
  if (name == "fig8") return detail::fig8_full();
  if (name.size() == 8 && name.starts_with("fig8sub") && name[7] >= '1' && name[7] <= '5') {
    const int i = name[7] - '0';
    return induced(detail::fig8_full(), GenSubset::full(8 + i)).system;
  }
  throw InputError("unknown catalog entry '" + name + "'");
}

/// Uniform integer in [0, n). Plain modulo keeps results identical across
/// standard library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace detail {

inline void check_alphabet(const std::vector<Label>& alphabet) {
  if (alphabet.empty()) throw InputError("label alphabet is empty");
  for (Label l : alphabet)
    if (l.is_finite() && l.value() < 2) throw InputError("label alphabet entries must be >= 2 or inf");
}

}  // namespace detail

/// Every off-diagonal pair labelled uniformly from `alphabet`.
inline CoxeterSystem random_system(int rank, const std::vector<Label>& alphabet, std::uint64_t seed) {
  detail::check_alphabet(alphabet);
  if (rank < 0) throw InputError("rank must be non-negative");
  if (rank > kMaxRank) throw RankCapError(rank, kMaxRank, "random_system");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) edges.push_back({i, j, alphabet[uniform_below(rng, alphabet.size())]});
  return CoxeterSystem::from_edges(rank, Label(2), edges);
}

/// Right-angled system; each pair commutes with probability `edge_prob` (an edge
/// of the defining graph) and is labelled inf otherwise.
inline CoxeterSystem random_racg(int rank, double edge_prob, std::uint64_t seed) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  if (rank < 0) throw InputError("rank must be non-negative");
  if (rank > kMaxRank) throw RankCapError(rank, kMaxRank, "random_racg");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      edges.push_back({i, j, uniform_unit(rng) < edge_prob ? Label(2) : Label::infinity()});
  return CoxeterSystem::from_edges(rank, Label(2), edges);
}

/// Random tree Dynkin diagram: vertex i > 0 attaches to a uniform earlier vertex
/// with a label drawn from the entries of `alphabet` that are >= 3.
inline CoxeterSystem random_tree(int rank, const std::vector<Label>& alphabet, std::uint64_t seed) {
  detail::check_alphabet(alphabet);
  if (rank < 0) throw InputError("rank must be non-negative");
  if (rank > kMaxRank) throw RankCapError(rank, kMaxRank, "random_tree");
  std::vector<Label> edge_labels;
  for (Label l : alphabet)
    if (l.is_infinite() || l.value() >= 3) edge_labels.push_back(l);
  if (edge_labels.empty() && rank > 1) throw InputError("random_tree: alphabet has no label >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 1; i < rank; ++i) {
    const int parent = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i)));
    edges.push_back({parent, i, edge_labels[uniform_below(rng, edge_labels.size())]});
  }
  return CoxeterSystem::from_edges(rank, Label(2), edges);
}

}  // namespace coxhi
