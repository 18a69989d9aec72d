#pragma once

// Exact recognition of irreducible spherical, affine and Lanner subsystems by
// matching the labelled Dynkin diagram against the classified shapes.

#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxhi/core.hpp"

namespace coxhi {

enum class Family {
  A, B, D, E6, E7, E8, F4, H3, H4, I2,
  AffA, AffA1, AffB, AffC, AffD, AffE6, AffE7, AffE8, AffF4, AffG2,
  Lanner,
  Other,
};

/// Type of a Dynkin-connected subsystem. `rank` is the number of generators;
/// `param` holds m for I2(m) and is 0 otherwise.
struct IrreducibleType {
  Family family = Family::Other;
  int rank = 0;
  int param = 0;

  bool spherical() const { return family <= Family::I2; }
  bool affine() const { return family >= Family::AffA && family <= Family::AffG2; }
  bool lanner() const { return family == Family::Lanner; }
  bool minimal_nonspherical() const { return affine() || lanner(); }

  /// Report name, e.g. "A_3", "I2(5)", "affC_2", "lanner".
  std::string name() const {
    const std::string r = std::to_string(rank);
    const std::string a = std::to_string(rank - 1);  // affine subscript
    switch (family) {
      case Family::A: return "A_" + r;
      case Family::B: return "B_" + r;
      case Family::D: return "D_" + r;
      case Family::E6: return "E6";
      case Family::E7: return "E7";
      case Family::E8: return "E8";
      case Family::F4: return "F4";
      case Family::H3: return "H3";
      case Family::H4: return "H4";
      case Family::I2: return "I2(" + std::to_string(param) + ")";
      case Family::AffA: return "affA_" + a;
      case Family::AffA1: return "affA1";
      case Family::AffB: return "affB_" + a;
      case Family::AffC: return "affC_" + a;
      case Family::AffD: return "affD_" + a;
      case Family::AffE6: return "affE6";
      case Family::AffE7: return "affE7";
      case Family::AffE8: return "affE8";
      case Family::AffF4: return "affF4";
      case Family::AffG2: return "affG2";
      case Family::Lanner: return "lanner";
      case Family::Other: return "other";
    }
    return "other";
  }

  friend bool operator==(const IrreducibleType&, const IrreducibleType&) = default;
};

struct ComponentClass {
  GenSubset members;
  IrreducibleType type;
};

struct SubsystemClass {
  std::vector<ComponentClass> components;
  bool spherical = true;
  bool irreducible_affine = false;
  bool minimal_nonspherical = false;
};

enum class Ends { Zero, One, Two, Infinite };

inline std::string to_string(Ends e) {
  switch (e) {
    case Ends::Zero: return "0";
    case Ends::One: return "1";
    case Ends::Two: return "2";
    case Ends::Infinite: return "infinity";
  }
  return "?";
}

namespace detail {

using Labels = std::vector<int>;  // finite labels along a path or cycle

inline bool all_threes(const Labels& l) {
  for (int x : l)
    if (x != 3) return false;
  return true;
}

inline bool matches_either_way(const Labels& l, const Labels& pattern) {
  if (l.size() != pattern.size()) return false;
  if (l == pattern) return true;
  return std::equal(l.rbegin(), l.rend(), pattern.begin());
}

inline IrreducibleType classify_path(const Labels& l) {
  const int n = static_cast<int>(l.size()) + 1;
  auto t = [n](Family f) { return IrreducibleType{f, n, 0}; };
  if (all_threes(l)) return t(Family::A);

  Labels b(l.size(), 3);
  b.front() = 4;
  if (matches_either_way(l, b)) return t(Family::B);
  if (n >= 4) {
    Labels c(l.size(), 3);
    c.front() = 4;
    c.back() = 4;
    if (l == c) return t(Family::AffC);
  }
  if (n == 4) {
    if (l == Labels{3, 4, 3}) return t(Family::F4);
    if (matches_either_way(l, {5, 3, 3})) return t(Family::H4);
    if (l == Labels{3, 5, 3} || l == Labels{5, 3, 5} || matches_either_way(l, {5, 3, 4})) return t(Family::Lanner);
  }
  if (n == 5) {
    if (matches_either_way(l, {3, 4, 3, 3})) return t(Family::AffF4);
    if (matches_either_way(l, {5, 3, 3, 3}) || matches_either_way(l, {5, 3, 3, 4}) || l == Labels{5, 3, 3, 5}) {
      return t(Family::Lanner);
    }
  }
  return t(Family::Other);
}

inline IrreducibleType classify_cycle(const Labels& l) {
  const int n = static_cast<int>(l.size());
  auto t = [n](Family f) { return IrreducibleType{f, n, 0}; };
  if (all_threes(l)) return t(Family::AffA);
  std::vector<int> odd;  // positions of labels other than 3
  for (int i = 0; i < n; ++i)
    if (l[i] != 3) odd.push_back(i);
  auto four_or_five = [&](int i) { return l[i] == 4 || l[i] == 5; };
  if (n == 4) {
    if (odd.size() == 1 && four_or_five(odd[0])) return t(Family::Lanner);
    if (odd.size() == 2 && odd[1] - odd[0] == 2 && four_or_five(odd[0]) && four_or_five(odd[1])) {
      return t(Family::Lanner);
    }
  }
  if (n == 5 && odd.size() == 1 && l[odd[0]] == 4) return t(Family::Lanner);
  return t(Family::Other);
}

struct Arm {
  Labels labels;  // from the branch vertex outwards
  int length() const { return static_cast<int>(labels.size()); }
};

inline IrreducibleType classify_branched(std::vector<Arm> arms, int n) {
  auto t = [n](Family f) { return IrreducibleType{f, n, 0}; };
  std::sort(arms.begin(), arms.end(), [](const Arm& x, const Arm& y) { return x.length() < y.length(); });
  const std::array<int, 3> len{arms[0].length(), arms[1].length(), arms[2].length()};
  int non_three = 0;
  for (const auto& a : arms)
    for (int x : a.labels)
      if (x != 3) ++non_three;

  if (non_three == 0) {
    if (len[0] == 1 && len[1] == 1) return t(Family::D);
    if (len == std::array<int, 3>{1, 2, 2}) return t(Family::E6);
    if (len == std::array<int, 3>{1, 2, 3}) return t(Family::E7);
    if (len == std::array<int, 3>{1, 2, 4}) return t(Family::E8);
    if (len == std::array<int, 3>{2, 2, 2}) return t(Family::AffE6);
    if (len == std::array<int, 3>{1, 3, 3}) return t(Family::AffE7);
    if (len == std::array<int, 3>{1, 2, 5}) return t(Family::AffE8);
    return t(Family::Other);
  }
  if (non_three != 1 || len[0] != 1 || len[1] != 1) return t(Family::Other);

  // The single special label must sit on the outermost edge of a longest arm.
  for (const auto& a : arms) {
    if (a.length() != len[2] || a.labels.back() == 3) continue;
    const int special = a.labels.back();
    if (special == 4) return t(Family::AffB);
    if (special == 5 && (len[2] == 1 || len[2] == 2)) return t(Family::Lanner);
  }
  return t(Family::Other);
}

}  // namespace detail

/// Classifies a nonempty Dynkin-connected subset by the shape of its diagram.
/// Pure function of the labels; does not consult any cache.
inline IrreducibleType classify_connected_shape(const CoxeterSystem& sys, GenSubset t) {
  if (t.empty()) throw InputError("cannot classify the empty subset");
  if (!is_connected(sys, t)) throw InputError("subset " + format_subset(sys, t) + " is not Dynkin-connected");
  const std::vector<int> v = t.members();
  const int n = static_cast<int>(v.size());
  if (n == 1) return {Family::A, 1, 0};
  if (n == 2) {
    const Label m = sys.label(v[0], v[1]);
    if (m.is_infinite()) return {Family::AffA1, 2, 0};
    return {Family::I2, 2, static_cast<int>(m.value())};
  }
  for (int a : v)
    for (int b : v)
      if (a < b && sys.label(a, b).is_infinite()) return {Family::Other, n, 0};

  if (n == 3) {
    // 1/p + 1/q + 1/r compared with 1, exactly: qr + pr + pq vs pqr. Clamping
    // labels at 7 never changes the outcome of the comparison.
    auto clamped = [&](int a, int b) { return std::min<std::uint64_t>(sys.label(a, b).value(), 7); };
    const std::uint64_t p = clamped(v[0], v[1]);
    const std::uint64_t q = clamped(v[1], v[2]);
    const std::uint64_t r = clamped(v[0], v[2]);
    const std::uint64_t lhs = q * r + p * r + p * q;
    const std::uint64_t rhs = p * q * r;
    std::array<int, 3> l{static_cast<int>(p), static_cast<int>(q), static_cast<int>(r)};
    std::sort(l.begin(), l.end());
    if (lhs > rhs) {
      // A path: l[0] == 2.
      if (l[1] == 3 && l[2] == 3) return {Family::A, 3, 0};
      if (l[1] == 3 && l[2] == 4) return {Family::B, 3, 0};
      return {Family::H3, 3, 0};  // (3,5) is the only remaining case
    }
    if (lhs == rhs) {
      if (l[0] == 3) return {Family::AffA, 3, 0};
      if (l[1] == 4) return {Family::AffC, 3, 0};
      return {Family::AffG2, 3, 0};  // (2,3,6)
    }
    return {Family::Lanner, 3, 0};
  }

  // Local adjacency with labels.
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (local neighbour, label)
  int edges = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Label m = sys.label(v[a], v[b]);
      if (m.value() >= 3) {
        adj[a].push_back({b, static_cast<int>(m.value())});
        adj[b].push_back({a, static_cast<int>(m.value())});
        ++edges;
      }
    }
  std::vector<int> deg(n);
  int max_deg = 0;
  for (int a = 0; a < n; ++a) {
    deg[a] = static_cast<int>(adj[a].size());
    max_deg = std::max(max_deg, deg[a]);
  }

  // Walks from `from` through `start` until a vertex of degree != 2 (or back to origin).
  auto walk = [&](int origin, int first, int first_label) {
    detail::Labels labels{first_label};
    int prev = origin;
    int cur = first;
    while (deg[cur] == 2 && cur != origin) {
      const auto& nb = adj[cur];
      const auto& next = nb[0].first == prev ? nb[1] : nb[0];
      labels.push_back(next.second);
      prev = cur;
      cur = next.first;
    }
    return labels;
  };

  if (edges == n && max_deg == 2) {
    detail::Labels cycle = walk(0, adj[0][0].first, adj[0][0].second);
    return detail::classify_cycle(cycle);
  }
  if (edges != n - 1) return {Family::Other, n, 0};

  if (max_deg <= 2) {
    int end = 0;
    while (deg[end] != 1) ++end;
    return detail::classify_path(walk(end, adj[end][0].first, adj[end][0].second));
  }

  std::vector<int> branch;
  for (int a = 0; a < n; ++a)
    if (deg[a] >= 3) branch.push_back(a);

  if (max_deg == 3 && branch.size() == 1) {
    std::vector<detail::Arm> arms;
    for (const auto& [nb, lab] : adj[branch[0]]) arms.push_back({walk(branch[0], nb, lab)});
    return detail::classify_branched(std::move(arms), n);
  }

  bool all_three = true;
  for (int a = 0; a < n; ++a)
    for (const auto& e : adj[a])
      if (e.second != 3) all_three = false;
  if (!all_three) return {Family::Other, n, 0};

  if (max_deg == 4 && n == 5) return {Family::AffD, 5, 0};
  if (max_deg == 3 && branch.size() == 2 && n >= 6) {
    for (int b : branch) {
      int leaves = 0;
      for (const auto& e : adj[b])
        if (deg[e.first] == 1) ++leaves;
      if (leaves != 2) return {Family::Other, n, 0};
    }
    return {Family::AffD, n, 0};
  }
  return {Family::Other, n, 0};
}

/// Classification queries on one system, with memoized sphericity. Safe to
/// share between threads: the memo only ever records the same value per key.
class Classifier {
 public:
  explicit Classifier(CoxeterSystem sys) : sys_(std::move(sys)) {
    if (sys_.rank() <= kDenseMemoRank) {
      dense_ = std::make_unique<std::atomic<std::uint8_t>[]>(std::size_t{1} << sys_.rank());
    }
    infinite_.assign(sys_.rank(), GenSubset());
    for (int i = 0; i < sys_.rank(); ++i)
      for (int j = 0; j < sys_.rank(); ++j)
        if (i != j && sys_.label(i, j).is_infinite()) infinite_[i] = infinite_[i].with(j);
  }

  Classifier(const Classifier&) = delete;
  Classifier& operator=(const Classifier&) = delete;

  const CoxeterSystem& system() const { return sys_; }
  int rank() const { return sys_.rank(); }

  IrreducibleType classify_irreducible(GenSubset t) const {
    sys_.check_subset(t);
    return classify_connected_shape(sys_, t);
  }

  SubsystemClass classify(GenSubset t) const {
    sys_.check_subset(t);
    SubsystemClass out;
    for (GenSubset c : components(sys_, t)) {
      const IrreducibleType type = classify_connected_shape(sys_, c);
      out.components.push_back({c, type});
      if (!type.spherical()) out.spherical = false;
    }
    out.irreducible_affine = out.components.size() == 1 && out.components[0].type.affine();
    out.minimal_nonspherical = is_minimal_nonspherical(t);
    return out;
  }

  bool is_spherical(GenSubset t) const {
    if (t.empty()) return true;
    if (dense_) {
      const std::uint8_t cached = dense_[t.bits()].load(std::memory_order_relaxed);
      if (cached != 0) return cached == kSpherical;
      const bool v = compute_spherical(t);
      dense_[t.bits()].store(v ? kSpherical : kNonspherical, std::memory_order_relaxed);
      return v;
    }
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = sparse_.find(t.bits()); it != sparse_.end()) return it->second;
    }
    const bool v = compute_spherical(t);
    std::lock_guard<std::mutex> lock(mutex_);
    sparse_.emplace(t.bits(), v);
    return v;
  }

  /// Nonspherical with every codimension-1 subset spherical.
  bool is_minimal_nonspherical(GenSubset a) const {
    if (a.empty() || is_spherical(a)) return false;
    for (int s : a)
      if (!is_spherical(a.without(s))) return false;
    return true;
  }

  bool is_irreducible_affine(GenSubset t, int min_rank) const {
    if (t.empty() || t.size() < min_rank || !is_connected(sys_, t)) return false;
    return classify_connected_shape(sys_, t).affine();
  }

  bool is_lanner(GenSubset t) const {
    if (t.size() < 3 || !is_connected(sys_, t)) return false;
    return classify_connected_shape(sys_, t).lanner();
  }

  /// All minimal nonspherical subsets of `within`, ascending by mask.
  std::vector<GenSubset> enumerate_minimal_nonspherical(GenSubset within) const {
    sys_.check_subset(within);
    std::vector<GenSubset> out;
    for_each_subset(within, [&](GenSubset a) {
      if (a.size() >= 2 && is_connected(sys_, a) && is_minimal_nonspherical(a)) out.push_back(a);
    });
    return out;
  }

 private:
  static constexpr int kDenseMemoRank = 22;
  static constexpr std::uint8_t kSpherical = 1;
  static constexpr std::uint8_t kNonspherical = 2;

  bool compute_spherical(GenSubset t) const {
    for (int s : t)
      if (infinite_[s].intersects(t)) return false;
    const GenSubset first = component_of(sys_, t, t.lowest(), DiagramKind::Dynkin);
    if (first == t) {
      // Connected spherical diagrams are trees.
      if (dynkin_edge_count(sys_, t) >= t.size()) return false;
      return classify_connected_shape(sys_, t).spherical();
    }
    return is_spherical(first) && is_spherical(t - first);
  }

  CoxeterSystem sys_;
  std::vector<GenSubset> infinite_;
  std::unique_ptr<std::atomic<std::uint8_t>[]> dense_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, bool> sparse_;
};

/// Number of ends. Checks, in order: finite (0); K x {s,t} with K spherical and
/// m(s,t) = inf (2); some spherical T whose removal disconnects the nerve
/// 1-skeleton (infinity); otherwise 1.
inline Ends ends(const Classifier& cls, int max_rank = 20) {
  const CoxeterSystem& sys = cls.system();
  const GenSubset all = sys.all();
  if (cls.is_spherical(all)) return Ends::Zero;
  for (int s = 0; s < sys.rank(); ++s)
    for (int t = s + 1; t < sys.rank(); ++t) {
      if (!sys.label(s, t).is_infinite()) continue;
      const GenSubset pair = GenSubset::of({s, t});
      const GenSubset k = all - pair;
      if (commutes(sys, k, pair) && cls.is_spherical(k)) return Ends::Two;
    }
  require_rank_at_most(sys.rank(), max_rank, "ends");
  bool separated = false;
  for_each_subset(all, [&](GenSubset t) {
    if (separated) return;
    const GenSubset rest = all - t;
    if (rest.empty() || !cls.is_spherical(t)) return;
    if (!is_connected(sys, rest, DiagramKind::Nerve1Skeleton)) separated = true;
  });
  return separated ? Ends::Infinite : Ends::One;
}

}  // namespace coxhi
