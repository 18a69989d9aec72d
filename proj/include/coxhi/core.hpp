#pragma once

// Coxeter systems, generator subsets and the graphs attached to them.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxhi {

/// Largest supported rank; a subset of generators is one machine word.
inline constexpr int kMaxRank = 64;

/// Malformed or inconsistent input (bad file, bad subset, bad parameter).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive computation was asked to run above its rank cap.
class RankCapError : public std::runtime_error {
 public:
  RankCapError(int rank, int cap, const std::string& what)
      : std::runtime_error(what + ": rank " + std::to_string(rank) +
                           " exceeds cap " + std::to_string(cap)),
        rank_(rank),
        cap_(cap) {}

  int rank() const noexcept { return rank_; }
  int cap() const noexcept { return cap_; }

 private:
  int rank_;
  int cap_;
};

/// An operation refused because its cost is out of reach for the given input.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_rank_at_most(int rank, int cap, const std::string& what) {
  if (rank > cap) throw RankCapError(rank, cap, what);
}

/// Entry m(s,t) of a Coxeter matrix: a positive integer or infinity.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(std::uint32_t m) : m_(m) {}

  static constexpr Label infinity() {
    Label l;
    l.m_ = kInf;
    return l;
  }

  constexpr bool is_infinite() const { return m_ == kInf; }
  constexpr bool is_finite() const { return m_ != kInf; }
  /// Finite value; meaningless for infinity.
  constexpr std::uint32_t value() const { return m_; }

  friend constexpr bool operator==(Label, Label) = default;
  friend constexpr std::strong_ordering operator<=>(Label a, Label b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.m_ <=> b.m_;
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(m_); }

  /// Accepts a decimal integer or one of "inf", "infinity", "oo".
  static Label parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    if (text.empty() || text.size() > 9) throw InputError("invalid label '" + std::string(text) + "'");
    std::uint32_t v = 0;
    for (char c : text) {
      if (c < '0' || c > '9') throw InputError("invalid label '" + std::string(text) + "'");
      v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return Label(v);
  }

 private:
  static constexpr std::uint32_t kInf = 0;
  std::uint32_t m_ = 2;
};

/// A set of generator indices, stored as a bitmask. Ordering is by mask value.
class GenSubset {
 public:
  constexpr GenSubset() = default;
  constexpr explicit GenSubset(std::uint64_t bits) : bits_(bits) {}

  static GenSubset of(std::initializer_list<int> members) {
    GenSubset s;
    for (int i : members) s = s.with(i);
    return s;
  }
  static constexpr GenSubset single(int i) { return GenSubset(std::uint64_t{1} << i); }
  static constexpr GenSubset full(int rank) {
    return GenSubset(rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  /// Smallest member; -1 when empty.
  constexpr int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr GenSubset with(int i) const { return GenSubset(bits_ | (std::uint64_t{1} << i)); }
  constexpr GenSubset without(int i) const { return GenSubset(bits_ & ~(std::uint64_t{1} << i)); }

  constexpr bool subset_of(GenSubset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(GenSubset o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(GenSubset o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr GenSubset operator|(GenSubset a, GenSubset b) { return GenSubset(a.bits_ | b.bits_); }
  friend constexpr GenSubset operator&(GenSubset a, GenSubset b) { return GenSubset(a.bits_ & b.bits_); }
  friend constexpr GenSubset operator-(GenSubset a, GenSubset b) { return GenSubset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GenSubset, GenSubset) = default;
  friend constexpr auto operator<=>(GenSubset a, GenSubset b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> members() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls f(sub) for every subset of `within`, in increasing mask order, including
/// the empty set and `within` itself.
template <typename F>
void for_each_subset(GenSubset within, F&& f) {
  const std::uint64_t mask = within.bits();
  std::uint64_t sub = 0;
  while (true) {
    f(GenSubset(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

/// Calls f(sub) for every subset of {0..rank-1} with exactly k members, ascending.
template <typename F>
void for_each_subset_of_size(int rank, int k, F&& f) {
  if (k < 0 || k > rank) return;
  if (k == 0) {
    f(GenSubset());
    return;
  }
  const std::uint64_t first = GenSubset::full(k).bits();
  const std::uint64_t last = GenSubset::full(rank).bits() - GenSubset::full(rank - k).bits();
  std::uint64_t v = first;
  while (true) {
    f(GenSubset(v));
    if (v == last) return;
    // Gosper's hack: next mask with the same popcount. Never overflows since v != last.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

/// Calls f(sub) for every k-element subset of `within`.
template <typename F>
void for_each_subset_of_size_within(GenSubset within, int k, F&& f) {
  const std::vector<int> pos = within.members();
  const int m = static_cast<int>(pos.size());
  for_each_subset_of_size(m, k, [&](GenSubset local) {
    GenSubset out;
    for (int i : local) out = out.with(pos[i]);
    f(out);
  });
}

enum class DiagramKind {
  Dynkin,          ///< edge iff m >= 3 (including infinity)
  DefiningGraph,   ///< edge iff m < infinity
  Nerve1Skeleton,  ///< edge iff {s,t} spherical, i.e. m < infinity
};

struct Edge {
  int i = 0;
  int j = 0;
  Label m;
};

/// A Coxeter matrix with generator names. Immutable once constructed.
class CoxeterSystem {
 public:
  CoxeterSystem() = default;

  explicit CoxeterSystem(std::vector<std::vector<Label>> matrix, std::vector<std::string> names = {}) {
    const int n = static_cast<int>(matrix.size());
    if (n > kMaxRank) throw RankCapError(n, kMaxRank, "coxeter system");
    rank_ = n;
    labels_.assign(static_cast<std::size_t>(n) * n, Label(2));
    for (const auto& row : matrix)
      if (static_cast<int>(row.size()) != n) throw InputError("coxeter matrix is not square");
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Label m = matrix[i][j];
        if (i == j) {
          if (m != Label(1)) throw InputError("diagonal entry m(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") must be 1");
        } else {
          if (m.is_finite() && m.value() < 2) {
            throw InputError("off-diagonal label m(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") must be >= 2");
          }
          if (matrix[j][i] != m) {
            throw InputError("coxeter matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
          }
        }
        labels_[static_cast<std::size_t>(i) * n + j] = m;
      }
    }
    set_names(std::move(names));
    build_adjacency();
  }

  /// Builds a system where every pair not listed in `edges` gets `fallback`.
  /// Indices are 0-based; listing a pair twice with different labels is an error.
  static CoxeterSystem from_edges(int rank, Label fallback, const std::vector<Edge>& edges,
                                  std::vector<std::string> names = {}) {
    if (rank < 0) throw InputError("negative rank");
    if (rank > kMaxRank) throw RankCapError(rank, kMaxRank, "coxeter system");
    std::vector<std::vector<std::optional<Label>>> set(rank, std::vector<std::optional<Label>>(rank));
    for (const Edge& e : edges) {
      if (e.i < 0 || e.j < 0 || e.i >= rank || e.j >= rank) {
        throw InputError("edge index out of range: " + std::to_string(e.i + 1) + " " + std::to_string(e.j + 1));
      }
      if (e.i == e.j) throw InputError("edge from generator " + std::to_string(e.i + 1) + " to itself");
      if (e.m.is_finite() && e.m.value() < 2) {
        throw InputError("edge label " + e.m.to_string() + " is below 2");
      }
      auto& slot = set[e.i][e.j];
      if (slot && *slot != e.m) {
        throw InputError("conflicting labels for edge " + std::to_string(e.i + 1) + " " + std::to_string(e.j + 1) +
                         ": " + slot->to_string() + " vs " + e.m.to_string());
      }
      slot = e.m;
      set[e.j][e.i] = e.m;
    }
    std::vector<std::vector<Label>> matrix(rank, std::vector<Label>(rank, fallback));
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) {
        if (i == j) {
          matrix[i][j] = Label(1);
        } else if (set[i][j]) {
          matrix[i][j] = *set[i][j];
        }
      }
    }
    return CoxeterSystem(std::move(matrix), std::move(names));
  }

  int rank() const { return rank_; }
  GenSubset all() const { return GenSubset::full(rank_); }

  Label label(int i, int j) const { return labels_[static_cast<std::size_t>(i) * rank_ + j]; }

  std::vector<std::vector<Label>> matrix() const {
    std::vector<std::vector<Label>> m(rank_, std::vector<Label>(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) m[i][j] = label(i, j);
    return m;
  }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }

  std::optional<int> index_of(std::string_view name) const {
    for (int i = 0; i < rank_; ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool has_default_names() const {
    for (int i = 0; i < rank_; ++i)
      if (names_[i] != default_name(i)) return false;
    return true;
  }

  static std::string default_name(int i) { return "s" + std::to_string(i + 1); }

  /// Dynkin-diagram neighbours: m >= 3 or infinity.
  GenSubset dynkin_neighbors(int i) const { return dynkin_[i]; }
  /// Generators t != i with m(i,t) finite.
  GenSubset finite_neighbors(int i) const { return finite_[i]; }
  /// Generators t != i with m(i,t) = 2.
  GenSubset commuting_with(int i) const { return commuting_[i]; }

  GenSubset neighbors(int i, DiagramKind kind) const {
    return kind == DiagramKind::Dynkin ? dynkin_[i] : finite_[i];
  }

  bool is_right_angled() const {
    for (int i = 0; i < rank_; ++i)
      for (int j = i + 1; j < rank_; ++j) {
        const Label m = label(i, j);
        if (!(m.is_infinite() || m == Label(2))) return false;
      }
    return true;
  }

  /// Throws InputError if `t` names a generator outside 0..rank-1.
  void check_subset(GenSubset t) const {
    if (!t.subset_of(all())) throw InputError("subset contains a generator index outside the system");
  }

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.rank_ == b.rank_ && a.labels_ == b.labels_ && a.names_ == b.names_;
  }

 private:
  void set_names(std::vector<std::string> names) {
    if (names.empty()) {
      names_.clear();
      for (int i = 0; i < rank_; ++i) names_.push_back(default_name(i));
      return;
    }
    if (static_cast<int>(names.size()) != rank_) {
      throw InputError("expected " + std::to_string(rank_) + " generator names, got " + std::to_string(names.size()));
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) throw InputError("empty generator name");
      for (char c : names[i])
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#' || c == ',')
          throw InputError("generator name '" + names[i] + "' contains a reserved character");
      for (std::size_t j = 0; j < i; ++j)
        if (names[j] == names[i]) throw InputError("duplicate generator name '" + names[i] + "'");
    }
    names_ = std::move(names);
  }

  void build_adjacency() {
    dynkin_.assign(rank_, GenSubset());
    finite_.assign(rank_, GenSubset());
    commuting_.assign(rank_, GenSubset());
    for (int i = 0; i < rank_; ++i) {
      for (int j = 0; j < rank_; ++j) {
        if (i == j) continue;
        const Label m = label(i, j);
        if (m.is_infinite() || m.value() >= 3) dynkin_[i] = dynkin_[i].with(j);
        if (m.is_finite()) finite_[i] = finite_[i].with(j);
        if (m == Label(2)) commuting_[i] = commuting_[i].with(j);
      }
    }
  }

  int rank_ = 0;
  std::vector<Label> labels_;
  std::vector<std::string> names_;
  std::vector<GenSubset> dynkin_;
  std::vector<GenSubset> finite_;
  std::vector<GenSubset> commuting_;
};

/// A special subsystem together with the map from its indices back to the parent.
struct Subsystem {
  CoxeterSystem system;
  std::vector<int> to_parent;

  GenSubset lift(GenSubset local) const {
    GenSubset out;
    for (int i : local) out = out.with(to_parent[i]);
    return out;
  }
  /// Parent subset restricted to this subsystem, in local indices.
  GenSubset restrict(GenSubset parent) const {
    GenSubset out;
    for (std::size_t i = 0; i < to_parent.size(); ++i)
      if (parent.contains(to_parent[i])) out = out.with(static_cast<int>(i));
    return out;
  }
};

/// The Coxeter system on `t`, relabelled 0..|t|-1 in increasing index order.
inline Subsystem induced(const CoxeterSystem& sys, GenSubset t) {
  sys.check_subset(t);
  Subsystem sub;
  sub.to_parent = t.members();
  const int n = static_cast<int>(sub.to_parent.size());
  std::vector<std::vector<Label>> m(n, std::vector<Label>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(sys.name(sub.to_parent[a]));
    for (int b = 0; b < n; ++b) m[a][b] = sys.label(sub.to_parent[a], sub.to_parent[b]);
  }
  sub.system = CoxeterSystem(std::move(m), std::move(names));
  return sub;
}

/// Connected component of `t` containing `start` in the chosen graph.
inline GenSubset component_of(const CoxeterSystem& sys, GenSubset t, int start, DiagramKind kind) {
  GenSubset seen = GenSubset::single(start);
  GenSubset frontier = seen;
  while (!frontier.empty()) {
    GenSubset next;
    for (int v : frontier) next = next | sys.neighbors(v, kind);
    next = (next & t) - seen;
    seen = seen | next;
    frontier = next;
  }
  return seen;
}

/// Partition of `t` into connected components, ordered by smallest member.
inline std::vector<GenSubset> components(const CoxeterSystem& sys, GenSubset t,
                                         DiagramKind kind = DiagramKind::Dynkin) {
  sys.check_subset(t);
  std::vector<GenSubset> out;
  GenSubset rest = t;
  while (!rest.empty()) {
    const GenSubset c = component_of(sys, t, rest.lowest(), kind);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

inline bool is_connected(const CoxeterSystem& sys, GenSubset t, DiagramKind kind = DiagramKind::Dynkin) {
  if (t.empty()) return true;
  return component_of(sys, t, t.lowest(), kind) == t;
}

/// Elements of S \ t commuting with every element of t.
inline GenSubset perp(const CoxeterSystem& sys, GenSubset t) {
  sys.check_subset(t);
  GenSubset out = sys.all() - t;
  for (int s : t) out = out & sys.commuting_with(s);
  return out;
}

/// True iff a and b are disjoint and every cross label is 2.
inline bool commutes(const CoxeterSystem& sys, GenSubset a, GenSubset b) {
  if (a.intersects(b)) return false;
  for (int s : a)
    if (!b.subset_of(sys.commuting_with(s))) return false;
  return true;
}

inline int dynkin_edge_count(const CoxeterSystem& sys, GenSubset t) {
  int twice = 0;
  for (int s : t) twice += (sys.dynkin_neighbors(s) & t).size();
  return twice / 2;
}

/// First Betti number e - v + k of the Dynkin diagram.
inline int betti(const CoxeterSystem& sys) {
  const GenSubset all = sys.all();
  return dynkin_edge_count(sys, all) - sys.rank() + static_cast<int>(components(sys, all).size());
}

/// Generator names of `t`, in increasing index order.
inline std::vector<std::string> subset_names(const CoxeterSystem& sys, GenSubset t) {
  std::vector<std::string> out;
  for (int i : t) out.push_back(sys.name(i));
  return out;
}

inline std::string format_subset(const CoxeterSystem& sys, GenSubset t) {
  std::string out = "{";
  bool first = true;
  for (int i : t) {
    if (!first) out += ",";
    out += sys.name(i);
    first = false;
  }
  return out + "}";
}

/// Parses "s1,s3,s4" or "1,3,4" (1-based) into a subset of `sys`.
inline GenSubset parse_subset(const CoxeterSystem& sys, std::string_view text) {
  GenSubset out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      if (auto idx = sys.index_of(tok)) {
        out = out.with(*idx);
      } else {
        bool numeric = std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (!numeric || tok.size() > 3) throw InputError("unknown generator '" + std::string(tok) + "'");
        const int k = std::stoi(std::string(tok));
        if (k < 1 || k > sys.rank()) throw InputError("generator index " + std::string(tok) + " out of range");
        out = out.with(k - 1);
      }
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace coxhi
