#pragma once

// Wide and slab subsets, the Lambda sequence and hypergraph index, together with
// the structure read off from it: thickness certificates, nested chains,
// peripheral subsets, relative-hyperbolicity checks and the divergence report.

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxhi/classify.hpp"
#include "coxhi/core.hpp"

namespace coxhi {

inline constexpr int kDefaultMaxRank = 20;
inline constexpr int kClassTMaxRank = 12;

struct AnalysisOptions {
  int max_rank = kDefaultMaxRank;
};

/// Hypergraph index: a non-negative integer or infinity.
class HIndex {
 public:
  constexpr HIndex() = default;
  static constexpr HIndex finite(int h) { return HIndex(h); }
  static constexpr HIndex infinite() { return HIndex(); }

  constexpr bool is_finite() const { return v_ >= 0; }
  constexpr bool is_infinite() const { return v_ < 0; }
  /// Finite value; -1 for infinity.
  constexpr int value() const { return v_; }

  std::string to_string() const { return is_finite() ? std::to_string(v_) : "infinity"; }

  friend constexpr bool operator==(HIndex, HIndex) = default;

 private:
  constexpr explicit HIndex(int v) : v_(v) {}
  int v_ = -1;
};

enum class WideCase { BothNonspherical, AffineTimesSpherical };

/// Element of Omega(S). `a` and `b` commute and partition `subset`; for
/// BothNonspherical `a` is the first nonspherical Dynkin component, for
/// AffineTimesSpherical it is the affine component.
struct WideWitness {
  GenSubset subset;
  GenSubset a;
  GenSubset b;
  WideCase kind = WideCase::BothNonspherical;
};

/// Element of Psi(S): `a` minimal nonspherical, `k` a maximal spherical subset of perp(a).
struct SlabWitness {
  GenSubset subset;
  GenSubset a;
  GenSubset k;
};

struct LambdaLevel {
  /// Canonically sorted members of this level.
  std::vector<GenSubset> sets;
  /// Equivalence classes of this level (indices into `sets`), ordered by smallest index.
  std::vector<std::vector<int>> classes;
  /// For levels above 0: indices into the previous level's `classes` whose union is sets[k].
  std::vector<std::vector<int>> origin_classes;
};

struct LambdaAnalysis {
  GenSubset whole;
  std::vector<WideWitness> omega;
  std::vector<SlabWitness> psi;
  std::vector<LambdaLevel> levels;
  HIndex h;
  /// Index of the level that repeats itself, when h is infinite.
  std::optional<int> stabilized_at;

  bool is_slab(GenSubset t) const {
    for (const auto& s : psi)
      if (s.subset == t) return true;
    return false;
  }
  /// Members of the previous level feeding directly into levels[level].sets[k].
  std::vector<int> parents(int level, int k) const {
    std::vector<int> out;
    for (int c : levels[level].origin_classes[k])
      for (int i : levels[level - 1].classes[c]) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

inline std::optional<WideWitness> pre_wide(const Classifier& cls, GenSubset t) {
  if (t.size() < 3) return std::nullopt;
  std::vector<GenSubset> nonspherical;
  for (GenSubset c : components(cls.system(), t))
    if (!cls.is_spherical(c)) nonspherical.push_back(c);
  if (nonspherical.size() >= 2) return WideWitness{t, nonspherical[0], t - nonspherical[0], WideCase::BothNonspherical};
  if (nonspherical.size() == 1 && cls.is_irreducible_affine(nonspherical[0], 3)) {
    return WideWitness{t, nonspherical[0], t - nonspherical[0], WideCase::AffineTimesSpherical};
  }
  return std::nullopt;
}

/// Maximal nonempty spherical subsets of `within`, ascending by mask.
inline std::vector<GenSubset> maximal_spherical_subsets(const Classifier& cls, GenSubset within) {
  std::vector<GenSubset> kept;
  for (int k = within.size(); k >= 1; --k) {
    for_each_subset_of_size_within(within, k, [&](GenSubset t) {
      for (GenSubset big : kept)
        if (t.subset_of(big)) return;
      if (cls.is_spherical(t)) kept.push_back(t);
    });
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace detail

/// Omega(S): maximal subsets splitting as two commuting nonspherical factors, or as
/// (irreducible affine of rank >= 3) x spherical. Sorted by mask.
inline std::vector<WideWitness> wide_subsets(const Classifier& cls, const AnalysisOptions& opt = {}) {
  const CoxeterSystem& sys = cls.system();
  require_rank_at_most(sys.rank(), opt.max_rank, "wide subset enumeration");
  std::vector<WideWitness> kept;
  for (int k = sys.rank(); k >= 3; --k) {
    for_each_subset_of_size(sys.rank(), k, [&](GenSubset t) {
      for (const auto& w : kept)
        if (t.subset_of(w.subset)) return;
      if (auto w = detail::pre_wide(cls, t)) kept.push_back(*w);
    });
  }
  std::sort(kept.begin(), kept.end(), [](const WideWitness& x, const WideWitness& y) { return x.subset < y.subset; });
  return kept;
}

/// Psi(S) given Omega(S). Sorted by mask.
inline std::vector<SlabWitness> slab_subsets(const Classifier& cls, const std::vector<WideWitness>& omega,
                                             const AnalysisOptions& opt = {}) {
  const CoxeterSystem& sys = cls.system();
  require_rank_at_most(sys.rank(), opt.max_rank, "slab subset enumeration");
  std::vector<SlabWitness> candidates;
  for (GenSubset a : cls.enumerate_minimal_nonspherical(sys.all())) {
    const GenSubset p = perp(sys, a);
    if (p.empty()) continue;
    for (GenSubset k : detail::maximal_spherical_subsets(cls, p)) {
      const GenSubset t = a | k;
      bool inside_wide = false;
      for (const auto& w : omega)
        if (t.subset_of(w.subset)) inside_wide = true;
      if (!inside_wide) candidates.push_back({t, a, k});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const SlabWitness& x, const SlabWitness& y) {
    if (x.subset.size() != y.subset.size()) return x.subset.size() > y.subset.size();
    return x.subset < y.subset;
  });
  std::vector<SlabWitness> kept;
  for (const auto& c : candidates) {
    bool covered = false;
    for (const auto& k : kept)
      if (c.subset.subset_of(k.subset)) covered = true;
    if (!covered) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(), [](const SlabWitness& x, const SlabWitness& y) { return x.subset < y.subset; });
  return kept;
}

struct LambdaStep {
  std::vector<GenSubset> next;
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<int>> origin_classes;
};

/// One application of the Lambda construction: classes of the relation "chained by
/// nonspherical intersections" and their unions. `level` must be sorted and distinct.
inline LambdaStep lambda_step(const Classifier& cls, const std::vector<GenSubset>& level) {
  const int n = static_cast<int>(level.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!cls.is_spherical(level[i] & level[j])) {
        const int a = find(i);
        const int b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  LambdaStep out;
  std::map<int, int> class_of_root;
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    auto [it, inserted] = class_of_root.emplace(r, static_cast<int>(out.classes.size()));
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
  }
  std::map<GenSubset, std::vector<int>> by_union;
  for (int c = 0; c < static_cast<int>(out.classes.size()); ++c) {
    GenSubset u;
    for (int i : out.classes[c]) u = u | level[i];
    by_union[u].push_back(c);
  }
  for (auto& [u, cs] : by_union) {
    out.next.push_back(u);
    out.origin_classes.push_back(cs);
  }
  return out;
}

namespace detail {

/// Checks that no slab contains a wide subset, and that two level-0 elements of the
/// form (minimal nonspherical) x (spherical) meeting in a nonspherical set coincide.
inline void check_level_zero(const Classifier& cls, const std::vector<WideWitness>& omega,
                             const std::vector<SlabWitness>& psi) {
  for (const auto& s : psi)
    for (const auto& w : omega)
      if (w.subset.subset_of(s.subset)) throw std::logic_error("slab subset contains a wide subset");
  std::vector<GenSubset> product_form;
  for (const auto& s : psi) product_form.push_back(s.subset);
  for (const auto& w : omega)
    if (w.kind == WideCase::AffineTimesSpherical) product_form.push_back(w.subset);
  for (std::size_t i = 0; i < product_form.size(); ++i)
    for (std::size_t j = i + 1; j < product_form.size(); ++j)
      if (product_form[i] != product_form[j] && !cls.is_spherical(product_form[i] & product_form[j])) {
        throw std::logic_error("distinct level-0 product subsets meet in a nonspherical set");
      }
}

}  // namespace detail

/// Omega, Psi and the Lambda sequence up to the level containing S, or up to the
/// level that repeats. h is infinite whenever Omega is empty.
inline LambdaAnalysis lambda_sequence(const Classifier& cls, const AnalysisOptions& opt = {}) {
  const CoxeterSystem& sys = cls.system();
  require_rank_at_most(sys.rank(), opt.max_rank, "hypergraph index");
  LambdaAnalysis out;
  out.whole = sys.all();
  out.omega = wide_subsets(cls, opt);
  out.psi = slab_subsets(cls, out.omega, opt);
  detail::check_level_zero(cls, out.omega, out.psi);

  std::vector<GenSubset> level;
  for (const auto& w : out.omega) level.push_back(w.subset);
  for (const auto& s : out.psi) level.push_back(s.subset);
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());

  LambdaLevel current{level, {}, {}};
  for (int i = 0;; ++i) {
    LambdaStep step = lambda_step(cls, current.sets);
    current.classes = step.classes;
    const bool has_whole = std::find(current.sets.begin(), current.sets.end(), out.whole) != current.sets.end();
    out.levels.push_back(current);
    if (has_whole && !out.omega.empty()) {
      out.h = HIndex::finite(i);
      return out;
    }
    if (step.next == current.sets) {
      out.stabilized_at = i;
      out.h = HIndex::infinite();
      return out;
    }
    current = LambdaLevel{std::move(step.next), {}, std::move(step.origin_classes)};
  }
}

inline LambdaAnalysis lambda_sequence(const CoxeterSystem& sys, const AnalysisOptions& opt = {}) {
  Classifier cls(sys);
  return lambda_sequence(cls, opt);
}

inline HIndex hypergraph_index(const Classifier& cls, const AnalysisOptions& opt = {}) {
  return lambda_sequence(cls, opt).h;
}

inline HIndex hypergraph_index(const CoxeterSystem& sys, const AnalysisOptions& opt = {}) {
  Classifier cls(sys);
  return hypergraph_index(cls, opt);
}

/// Node of a principal subtree: a member of Lambda_level with the class feeding into it.
struct CertificateNode {
  int level = 0;
  GenSubset set;
  std::vector<CertificateNode> children;
};

/// The principal subtree rooted at S, descending through the first class whose
/// union is each node. Certifies strong thickness of order at most h.
inline std::optional<CertificateNode> thickness_certificate(const LambdaAnalysis& la) {
  if (!la.h.is_finite()) return std::nullopt;
  std::function<CertificateNode(int, int)> build = [&](int level, int k) {
    CertificateNode node{level, la.levels[level].sets[k], {}};
    if (level > 0) {
      const int c = la.levels[level].origin_classes[k].front();
      for (int i : la.levels[level - 1].classes[c]) node.children.push_back(build(level - 1, i));
    }
    return node;
  };
  const int h = la.h.value();
  const auto& top = la.levels[h].sets;
  const int k = static_cast<int>(std::find(top.begin(), top.end(), la.whole) - top.begin());
  return build(h, k);
}

/// Subsets S > T_1 > ... > T_h with h(T_i) = h - i. Each step picks, among the class
/// whose union is the current set, the first member not contained in any element of
/// a lower level. Empty when h = 0, nullopt when h is infinite.
inline std::optional<std::vector<GenSubset>> nested_chain(const Classifier& cls, const AnalysisOptions& opt = {}) {
  LambdaAnalysis la = lambda_sequence(cls, opt);
  if (!la.h.is_finite()) return std::nullopt;
  std::vector<GenSubset> chain;
  Subsystem current{cls.system(), {}};
  current.to_parent.resize(cls.rank());
  std::iota(current.to_parent.begin(), current.to_parent.end(), 0);

  while (la.h.value() >= 1) {
    const int h = la.h.value();
    const auto& top = la.levels[h].sets;
    const int k = static_cast<int>(std::find(top.begin(), top.end(), la.whole) - top.begin());
    const int c = la.levels[h].origin_classes[k].front();
    std::optional<GenSubset> pick;
    for (int i : la.levels[h - 1].classes[c]) {
      const GenSubset t = la.levels[h - 1].sets[i];
      bool lower = false;
      for (int lvl = 0; lvl < h - 1 && !lower; ++lvl)
        for (GenSubset u : la.levels[lvl].sets)
          if (t.subset_of(u)) {
            lower = true;
            break;
          }
      if (!lower) {
        pick = t;
        break;
      }
    }
    if (!pick) throw std::logic_error("no class member escapes the lower levels");
    Subsystem next = induced(current.system, *pick);
    for (int& idx : next.to_parent) idx = current.to_parent[idx];
    chain.push_back(next.lift(GenSubset::full(next.system.rank())));
    Classifier sub(next.system);
    la = lambda_sequence(sub, opt);
    if (!(la.h == HIndex::finite(h - 1))) throw std::logic_error("nested chain member has unexpected index");
    current = std::move(next);
  }
  return chain;
}

inline std::optional<std::vector<GenSubset>> nested_chain(const CoxeterSystem& sys, const AnalysisOptions& opt = {}) {
  Classifier cls(sys);
  return nested_chain(cls, opt);
}

/// Non-slab members of the stabilized level when h is infinite (empty when Omega is
/// empty, i.e. the group is hyperbolic); nullopt when h is finite.
inline std::optional<std::vector<GenSubset>> peripheral_structure(const LambdaAnalysis& la) {
  if (la.h.is_finite()) return std::nullopt;
  std::vector<GenSubset> out;
  if (la.omega.empty()) return out;
  for (GenSubset t : la.levels[*la.stabilized_at].sets)
    if (!la.is_slab(t)) out.push_back(t);
  return out;
}

struct RhViolation {
  std::string condition;  // "RH1", "RH2" or "RH3"
  std::vector<GenSubset> witness;
  std::string message;
};

struct RhVerdict {
  bool rh1 = true;
  bool rh2 = true;
  bool rh3 = true;
  std::vector<RhViolation> violations;  // at most one per condition

  bool pass() const { return rh1 && rh2 && rh3; }
};

/// Exhaustive check of the three conditions characterizing when W is hyperbolic
/// relative to the special subgroups on `peripherals`.
inline RhVerdict check_rh(const Classifier& cls, const std::vector<GenSubset>& peripherals,
                          const AnalysisOptions& opt = {}) {
  const CoxeterSystem& sys = cls.system();
  require_rank_at_most(sys.rank(), opt.max_rank, "relative hyperbolicity check");
  std::vector<GenSubset> family;
  for (GenSubset p : peripherals) {
    sys.check_subset(p);
    if (p == sys.all()) throw InputError("peripheral subset equals S");
    if (std::find(family.begin(), family.end(), p) == family.end()) family.push_back(p);
  }
  auto covered = [&](GenSubset t) {
    for (GenSubset p : family)
      if (t.subset_of(p)) return true;
    return false;
  };
  auto irreducible_nonspherical = [&](GenSubset t) {
    return t.size() >= 2 && is_connected(sys, t) && !cls.is_spherical(t);
  };

  RhVerdict v;
  std::vector<GenSubset> irreducible;
  for_each_subset(sys.all(), [&](GenSubset t) {
    if (irreducible_nonspherical(t)) irreducible.push_back(t);
  });

  for (GenSubset t : irreducible) {
    if (t.size() >= 3 && cls.is_irreducible_affine(t, 3) && !covered(t)) {
      v.rh1 = false;
      v.violations.push_back({"RH1", {t}, "irreducible affine subset " + format_subset(sys, t) + " lies in no peripheral"});
      break;
    }
  }
  if (v.rh1) {
    for (GenSubset t1 : irreducible) {
      const GenSubset p = perp(sys, t1);
      bool found = false;
      for_each_subset(p, [&](GenSubset t2) {
        if (found || t2 < t1 || !irreducible_nonspherical(t2)) return;
        if (!covered(t1 | t2)) {
          v.rh1 = false;
          v.violations.push_back({"RH1", {t1, t2},
                                  "commuting irreducible nonspherical subsets " + format_subset(sys, t1) + " and " +
                                      format_subset(sys, t2) + " lie in no common peripheral"});
          found = true;
        }
      });
      if (found) break;
    }
  }

  for (std::size_t i = 0; i < family.size() && v.rh2; ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!cls.is_spherical(family[i] & family[j])) {
        v.rh2 = false;
        v.violations.push_back({"RH2", {family[i], family[j]},
                                "peripherals " + format_subset(sys, family[i]) + " and " +
                                    format_subset(sys, family[j]) + " meet in a nonspherical set"});
        break;
      }

  for (GenSubset p : family) {
    for (GenSubset u : irreducible) {
      if (!u.subset_of(p)) continue;
      const GenSubset up = perp(sys, u);
      if (!up.subset_of(p)) {
        v.rh3 = false;
        v.violations.push_back({"RH3", {p, u},
                                "perp of " + format_subset(sys, u) + " is not contained in peripheral " +
                                    format_subset(sys, p)});
        break;
      }
    }
    if (!v.rh3) break;
  }
  return v;
}

/// Hyperbolicity by direct search for an irreducible affine subset of rank >= 3 or
/// a product of two infinite special subgroups.
inline bool is_hyperbolic(const Classifier& cls, const AnalysisOptions& opt = {}) {
  const CoxeterSystem& sys = cls.system();
  require_rank_at_most(sys.rank(), opt.max_rank, "hyperbolicity test");
  bool hyperbolic = true;
  for_each_subset(sys.all(), [&](GenSubset t) {
    if (!hyperbolic || t.empty()) return;
    if (t.size() >= 3 && cls.is_irreducible_affine(t, 3)) hyperbolic = false;
    else if (!cls.is_spherical(t) && !cls.is_spherical(perp(sys, t))) hyperbolic = false;
  });
  return hyperbolic;
}

enum class ClassTRule {
  IrreducibleAffine,  ///< base case (a)
  ProductOfTwo,       ///< base case (b)
  AddVertex,          ///< T = T0 + {s} with s-perp nonspherical
  Union,              ///< T = T1 u T2 with nonspherical intersection
};

inline std::string to_string(ClassTRule r) {
  switch (r) {
    case ClassTRule::IrreducibleAffine: return "irreducible-affine";
    case ClassTRule::ProductOfTwo: return "product";
    case ClassTRule::AddVertex: return "add-vertex";
    case ClassTRule::Union: return "union";
  }
  return "?";
}

struct DerivationStep {
  GenSubset set;
  ClassTRule rule = ClassTRule::IrreducibleAffine;
  GenSubset first;   ///< T0 for AddVertex, T1 for Union
  GenSubset second;  ///< T2 for Union
  int vertex = -1;   ///< s for AddVertex
};

struct ClassTResult {
  bool member = false;
  /// Derivation of S, children before parents. Empty when not a member.
  std::vector<DerivationStep> derivation;
};

/// Membership of the whole system in the inductively defined class of strongly
/// algebraically thick systems, by dynamic programming over all subsets.
inline ClassTResult in_class_T(const Classifier& cls) {
  const CoxeterSystem& sys = cls.system();
  if (sys.rank() > kClassTMaxRank) {
    throw UnsupportedError("class T membership is limited to rank " + std::to_string(kClassTMaxRank) + ", got rank " +
                           std::to_string(sys.rank()));
  }
  const int n = sys.rank();
  std::vector<std::optional<DerivationStep>> mark(std::size_t{1} << n);
  auto marked = [&](GenSubset t) { return mark[t.bits()].has_value(); };

  for (int size = 1; size <= n; ++size) {
    for_each_subset_of_size(n, size, [&](GenSubset t) {
      const auto comps = components(sys, t);
      if (comps.size() == 1 && t.size() >= 3 && cls.is_irreducible_affine(t, 3)) {
        mark[t.bits()] = DerivationStep{t, ClassTRule::IrreducibleAffine, {}, {}, -1};
        return;
      }
      if (comps.size() == 2 && !cls.is_spherical(comps[0]) && !cls.is_spherical(comps[1])) {
        mark[t.bits()] = DerivationStep{t, ClassTRule::ProductOfTwo, comps[0], comps[1], -1};
        return;
      }
      for (int s : t) {
        const GenSubset rest = t.without(s);
        if (marked(rest) && !cls.is_spherical(sys.commuting_with(s) & t)) {
          mark[t.bits()] = DerivationStep{t, ClassTRule::AddVertex, rest, {}, s};
          return;
        }
      }
      bool done = false;
      for_each_subset(t, [&](GenSubset x) {
        if (done || x == t || !marked(x)) return;
        const GenSubset outside = t - x;
        for_each_subset(x, [&](GenSubset z) {
          if (done || z == x || cls.is_spherical(z)) return;
          const GenSubset y = outside | z;
          if (marked(y)) {
            mark[t.bits()] = DerivationStep{t, ClassTRule::Union, x, y, -1};
            done = true;
          }
        });
      });
    });
  }

  ClassTResult out;
  out.member = marked(sys.all());
  if (!out.member) return out;
  std::vector<bool> emitted(mark.size(), false);
  std::function<void(GenSubset)> emit = [&](GenSubset t) {
    if (emitted[t.bits()]) return;
    emitted[t.bits()] = true;
    const DerivationStep& step = *mark[t.bits()];
    if (step.rule == ClassTRule::AddVertex) emit(step.first);
    if (step.rule == ClassTRule::Union) {
      emit(step.first);
      emit(step.second);
    }
    out.derivation.push_back(step);
  };
  emit(sys.all());
  return out;
}

enum class Divergence { Linear, Quadratic, PolyUpperBound, Exponential, NotApplicable };

inline std::string to_string(Divergence d) {
  switch (d) {
    case Divergence::Linear: return "linear";
    case Divergence::Quadratic: return "quadratic";
    case Divergence::PolyUpperBound: return "polynomial-upper-bound";
    case Divergence::Exponential: return "exponential";
    case Divergence::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct DivergenceReport {
  bool one_ended = false;
  Divergence classification = Divergence::NotApplicable;
  /// Degree d of the polynomial upper bound r^d (h + 1), for finite h.
  std::optional<int> polynomial_degree_bound;
  /// Strong thickness order bound h, for finite h.
  std::optional<int> thickness_order_upper_bound;
  /// Conjectured exact polynomial degree h + 1, reported only when 1 < h < infinity.
  std::optional<int> conjectural_exact_degree;
  bool relatively_hyperbolic = false;
};

inline DivergenceReport divergence_report(HIndex h, Ends e) {
  DivergenceReport r;
  r.one_ended = e == Ends::One;
  if (!r.one_ended) return r;
  if (h.is_infinite()) {
    r.classification = Divergence::Exponential;
    r.relatively_hyperbolic = true;
    return r;
  }
  const int v = h.value();
  r.polynomial_degree_bound = v + 1;
  r.thickness_order_upper_bound = v;
  if (v == 0) {
    r.classification = Divergence::Linear;
  } else if (v == 1) {
    r.classification = Divergence::Quadratic;
  } else {
    r.classification = Divergence::PolyUpperBound;
    r.conjectural_exact_degree = v + 1;
  }
  return r;
}

inline DivergenceReport divergence_report(const Classifier& cls, const AnalysisOptions& opt = {}) {
  const Ends e = ends(cls, opt.max_rank);
  if (e != Ends::One) return divergence_report(HIndex::infinite(), e);
  return divergence_report(hypergraph_index(cls, opt), e);
}

/// Linear divergence read off the Dynkin components, for 1-ended systems: at least
/// two infinite components, or exactly one which is irreducible affine of rank >= 3.
/// nullopt when the system is not 1-ended.
inline std::optional<bool> linear_divergence_structural(const Classifier& cls, const AnalysisOptions& opt = {}) {
  if (ends(cls, opt.max_rank) != Ends::One) return std::nullopt;
  std::vector<GenSubset> infinite;
  for (GenSubset c : components(cls.system(), cls.system().all()))
    if (!cls.is_spherical(c)) infinite.push_back(c);
  if (infinite.size() >= 2) return true;
  return infinite.size() == 1 && cls.is_irreducible_affine(infinite[0], 3);
}

}  // namespace coxhi
