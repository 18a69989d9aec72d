#pragma once

// Independent checks for the test suite: the cosine (Gram) matrix signature and
// naive versions of the maximality filter and the Lambda step.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "coxhi/core.hpp"

namespace coxhi::oracles {

enum class GramVerdict { PositiveDefinite, PSDSingular, Indefinite };

struct GramSignature {
  GramVerdict verdict = GramVerdict::PositiveDefinite;
  double min_eigenvalue = 0.0;
  double second_eigenvalue = 0.0;  // second smallest; equals the smallest for |T| = 1
  double tolerance = 0.0;
};

inline Eigen::MatrixXd gram_matrix(const CoxeterSystem& sys, GenSubset t) {
  const auto idx = t.members();
  const int n = static_cast<int>(idx.size());
  Eigen::MatrixXd g(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Label m = sys.label(idx[a], idx[b]);
      if (a == b) g(a, b) = 1.0;
      else if (m.is_infinite()) g(a, b) = -1.0;
      else g(a, b) = -std::cos(std::numbers::pi / static_cast<double>(m.value()));
    }
  return g;
}

/// PSDSingular means the smallest eigenvalue is zero within `tol` and every other
/// eigenvalue is positive, i.e. a one-dimensional kernel.
inline GramSignature gram_signature(const CoxeterSystem& sys, GenSubset t, double tol = 1e-9) {
  if (!(tol > 0.0)) throw InputError("gram tolerance must be positive");
  sys.check_subset(t);
  if (t.empty()) throw InputError("gram signature of the empty subset");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram_matrix(sys, t), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  GramSignature s;
  s.tolerance = tol;
  s.min_eigenvalue = ev(0);
  s.second_eigenvalue = ev.size() > 1 ? ev(1) : ev(0);
  if (s.min_eigenvalue > tol) {
    s.verdict = GramVerdict::PositiveDefinite;
  } else if (std::abs(s.min_eigenvalue) <= tol && (ev.size() == 1 || s.second_eigenvalue > tol)) {
    s.verdict = GramVerdict::PSDSingular;
  } else {
    s.verdict = GramVerdict::Indefinite;
  }
  return s;
}

/// Elements not properly contained in another element, deduplicated, sorted.
inline std::vector<GenSubset> naive_maximal(const std::vector<GenSubset>& collection) {
  std::vector<GenSubset> out;
  for (GenSubset x : collection) {
    bool dominated = false;
    for (GenSubset y : collection)
      if (x.proper_subset_of(y)) dominated = true;
    if (!dominated) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Lambda step by repeatedly merging any two current unions that meet in a
/// nonspherical set, until nothing merges.
inline std::vector<GenSubset> naive_lambda_step(const std::vector<GenSubset>& level,
                                                const std::function<bool(GenSubset)>& spherical) {
  std::vector<std::vector<GenSubset>> groups;
  for (GenSubset x : level) groups.push_back({x});
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < groups.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < groups.size() && !merged; ++j)
        for (GenSubset x : groups[i]) {
          for (GenSubset y : groups[j])
            if (!spherical(x & y)) {
              merged = true;
              break;
            }
          if (merged) {
            groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
            groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
            break;
          }
        }
  }
  std::vector<GenSubset> out;
  for (const auto& g : groups) {
    GenSubset u;
    for (GenSubset x : g) u = u | x;
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace coxhi::oracles
