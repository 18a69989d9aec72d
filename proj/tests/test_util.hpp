#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "coxhi/core.hpp"
#include "coxhi/families.hpp"
#include "coxhi/hindex.hpp"

namespace coxhi {

inline void PrintTo(HIndex h, std::ostream* os) { *os << h.to_string(); }
inline void PrintTo(GenSubset t, std::ostream* os) { *os << "0x" << std::hex << t.bits() << std::dec; }
inline void PrintTo(const Label& l, std::ostream* os) { *os << l.to_string(); }

}  // namespace coxhi

namespace coxhi::testing {

inline std::vector<Label> labels(std::initializer_list<int> finite, bool with_inf = true) {
  std::vector<Label> out;
  for (int m : finite) out.emplace_back(static_cast<std::uint32_t>(m));
  if (with_inf) out.push_back(Label::infinity());
  return out;
}

/// {2, 3, ..., 12, inf}
inline std::vector<Label> wide_alphabet() { return labels({2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}); }

/// Alphabet biased towards commuting pairs so that random systems have a mix of
/// hyperbolic, thick and relatively hyperbolic members.
inline std::vector<Label> mixed_alphabet() { return labels({2, 2, 2, 3, 3, 4, 5, 6, 7}); }

/// Seeded stream of sample systems with ranks drawn from [lo, hi].
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, int lo, int hi) : rng_(seed), lo_(lo), hi_(hi) {}

  int next_rank() { return lo_ + static_cast<int>(uniform_below(rng_, static_cast<std::uint64_t>(hi_ - lo_ + 1))); }
  std::uint64_t next_seed() { return rng_(); }

  CoxeterSystem system(const std::vector<Label>& alphabet) { return random_system(next_rank(), alphabet, next_seed()); }
  CoxeterSystem racg(double p) { return random_racg(next_rank(), p, next_seed()); }
  CoxeterSystem tree(const std::vector<Label>& alphabet) { return random_tree(next_rank(), alphabet, next_seed()); }

  /// Uniform random subset of a rank-r system.
  GenSubset subset(int r) { return r == 0 ? GenSubset() : GenSubset(rng_() & GenSubset::full(r).bits()); }

 private:
  std::mt19937_64 rng_;
  int lo_;
  int hi_;
};

}  // namespace coxhi::testing
