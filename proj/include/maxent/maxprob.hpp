#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "maxent/types.hpp"

// Finite-N demonstration that the most probable type class compatible with a
// mean-value constraint concentrates on the maximum-entropy distribution.

namespace maxent {

inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

// A multinomial type class: the set of length-N samples sharing this count
// vector. Its size is the multinomial coefficient N! / prod_i counts_i!.
struct TypeClass {
  std::vector<std::int64_t> counts;
  double log_multiplicity = 0.0;

  std::int64_t total() const noexcept;
  Pmf frequencies() const;
};

// ln N! - sum_i ln(counts_i!), via lgamma. The sum is accumulated over the
// sorted counts so permuted count vectors give bitwise-equal values (exact
// ties stay exact, which the lexicographic tie-break relies on).
double log_multiplicity(const std::vector<std::int64_t>& counts);

// binomial(N + m - 1, m - 1), the number of compositions of N into m
// nonnegative parts. Throws EnumerationTooLarge when it exceeds cap.
std::int64_t composition_count(std::int64_t n, int m,
                               std::int64_t cap = kDefaultEnumerationCap);

// Streams every composition of N into m nonnegative parts exactly once, in
// lexicographically decreasing order: (2, 2) yields [2,0], [1,1], [0,2].
class TypeClassEnumerator {
 public:
  TypeClassEnumerator(std::int64_t n, int m,
                      std::int64_t cap = kDefaultEnumerationCap);

  std::optional<TypeClass> next();

 private:
  std::vector<std::int64_t> counts_;
  bool started_ = false;
  bool done_ = false;
};

// Half the lattice resolution of u.(counts/N): the default coherence window
// (max u - min u) / (2N).
double default_coherence_window(const Potential& u, std::int64_t n);

// Among all type classes of size N whose frequencies t/N satisfy
// |u.(t/N) - c| <= delta, returns the one of maximal multiplicity; exact
// ties are broken toward the lexicographically smallest count vector.
// Throws NoCoherentType when the window is empty.
TypeClass most_probable_coherent_type(std::int64_t n, const Potential& u,
                                      double c, double delta,
                                      std::int64_t cap = kDefaultEnumerationCap);

// Same, with delta = default_coherence_window(u, n).
TypeClass most_probable_coherent_type(std::int64_t n, const Potential& u,
                                      double c,
                                      std::int64_t cap = kDefaultEnumerationCap);

}  // namespace maxent
