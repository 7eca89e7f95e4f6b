#include "maxent/maxprob.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"

namespace maxent {

std::int64_t TypeClass::total() const noexcept {
  std::int64_t n = 0;
  for (std::int64_t c : counts) n += c;
  return n;
}

Pmf TypeClass::frequencies() const {
  const double n = static_cast<double>(total());
  std::vector<double> freq(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    freq[i] = static_cast<double>(counts[i]) / n;
  return Pmf(freq);
}

double log_multiplicity(const std::vector<std::int64_t>& counts) {
  std::int64_t n = 0;
  for (std::int64_t c : counts) {
    if (c < 0) throw InvalidInput("counts must be nonnegative");
    n += c;
  }
  if (n < 1) throw InvalidInput("counts must sum to at least 1");
  // sorted accumulation keeps permuted count vectors bitwise identical
  std::vector<std::int64_t> sorted = counts;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double lm = std::lgamma(static_cast<double>(n) + 1.0);
  for (std::int64_t c : sorted) lm -= std::lgamma(static_cast<double>(c) + 1.0);
  return lm;
}

std::int64_t composition_count(std::int64_t n, int m, std::int64_t cap) {
  if (n < 1) throw InvalidInput("N must be >= 1");
  if (m < 1) throw InvalidInput("m must be >= 1");
  if (cap < 1) throw InvalidInput("enumeration cap must be >= 1");
  // binomial(n + m - 1, m - 1) as the exact prefix products C(n + i, i)
  unsigned __int128 count = 1;
  for (int i = 1; i <= m - 1; ++i) {
    if (count > static_cast<unsigned __int128>(cap))
      throw EnumerationTooLarge("composition count exceeds enumeration cap");
    count = count *
            (static_cast<unsigned __int128>(n) + static_cast<unsigned __int128>(i)) /
            static_cast<unsigned __int128>(i);
  }
  if (count > static_cast<unsigned __int128>(cap))
    throw EnumerationTooLarge("composition count exceeds enumeration cap");
  return static_cast<std::int64_t>(count);
}

TypeClassEnumerator::TypeClassEnumerator(std::int64_t n, int m,
                                         std::int64_t cap) {
  composition_count(n, m, cap);  // validates arguments and the cap
  counts_.assign(static_cast<std::size_t>(m), 0);
  counts_[0] = n;
}

std::optional<TypeClass> TypeClassEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_) {
    // successor in lexicographically decreasing order: move one unit from
    // the rightmost positive entry before the last slot, park the tail
    const std::size_t m = counts_.size();
    std::size_t i = m - 1;
    bool found = false;
    for (std::size_t j = m - 1; j-- > 0;) {
      if (counts_[j] > 0) {
        i = j;
        found = true;
        break;
      }
    }
    if (!found) {
      done_ = true;
      return std::nullopt;
    }
    const std::int64_t tail = counts_[m - 1];
    if (i + 1 < m - 1) counts_[m - 1] = 0;
    counts_[i] -= 1;
    counts_[i + 1] = tail + 1;
    for (std::size_t j = i + 2; j < m - 1; ++j) counts_[j] = 0;
  }
  started_ = true;
  return TypeClass{counts_, log_multiplicity(counts_)};
}

double default_coherence_window(const Potential& u, std::int64_t n) {
  if (n < 1) throw InvalidInput("N must be >= 1");
  return (u.max() - u.min()) / (2.0 * static_cast<double>(n));
}

TypeClass most_probable_coherent_type(std::int64_t n, const Potential& u,
                                      double c, double delta,
                                      std::int64_t cap) {
  if (!std::isfinite(c)) throw InvalidInput("target mean must be finite");
  if (!std::isfinite(delta) || delta < 0.0)
    throw InvalidInput("coherence window must be nonnegative");

  TypeClassEnumerator types(n, static_cast<int>(u.size()), cap);
  const double inv_n = 1.0 / static_cast<double>(n);

  bool found = false;
  TypeClass best{{}, 0.0};
  while (auto t = types.next()) {
    double mean = 0.0;
    for (std::size_t i = 0; i < t->counts.size(); ++i)
      mean += u[i] * static_cast<double>(t->counts[i]);
    mean *= inv_n;
    if (std::abs(mean - c) > delta) continue;
    if (!found || t->log_multiplicity > best.log_multiplicity ||
        (t->log_multiplicity == best.log_multiplicity &&
         t->counts < best.counts)) {
      best = std::move(*t);
      found = true;
    }
  }
  if (!found)
    throw NoCoherentType("no type class lies inside the coherence window");
  return best;
}

TypeClass most_probable_coherent_type(std::int64_t n, const Potential& u,
                                      double c, std::int64_t cap) {
  return most_probable_coherent_type(n, u, c, default_coherence_window(u, n),
                                     cap);
}

}  // namespace maxent
