#include "maxent/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "detail.hpp"

namespace maxent {

namespace detail {

std::vector<double> dist_from_scores(const std::vector<double>& scores) {
  const double smin = *std::min_element(scores.begin(), scores.end());
  std::vector<double> p(scores.size());
  double z = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    p[i] = std::exp(-(scores[i] - smin));
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

double log_sum_exp_neg(const std::vector<double>& scores) {
  const double smin = *std::min_element(scores.begin(), scores.end());
  double z = 0.0;
  for (double s : scores) z += std::exp(-(s - smin));
  return -smin + std::log(z);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace detail

// ---- types ----------------------------------------------------------------

Potential::Potential(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidInput("potential must have length >= 1");
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidInput("potential entries must be finite");
  }
}

double Potential::min() const noexcept {
  return *std::min_element(values_.begin(), values_.end());
}

double Potential::max() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

bool Potential::is_constant() const noexcept { return min() == max(); }

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidInput("pmf must have length >= 1");
  double sum = 0.0;
  for (double v : probs_) {
    if (!std::isfinite(v)) throw InvalidInput("pmf entries must be finite");
    if (v < 0.0) throw InvalidInput("pmf entries must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidInput("pmf entries must sum to 1 within 1e-9");
  for (double& v : probs_) v /= sum;
}

Sample::Sample(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw InvalidInput("sample must have length >= 1");
  for (std::int64_t c : counts_) {
    if (c < 0) throw InvalidInput("sample counts must be nonnegative");
    total_ += c;
  }
  if (total_ < 1) throw InvalidInput("sample must contain at least one count");
}

Pmf Sample::frequencies() const {
  std::vector<double> freq(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i)
    freq[i] = static_cast<double>(counts_[i]) / static_cast<double>(total_);
  return Pmf(freq);
}

ConstraintSystem::ConstraintSystem(std::vector<std::vector<double>> rows,
                                   std::vector<double> target)
    : rows_(std::move(rows)), target_(std::move(target)) {
  if (rows_.empty()) throw InvalidInput("constraint system needs J >= 1 rows");
  const std::size_t m = rows_[0].size();
  if (m == 0) throw InvalidInput("constraint rows must have length >= 1");
  for (const auto& row : rows_) {
    if (row.size() != m)
      throw DimensionMismatch("all rows of X must have equal length");
    for (double v : row) {
      if (!std::isfinite(v)) throw InvalidInput("X entries must be finite");
    }
  }
  if (target_.size() != rows_.size())
    throw DimensionMismatch("y must have one entry per row of X");
  for (double v : target_) {
    if (!std::isfinite(v)) throw InvalidInput("y entries must be finite");
  }
}

bool ConstraintSystem::row_is_constant(std::size_t j) const {
  const auto& row = rows_[j];
  auto [lo, hi] = std::minmax_element(row.begin(), row.end());
  return *lo == *hi;
}

// ---- operations -----------------------------------------------------------

Pmf dist(const Potential& u) { return Pmf(detail::dist_from_scores(u.values())); }

Potential shift(const Potential& u, double c) {
  if (!std::isfinite(c)) throw InvalidInput("shift constant must be finite");
  std::vector<double> v = u.values();
  for (double& x : v) x += c;
  return Potential(std::move(v));
}

Potential scale(const Potential& u, double k) {
  if (!std::isfinite(k)) throw InvalidInput("scale factor must be finite");
  std::vector<double> v = u.values();
  for (double& x : v) x *= k;
  return Potential(std::move(v));
}

double mean_value(const Potential& u, const Pmf& p) {
  if (u.size() != p.size())
    throw DimensionMismatch("potential and pmf must have equal length");
  return detail::dot(u.values(), p.probs());
}

double coherence(const Potential& u, const Pmf& p, const Pmf& q) {
  return mean_value(u, p) - mean_value(u, q);
}

double entropy_of_potential(const Potential& u) {
  return mean_value(u, dist(u));
}

double shannon_entropy(const Pmf& p) {
  double h = 0.0;
  for (double v : p.probs()) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double log_partition(const Potential& u) {
  return detail::log_sum_exp_neg(u.values());
}

double log_likelihood(const Pmf& r, const Pmf& p) {
  if (r.size() != p.size())
    throw DimensionMismatch("frequency and pmf vectors must have equal length");
  double ll = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] > 0.0) {
      if (p[i] == 0.0)
        throw SupportMismatch("pmf must be positive wherever frequencies are");
      ll += r[i] * std::log(p[i]);
    }
  }
  return ll;
}

}  // namespace maxent
