#pragma once

#include <cstdint>
#include <vector>

#include "maxent/errors.hpp"

namespace maxent {

// Real m-vector u describing a system of events up to an additive constant.
// The induced distribution is dist(u), with p_i proportional to exp(-u_i),
// so u and u + C describe the same system for any constant C.
class Potential {
 public:
  // Entries must be finite and m >= 1.
  explicit Potential(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  double min() const noexcept;
  double max() const noexcept;

  // All entries equal. Such a potential induces the uniform pmf for every
  // multiplier, which degenerates the scalar solve.
  bool is_constant() const noexcept;

 private:
  std::vector<double> values_;
};

// Point of the m-simplex. Entries must be nonnegative and sum to 1 within
// 1e-9; accepted inputs are renormalized, so the stored sum is 1 to machine
// precision (well within the 1e-12 contract).
class Pmf {
 public:
  explicit Pmf(std::vector<double> probs);

  const std::vector<double>& probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

// Observed outcome counts with total N >= 1.
class Sample {
 public:
  // Counts must be nonnegative with at least one positive entry.
  explicit Sample(std::vector<std::int64_t> counts);

  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
  std::int64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return counts_.size(); }

  // Empirical frequencies r = counts / N.
  Pmf frequencies() const;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

// The inverse problem y = Xp: J potentials stacked as the rows of X, and the
// J-vector y of prescribed mean values. Constant rows are legal but pin their
// component of y to a single value (see solve_inverse).
class ConstraintSystem {
 public:
  ConstraintSystem(std::vector<std::vector<double>> rows,
                   std::vector<double> target);

  std::size_t num_constraints() const noexcept { return rows_.size(); }  // J
  std::size_t num_outcomes() const noexcept { return rows_[0].size(); }  // m

  const std::vector<std::vector<double>>& rows() const noexcept {
    return rows_;
  }
  const std::vector<double>& target() const noexcept { return target_; }

  bool row_is_constant(std::size_t j) const;

 private:
  std::vector<std::vector<double>> rows_;
  std::vector<double> target_;
};

}  // namespace maxent
