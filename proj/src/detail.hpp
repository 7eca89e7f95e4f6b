#pragma once

#include <vector>

// Shared numeric kernels, internal to the library.

namespace maxent::detail {

// p_i proportional to exp(-s_i), stabilized by subtracting min(s) first.
std::vector<double> dist_from_scores(const std::vector<double>& scores);

// ln sum_i exp(-s_i).
double log_sum_exp_neg(const std::vector<double>& scores);

double dot(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace maxent::detail
