#pragma once

#include "maxent/types.hpp"

// Algebra of potentials and pmfs. Every function here is a pure function of
// its value arguments and is safe to call concurrently.

namespace maxent {

// p_i = exp(-u_i) / sum_j exp(-u_j). The minimum entry is subtracted before
// exponentiating, so extreme magnitudes cannot overflow; the result is
// unchanged because dist(u + C) = dist(u).
Pmf dist(const Potential& u);

// u + C elementwise. dist(shift(u, C)) = dist(u).
Potential shift(const Potential& u, double c);

// k * u elementwise (a potential collinear with u).
Potential scale(const Potential& u, double k);

// sum_i u_i p_i. Always lies in [min(u), max(u)].
double mean_value(const Potential& u, const Pmf& p);

// coher_u(p, q) = u.p - u.q. Zero means p and q share the mean of u
// (maximal coherence); antisymmetric in (p, q).
double coherence(const Potential& u, const Pmf& p, const Pmf& q);

// ent(u) = u . dist(u), the mean of u under its own distribution. Not
// gauge-free: ent(u + C) = ent(u) + C, while dist is shift-invariant. It
// differs from the Shannon entropy of dist(u) by log_partition(u).
double entropy_of_potential(const Potential& u);

// -sum_i p_i ln p_i in nats, with 0 ln 0 = 0. Lies in [0, ln m].
double shannon_entropy(const Pmf& p);

// ln sum_i exp(-u_i), evaluated stably. Identity:
//   shannon_entropy(dist(u)) = entropy_of_potential(u) + log_partition(u).
double log_partition(const Potential& u);

// Per-observation multinomial log-likelihood sum_{i: r_i > 0} r_i ln p_i.
// Bounded above by -shannon_entropy(r), with equality iff p = r on the
// support of r. Throws SupportMismatch if some r_i > 0 has p_i = 0.
double log_likelihood(const Pmf& r, const Pmf& p);

}  // namespace maxent
