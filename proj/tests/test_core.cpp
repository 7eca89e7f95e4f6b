#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "maxent/core.hpp"
#include "test_util.hpp"

using namespace maxent;

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

// High-precision reference values (40-digit scalar arithmetic, rounded to
// nearest double).
constexpr double kDist1000Hi = 0.7310585786300049;    // e/(1+e)
constexpr double kDist1000Lo = 0.2689414213699951;    // 1/(1+e)
constexpr double kEnt01 = 0.2689414213699951;         // 1/(1+e)
constexpr double kH23 = 0.6365141682948128;           // ln3 - (2/3) ln2
constexpr double kCoher012 = 0.2752103826044414;      // 0.7 - u.dist(u)
constexpr double kLoglik012 = -1.1076059644443803;    // r . ln dist([0,1,2])
}  // namespace

TEST_CASE("dist: uniform, two-point and shifted extremes") {
  const Pmf uniform = dist(Potential({0.0, 0.0, 0.0}));
  for (double p : uniform.probs()) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const Pmf two = dist(Potential({0.0, std::log(2.0)}));
  CHECK(std::abs(two[0] - 2.0 / 3.0) <= 1e-15);
  CHECK(std::abs(two[1] - 1.0 / 3.0) <= 1e-15);

  // would overflow without the min-shift
  const Pmf big = dist(Potential({1000.0, 1001.0}));
  CHECK(std::abs(big[0] - kDist1000Hi) <= 1e-15);
  CHECK(std::abs(big[1] - kDist1000Lo) <= 1e-15);

  for (double p : big.probs()) CHECK(p > 0.0);
  double sum = 0.0;
  for (double p : big.probs()) sum += p;
  CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("dist rejects non-finite input") {
  CHECK_THROWS_AS(Potential({0.0, kNan}), InvalidInput);
  CHECK_THROWS_AS(Potential({kInf, 0.0}), InvalidInput);
  CHECK_THROWS_AS(Potential({}), InvalidInput);
}

TEST_CASE("shift: identity, constant offset, invariance of dist") {
  const Potential u({0.0, 1.0});
  const Potential same = shift(u, 0.0);
  CHECK(same.values() == u.values());

  const Potential moved = shift(u, 5.0);
  CHECK(moved.values() == std::vector<double>{5.0, 6.0});
  CHECK(testutil::linf(dist(moved).probs(), dist(u).probs()) <= 1e-12);

  const Potential w = shift(Potential({3.0, 7.0, -2.0}), -3.0);
  CHECK(w.values() == std::vector<double>{0.0, 4.0, -5.0});
  CHECK(testutil::linf(dist(w).probs(), dist(Potential({3.0, 7.0, -2.0})).probs()) <= 1e-12);

  CHECK_THROWS_AS(shift(u, kNan), InvalidInput);
  CHECK_THROWS_AS(shift(u, kInf), InvalidInput);
}

TEST_CASE("mean_value examples and bounds") {
  CHECK(std::abs(mean_value(Potential({0.0, 1.0, 2.0}),
                            Pmf({1.0 / 3, 1.0 / 3, 1.0 / 3})) -
                 1.0) <= 1e-15);
  CHECK(std::abs(mean_value(Potential({5.0, 5.0, 5.0}), Pmf({0.2, 0.3, 0.5})) -
                 5.0) <= 1e-14);
  CHECK(mean_value(Potential({0.0, 1.0}), Pmf({0.25, 0.75})) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(mean_value(Potential({0.0, 1.0}), Pmf({1.0})),
                  DimensionMismatch);
}

TEST_CASE("coherence: zero on equal pmfs, sign, high-precision value") {
  const Potential u({0.0, 1.0});
  const Pmf p({0.3, 0.7});
  CHECK(coherence(u, p, p) == 0.0);
  CHECK(coherence(u, Pmf({1.0, 0.0}), Pmf({0.0, 1.0})) == doctest::Approx(-1.0));

  const Potential u3({0.0, 1.0, 2.0});
  CHECK(std::abs(coherence(u3, Pmf({0.5, 0.3, 0.2}), dist(u3)) - kCoher012) <=
        1e-14);
  CHECK_THROWS_AS(coherence(u, p, Pmf({1.0})), DimensionMismatch);
}

TEST_CASE("coherence antisymmetry is exact") {
  std::mt19937 rng(7001);
  for (int t = 0; t < 100; ++t) {
    const Potential u(testutil::random_potential_values(rng, 4, -5.0, 5.0));
    const Pmf p(testutil::random_dirichlet(rng, 4));
    const Pmf q(testutil::random_dirichlet(rng, 4));
    CHECK(coherence(u, p, q) == -coherence(u, q, p));
  }
}

TEST_CASE("entropy_of_potential examples") {
  CHECK(entropy_of_potential(Potential({0.0, 0.0, 0.0})) == 0.0);
  CHECK(std::abs(entropy_of_potential(Potential({5.0, 5.0, 5.0})) - 5.0) <= 1e-14);
  CHECK(std::abs(entropy_of_potential(Potential({0.0, 1.0})) - kEnt01) <= 1e-15);
}

TEST_CASE("entropy_of_potential is gauge-covariant, not gauge-free") {
  std::mt19937 rng(7002);
  std::uniform_real_distribution<double> offset(-100.0, 100.0);
  for (int t = 0; t < 200; ++t) {
    const Potential u(testutil::random_potential_values(rng, 5, -10.0, 10.0));
    const double c = offset(rng);
    CHECK(std::abs(entropy_of_potential(shift(u, c)) - entropy_of_potential(u) -
                   c) <= 1e-10);
  }
}

TEST_CASE("shannon_entropy examples and range") {
  CHECK(shannon_entropy(Pmf({1.0, 0.0})) == 0.0);
  CHECK(std::abs(shannon_entropy(Pmf({0.25, 0.25, 0.25, 0.25})) -
                 std::log(4.0)) <= 1e-15);
  CHECK(std::abs(shannon_entropy(Pmf({2.0 / 3, 1.0 / 3})) - kH23) <= 1e-15);

  std::mt19937 rng(7003);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 7);
    const double h = shannon_entropy(Pmf(testutil::random_dirichlet(rng, m)));
    CHECK(h >= 0.0);
    CHECK(h <= std::log(static_cast<double>(m)) + 1e-12);
  }
}

TEST_CASE("entropy identity links shannon entropy, ent and the log partition") {
  std::mt19937 rng(7004);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 9);
    const Potential u(testutil::random_potential_values(rng, m, -10.0, 10.0));
    const double gap = shannon_entropy(dist(u)) - entropy_of_potential(u) -
                       log_partition(u);
    CHECK(std::abs(gap) <= 1e-10);
  }
}

TEST_CASE("log_likelihood examples, support errors, Gibbs bound") {
  const Pmf r2({0.5, 0.5});
  CHECK(std::abs(log_likelihood(r2, r2) + std::log(2.0)) <= 1e-15);
  CHECK(std::abs(log_likelihood(Pmf({1.0, 0.0}), Pmf({0.7, 0.3})) -
                 std::log(0.7)) <= 1e-15);

  const Potential u3({0.0, 1.0, 2.0});
  CHECK(std::abs(log_likelihood(Pmf({0.5, 0.3, 0.2}), dist(u3)) - kLoglik012) <=
        1e-14);

  CHECK_THROWS_AS(log_likelihood(Pmf({0.5, 0.5}), Pmf({1.0, 0.0})),
                  SupportMismatch);
  // zero-frequency outcomes are skipped even when p is zero there
  CHECK(log_likelihood(Pmf({0.0, 1.0}), Pmf({0.0, 1.0})) == 0.0);
  CHECK_THROWS_AS(log_likelihood(Pmf({0.5, 0.5}), Pmf({1.0})),
                  DimensionMismatch);

  std::mt19937 rng(7005);
  for (int t = 0; t < 1000; ++t) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const Pmf r(testutil::random_dirichlet(rng, m));
    const Pmf p(testutil::random_dirichlet(rng, m));
    CHECK(log_likelihood(r, p) <= log_likelihood(r, r) + 1e-12);
    CHECK(log_likelihood(r, r) <= -shannon_entropy(r) + 1e-12);
  }
}

TEST_CASE("shift invariance of dist under random constants") {
  std::mt19937 rng(7006);
  std::uniform_real_distribution<double> offset(-100.0, 100.0);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 9);
    const Potential u(testutil::random_potential_values(rng, m, -10.0, 10.0));
    CHECK(testutil::linf(dist(u).probs(), dist(shift(u, offset(rng))).probs()) <=
          1e-12);
  }
}

TEST_CASE("collinear potentials compose: dist(lambda (k u)) = dist((lambda k) u)") {
  std::mt19937 rng(7007);
  std::uniform_real_distribution<double> factor(-3.0, 3.0);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const Potential u(testutil::random_potential_values(rng, m, -5.0, 5.0));
    const double k = factor(rng);
    const double lambda = factor(rng);
    CHECK(testutil::linf(dist(scale(scale(u, k), lambda)).probs(),
                         dist(scale(u, lambda * k)).probs()) <= 1e-12);
  }
}

TEST_CASE("Pmf validation: renormalization window and rejections") {
  const Pmf nudged({0.5, 0.5 + 5e-10});
  double sum = 0.0;
  for (double p : nudged.probs()) sum += p;
  CHECK(std::abs(sum - 1.0) <= 1e-15);

  CHECK_THROWS_AS(Pmf({0.5, 0.6}), InvalidInput);         // off by 0.1
  CHECK_THROWS_AS(Pmf({0.5, 0.5 + 1e-8}), InvalidInput);  // outside 1e-9
  CHECK_THROWS_AS(Pmf({-0.1, 1.1}), InvalidInput);
  CHECK_THROWS_AS(Pmf({0.5, kNan}), InvalidInput);
  CHECK_THROWS_AS(Pmf({}), InvalidInput);
}

TEST_CASE("Sample: frequencies and validation") {
  const Sample s({2, 0, 1});
  CHECK(s.total() == 3);
  const Pmf f = s.frequencies();
  CHECK(std::abs(f[0] - 2.0 / 3.0) <= 1e-15);
  CHECK(f[1] == 0.0);
  CHECK(std::abs(f[2] - 1.0 / 3.0) <= 1e-15);

  CHECK_THROWS_AS(Sample({0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(Sample({2, -1}), InvalidInput);
  CHECK_THROWS_AS(Sample({}), InvalidInput);
}

TEST_CASE("ConstraintSystem validation") {
  const ConstraintSystem sys({{0.0, 1.0}, {1.0, 0.0}}, {0.4, 0.6});
  CHECK(sys.num_constraints() == 2);
  CHECK(sys.num_outcomes() == 2);
  CHECK_FALSE(sys.row_is_constant(0));
  CHECK(ConstraintSystem({{2.0, 2.0}}, {2.0}).row_is_constant(0));

  CHECK_THROWS_AS(ConstraintSystem({{0.0, 1.0}, {1.0}}, {0.4, 0.6}),
                  DimensionMismatch);
  CHECK_THROWS_AS(ConstraintSystem({{0.0, 1.0}}, {0.4, 0.6}),
                  DimensionMismatch);
  CHECK_THROWS_AS(ConstraintSystem({{0.0, kNan}}, {0.4}), InvalidInput);
  CHECK_THROWS_AS(ConstraintSystem({}, {}), InvalidInput);
}

TEST_CASE("mean_value stays inside the potential range") {
  std::mt19937 rng(7008);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 6);
    const Potential u(testutil::random_potential_values(rng, m, -5.0, 5.0));
    const Pmf p(testutil::random_dirichlet(rng, m));
    const double v = mean_value(u, p);
    CHECK(v >= u.min() - 1e-12);
    CHECK(v <= u.max() + 1e-12);
  }
}
