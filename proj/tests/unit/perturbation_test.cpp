#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pniep/error.hpp"
#include "pniep/perturbation.hpp"
#include "pniep/realizability.hpp"

namespace pniep {
namespace {

using C = Complex;

// Moment conditions evaluated directly from oracle power sums.
bool four_conditions(const std::vector<C>& v) {
  const auto s = test::power_sums(v, 4);
  return s[1] >= 0 && s[2] >= 0 && 4 * s[3] >= s[1] * s[1];
}

bool single_perron_conditions(const std::vector<C>& v) {
  const auto s = test::power_sums(v, 2);
  const double n = static_cast<double>(v.size());
  return s[0] >= 0 && s[1] >= 0 && n * s[1] >= s[0] * s[0];
}

double s2_of(const Spectrum& spec) {
  return test::power_sums({spec.begin(), spec.end()}, 2)[1];
}

// True when x is within a relative gap of any constraint end point.
bool near_edge(const FeasibleSet& set, double x, double squared_x, double gap) {
  for (const auto& c : set.constraints) {
    const double probe = c.units == "|d|" ? x : squared_x;
    for (double v : {c.value, c.value2})
      if (std::abs(probe - v) <= gap * (1.0 + std::abs(v))) return true;
  }
  return false;
}

TEST(Bounds, Examples) {
  EXPECT_NEAR(four_imag_feasible(4, -2, -1).upper(), std::sqrt(11.0), 1e-12);
  EXPECT_EQ(four_zero_real_bound(3).upper(), 3.0);
  EXPECT_NEAR(five_two_pair_bound(4, -1, -1).upper(), 10.0, 1e-12);
  EXPECT_NEAR(five_one_pair_bound(8, -3, -1, -1).upper(), std::sqrt(188.0 / 5), 1e-12);
  EXPECT_NEAR(imag_budget_given_reals(6, -1, -2).upper(), 23.0, 1e-12);
}

TEST(Bounds, FourElementSetMatchesConditions) {
  test::Rng rng(21);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const double a = rng.uniform(0.5, 6), b = rng.uniform(-a, a);
    const double c = -(a + b) / 2;
    const FeasibleSet set = four_imag_feasible(a, b, c);
    const double d = rng.uniform(0, 2 * a);
    if (near_edge(set, d, d * d, 1e-6)) continue;
    const bool want = four_conditions({a, b, C(c, d), C(c, -d)});
    EXPECT_EQ(set.contains(d), want) << a << " " << b << " d=" << d;
    ++checked;
  }
  EXPECT_GT(checked, 1500);
}

TEST(Bounds, FourElementUpperEndIsTight) {
  test::Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = rng.uniform(0.5, 6), b = rng.uniform(-a, a);
    const double c = -(a + b) / 2;
    const FeasibleSet set = four_imag_feasible(a, b, c);
    if (set.empty()) continue;
    const double d = set.upper();
    const Spectrum at({a, b, C(c, d), C(c, -d)});
    EXPECT_TRUE(check_n4_trace_zero(at).realizable) << a << " " << b;
    const double beyond = d * (1 + 1e-6);
    EXPECT_FALSE(four_conditions({a, b, C(c, beyond), C(c, -beyond)})) << a << " " << b;
    EXPECT_TRUE(std::any_of(set.constraints.begin(), set.constraints.end(),
                            [](const BoundConstraint& k) { return k.binding; }));
  }
}

TEST(Bounds, FourElementNeedsTraceZero) {
  EXPECT_THROW(four_imag_feasible(4, -2, 0), Error);
  EXPECT_THROW(four_zero_real_bound(-1), Error);
}

TEST(Bounds, FiveOnePairMatchesConditions) {
  test::Rng rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const double a1 = -rng.uniform(0, 4), a2 = -rng.uniform(0, 4), a3 = -rng.uniform(0, 4);
    const double delta = -(a1 + a2 + 2 * a3) + rng.uniform(0.1, 4);
    const FeasibleSet set = five_one_pair_bound(delta, a1, a2, a3);
    const double b = rng.uniform(0, 2 * delta);
    if (near_edge(set, b, b * b, 1e-6)) continue;
    EXPECT_EQ(set.contains(b), single_perron_conditions({delta, a1, a2, C(a3, b), C(a3, -b)}));
  }
}

TEST(Bounds, TwoPairAndGeneralMatchConditions) {
  test::Rng rng(24);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<double> a;
    double sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      a.push_back(-rng.uniform(0, 3));
      sum += a.back();
    }
    const double delta = -2 * sum + rng.uniform(0.1, 4);
    const FeasibleSet set = m == 2 ? five_two_pair_bound(delta, a[0], a[1]) : general_pair_bound(delta, a);
    const double total = rng.uniform(0, 2 * delta * delta);
    if (near_edge(set, total, total, 1e-6)) continue;
    // Split the budget of squared imaginary parts at random.
    std::vector<double> w(m);
    double wsum = 0;
    for (auto& x : w) wsum += (x = rng.uniform(0.1, 1));
    std::vector<C> v{delta};
    for (std::size_t i = 0; i < m; ++i) test::push_pair(v, a[i], std::sqrt(total * w[i] / wsum));
    EXPECT_EQ(set.contains(total), single_perron_conditions(v)) << "m=" << m;
  }
}

TEST(Bounds, GeneralAgreesWithTwoPair) {
  const FeasibleSet g = general_pair_bound(4, {-1, -1});
  EXPECT_NEAR(g.upper(), five_two_pair_bound(4, -1, -1).upper(), 1e-12);
}

TEST(Bounds, Hypotheses) {
  EXPECT_THROW(five_two_pair_bound(4, 1, -1), Error);
  EXPECT_THROW(five_one_pair_bound(1, -3, -1, -1), Error);
  EXPECT_THROW(general_pair_bound(0, {-1}), Error);
  EXPECT_THROW(imag_budget_given_reals(6, 1, -2), Error);
}

TEST(FourPerturb, ZeroStepIsIdentity) {
  const Spectrum spec{4, -2, C(-1, 3), C(-1, -3)};
  const auto r = four_perturb(spec, 0.0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r.perturbed[i], spec[i]);
  EXPECT_FALSE(r.guaranteed);
}

TEST(FourPerturb, GuaranteedStepsStayRealizable) {
  test::Rng rng(25);
  int guaranteed = 0;
  for (int trial = 0; trial < 3000 && guaranteed < 300; ++trial) {
    const double a = rng.uniform(0.5, 6), b = rng.uniform(-a, a);
    const double c = -(a + b) / 2;
    const FeasibleSet set = four_imag_feasible(a, b, c);
    if (set.empty() || set.upper() <= 1e-3) continue;
    const double d = rng.uniform(1e-3, set.upper());
    if (!set.contains(d) || a < std::abs(C(c, d))) continue;
    const double t = rng.uniform(0, 2 * d);
    const auto r = four_perturb(a, b, c, d, t);
    const double before = s2_of(Spectrum{a, b, C(c, d), C(c, -d)});
    EXPECT_NEAR(s2_of(r.perturbed) - before, r.s2_shift, 1e-9 * (1 + std::abs(before)));
    if (!r.guaranteed) continue;
    ++guaranteed;
    EXPECT_TRUE(r.verdict.realizable) << a << " " << b << " " << d << " t=" << t;
  }
  EXPECT_GT(guaranteed, 100);
}

TEST(FourPerturb, Preconditions) {
  EXPECT_THROW(four_perturb({4, -2, -1, -1}, 1), Error);
  EXPECT_THROW(four_perturb(4, -2, -1, 3, -1), Error);
  EXPECT_THROW(four_perturb(4, -2, -1, 5, 1), Error);
}

TEST(FivePerturb, SchemesKeepRealizability) {
  test::Rng rng(26);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 3000; ++trial) {
    const Spectrum spec(test::single_perron(rng, 5));
    std::size_t pairs = 0;
    for (const auto& v : spec) pairs += v.imag() > 0;
    SchemeKind kind = SchemeKind::GeneralKthPairT;
    if (pairs == 1) {
      std::size_t reals = 0;
      for (const auto& v : spec) reals += v.imag() == 0;
      if (reals != 3) continue;
      kind = SchemeKind::FiveOnePairT;
    } else if (pairs == 2) {
      kind = rng.chance(0.5) ? SchemeKind::FiveTwoPairT : SchemeKind::GeneralKthPairT;
    } else {
      continue;
    }
    const PerturbationScheme scheme{kind, rng.uniform(0, 3), static_cast<std::size_t>(rng.integer(1, 2))};
    const auto r = five_perturb(spec, scheme);
    EXPECT_TRUE(r.guaranteed);
    EXPECT_TRUE(r.verdict.realizable) << to_string(kind);
    EXPECT_NEAR(s2_of(r.perturbed) - s2_of(spec), r.s2_shift, 1e-9 * (1 + std::abs(s2_of(spec))));
    ++counts[static_cast<int>(kind) - 1];
  }
  for (int c : counts) EXPECT_GT(c, 50);
}

TEST(FivePerturb, OnePairExample) {
  const auto r = five_perturb({8, -3, -1, C(-1, 4), C(-1, -4)}, {SchemeKind::FiveOnePairT, 1.0, 2});
  const Spectrum want{9, -3, -2, C(-1, 3), C(-1, -3)};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(std::abs(r.perturbed[i] - want[i]), 0.0, 1e-12);
  EXPECT_TRUE(r.verdict.realizable);
}

TEST(FivePerturb, ShapeErrors) {
  try {
    five_perturb({8, -3, -1, -1, -1}, {SchemeKind::FiveOnePairT, 1.0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
  try {
    five_perturb({1, 2, -1, -1, -1}, {SchemeKind::FiveOnePairT, 1.0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
}

}  // namespace
}  // namespace pniep
