#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pniep/realizability.hpp"
#include "pniep/spectrum.hpp"
#include "pniep/tolerances.hpp"

namespace pniep {

/// What a FeasibleSet's intervals range over.
enum class BoundQuantity {
  AbsD,            ///< |d|
  PairSumSquares,  ///< b1^2 + b2^2
  SumSquares,      ///< sum of b_i^2
  AbsB3,           ///< |b3|
};

std::string_view to_string(BoundQuantity q);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(double x) const noexcept { return x >= lower && x <= upper; }
};

/// One inequality that shaped the set. `value` is in the units named by
/// `units` (e.g. "d^2" when the set is over |d|).
struct BoundConstraint {
  std::string name;
  std::string kind;  ///< "upper", "lower", "exclude" or "require"
  double value = 0.0;
  double value2 = 0.0;  ///< right end for "exclude"
  std::string units;
  bool binding = false;
};

struct FeasibleSet {
  BoundQuantity quantity = BoundQuantity::AbsD;
  std::vector<Interval> intervals;  ///< disjoint, sorted
  std::vector<BoundConstraint> constraints;

  bool empty() const noexcept { return intervals.empty(); }
  bool contains(double x) const noexcept;
  /// Largest admissible value; throws PreconditionFailed on an empty set.
  double upper() const;
};

/// {a, b, c+id, c-id} with a + b + 2c = 0: admissible |d| from s2 >= 0,
/// s3 >= 0 and 4s4 >= s2^2. Throws NotTraceZero otherwise.
FeasibleSet four_imag_feasible(double a, double b, double c, const Tolerances& tol = {});

/// {a, -a, id, -id}: |d| <= a. Throws NegativePerron when a < 0.
FeasibleSet four_zero_real_bound(double a, const Tolerances& tol = {});

struct PerturbationResult {
  Spectrum perturbed;
  RealizabilityVerdict verdict;
  /// True when realizability of the perturbed list is known in advance.
  bool guaranteed = false;
  /// Closed-form increase of s2 from the spectrum to the perturbed one.
  double s2_shift = 0.0;
  std::vector<std::string> notes;
};

/// {a, b, c+id, c-id} -> {a+t, b-t, c+i(d-t), c-i(d-t)}, re-checked with the
/// 4-element trace-zero criterion. Guaranteed when a-b-2d >= 0 and t > 0, or
/// a-b-2d < 0 and t >= (b+2d-a)/4.
PerturbationResult four_perturb(const Spectrum& spec, double t, const Tolerances& tol = {});
PerturbationResult four_perturb(double a, double b, double c, double d, double t,
                                const Tolerances& tol = {});

/// b1^2 + b2^2 for {delta, a1 +- ib1, a2 +- ib2}.
FeasibleSet five_two_pair_bound(double delta, double a1, double a2, const Tolerances& tol = {});

/// sum b_i^2 for {delta, a_i +- ib_i} with m pairs.
FeasibleSet general_pair_bound(double delta, const std::vector<double>& a,
                               const Tolerances& tol = {});

/// |b3| for {delta, a1, a2, a3 +- ib3}.
FeasibleSet five_one_pair_bound(double delta, double a1, double a2, double a3,
                                const Tolerances& tol = {});

/// b^2 + d^2 for {delta, a +- ib, c +- id}; empty when the budget is negative.
FeasibleSet imag_budget_given_reals(double delta, double a, double c, const Tolerances& tol = {});

enum class SchemeKind { FourT, FiveOnePairT, FiveTwoPairT, GeneralKthPairT };

std::string_view to_string(SchemeKind k);

/// `index` is 1-based. For FiveOnePairT it selects which non-Perron real
/// value is decreased; for the pair schemes it selects the conjugate pair,
/// counted by first appearance of its positive-imaginary member.
struct PerturbationScheme {
  SchemeKind kind = SchemeKind::FiveOnePairT;
  double t = 0.0;
  std::size_t index = 1;
};

/// Applies a scheme to a spectrum realizable by the single-Perron criterion
/// and re-checks the result. FourT defers to four_perturb.
PerturbationResult five_perturb(const Spectrum& spec, const PerturbationScheme& scheme,
                                const Tolerances& tol = {});

}  // namespace pniep
