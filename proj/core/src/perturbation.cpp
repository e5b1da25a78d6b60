#include "pniep/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "pniep/error.hpp"
#include "pniep/spectral_core.hpp"

namespace pniep {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDiscriminantTol = 1e-12;

std::vector<Interval> clip(const std::vector<Interval>& in, double lo, double hi) {
  std::vector<Interval> out;
  for (const auto& iv : in) {
    const double l = std::max(iv.lower, lo), u = std::min(iv.upper, hi);
    if (l <= u) out.push_back({l, u});
  }
  return out;
}

// Removes the open interval (lo, hi).
std::vector<Interval> cut(const std::vector<Interval>& in, double lo, double hi) {
  std::vector<Interval> out;
  for (const auto& iv : in) {
    if (iv.upper <= lo || iv.lower >= hi) {
      out.push_back(iv);
      continue;
    }
    if (iv.lower <= lo) out.push_back({iv.lower, lo});
    if (iv.upper >= hi) out.push_back({hi, iv.upper});
  }
  return out;
}

void mark_binding(FeasibleSet& set, const std::vector<Interval>& raw) {
  for (auto& c : set.constraints) {
    const double eps = 1e-12 * (1.0 + std::abs(c.value) + std::abs(c.value2));
    for (const auto& iv : raw) {
      const bool hit = std::abs(iv.upper - c.value) <= eps || std::abs(iv.lower - c.value) <= eps ||
                       (c.kind == "exclude" && (std::abs(iv.upper - c.value) <= eps ||
                                                std::abs(iv.lower - c.value2) <= eps));
      if (hit && c.kind != "require") c.binding = true;
    }
  }
}

// A single [0, min(bounds)] interval over a squared quantity.
FeasibleSet min_bound(BoundQuantity q, std::vector<BoundConstraint> bounds, bool take_sqrt,
                      const Tolerances& tol) {
  FeasibleSet set;
  set.quantity = q;
  double hi = kInf;
  for (const auto& b : bounds) hi = std::min(hi, b.value);
  for (auto& b : bounds) b.binding = b.value == hi;
  set.constraints = std::move(bounds);
  if (hi >= -tol.cond * (1.0 + std::abs(hi))) {
    hi = std::max(hi, 0.0);
    set.intervals.push_back({0.0, take_sqrt ? std::sqrt(hi) : hi});
  }
  return set;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::HypothesisFailed, what);
}

bool near_zero(double x, double scale, const Tolerances& tol) {
  return std::abs(x) <= tol.cond * (1.0 + scale);
}

struct Parts {
  std::vector<std::size_t> reals;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  ///< (upper, lower), by upper's position
};

Parts split(const Spectrum& spec, const Tolerances& tol) {
  const double eps = spec.pairing_tolerance(tol);
  Parts parts;
  std::vector<bool> used(spec.size(), false);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (std::abs(spec[i].imag()) <= eps) parts.reals.push_back(i);
  }
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i].imag() <= eps) continue;
    std::size_t best = spec.size();
    double best_dist = kInf;
    for (std::size_t j = 0; j < spec.size(); ++j) {
      if (used[j] || spec[j].imag() >= -eps) continue;
      const double dist = std::abs(spec[j] - std::conj(spec[i]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == spec.size()) throw Error(ErrorCode::ShapeMismatch, "unpaired complex value");
    used[best] = true;
    parts.pairs.emplace_back(i, best);
  }
  return parts;
}

}  // namespace

std::string_view to_string(BoundQuantity q) {
  switch (q) {
    case BoundQuantity::AbsD: return "|d|";
    case BoundQuantity::PairSumSquares: return "b1^2+b2^2";
    case BoundQuantity::SumSquares: return "sum b_i^2";
    case BoundQuantity::AbsB3: return "|b3|";
  }
  return "?";
}

std::string_view to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::FourT: return "FOUR_T";
    case SchemeKind::FiveOnePairT: return "FIVE_ONE_PAIR_T";
    case SchemeKind::FiveTwoPairT: return "FIVE_TWO_PAIR_T";
    case SchemeKind::GeneralKthPairT: return "GENERAL_KTH_PAIR_T";
  }
  return "?";
}

bool FeasibleSet::contains(double x) const noexcept {
  return std::any_of(intervals.begin(), intervals.end(),
                     [x](const Interval& iv) { return iv.contains(x); });
}

double FeasibleSet::upper() const {
  if (intervals.empty()) throw Error(ErrorCode::PreconditionFailed, "feasible set is empty");
  return intervals.back().upper;
}

FeasibleSet four_imag_feasible(double a, double b, double c, const Tolerances& tol) {
  const double trace = a + b + 2.0 * c;
  if (!near_zero(trace, std::abs(a) + std::abs(b) + 2.0 * std::abs(c), tol)) {
    throw Error(ErrorCode::NotTraceZero, "a + b + 2c = " + std::to_string(trace));
  }
  FeasibleSet set;
  set.quantity = BoundQuantity::AbsD;
  const double a2 = a * a, b2 = b * b, c2 = c * c;

  // Work in x = d^2 and take square roots at the end.
  std::vector<Interval> x{{0.0, kInf}};
  const double u1 = c2 + (a2 + b2) / 2.0;
  set.constraints.push_back({"s2>=0: d^2<=c^2+(a^2+b^2)/2", "upper", u1, 0.0, "d^2", false});
  x = clip(x, 0.0, u1);

  const double cubic = c2 * c + (a2 * a + b2 * b) / 2.0;
  if (c > tol.cond) {
    const double u2 = cubic / (3.0 * c);
    set.constraints.push_back({"s3>=0: d^2<=(c^3+(a^3+b^3)/2)/(3c)", "upper", u2, 0.0, "d^2", false});
    x = clip(x, 0.0, u2);
  } else if (c < -tol.cond) {
    const double l2 = cubic / (3.0 * c);
    set.constraints.push_back({"s3>=0: d^2>=(c^3+(a^3+b^3)/2)/(3c)", "lower", l2, 0.0, "d^2", false});
    x = clip(x, l2, kInf);
  } else {
    const double s3 = a2 * a + b2 * b + 2.0 * c2 * c;
    const double scale = std::abs(a2 * a) + std::abs(b2 * b) + 2.0 * std::abs(c2 * c);
    const bool ok = s3 >= -tol.cond * (1.0 + scale);
    set.constraints.push_back({"s3>=0: a^3+b^3+2c^3>=0", "require", s3, 0.0, "", !ok});
    if (!ok) x.clear();
  }

  // f(x) = 4x^2 + Bx + C >= 0.
  const double B = 4.0 * (a2 + b2 - 10.0 * c2);
  const double C = 3.0 * a2 * a2 + 3.0 * b2 * b2 - 2.0 * a2 * b2 + 4.0 * c2 * c2 -
                   4.0 * (a2 + b2) * c2;
  const double disc = B * B - 16.0 * C;
  if (disc >= -kDiscriminantTol * (B * B + 16.0 * std::abs(C))) {
    const double root = std::sqrt(std::max(disc, 0.0));
    const double x1 = (-B - root) / 8.0, x2 = (-B + root) / 8.0;
    set.constraints.push_back({"4s4>=s2^2: quartic in d^2 outside its roots", "exclude", x1, x2,
                               "d^2", false});
    x = cut(x, x1, x2);
  }

  mark_binding(set, x);
  for (const auto& iv : x) set.intervals.push_back({std::sqrt(std::max(iv.lower, 0.0)),
                                                    std::sqrt(std::max(iv.upper, 0.0))});
  return set;
}

FeasibleSet four_zero_real_bound(double a, const Tolerances& tol) {
  if (a < -tol.cond) throw Error(ErrorCode::NegativePerron, "a must be non-negative");
  a = std::max(a, 0.0);
  FeasibleSet set;
  set.quantity = BoundQuantity::AbsD;
  set.constraints.push_back({"2a^2-2d^2>=0: |d|<=a", "upper", a, 0.0, "|d|", true});
  set.intervals.push_back({0.0, a});
  return set;
}

PerturbationResult four_perturb(const Spectrum& spec, double t, const Tolerances& tol) {
  if (spec.size() != 4) throw Error(ErrorCode::ShapeMismatch, "four_perturb needs 4 values");
  if (t < 0.0) throw Error(ErrorCode::PreconditionFailed, "t must be non-negative");
  const Parts parts = split(spec, tol);
  if (parts.reals.size() != 2 || parts.pairs.size() != 1) {
    throw Error(ErrorCode::ShapeMismatch, "expected {a, b, c+id, c-id} with d != 0");
  }
  std::size_t ia = parts.reals[0], ib = parts.reals[1];
  if (spec[ib].real() > spec[ia].real()) std::swap(ia, ib);
  const double a = spec[ia].real(), b = spec[ib].real();
  const Complex upper = spec[parts.pairs[0].first];
  const double c = upper.real(), d = upper.imag();

  if (a < std::abs(upper)) throw Error(ErrorCode::PreconditionFailed, "a is not the Perron root");
  const RealizabilityVerdict before = check_n4_trace_zero(spec, tol);
  if (!before.applicable) throw Error(ErrorCode::PreconditionFailed, "s1 must be zero");
  if (!before.realizable) throw Error(ErrorCode::PreconditionFailed, "spectrum is not realizable");

  std::vector<Complex> values(spec.begin(), spec.end());
  values[ia] = a + t;
  values[ib] = b - t;
  values[parts.pairs[0].first] = Complex(c, d - t);
  values[parts.pairs[0].second] = Complex(c, -(d - t));
  Spectrum perturbed(values, tol);

  const double gap = a - b - 2.0 * d;
  const bool gap_case = gap >= -tol.cond * (1.0 + std::abs(a) + std::abs(b) + 2.0 * d) && t > 0.0;
  const bool long_step = gap < 0.0 && t >= (b + 2.0 * d - a) / 4.0;

  PerturbationResult r{perturbed, check_n4_trace_zero(perturbed, tol), gap_case || long_step,
                       2.0 * t * (a - b + 2.0 * d), {}};
  if (gap_case) r.notes.emplace_back("a-b-2d >= 0 and t > 0");
  if (long_step) r.notes.emplace_back("a-b-2d < 0 and t >= (b+2d-a)/4");
  if (b < 0.0 && r.guaranteed) r.notes.emplace_back("b < 0: the guarantee was derived for b >= 0; rely on the verdict");
  return r;
}

PerturbationResult four_perturb(double a, double b, double c, double d, double t,
                                const Tolerances& tol) {
  return four_perturb(Spectrum({Complex(a), Complex(b), Complex(c, d), Complex(c, -d)}, tol), t,
                      tol);
}

FeasibleSet five_two_pair_bound(double delta, double a1, double a2, const Tolerances& tol) {
  require(delta > 0.0, "delta must be positive");
  require(a1 <= tol.cond && a2 <= tol.cond, "a1, a2 must be non-positive");
  require(delta + 2.0 * (a1 + a2) >= -tol.cond * (1.0 + delta), "s1 must be non-negative");
  const double sq = a1 * a1 + a2 * a2;
  const double m1 = (delta * delta + 2.0 * sq) / 2.0;
  const double m2 =
      (4.0 * delta * delta + 6.0 * sq - 8.0 * a1 * a2 - 4.0 * delta * (a1 + a2)) / 10.0;
  return min_bound(BoundQuantity::PairSumSquares,
                   {{"s2>=0", "upper", m1, 0.0, "b1^2+b2^2", false},
                    {"5s2-s1^2>=0", "upper", m2, 0.0, "b1^2+b2^2", false}},
                   false, tol);
}

FeasibleSet general_pair_bound(double delta, const std::vector<double>& a, const Tolerances& tol) {
  require(delta > 0.0, "delta must be positive");
  require(!a.empty(), "need at least one pair");
  require(std::all_of(a.begin(), a.end(), [&](double v) { return v <= tol.cond; }),
          "all a_i must be non-positive");
  const double m = static_cast<double>(a.size());
  const double sum = std::accumulate(a.begin(), a.end(), 0.0);
  const double sq = std::inner_product(a.begin(), a.end(), a.begin(), 0.0);
  require(delta + 2.0 * sum >= -tol.cond * (1.0 + delta), "s1 must be non-negative");
  const double n_bound =
      (m * delta * delta - 2.0 * delta * sum - 2.0 * sum * sum + (2.0 * m + 1.0) * sq) /
      (2.0 * m + 1.0);
  const double s2_bound = (delta * delta + 2.0 * sq) / 2.0;
  return min_bound(BoundQuantity::SumSquares,
                   {{"s2>=0", "upper", s2_bound, 0.0, "sum b_i^2", false},
                    {"n*s2-s1^2>=0", "upper", n_bound, 0.0, "sum b_i^2", false}},
                   false, tol);
}

FeasibleSet five_one_pair_bound(double delta, double a1, double a2, double a3,
                                const Tolerances& tol) {
  require(delta > 0.0, "delta must be positive");
  require(a1 <= tol.cond && a2 <= tol.cond && a3 <= tol.cond, "a1, a2, a3 must be non-positive");
  require(delta + a1 + a2 + 2.0 * a3 >= -tol.cond * (1.0 + delta), "s1 must be non-negative");
  const double m1 = (4.0 * (delta * delta + a1 * a1 + a2 * a2) + 6.0 * a3 * a3 -
                     2.0 * (delta * a1 + delta * a2 + a1 * a2) - 4.0 * a3 * (delta + a1 + a2)) /
                    10.0;
  const double m2 = (delta * delta + a1 * a1 + a2 * a2 + 2.0 * a3 * a3) / 2.0;
  return min_bound(BoundQuantity::AbsB3,
                   {{"M1^2 (5s2-s1^2>=0)", "upper", m1, 0.0, "b3^2", false},
                    {"M2^2 (s2>=0)", "upper", m2, 0.0, "b3^2", false}},
                   true, tol);
}

FeasibleSet imag_budget_given_reals(double delta, double a, double c, const Tolerances& tol) {
  require(a <= tol.cond && c <= tol.cond, "a, c must be non-positive");
  require(delta >= -2.0 * (a + c) - tol.cond * (1.0 + std::abs(delta)), "s1 must be non-negative");
  const double budget = -2.0 * delta * (a + c) - 4.0 * a * c - (a * a + c * c);
  return min_bound(BoundQuantity::PairSumSquares,
                   {{"b^2+d^2<=-2delta(a+c)-4ac-(a^2+c^2)", "upper", budget, 0.0, "b^2+d^2", false}},
                   false, tol);
}

PerturbationResult five_perturb(const Spectrum& spec, const PerturbationScheme& scheme,
                                const Tolerances& tol) {
  if (scheme.kind == SchemeKind::FourT) return four_perturb(spec, scheme.t, tol);
  if (scheme.t < 0.0) throw Error(ErrorCode::PreconditionFailed, "t must be non-negative");
  if (scheme.index < 1) throw Error(ErrorCode::PreconditionFailed, "index is 1-based");

  RealizabilityVerdict before;
  try {
    before = check_single_perron(spec, tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::ShapeMismatch, e.message());
  }
  if (!before.realizable) throw Error(ErrorCode::PreconditionFailed, "spectrum is not realizable");

  const auto shape = single_perron_shape(spec, tol);
  const Parts parts = split(spec, tol);
  const std::size_t pi = shape->perron_index;
  const double delta = shape->perron;
  const double t = scheme.t;

  std::vector<Complex> values(spec.begin(), spec.end());
  double shift = 0.0;
  std::string note;

  if (scheme.kind == SchemeKind::FiveOnePairT) {
    if (spec.size() != 5 || parts.reals.size() != 3 || parts.pairs.size() != 1) {
      throw Error(ErrorCode::ShapeMismatch, "FIVE_ONE_PAIR_T needs {delta, a, b, c+-id}");
    }
    std::vector<std::size_t> others;
    for (std::size_t i : parts.reals)
      if (i != pi) others.push_back(i);
    if (scheme.index > others.size()) {
      throw Error(ErrorCode::PreconditionFailed, "index exceeds the number of real values");
    }
    const std::size_t ia = others[scheme.index - 1];
    const double a = spec[ia].real();
    const auto [up, lo] = parts.pairs[0];
    const double c = spec[up].real(), d = spec[up].imag();
    values[pi] = delta + t;
    values[ia] = a - t;
    values[up] = Complex(c, d - t);
    values[lo] = Complex(c, -(d - t));
    shift = 2.0 * t * (delta - a + 2.0 * d);
    note = "s2 increases by 2t(delta-a+2d)";
  } else {
    if (scheme.kind == SchemeKind::FiveTwoPairT &&
        (spec.size() != 5 || parts.reals.size() != 1 || parts.pairs.size() != 2)) {
      throw Error(ErrorCode::ShapeMismatch, "FIVE_TWO_PAIR_T needs {delta, a+-ib, c+-id}");
    }
    if (scheme.index > parts.pairs.size()) {
      throw Error(ErrorCode::PreconditionFailed, "index exceeds the number of conjugate pairs");
    }
    const auto [up, lo] = parts.pairs[scheme.index - 1];
    const double a = spec[up].real(), b = spec[up].imag();
    values[pi] = delta + 2.0 * t;
    values[up] = Complex(a - t, b - t);
    values[lo] = Complex(a - t, -(b - t));
    shift = 4.0 * (t * t + t * (delta - a + b));
    note = "s2 increases by 4(t^2+t(delta-a+b))";
  }

  Spectrum perturbed(values, tol);
  PerturbationResult r{perturbed, check_single_perron(perturbed, tol), true, shift, {note}};
  return r;
}

}  // namespace pniep
