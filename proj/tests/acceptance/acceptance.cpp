// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "pniep/pniep.hpp"

namespace {

using namespace pniep;
using C = Complex;

// Thrown by the helpers below; the message becomes the FAIL detail.
struct Failure {
  std::string what;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

void expect_rel(double got, double want, double tol, const std::string& what) {
  const double err = want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
  expect(err <= tol, what + fmt(": got %.17g, want %.17g", got, want));
}

void expect_params(const ConstructionResult& r, const std::vector<std::pair<const char*, double>>& want) {
  expect(r.ok(), "verification failed");
  for (const auto& [name, value] : want) expect_rel(r.params.get(name), value, 1e-9, name);
}

int failures = 0;

void criterion(const char* id, const char* title, const std::function<std::string()>& body) {
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const Failure& f) {
    ok = false;
    detail = f.what;
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("%s %-3s %s%s%s\n", ok ? "PASS" : "FAIL", id, title, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
}

struct Fixture {
  Matrix matrix;
  Spectrum spectrum;
};

Fixture load_fixture(const std::string& name) {
  std::ifstream in(std::string(PNIEP_FIXTURES_DIR) + "/" + name);
  expect(static_cast<bool>(in), "cannot open " + name);
  const auto doc = nlohmann::json::parse(in);
  std::vector<C> values;
  for (const auto& p : doc.at("spectrum")) values.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  return {Matrix::from_rows(doc.at("rows").get<std::vector<std::vector<double>>>()), Spectrum(values)};
}

// --- 1: worked examples -----------------------------------------------------

void examples() {
  criterion("1a", "Case 1 parameters", [] {
    expect_params(realize_trace_zero_n5({2, C(-1, 1), C(-1, -1), C(0, 1), C(0, -1)}),
                  {{"a", 0.5}, {"b", 2}, {"c", 2}, {"d", 2.25}});
    return "";
  });
  criterion("1b", "Case 2 (second form) parameters", [] {
    const auto r = realize_trace_zero_n5({6, -5, 1, C(-1, 4), C(-1, -4)});
    expect(r.template_id == TemplateId::Case2C, "template " + std::string(to_string(r.template_id)));
    expect_params(r, {{"a", 241.0 / 31}, {"c", 62 / std::sqrt(482.0)}, {"d", 255.0 / 31}});
    return "";
  });
  criterion("1c", "Case 3 parameters", [] {
    const auto r = realize_trace_zero_n5({6, 4, -4, C(-3, 4), C(-3, -4)});
    expect(r.template_id == TemplateId::Case3D, "template " + std::string(to_string(r.template_id)));
    expect_params(r, {{"a", 150}, {"b", 0}, {"c", 5.5}, {"d", 16}});
    return "";
  });
  criterion("1d", "Case 2 parameters for {4,1,-3,-1+-3i}", [] {
    const auto r = realize_trace_zero_n5({4, 1, -3, C(-1, 3), C(-1, -3)});
    expect(r.template_id == TemplateId::Case2C, "template " + std::string(to_string(r.template_id)));
    expect_params(r, {{"a", 1}, {"b", std::sqrt(22.5)}, {"c", std::sqrt(30.0)}, {"d", 4}});
    return "";
  });
  criterion("1e", "A1 parameters", [] {
    expect_params(realize_single_perron_n5({6, C(-1, 3), C(-1, -3), C(-2, 2), C(-2, -2)}),
                  {{"p", 5}, {"q", 50}, {"r", 281.0 / 2}, {"s", 980}, {"t", 0}});
    return "";
  });
  criterion("1f", "Toeplitz parameters for {6,1+-2i,3+-2i}", [] {
    expect_params(realize_toeplitz_n5({6, C(1, 2), C(1, -2), C(3, 2), C(3, -2)}),
                  {{"t", 14.0 / 5}, {"p", 1.0 / 10}, {"q", 496.0 / 75}, {"r", 4027.0 / 1000},
                   {"s", 889888.0 / 9375}});
    return "";
  });
  criterion("1g", "Toeplitz parameters for {8,2,1,2+-2i}", [] {
    expect_params(realize_toeplitz_n5({8, 2, 1, C(2, 2), C(2, -2)}),
                  {{"t", 3}, {"p", 3}, {"q", 46.0 / 3}, {"r", 56}, {"s", 142}});
    return "";
  });
  criterion("1h", "companion-derived persymmetric entries", [] {
    expect_params(realize_companion_persym({9, C(-1, 4), C(-1, -4), C(-1, 4), C(-1, -4)}),
                  {{"p0", 1}, {"p1", 4}, {"p2", 144}, {"p3", 448}, {"p4", 4352}});
    return "";
  });
}

// --- 2: fixture matrices ------------------------------------------------------

void fixtures() {
  criterion("2", "fixture matrices verify with residual <= 1e-8", [] {
    std::ostringstream detail;
    for (const char* name : {"delta1_case2.json", "delta1_minus.json", "delta1_plus.json", "soto_p_10.json"}) {
      const Fixture f = load_fixture(name);
      const VerificationReport r = verify_realization(f.matrix, f.spectrum);
      expect(r.passed() && r.charpoly_residual <= 1e-8,
             std::string(name) + fmt(" residual %.3g", r.charpoly_residual));
      detail << name << fmt(" %.2g ", r.charpoly_residual);
    }
    return detail.str();
  });
}

// --- 3: bounds ----------------------------------------------------------------

void bounds() {
  criterion("3", "imaginary-part bounds", [] {
    const double four = four_imag_feasible(4, -2, -1).upper();
    expect(std::abs(four - std::sqrt(11.0)) <= 1e-12, fmt("four-element %.17g", four));
    expect(four_zero_real_bound(3).upper() == 3.0, "zero-real bound");
    expect(std::abs(five_two_pair_bound(4, -1, -1).upper() - 10.0) <= 1e-12, "two-pair bound");
    const double one = five_one_pair_bound(8, -3, -1, -1).upper();
    expect(std::abs(one - std::sqrt(188.0 / 5)) <= 1e-12, fmt("one-pair %.17g", one));
    expect(std::abs(imag_budget_given_reals(6, -1, -2).upper() - 23.0) <= 1e-12, "budget");
    return fmt("sqrt(11)=%.12g, sqrt(188/5)=%.12g", four, one);
  });
}

// --- 4: property suites ---------------------------------------------------------

std::string counted(int passed, int total) {
  expect(passed == total, fmt("%.0f of %.0f passed", passed, total));
  return fmt("%.0f/%.0f", passed, total);
}

void properties() {
  criterion("4a", "random realizable trace-zero 5-lists realize and verify", [] {
    test::Rng rng(1001);
    int ok = 0, total = 0;
    std::string first;
    while (total < 1000) {
      const Spectrum spec(test::trace_zero_five(rng));
      if (!check_n5_trace_zero(spec).realizable) continue;
      ++total;
      try {
        const auto r = realize_trace_zero_n5(spec);
        if (r.ok() && is_nonnegative(r.matrix, 0.0).ok && is_persymmetric(r.matrix, 0.0).ok) ++ok;
      } catch (const Error& e) {
        if (first.empty()) first = e.what();
      }
    }
    if (ok != total && !first.empty()) throw Failure{fmt("%.0f/%.0f, ", ok, total) + first};
    return counted(ok, total);
  });

  criterion("4b", "random single-Perron 5-lists: A1..A5 verify, A4 Toeplitz at trace zero", [] {
    test::Rng rng(1002);
    int ok = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const bool tz = trial % 4 == 0;
      const Spectrum spec(test::single_perron(rng, 5, tz));
      bool all = true;
      for (auto id : {TemplateId::A1, TemplateId::A2, TemplateId::A3, TemplateId::A4, TemplateId::A5}) {
        try {
          const auto r = realize_single_perron_n5(spec, id);
          all = all && r.ok();
          if (tz && id == TemplateId::A4) all = all && is_toeplitz(r.matrix, 1e-9).ok;
        } catch (const Error&) {
          all = false;
        }
      }
      ok += all;
    }
    return counted(ok, 1000);
  });

  criterion("4c", "random single-Perron lists n=3..10: companion non-negative, persymmetric form verifies", [] {
    test::Rng rng(1003);
    int ok = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = 3 + static_cast<std::size_t>(trial % 8);
      const Spectrum spec(test::single_perron(rng, n));
      try {
        const auto r = realize_companion_persym(spec);
        worst = std::max(worst, r.verification.charpoly_residual);
        ok += r.ok() && r.companion_nonnegative == true && r.hypotheses_met == true;
      } catch (const Error&) {
      }
    }
    return counted(ok, 500) + fmt(", worst residual %.2g", worst);
  });

  criterion("4d", "random coefficient-lemma instances", [] {
    test::Rng rng(1004);
    int ok = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t m = static_cast<std::size_t>(rng.integer(1, 9));
      std::vector<C> others = test::single_perron(rng, m + 1);
      others.erase(others.begin());
      const double t = rng.chance(0.2) ? 0.0 : rng.uniform(0, 5);
      try {
        ok += lemma_coefficient_check(t, Spectrum(others));
      } catch (const Error&) {
      }
    }
    return counted(ok, 1000);
  });

  criterion("4e", "power-sum / coefficient round trips at 1e-9", [] {
    test::Rng rng(1005);
    int ok = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rng.integer(1, 12));
      // From a spectrum: moments through the coefficients match direct power sums.
      std::vector<C> values;
      while (values.size() < n) {
        if (values.size() + 1 < n && rng.chance(0.5)) {
          test::push_pair(values, rng.uniform(-10, 10), rng.uniform(0.1, 7));
        } else {
          values.emplace_back(rng.uniform(-10, 10), 0.0);
        }
      }
      const Spectrum spec(values);
      const MomentVector direct = moments(spec, n);
      const MomentVector via = moments_from_coeffs(poly_from_roots(spec));
      double err = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        double mag = 0.0;
        for (const auto& v : values) mag += std::pow(std::abs(v), static_cast<double>(k));
        err = std::max(err, std::abs(direct.at(k) - via.at(k)) / (1.0 + mag));
      }
      // From coefficients: back through the power sums.
      std::vector<double> c(n);
      for (auto& x : c) x = rng.uniform(-100, 100);
      const MonicPolynomial back = coeffs_from_moments(moments_from_coeffs(MonicPolynomial(c)));
      for (std::size_t i = 0; i < n; ++i) err = std::max(err, test::rel_err(back.coeff(i), c[i]));
      worst = std::max(worst, err);
      ok += err <= 1e-9;
    }
    return counted(ok, 1000) + fmt(", worst %.2g", worst);
  });

  criterion("4f", "random guaranteed perturbations stay realizable", [] {
    test::Rng rng(1006);
    int ok = 0, total = 0;
    while (total < 1000) {
      std::optional<PerturbationResult> r;
      if (total % 2 == 0) {
        const double a = rng.uniform(0.5, 6), b = rng.uniform(-a, a), c = -(a + b) / 2;
        const FeasibleSet set = four_imag_feasible(a, b, c);
        if (set.empty() || set.upper() <= 1e-3) continue;
        const double d = rng.uniform(1e-3, set.upper());
        if (!set.contains(d) || a < std::abs(C(c, d))) continue;
        r = four_perturb(a, b, c, d, rng.uniform(0, 2 * d));
      } else {
        const Spectrum spec(test::single_perron(rng, 5));
        std::size_t pairs = 0, reals = 0;
        for (const auto& v : spec) {
          pairs += v.imag() > 0;
          reals += v.imag() == 0;
        }
        PerturbationScheme scheme{SchemeKind::FiveTwoPairT, rng.uniform(0, 3), 1};
        if (pairs == 1 && reals == 3) {
          scheme.kind = SchemeKind::FiveOnePairT;
          scheme.index = static_cast<std::size_t>(rng.integer(1, 2));
        } else if (pairs == 2) {
          scheme.kind = rng.chance(0.5) ? SchemeKind::FiveTwoPairT : SchemeKind::GeneralKthPairT;
          scheme.index = static_cast<std::size_t>(rng.integer(1, 2));
        } else {
          continue;
        }
        r = five_perturb(spec, scheme);
      }
      if (!r->guaranteed) continue;
      ++total;
      ok += r->verdict.realizable;
    }
    return counted(ok, total);
  });
}

// --- 5, 6: boundary and negative controls -------------------------------------------

void boundary() {
  criterion("5", "boundary spectrum {6,4,-4,-3+-4i}", [] {
    const Spectrum spec{6, 4, -4, C(-3, 4), C(-3, -4)};
    const RealizabilityVerdict v = check_n5_trace_zero(spec);
    const ConditionResult& third = v.conditions.back();
    const double scale = std::max(std::abs(third.lhs), std::abs(third.rhs));
    expect(std::abs(third.margin) <= 1e-6 * (1.0 + scale), fmt("margin %.3g", third.margin));
    expect(v.realizable, "verdict not realizable");
    const auto r = realize_trace_zero_n5(spec);
    expect(std::abs(r.params.get("b")) <= 1e-9, fmt("b = %.3g", r.params.get("b")));
    return fmt("margin %.2g, b %.2g", third.margin, r.params.get("b"));
  });
}

void negatives() {
  criterion("6", "negative controls", [] {
    const Spectrum alt{4, 2, -3, C(-1, 3), C(-1, -3)};
    const double s = toeplitz5_parameters(alt).get("s");
    expect_rel(s, -614896.0 / 3125, 1e-6, "Toeplitz s");
    const RealizabilityVerdict v = check_persym_sufficient_n5(alt);
    expect(!v.realizable, "Toeplitz sufficient condition unexpectedly holds");
    std::string failed;
    for (const auto& c : v.conditions)
      if (!c.satisfied) failed += c.name + ";";
    expect(failed.rfind("(e)", 0) == 0 && failed.find(';') == failed.size() - 1,
           "failing conditions: " + failed);

    const Spectrum ten{10, 0, -1, C(-1, 6), C(-1, -6)};
    const MomentVector m = moments(ten, 2);
    const double gap = m.at(2) - m.at(1) * m.at(1);
    expect_rel(gap, -18.0, 1e-12, "s2-s1^2");
    bool refused = false;
    try {
      realize_single_perron_n5(ten);
    } catch (const Error& e) {
      refused = e.code() == ErrorCode::HypothesisFailed;
    }
    expect(refused, "single-Perron route accepted {10,0,-1,-1+-6i}");
    return fmt("s = %.10g, s2-s1^2 = %.6g", s, gap);
  });
}

}  // namespace

int main() {
  examples();
  fixtures();
  bounds();
  properties();
  boundary();
  negatives();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
