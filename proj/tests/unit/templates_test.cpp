#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "oracles.hpp"
#include "pniep/error.hpp"
#include "pniep/templates.hpp"
#include "pniep/verification.hpp"

namespace pniep {
namespace {

using Params = std::map<std::string, double>;
// c0..c4 of the displayed characteristic polynomial of each 5x5 structure.
using Formula = std::function<std::vector<double>(const Params&)>;

const std::map<TemplateId, Formula>& formulas() {
  static const std::map<TemplateId, Formula> f{
      {TemplateId::Case1A,
       [](const Params& v) {
         const double a = v.at("a"), b = v.at("b"), c = v.at("c"), d = v.at("d");
         return std::vector<double>{-b * b, a * a - d, -2 * c, -2 * a, 0};
       }},
      {TemplateId::Case2B,
       [](const Params& v) {
         const double a = v.at("a"), b = v.at("b"), c = v.at("c");
         return std::vector<double>{b * b * c, -a * a * c, -b * b, -c, 0};
       }},
      {TemplateId::Case2C,
       [](const Params& v) {
         const double a = v.at("a"), b = v.at("b"), c = v.at("c"), d = v.at("d");
         return std::vector<double>{a * c * c * d, a * d - a * b * b * d, -a * c * c, -(a + d), 0};
       }},
      {TemplateId::Case3D,
       [](const Params& v) {
         const double a = v.at("a"), b = v.at("b"), c = v.at("c"), d = v.at("d");
         return std::vector<double>{a * d - b * b, 2 * c * d, -a, -(2 * c + d), 0};
       }},
      {TemplateId::A1,
       [](const Params& v) {
         const double p = v.at("p"), q = v.at("q"), r = v.at("r"), s = v.at("s"), t = v.at("t");
         return std::vector<double>{-p * p * t + 2 * p * q - s, p * p - 2 * r, 2 * p * t - 2 * q, -2 * p, -t};
       }},
      {TemplateId::A2,
       [](const Params& v) {
         return std::vector<double>{-v.at("s"), -2 * v.at("r"), -2 * v.at("q"), -2 * v.at("p"), -v.at("t")};
       }},
      {TemplateId::A3,
       [](const Params& v) {
         const double p = v.at("p"), q = v.at("q"), r = v.at("r"), s = v.at("s"), t = v.at("t");
         return std::vector<double>{-p * p * t + 2 * p * q - s, p * p - 2 * r, 2 * p * t - 3 * q, -2 * p, -t};
       }},
      {TemplateId::A4,
       [](const Params& v) {
         const double p = v.at("p"), q = v.at("q"), r = v.at("r"), s = v.at("s"), t = v.at("t");
         return std::vector<double>{-p * p * t + 2 * p * q - s, 3 * p * p - 2 * r, 2 * p * t - 3 * q, -4 * p, -t};
       }},
      {TemplateId::A5,
       [](const Params& v) {
         return std::vector<double>{-v.at("s"), -2 * v.at("r"), -v.at("q"), -2 * v.at("p"), -v.at("t")};
       }},
      {TemplateId::Toeplitz5,
       [](const Params& v) {
         const double p = v.at("p"), q = v.at("q"), r = v.at("r"), s = v.at("s"), t = v.at("t");
         const double t2 = t * t, t3 = t2 * t;
         return std::vector<double>{
             2 * p * q - 3 * p * p * t + 4 * p * t3 - 3 * q * t2 + 2 * r * t - s - t2 * t3,
             3 * p * p - 12 * p * t2 + 6 * q * t - 2 * r + 5 * t2 * t2,
             12 * p * t - 3 * q - 10 * t3,
             -4 * p + 10 * t2,
             -5 * t};
       }},
  };
  return f;
}

ParameterAssignment random_assignment(const StructureTemplate& tpl, test::Rng& rng, Params& out) {
  ParameterAssignment a;
  for (const auto& name : tpl.parameter_names()) {
    const double v = rng.uniform(-3, 3);
    a.set(name, v);
    out[name] = v;
  }
  return a;
}

TEST(Templates, NamesRoundTrip) {
  for (auto id : {TemplateId::Case1A, TemplateId::Case2B, TemplateId::Case2C, TemplateId::Case3D,
                  TemplateId::A1, TemplateId::A2, TemplateId::A3, TemplateId::A4, TemplateId::A5,
                  TemplateId::Toeplitz5, TemplateId::SotoP}) {
    EXPECT_EQ(template_from_string(to_string(id)), id);
  }
  EXPECT_FALSE(template_from_string("A6").has_value());
}

TEST(Templates, EveryInstanceIsPersymmetric) {
  test::Rng rng(41);
  std::vector<StructureTemplate> all;
  for (const auto& [id, f] : formulas()) all.push_back(make_template(id));
  for (std::size_t n = 1; n <= 12; ++n) all.push_back(make_template(TemplateId::SotoP, n));
  for (const auto& tpl : all) {
    for (int trial = 0; trial < 100; ++trial) {
      Params p;
      const Matrix m = instantiate(tpl, random_assignment(tpl, rng, p));
      EXPECT_EQ(m.exchanged(), m.transposed()) << to_string(tpl.id) << " n=" << tpl.n;
    }
  }
}

TEST(Templates, CharacteristicPolynomialsMatchDisplayedForms) {
  test::Rng rng(42);
  for (const auto& [id, formula] : formulas()) {
    const StructureTemplate tpl = make_template(id);
    ASSERT_EQ(tpl.n, 5u);
    for (int trial = 0; trial < 50; ++trial) {
      Params p;
      const Matrix m = instantiate(tpl, random_assignment(tpl, rng, p));
      const std::vector<double> want = formula(p);
      const MonicPolynomial got = char_poly(m);
      for (std::size_t i = 0; i < 5; ++i)
        EXPECT_NEAR(got.coeff(i), want[i], 1e-9 * (1.0 + std::abs(want[i]))) << to_string(id) << " c" << i;
      // Independent check of one coefficient set through a determinant.
      const Complex z(0.7, -1.3);
      Complex f = 1.0;
      for (std::size_t i = 5; i-- > 0;) f = f * z + want[i];
      EXPECT_LE(std::abs(test::det_shifted(m, z) - f), 1e-9 * (1.0 + std::abs(f)));
    }
  }
}

TEST(Templates, SotoPLayout) {
  const StructureTemplate tpl = make_template(TemplateId::SotoP, 5);
  const ParameterAssignment a{{"p0", 1}, {"p1", 4}, {"p2", 144}, {"p3", 448}, {"p4", 4352}};
  const Matrix want{{1, 1, 0, 0, 0},
                    {4, 1, 1, 0, 0},
                    {144, 0, 1, 1, 0},
                    {448, 0, 0, 1, 1},
                    {4352, 448, 144, 4, 1}};
  EXPECT_EQ(instantiate(tpl, a), want);
  const Matrix two = instantiate(make_template(TemplateId::SotoP, 2), {{"p0", 0.5}, {"p1", 2.25}});
  EXPECT_EQ(two, (Matrix{{0.5, 1}, {2.25, 0.5}}));
}

TEST(Templates, ToeplitzInstanceIsToeplitz) {
  test::Rng rng(43);
  Params p;
  const StructureTemplate tpl = make_template(TemplateId::Toeplitz5);
  EXPECT_TRUE(is_toeplitz(instantiate(tpl, random_assignment(tpl, rng, p)), 0.0).ok);
}

TEST(Templates, MissingParameter) {
  EXPECT_THROW(instantiate(make_template(TemplateId::A1), {{"p", 1}}), std::out_of_range);
}

TEST(ParameterAssignment, KeepsInsertionOrder) {
  ParameterAssignment a;
  a.set("t", 1);
  a.set("p", 2);
  a.set("t", 3);
  ASSERT_EQ(a.entries().size(), 2u);
  EXPECT_EQ(a.entries()[0].first, "t");
  EXPECT_EQ(a.get("t"), 3.0);
  EXPECT_EQ(a.min_value(), 2.0);
}

}  // namespace
}  // namespace pniep
