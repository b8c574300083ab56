#include <gtest/gtest.h>

#include <cmath>

#include "lauricella/decomposition.hpp"
#include "lauricella/draws.hpp"
#include "lauricella/nested_quadrature.hpp"
#include "oracle_values.hpp"

using namespace lauricella;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::max(1e-300, std::fabs(want)); }

double F(double a, double b, double c, double x) { return gauss_2f1({a, b, c}, x).value; }

// Three-variable F_A decomposition written out as a triple sum over (i, j, k).
double fa3_triple_sum(const LauricellaAParams& p, const std::vector<double>& x, int degree) {
  const double a = p.a;
  double sum = 0.0;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      for (int k = 0; i + j + k <= degree; ++k) {
        const double coef = pochhammer(a, i + j + k) * pochhammer(p.b[0], j + k) * pochhammer(p.b[1], i + k) *
                            pochhammer(p.b[2], i + j) /
                            (std::tgamma(i + 1.0) * std::tgamma(j + 1.0) * std::tgamma(k + 1.0) *
                             pochhammer(p.c[0], j + k) * pochhammer(p.c[1], i + k) * pochhammer(p.c[2], i + j));
        sum += coef * std::pow(x[0], j + k) * std::pow(x[1], i + k) * std::pow(x[2], i + j) *
               F(a + j + k, p.b[0] + j + k, p.c[0] + j + k, x[0]) *
               F(a + i + j + k, p.b[1] + i + k, p.c[1] + i + k, x[1]) *
               F(a + i + j + k, p.b[2] + i + j, p.c[2] + i + j, x[2]);
      }
  return sum;
}

double fb3_triple_sum(const LauricellaBParams& p, const std::vector<double>& x, int degree) {
  const double c = p.c;
  double sum = 0.0;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      for (int k = 0; i + j + k <= degree; ++k) {
        const int s = i + j + k;
        const double coef =
            ((s % 2) ? -1.0 : 1.0) * pochhammer(p.a[0], j + k) * pochhammer(p.b[0], j + k) *
            pochhammer(p.a[1], i + k) * pochhammer(p.b[1], i + k) * pochhammer(p.a[2], i + j) *
            pochhammer(p.b[2], i + j) /
            (pochhammer(c - 1 + j + k, j + k) * pochhammer(c - 1 + 2 * (j + k) + i, i) * pochhammer(c, 2 * s) *
             std::tgamma(i + 1.0) * std::tgamma(j + 1.0) * std::tgamma(k + 1.0));
        sum += coef * std::pow(x[0], j + k) * std::pow(x[1], i + k) * std::pow(x[2], i + j) *
               F(p.a[0] + j + k, p.b[0] + j + k, c + 2 * (j + k), x[0]) *
               F(p.a[1] + i + k, p.b[1] + i + k, c + 2 * s, x[1]) *
               F(p.a[2] + i + j, p.b[2] + i + j, c + 2 * s, x[2]);
      }
  return sum;
}

}  // namespace

TEST(Decomposed, ZeroArgumentGivesOne) {
  Rng rng(1);
  for (int n = 1; n <= 4; ++n) {
    const FaDraw fa = random_fa_draw(rng, n);
    const FbDraw fb = random_fb_draw(rng, n);
    const std::vector<double> zero(n, 0.0);
    EXPECT_EQ(fa_decomposed(fa.params, zero).value, 1.0);
    EXPECT_EQ(fb_decomposed(fb.params, zero).value, 1.0);
    EXPECT_EQ(fa_recurrent(fa.params, zero).value, 1.0);
    EXPECT_EQ(fb_recurrent(fb.params, zero).value, 1.0);
  }
}

TEST(Decomposed, FaExamples) {
  const LauricellaAParams p2{0.3, {0.2, 0.4}, {0.7, 0.9}};
  EXPECT_LT(rel(fa_decomposed(p2, {0.1, 0.1}).value, fa_direct(p2, {0.1, 0.1}).value), 1e-9);
  EXPECT_LT(rel(fa_decomposed(p2, {0.1, 0.1}).value, oracle::kFa2), 1e-13);
  const LauricellaAParams p3{0.25, {0.2, 0.3, 0.4}, {0.9, 1.1, 1.3}};
  const std::vector<double> x3{0.05, 0.07, 0.06};
  const double dec = fa_decomposed(p3, x3).value;
  EXPECT_LT(rel(dec, fa_direct(p3, x3).value), 1e-8);
  EXPECT_LT(rel(dec, fa3_triple_sum(p3, x3, 20)), 1e-8);
  EXPECT_LT(rel(dec, oracle::kFa3), 1e-13);
  EXPECT_LT(rel(fa_decomposed({1.3, {0.6, 1.1, 0.4}, {0.8, 2.1, 1.6}}, {0.3, -0.2, 0.25}).value, oracle::kFa3Mixed),
            1e-12);
}

TEST(Decomposed, FbExamples) {
  const LauricellaBParams p2{{0.4, 0.5}, {0.3, 0.6}, 1.7};
  EXPECT_LT(rel(fb_decomposed(p2, {0.2, 0.15}).value, fb_direct(p2, {0.2, 0.15}).value), 1e-9);
  EXPECT_LT(rel(fb_decomposed(p2, {0.2, 0.15}).value, oracle::kFb2), 1e-13);
  const LauricellaBParams p3{{0.3, 0.4, 0.5}, {0.2, 0.3, 0.25}, 2.2};
  const std::vector<double> x3{0.1, 0.08, 0.12};
  const double dec = fb_decomposed(p3, x3).value;
  EXPECT_LT(rel(dec, fb_direct(p3, x3).value), 1e-8);
  EXPECT_LT(rel(dec, fb3_triple_sum(p3, x3, 20)), 1e-8);
  EXPECT_LT(rel(dec, oracle::kFb3), 1e-13);
  EXPECT_LT(rel(fb_decomposed(p3, {0.5, -0.6, 0.7}).value, oracle::kFb3Wide), 1e-12);
}

TEST(Decomposed, PrintedFbCoefficientIsOffFromThreeVariables) {
  const LauricellaBParams p2{{0.4, 0.5}, {0.3, 0.6}, 1.7};
  EXPECT_LT(rel(fb_decomposed(p2, {0.5, -0.4}, {}, FbCoefficientForm::printed).value,
                fb_decomposed(p2, {0.5, -0.4}).value),
            1e-14);
  const LauricellaBParams p3{{0.3, 0.4, 0.5}, {0.2, 0.3, 0.25}, 2.2};
  const double printed = fb_decomposed(p3, {0.5, -0.6, 0.7}, {}, FbCoefficientForm::printed).value;
  EXPECT_GT(rel(printed, oracle::kFb3Wide), 1e-8);
  const double printed_small = fb_decomposed(p3, {0.1, 0.08, 0.12}, {}, FbCoefficientForm::printed).value;
  EXPECT_GT(rel(printed_small, oracle::kFb3), 1e-11);
}

TEST(Decomposed, DomainChecks) {
  const LauricellaAParams pa{0.3, {0.2, 0.4}, {0.7, 0.9}};
  EXPECT_THROW(fa_decomposed(pa, {1.0, 0.1}), DomainError);
  EXPECT_THROW(fa_decomposed(pa, {-1.5, 0.1}), DomainError);
  EXPECT_THROW(fa_decomposed(pa, {1.0, 0.1}, {}, ArgumentRange::below_one), DomainError);
  EXPECT_THROW(fb_decomposed({{0.4, 0.5}, {0.3, 0.6}, 1.7}, {0.2, -1.0}), DomainError);
  EXPECT_THROW(fa_decomposed(pa, {0.1}), ParameterError);
}

TEST(Decomposed, NegativeArgumentsMatchEulerIntegral) {
  const LauricellaAParams p{1.4, {0.3, 0.5}, {0.9, 1.7}};
  const std::vector<double> Y{2.0, 3.5};
  const double dec = fa_decomposed(p, {-Y[0], -Y[1]}, {}, ArgumentRange::below_one).value;
  const QuadratureResult q = fa_euler_integral(p.a, p.b, p.c, Y, 1e-12);
  EXPECT_LT(rel(dec, q.value), 1e-8);
  const LauricellaBParams pb{{1.3, 1.5}, {0.3, 0.4}, 2.0};
  const double decb = fb_decomposed(pb, {-0.8, -2.5}, {}, FbCoefficientForm::consistent, ArgumentRange::below_one).value;
  const QuadratureResult qb = fb_dirichlet_integral(pb.a, pb.b, pb.c, {0.8, 2.5}, 1e-12);
  EXPECT_LT(rel(decb, qb.value), 1e-8);
}

TEST(Decomposed, OneVariableIsGauss) {
  const Truncation tight{1e-15};
  EXPECT_LT(rel(fa_decomposed({0.3, {0.7}, {1.1}}, {0.4}, tight).value, oracle::kGauss_03_07_11_at_04), 1e-13);
  EXPECT_LT(rel(fb_decomposed({{0.5}, {0.25}, 1.5}, {-0.8}, tight).value, oracle::kGauss_05_025_15_at_m08), 1e-13);
}

TEST(Taylor, DecompositionReproducesSeriesCoefficients) {
  for (const LauricellaAParams& p : {LauricellaAParams{0.3, {0.2, 0.4}, {0.7, 0.9}},
                                     LauricellaAParams{1.3, {0.6, 1.1, 0.4}, {0.8, 2.1, 1.6}},
                                     LauricellaAParams{0.7, {0.2, 0.9, 1.4, 0.5}, {1.2, 0.6, 2.2, 1.9}}}) {
    const int degree = p.n() == 4 ? 4 : 6;
    const auto taylor = fa_decomposed_taylor(p, degree);
    std::size_t seen = 0;
    for (const auto& [e, v] : taylor) {
      int total = 0;
      for (int d : e) total += d;
      if (total > degree) continue;
      ++seen;
      const double want = fa_series_coefficient(p, e);
      EXPECT_LE(std::fabs(v - want), 1e-13 * std::fabs(want));
    }
    // every monomial up to the degree is present
    std::size_t expected = 0;
    for (int d = 0; d <= degree; ++d) expected += enumerate_multi_indices(static_cast<int>(p.n()), d).size();
    EXPECT_EQ(seen, expected);
  }
}

TEST(Taylor, TwoVariableExpansionTermForTerm) {
  const LauricellaAParams p{0.3, {0.2, 0.4}, {0.7, 0.9}};
  const auto dec = fa_decomposed_taylor(p, 4);
  const auto bc = appell_f2_expansion_taylor(p, 4);
  ASSERT_EQ(bc.size(), 15u);
  for (const auto& [e, v] : bc) {
    ASSERT_TRUE(dec.count(e));
    EXPECT_LE(std::fabs(dec.at(e) - v), 1e-13 * std::fabs(v));
    EXPECT_LE(std::fabs(fa_series_coefficient(p, e) - v), 1e-13 * std::fabs(v));
  }
  EXPECT_THROW(appell_f2_expansion_taylor({0.3, {0.2}, {0.7}}, 4), ParameterError);
  EXPECT_LT(rel(fa_recurrent(p, {0.1, 0.1}).value, oracle::kFa2), 1e-13);
}

TEST(Recurrent, DepthControl) {
  const LauricellaAParams p{1.3, {0.6, 1.1, 0.4}, {0.8, 2.1, 1.6}};
  const std::vector<double> x{0.3, -0.2, 0.25};
  for (int depth : {-1, 0, 1, 2}) EXPECT_LT(rel(fa_recurrent(p, x, {}, depth).value, oracle::kFa3Mixed), 1e-11);
  const LauricellaBParams q{{0.3, 0.4, 0.5}, {0.2, 0.3, 0.25}, 2.2};
  for (int depth : {-1, 0, 1, 2}) EXPECT_LT(rel(fb_recurrent(q, {0.5, -0.6, 0.7}, {}, depth).value, oracle::kFb3Wide), 1e-11);
}

TEST(OracleTriangle, RandomDraws) {
  Rng rng(2024);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 8; ++i) {
      const FaDraw a = random_fa_draw(rng, n);
      const double d = fa_direct(a.params, a.x).value;
      EXPECT_LT(rel(fa_decomposed(a.params, a.x).value, d), 1e-8) << "n=" << n;
      EXPECT_LT(rel(fa_recurrent(a.params, a.x).value, d), 1e-8) << "n=" << n;
      const FbDraw b = random_fb_draw(rng, n);
      const double e = fb_direct(b.params, b.x).value;
      EXPECT_LT(rel(fb_decomposed(b.params, b.x).value, e), 1e-8) << "n=" << n;
      EXPECT_LT(rel(fb_recurrent(b.params, b.x).value, e), 1e-8) << "n=" << n;
    }
  }
}
