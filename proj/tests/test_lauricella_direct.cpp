#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lauricella/draws.hpp"
#include "lauricella/hyper_core.hpp"
#include "lauricella/lauricella_direct.hpp"
#include "oracle_values.hpp"

using namespace lauricella;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::max(1e-300, std::fabs(want)); }

// Plain nested double loop, the definition written out for n = 2.
double fa2_double_loop(const LauricellaAParams& p, double x, double y, int degree) {
  double sum = 0.0;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      sum += pochhammer(p.a, i + j) * pochhammer(p.b[0], i) * pochhammer(p.b[1], j) /
             (pochhammer(p.c[0], i) * pochhammer(p.c[1], j) * std::tgamma(i + 1.0) * std::tgamma(j + 1.0)) *
             std::pow(x, i) * std::pow(y, j);
  return sum;
}

double fb2_double_loop(const LauricellaBParams& p, double x, double y, int degree) {
  double sum = 0.0;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      sum += pochhammer(p.a[0], i) * pochhammer(p.a[1], j) * pochhammer(p.b[0], i) * pochhammer(p.b[1], j) /
             (pochhammer(p.c, i + j) * std::tgamma(i + 1.0) * std::tgamma(j + 1.0)) * std::pow(x, i) *
             std::pow(y, j);
  return sum;
}

}  // namespace

TEST(MultiIndex, Enumeration) {
  EXPECT_EQ(enumerate_multi_indices(2, 0), (std::vector<std::vector<int>>{{0, 0}}));
  EXPECT_EQ(enumerate_multi_indices(2, 2), (std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(enumerate_multi_indices(3, 4).size(), 15u);
  const auto v = enumerate_multi_indices(4, 6);
  EXPECT_EQ(v.size(), 84u);  // C(9, 3)
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
  for (const auto& m : v) EXPECT_EQ(m[0] + m[1] + m[2] + m[3], 6);
  EXPECT_THROW(enumerate_multi_indices(0, 1), ParameterError);
}

TEST(FaDirect, Examples) {
  EXPECT_EQ(fa_direct({0.3, {0.2, 0.4}, {0.7, 0.9}}, {0.0, 0.0}).value, 1.0);
  EXPECT_LT(rel(fa_direct({0.3, {0.7}, {1.1}}, {0.4}).value, gauss_2f1({0.3, 0.7, 1.1}, 0.4).value), 1e-13);
  const LauricellaAParams p{0.3, {0.2, 0.4}, {0.7, 0.9}};
  EXPECT_LT(rel(fa_direct(p, {0.1, 0.1}).value, fa2_double_loop(p, 0.1, 0.1, 60)), 1e-10);
  EXPECT_LT(rel(fa_direct(p, {0.1, 0.1}).value, oracle::kFa2), 1e-13);
  EXPECT_LT(rel(fa_direct({0.25, {0.2, 0.3, 0.4}, {0.9, 1.1, 1.3}}, {0.05, 0.07, 0.06}).value, oracle::kFa3), 1e-13);
  EXPECT_LT(rel(fa_direct({1.3, {0.6, 1.1, 0.4}, {0.8, 2.1, 1.6}}, {0.3, -0.2, 0.25}).value, oracle::kFa3Mixed), 1e-11);
}

TEST(FaDirect, Errors) {
  EXPECT_THROW(fa_direct({0.3, {0.2, 0.4}, {0.7, 0.9}}, {0.6, -0.4}), DomainError);
  EXPECT_THROW(fa_direct({0.3, {0.2, 0.4}, {0.7, -1.0}}, {0.1, 0.1}), ParameterError);
  EXPECT_THROW(fa_direct({0.3, {0.2, 0.4}, {0.7, 0.9}}, {0.1}), ParameterError);
  EXPECT_THROW(fa_direct({0.3, {}, {}}, {}), ParameterError);
}

TEST(FbDirect, Examples) {
  EXPECT_EQ(fb_direct({{0.4, 0.5}, {0.3, 0.6}, 1.7}, {0.0, 0.0}).value, 1.0);
  EXPECT_LT(rel(fb_direct({{0.5}, {0.6}, 1.3}, {0.3}).value, gauss_2f1({0.5, 0.6, 1.3}, 0.3).value), 1e-13);
  const LauricellaBParams p{{0.4, 0.5}, {0.3, 0.6}, 1.7};
  EXPECT_LT(rel(fb_direct(p, {0.2, -0.3}).value, fb2_double_loop(p, 0.2, -0.3, 60)), 1e-10);
  EXPECT_LT(rel(fb_direct(p, {0.2, 0.15}).value, oracle::kFb2), 1e-13);
  const LauricellaBParams p3{{0.3, 0.4, 0.5}, {0.2, 0.3, 0.25}, 2.2};
  EXPECT_LT(rel(fb_direct(p3, {0.1, 0.08, 0.12}).value, oracle::kFb3), 1e-13);
  EXPECT_LT(rel(fb_direct(p3, {0.5, -0.6, 0.7}).value, oracle::kFb3Wide), 1e-11);
  EXPECT_THROW(fb_direct(p, {1.0, 0.1}), DomainError);
  EXPECT_THROW(fb_direct({{0.4}, {0.3}, -3.0}, {0.1}), ParameterError);
}

TEST(Direct, ReducesToGaussForOneVariable) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const FaDraw fa = random_fa_draw(rng, 1);
    const double want = gauss_2f1({fa.params.a, fa.params.b[0], fa.params.c[0]}, fa.x[0]).value;
    EXPECT_LT(rel(fa_direct(fa.params, fa.x).value, want), 1e-11);
    const FbDraw fb = random_fb_draw(rng, 1);
    const double wantb = gauss_2f1({fb.params.a[0], fb.params.b[0], fb.params.c}, fb.x[0]).value;
    EXPECT_LT(rel(fb_direct(fb.params, fb.x).value, wantb), 1e-11);
  }
}

TEST(Direct, PermutationSymmetry) {
  const LauricellaAParams pa{1.3, {0.6, 1.1, 0.4}, {0.8, 2.1, 1.6}};
  const std::vector<double> xa{0.3, -0.2, 0.25};
  const LauricellaBParams pb{{0.3, 0.4, 0.5}, {0.2, 0.3, 0.25}, 2.2};
  const std::vector<double> xb{0.5, -0.6, 0.7};
  const double fa0 = fa_direct(pa, xa).value, fb0 = fb_direct(pb, xb).value;
  std::vector<int> perm{0, 1, 2};
  do {
    LauricellaAParams qa{pa.a, {}, {}};
    LauricellaBParams qb{{}, {}, pb.c};
    std::vector<double> ya, yb;
    for (int k : perm) {
      qa.b.push_back(pa.b[k]);
      qa.c.push_back(pa.c[k]);
      ya.push_back(xa[k]);
      qb.a.push_back(pb.a[k]);
      qb.b.push_back(pb.b[k]);
      yb.push_back(xb[k]);
    }
    EXPECT_LT(rel(fa_direct(qa, ya).value, fa0), 1e-12);
    EXPECT_LT(rel(fb_direct(qb, yb).value, fb0), 1e-12);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Direct, RaisingTheDegreeCapKeepsConvergedValues) {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const FaDraw d = random_fa_draw(rng, 3);
    Truncation lo, hi;
    lo.max_total_degree = 120;
    hi.max_total_degree = 400;
    const EvalResult a = fa_direct(d.params, d.x, lo), b = fa_direct(d.params, d.x, hi);
    ASSERT_TRUE(a.converged);
    EXPECT_LE(std::fabs(a.value - b.value), lo.rel_tol * std::fabs(a.value));
    EXPECT_LE(a.tail_estimate, lo.rel_tol * std::max(1.0, std::fabs(a.value)));
  }
}

TEST(Direct, CapsReportNonConvergence) {
  Truncation t;
  t.max_total_degree = 3;
  EXPECT_FALSE(fa_direct({0.3, {0.2, 0.4}, {0.7, 0.9}}, {0.5, 0.4}, t).converged);
  t.max_total_degree = 200;
  t.max_terms = 10;
  EXPECT_FALSE(fb_direct({{0.4, 0.5}, {0.3, 0.6}, 1.7}, {0.5, 0.4}, t).converged);
}
