#include <gtest/gtest.h>

#include <cmath>

#include "lauricella/draws.hpp"
#include "lauricella/identities.hpp"
#include "oracle_values.hpp"

using namespace lauricella;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::max(1e-300, std::fabs(want)); }

Truncation degree(int d) {
  Truncation t;
  t.max_total_degree = d;
  return t;
}

}  // namespace

TEST(SummationFa, OneVariableIsTrivial) {
  const IdentityReport r = lemma2_fa(1.7, {0.4});
  EXPECT_DOUBLE_EQ(r.lhs, 1.0);
  EXPECT_DOUBLE_EQ(r.rhs, 1.0);
  EXPECT_TRUE(r.converged);
}

TEST(SummationFa, TwoVariablesGiveGaussTheorem) {
  const IdentityReport r = lemma2_fa(1.5, {0.3, 0.4}, degree(60));
  EXPECT_LT(rel(r.rhs, gauss_2f1_at_one({0.3, 0.4, 1.5})), 1e-14);
  EXPECT_LE(r.rel_err, 1e-10);
  EXPECT_TRUE(r.converged);
}

TEST(SummationFa, ThreeVariables) {
  const IdentityReport r = lemma2_fa(2.0, {0.3, 0.4, 0.5}, degree(60));
  EXPECT_LT(rel(r.rhs, oracle::kSumFaRhs), 1e-14);
  EXPECT_LE(r.rel_err, 1e-8);
  EXPECT_TRUE(r.converged);
}

TEST(SummationFa, PartialSumsIncreaseTowardTheRhs) {
  const auto s = lemma2_fa_partial_sums(2.0, {0.3, 0.4, 0.5}, 30);
  ASSERT_EQ(s.size(), 31u);
  EXPECT_DOUBLE_EQ(s[0], 1.0);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_GT(s[i], s[i - 1]);
  EXPECT_LT(s.back(), lemma2_fa_rhs(2.0, {0.3, 0.4, 0.5}));
}

TEST(SummationFa, RecurrenceBetweenSizes) {
  // T_{n+1}(a, b_1..b_{n+1}) = prod_k G(a)G(a-b_k-b_{n+1}) / (G(a-b_{n+1})G(a-b_k)) * T_n(a - b_{n+1}, b_1..b_n)
  const double a = 2.2;
  for (const std::vector<double>& b : {std::vector<double>{0.3, 0.2, 0.35}, std::vector<double>{0.1, 0.4, 0.2, 0.3}}) {
    const double last = b.back();
    const std::vector<double> head(b.begin(), b.end() - 1);
    double factor = 1.0;
    for (double bk : head)
      factor *= std::tgamma(a) * std::tgamma(a - bk - last) / (std::tgamma(a - last) * std::tgamma(a - bk));
    const double big = lemma2_fa(a, b, degree(60)).lhs;
    const double small = lemma2_fa(a - last, head, degree(60)).lhs;
    EXPECT_LE(rel(big, factor * small), 1e-7) << "n+1=" << b.size();
  }
}

TEST(SummationFb, Examples) {
  EXPECT_DOUBLE_EQ(lemma2_fb(1.7, {0.4}).lhs, 1.0);
  const IdentityReport r2 = lemma2_fb(1.5, {0.3, 0.4}, degree(60));
  EXPECT_LE(r2.rel_err, 1e-8);
  EXPECT_LT(rel(r2.rhs, 1.0 / lemma2_fa_rhs(1.5, {0.3, 0.4})), 1e-14);
  const IdentityReport r3 = lemma2_fb(2.4, {0.2, 0.3, 0.4}, degree(60));
  EXPECT_LE(r3.rel_err, 1e-7);
  EXPECT_TRUE(r3.converged);
  EXPECT_LT(rel(lemma2_fb_rhs(2.0, {0.3, 0.4, 0.5}), oracle::kSumFbRhs), 1e-14);
}

TEST(SummationFb, PrintedCoefficientMissesTheRhs) {
  const IdentityReport r = lemma2_fb(2.4, {0.2, 0.3, 0.4}, degree(60), FbCoefficientForm::printed);
  EXPECT_GT(r.rel_err, 1e-4);
}

TEST(Summation, RandomDraws) {
  Rng rng(99);
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i < 3; ++i) {
      const SummationDraw d = random_summation_draw(rng, n);
      EXPECT_LE(lemma2_fa(d.a, d.b, degree(60)).rel_err, 1e-7) << "n=" << n << " a=" << d.a;
      EXPECT_LE(lemma2_fb(d.a, d.b, degree(60)).rel_err, 1e-7) << "n=" << n << " a=" << d.a;
    }
  }
}

TEST(Summation, Preconditions) {
  EXPECT_THROW(lemma2_fa(0.5, {0.3, 0.4}), DomainError);
  EXPECT_THROW(lemma2_fa(-2.0, {-3.0, 0.4}), ParameterError);
  EXPECT_THROW(lemma2_fb(1.0, {}), ParameterError);
}

TEST(Limits, FaExamples) {
  const IdentityReport r1 = lemma3_fa({1.2, {0.3}, {0.9}}, {1e-2, 1e-3, 1e-4});
  EXPECT_LE(r1.rel_err, 1e-3);
  EXPECT_TRUE(r1.monotone);
  EXPECT_LT(rel(r1.rhs, std::tgamma(0.9) * std::tgamma(0.9) / (std::tgamma(1.2) * std::tgamma(0.6))), 1e-13);
  const IdentityReport r2 = lemma3_fa({1.5, {0.3, 0.4}, {0.8, 1.1}}, {1e-2, 1e-3, 1e-4});
  EXPECT_LE(r2.rel_err, 1e-3);
  EXPECT_TRUE(r2.monotone);
  const IdentityReport zero = lemma3_fa({1.5, {0.0, 0.0}, {0.8, 1.1}}, {1e-3});
  EXPECT_EQ(zero.lhs, 1.0);
  EXPECT_EQ(zero.rhs, 1.0);
}

TEST(Limits, FbExamples) {
  const IdentityReport r1 = lemma3_fb({{1.4}, {0.3}, 1.2}, {1e-2, 1e-3, 1e-4});
  EXPECT_LE(r1.rel_err, 1e-3);
  EXPECT_TRUE(r1.monotone);
  const IdentityReport r2 = lemma3_fb({{1.3, 1.5}, {0.3, 0.4}, 2.0}, {1e-2, 1e-3, 1e-4});
  EXPECT_LE(r2.rel_err, 1e-3);
  EXPECT_TRUE(r2.monotone);
  const IdentityReport zero = lemma3_fb({{1.3, 1.5}, {0.0, 0.0}, 2.0}, {1e-3});
  EXPECT_EQ(zero.lhs, 1.0);
  EXPECT_EQ(zero.rhs, 1.0);
}

TEST(Limits, DecompositionRouteAgreesForOneVariable) {
  const LauricellaAParams p{1.2, {0.3}, {0.9}};
  const IdentityReport a = lemma3_fa(p, {1e-2, 1e-3}, {}, Lemma3Route::integral);
  const IdentityReport b = lemma3_fa(p, {1e-2, 1e-3}, {}, Lemma3Route::decomposition);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_LT(rel(a.lhs_values[i], b.lhs_values[i]), 1e-7);
}

TEST(Limits, Preconditions) {
  EXPECT_THROW(lemma3_fa({1.2, {0.3}, {0.9}}, {0.5}), DomainError);
  EXPECT_THROW(lemma3_fa({1.2, {0.3}, {0.9}}, {}), ParameterError);
  EXPECT_THROW(lemma3_fa({0.5, {0.3, 0.4}, {0.9, 1.0}}, {1e-2}), DomainError);
  EXPECT_THROW(lemma3_fb({{0.3}, {0.3}, 1.2}, {1e-2}), DomainError);
  EXPECT_THROW(lemma3_fb({{1.3}, {0.3}, 0.2}, {1e-2}), DomainError);
}
