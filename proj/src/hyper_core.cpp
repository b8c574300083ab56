#include "lauricella/hyper_core.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace lauricella {

namespace {

constexpr int kExactPochhammerLimit = 64;

// Sums the 2F1 series at 0 <= y < 1; stops after three terms whose geometric
// tail bound is below rel_tol * |sum|.
EvalResult sum_gauss_series(double a, double b, double c, double y, const Truncation& t) {
  EvalResult r;
  double term = 1.0;
  double sum = 1.0;
  int small_run = 0;
  std::int64_t i = 0;
  for (;;) {
    if (i + 1 >= t.max_terms) {
      r.converged = false;
      break;
    }
    const double di = static_cast<double>(i);
    const double next = term * (a + di) * (b + di) * y / ((c + di) * (1.0 + di));
    ++i;
    sum += next;
    if (next == 0.0) {  // terminating series
      term = next;
      r.converged = true;
      break;
    }
    // geometric bound on the remaining tail from the current term ratio
    const double ratio = std::fabs(next / term);
    term = next;
    if (ratio < 1.0 && std::fabs(term) * ratio / (1.0 - ratio) <= t.rel_tol * std::fabs(sum)) {
      if (++small_run == 3) {
        r.converged = true;
        break;
      }
    } else {
      small_run = 0;
    }
    if (!std::isfinite(sum)) {
      r.converged = false;
      break;
    }
  }
  r.value = sum;
  r.tail_estimate = std::fabs(term);
  r.terms_used = i + 1;
  return r;
}

int negative_bases(double p, double q) {
  return (p < 0.0 && !is_nonpositive_integer(p) ? 1 : 0) + (q < 0.0 && !is_nonpositive_integer(q) ? 1 : 0);
}

}  // namespace

void Truncation::validate() const {
  if (!(rel_tol > 0.0)) throw ParameterError("rel_tol must be positive");
  if (max_total_degree < 1) throw ParameterError("max_total_degree must be at least 1");
  if (max_terms < 1) throw ParameterError("max_terms must be at least 1");
}

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

SignedLog operator*(SignedLog lhs, SignedLog rhs) {
  if (lhs.sign == 0 || rhs.sign == 0) return {0.0, 0};
  return {lhs.log_abs + rhs.log_abs, lhs.sign * rhs.sign};
}

SignedLog operator/(SignedLog lhs, SignedLog rhs) {
  if (rhs.sign == 0) throw ParameterError("division by a vanishing factor");
  if (lhs.sign == 0) return {0.0, 0};
  return {lhs.log_abs - rhs.log_abs, lhs.sign * rhs.sign};
}

bool is_nonpositive_integer(double v) {
  if (v > 1e-12) return false;
  return std::fabs(v - std::round(v)) <= 1e-12;
}

double pochhammer(double a, int m) {
  if (m < 0) throw ParameterError("pochhammer: negative length");
  if (m < kExactPochhammerLimit || !(a > 0.0)) {
    if (m >= kExactPochhammerLimit) return log_pochhammer(a, m).value();
    double p = 1.0;
    for (int i = 0; i < m; ++i) p *= a + i;
    return p;
  }
  return std::exp(boost::math::lgamma(a + m) - boost::math::lgamma(a));
}

SignedLog log_gamma_signed(double x) {
  if (is_nonpositive_integer(x)) throw DomainError("gamma pole at " + std::to_string(x));
  int sign = 1;
  const double lg = boost::math::lgamma(x, &sign);
  return {lg, sign};
}

SignedLog log_pochhammer(double a, int m) {
  if (m < 0) throw ParameterError("pochhammer: negative length");
  if (m == 0) return {0.0, 1};
  if (is_nonpositive_integer(a) && m > -std::round(a)) return {0.0, 0};
  if (m < kExactPochhammerLimit) {
    SignedLog r{0.0, 1};
    for (int i = 0; i < m; ++i) {
      const double f = a + i;
      if (f == 0.0) return {0.0, 0};
      r.log_abs += std::log(std::fabs(f));
      if (f < 0.0) r.sign = -r.sign;
    }
    return r;
  }
  return log_gamma_signed(a + m) / log_gamma_signed(a);
}

Gauss2F1Parts gauss_2f1_parts(const GaussParams& p, double x, const Truncation& t) {
  t.validate();
  if (std::isnan(x) || x >= 1.0) throw DomainError("gauss_2f1 requires x < 1");
  if (is_nonpositive_integer(p.c)) throw ParameterError("gauss_2f1: c is a non-positive integer");
  Gauss2F1Parts out;
  if (x >= 0.0) {
    out.series = sum_gauss_series(p.a, p.b, p.c, x, t);
    return out;
  }
  // Pfaff transform; F is symmetric in (a, b), so keep whichever ordering has fewer
  // negative Pochhammer bases in the transformed series.
  const double y = x / (x - 1.0);
  const double log1mx = std::log1p(-x);
  // A non-positive integer kept in the transformed series keeps it a polynomial.
  const bool swap = is_nonpositive_integer(p.a) != is_nonpositive_integer(p.b)
                        ? is_nonpositive_integer(p.a)
                        : negative_bases(p.b, p.c - p.a) > negative_bases(p.a, p.c - p.b);
  const double kept = swap ? p.a : p.b;
  const double other = swap ? p.b : p.a;
  out.log_prefactor = -kept * log1mx;
  out.series = sum_gauss_series(p.c - other, kept, p.c, y, t);
  return out;
}

EvalResult gauss_2f1(const GaussParams& p, double x, const Truncation& t) {
  Gauss2F1Parts parts = gauss_2f1_parts(p, x, t);
  EvalResult r = parts.series;
  const double scale = std::exp(parts.log_prefactor);
  r.value *= scale;
  r.tail_estimate *= scale;
  return r;
}

double gauss_2f1_at_one(const GaussParams& p) {
  if (is_nonpositive_integer(p.c)) throw ParameterError("gauss_2f1_at_one: c is a non-positive integer");
  const double excess = p.c - p.a - p.b;
  if (!(excess > 0.0)) throw DomainError("gauss_2f1_at_one requires c - a - b > 0");
  if (is_nonpositive_integer(p.c - p.a) || is_nonpositive_integer(p.c - p.b)) return 0.0;
  const SignedLog r = log_gamma_signed(p.c) * log_gamma_signed(excess) /
                      (log_gamma_signed(p.c - p.a) * log_gamma_signed(p.c - p.b));
  return r.value();
}

}  // namespace lauricella
