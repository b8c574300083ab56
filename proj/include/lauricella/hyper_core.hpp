#pragma once

#include <cstdint>

#include "lauricella/errors.hpp"

namespace lauricella {

struct GaussParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
};

struct Truncation {
  double rel_tol = 1e-12;
  int max_total_degree = 200;
  std::int64_t max_terms = 10'000'000;

  void validate() const;
};

struct EvalResult {
  double value = 0.0;
  double tail_estimate = 0.0;
  std::int64_t terms_used = 0;
  bool converged = false;
};

// log|x| and sign of a real quantity; sign 0 encodes an exact zero.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
};

SignedLog operator*(SignedLog lhs, SignedLog rhs);
SignedLog operator/(SignedLog lhs, SignedLog rhs);

// True when v is within 1e-12 of 0, -1, -2, ...
bool is_nonpositive_integer(double v);

double pochhammer(double a, int m);
SignedLog log_pochhammer(double a, int m);
SignedLog log_gamma_signed(double x);

EvalResult gauss_2f1(const GaussParams& p, double x, const Truncation& t = {});
double gauss_2f1_at_one(const GaussParams& p);

// gauss_2f1 split as value = sign * exp(log_prefactor) * series.value, so callers
// that multiply by large powers of x can stay in log space.
struct Gauss2F1Parts {
  double log_prefactor = 0.0;
  EvalResult series;
};
Gauss2F1Parts gauss_2f1_parts(const GaussParams& p, double x, const Truncation& t = {});

}  // namespace lauricella
