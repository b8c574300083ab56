#pragma once

#include <vector>

namespace lauricella {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of the outer-level tanh-sinh error estimates
  long evaluations = 0;
};

// F_A(a; b; c; -Y_1, ..., -Y_n) for Y_k >= 0 from the Euler integral over the
// unit cube. Needs 0 < b_k < c_k; axes with b_k = 0 are dropped.
QuadratureResult fa_euler_integral(double a, const std::vector<double>& b, const std::vector<double>& c,
                                   const std::vector<double>& Y, double tol = 1e-10);

// F_B(a; b; c; -Y_1, ..., -Y_n) for Y_k >= 0 from the Dirichlet integral over
// the simplex. Needs b_k > 0 and c > sum b; axes with b_k = 0 are dropped.
QuadratureResult fb_dirichlet_integral(const std::vector<double>& a, const std::vector<double>& b, double c,
                                       const std::vector<double>& Y, double tol = 1e-10);

}  // namespace lauricella
