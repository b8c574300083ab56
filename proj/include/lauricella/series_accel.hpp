#pragma once

#include <vector>

namespace lauricella {

struct Extrapolation {
  double value = 0.0;
  double error_estimate = 0.0;  // spread between the two best neighbouring orders
  int order = 0;
};

// partial_sums[N] is the sum of blocks 0..N. Fits
//   S_N = S + N^{-p} (c_0 + c_1/N + ... + c_{K-1}/N^{K-1})
// on K+1 sums spaced by `stride` and ending at the last one, for K = 1..max_order,
// and keeps the order whose estimate moves least against its neighbour.
Extrapolation richardson_known_exponent(const std::vector<double>& partial_sums, double p, int max_order = 8,
                                        int stride = 3);
// Same fit carried out in long double, for sums accumulated in long double.
Extrapolation richardson_known_exponent(const std::vector<long double>& partial_sums, double p, int max_order = 8,
                                        int stride = 3);

// Wynn's epsilon algorithm on a sequence of partial sums; returns the
// last even-column entry and the gap to the previous one.
Extrapolation wynn_epsilon(const std::vector<double>& partial_sums);

}  // namespace lauricella
