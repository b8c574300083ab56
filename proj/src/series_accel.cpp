#include "lauricella/series_accel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "lauricella/errors.hpp"

namespace lauricella {

namespace {

template <class Real>
Extrapolation richardson_impl(const std::vector<Real>& partial_sums, double p, int max_order, int stride) {
  if (partial_sums.empty()) throw ParameterError("richardson: empty sequence");
  if (!(p > 0.0)) throw ParameterError("richardson: tail exponent must be positive");
  const int last = static_cast<int>(partial_sums.size()) - 1;
  std::vector<Real> estimates;
  for (int K = 1; K <= max_order; ++K) {
    if (last - K * stride < 1) break;
    Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> M(K + 1, K + 1);
    Eigen::Matrix<Real, Eigen::Dynamic, 1> rhs(K + 1);
    for (int r = 0; r <= K; ++r) {
      const int N = last - r * stride;
      M(r, 0) = 1.0;
      // columns scaled by their value at the largest N to keep the solve balanced
      for (int j = 1; j <= K; ++j) M(r, j) = std::pow(static_cast<Real>(N) / last, static_cast<Real>(-(p + j - 1)));
      rhs(r) = partial_sums[static_cast<std::size_t>(N)];
    }
    estimates.push_back(M.colPivHouseholderQr().solve(rhs)(0));
  }
  Extrapolation out;
  if (estimates.empty()) {
    out.value = static_cast<double>(partial_sums.back());
    out.error_estimate = std::numeric_limits<double>::infinity();
    return out;
  }
  if (estimates.size() == 1) {
    out.value = static_cast<double>(estimates[0]);
    out.error_estimate = static_cast<double>(std::fabs(estimates[0] - partial_sums.back()));
    out.order = 1;
    return out;
  }
  Real best = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 1; i < estimates.size(); ++i) {
    const Real gap = std::fabs(estimates[i] - estimates[i - 1]);
    if (gap < best) {
      best = gap;
      out.value = static_cast<double>(estimates[i]);
      out.order = static_cast<int>(i) + 1;
    }
  }
  out.error_estimate = static_cast<double>(best);
  return out;
}

}  // namespace

Extrapolation richardson_known_exponent(const std::vector<double>& partial_sums, double p, int max_order, int stride) {
  return richardson_impl(partial_sums, p, max_order, stride);
}

Extrapolation richardson_known_exponent(const std::vector<long double>& partial_sums, double p, int max_order,
                                        int stride) {
  return richardson_impl(partial_sums, p, max_order, stride);
}

Extrapolation wynn_epsilon(const std::vector<double>& s) {
  if (s.empty()) throw ParameterError("wynn: empty sequence");
  // e_{-1} = 0, e_0 = s; e_{k+1}[i] = e_{k-1}[i+1] + 1/(e_k[i+1] - e_k[i]).
  // tails[c] is the newest entry of even column 2c.
  std::vector<double> tails{s.back()};
  std::vector<double> prev(s.size() + 1, 0.0);
  std::vector<double> cur(s);
  int k = 0;
  while (cur.size() > 1) {
    std::vector<double> next(cur.size() - 1);
    bool broken = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double d = cur[i + 1] - cur[i];
      if (d == 0.0 || !std::isfinite(d)) {
        broken = true;
        break;
      }
      next[i] = prev[i + 1] + 1.0 / d;
    }
    if (broken) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (++k % 2 == 0) tails.push_back(cur.back());
  }
  Extrapolation out;
  out.value = tails.back();
  out.error_estimate = std::numeric_limits<double>::infinity();
  if (tails.size() == 1 && s.size() > 1) out.error_estimate = std::fabs(s.back() - s[s.size() - 2]);
  // the highest columns amplify rounding, so keep the most stable neighbour pair
  for (std::size_t c = 1; c < tails.size(); ++c) {
    const double gap = std::fabs(tails[c] - tails[c - 1]);
    if (gap <= out.error_estimate) {
      out.error_estimate = gap;
      out.value = tails[c];
      out.order = static_cast<int>(2 * c);
    }
  }
  return out;
}

}  // namespace lauricella
