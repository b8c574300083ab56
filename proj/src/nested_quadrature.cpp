#include "lauricella/nested_quadrature.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "lauricella/errors.hpp"

namespace lauricella {

namespace {

using boost::math::quadrature::tanh_sinh;

// f(x, distance to lo, distance to hi), with both distances accurate near their endpoint.
using Integrand = std::function<double(double, double, double)>;

// Integrates over [lo, hi] through the affine map onto [0, 1]; boost's error
// estimate on short intervals is inflated by roughly 1 / (hi - lo) otherwise.
double integrate_piece(tanh_sinh<double>& ts, const Integrand& f, double lo, double hi, double tol,
                       double& err_sum) {
  if (!(hi > lo)) return 0.0;
  const double width = hi - lo;
  auto g = [&](double u, double uc) {
    // boost passes uc < 0 as -u near 0, uc > 0 as 1 - u near 1
    const double dl = width * (uc < 0.0 ? -uc : u);
    const double dh = width * (uc > 0.0 ? uc : 1.0 - u);
    // nodes that round onto an endpoint carry negligible weight; skip the singular value there
    if (!(dl > 0.0) || !(dh > 0.0)) return 0.0;
    return f(lo + dl, dl, dh);
  };
  double err = 0.0;
  const double v = width * ts.integrate(g, 0.0, 1.0, tol, &err);
  err_sum += width * err;
  return v;
}

double integrate_split(tanh_sinh<double>& ts, const Integrand& f, double lo, double hi, double split,
                       double tol, double& err_sum) {
  if (split > lo && split < hi) {
    // distances measured from the outer interval's ends
    Integrand left = [&](double x, double dl, double dh) { return f(x, dl, (hi - split) + dh); };
    Integrand right = [&](double x, double dl, double dh) { return f(x, (split - lo) + dl, dh); };
    return integrate_piece(ts, left, lo, split, tol, err_sum) + integrate_piece(ts, right, split, hi, tol, err_sum);
  }
  return integrate_piece(ts, f, lo, hi, tol, err_sum);
}

struct Axes {
  std::vector<double> a, b, c, Y;
};

}  // namespace

QuadratureResult fa_euler_integral(double a, const std::vector<double>& b, const std::vector<double>& c,
                                   const std::vector<double>& Y, double tol) {
  if (b.size() != c.size() || b.size() != Y.size()) throw ParameterError("fa_euler_integral: length mismatch");
  Axes ax;
  double log_norm = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] == 0.0) continue;
    if (!(b[k] > 0.0 && c[k] > b[k])) throw DomainError("Euler integral needs 0 < b_k < c_k");
    if (!(Y[k] >= 0.0)) throw DomainError("Euler integral needs Y_k >= 0");
    ax.b.push_back(b[k]);
    ax.c.push_back(c[k]);
    ax.Y.push_back(Y[k]);
    log_norm += std::lgamma(c[k]) - std::lgamma(b[k]) - std::lgamma(c[k] - b[k]);
  }
  QuadratureResult out;
  const std::size_t n = ax.b.size();
  if (n == 0) {
    out.value = 1.0;
    return out;
  }
  std::vector<std::unique_ptr<tanh_sinh<double>>> rules;
  for (std::size_t k = 0; k < n; ++k) rules.push_back(std::make_unique<tanh_sinh<double>>());

  double outer_err = 0.0;
  // level(k, s): integral over t_k..t_n given s = sum_{j<k} Y_j t_j
  std::function<double(std::size_t, double, double&)> level = [&](std::size_t k, double s, double& err) -> double {
    if (k == n) {
      ++out.evaluations;
      return std::pow(1.0 + s, -a);
    }
    const double bk = ax.b[k], ck = ax.c[k], yk = ax.Y[k];
    Integrand f = [&, k, s](double, double dl, double dh) {
      const double w = std::pow(dl, bk - 1.0) * std::pow(dh, ck - bk - 1.0);
      if (w == 0.0) return 0.0;
      double inner_err = 0.0;
      return w * level(k + 1, s + yk * dl, inner_err);
    };
    const double split = yk > 0.0 ? (1.0 + s) / yk : 2.0;
    return integrate_split(*rules[k], f, 0.0, 1.0, split, tol, err);
  };
  const double I = level(0, 0.0, outer_err);
  out.value = std::exp(log_norm) * I;
  out.error_estimate = std::exp(log_norm) * outer_err;
  return out;
}

QuadratureResult fb_dirichlet_integral(const std::vector<double>& a, const std::vector<double>& b, double c,
                                       const std::vector<double>& Y, double tol) {
  if (a.size() != b.size() || b.size() != Y.size()) throw ParameterError("fb_dirichlet_integral: length mismatch");
  Axes ax;
  double bsum = 0.0;
  double log_norm = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] == 0.0) continue;
    if (!(b[k] > 0.0)) throw DomainError("Dirichlet integral needs b_k > 0");
    if (!(Y[k] >= 0.0)) throw DomainError("Dirichlet integral needs Y_k >= 0");
    ax.a.push_back(a[k]);
    ax.b.push_back(b[k]);
    ax.Y.push_back(Y[k]);
    bsum += b[k];
    log_norm -= std::lgamma(b[k]);
  }
  QuadratureResult out;
  const std::size_t n = ax.b.size();
  if (n == 0) {
    out.value = 1.0;
    return out;
  }
  const double last_exp = c - bsum - 1.0;
  if (!(last_exp > -1.0)) throw DomainError("Dirichlet integral needs c > sum b_k");
  log_norm += std::lgamma(c) - std::lgamma(c - bsum);

  std::vector<std::unique_ptr<tanh_sinh<double>>> rules;
  for (std::size_t k = 0; k < n; ++k) rules.push_back(std::make_unique<tanh_sinh<double>>());

  double outer_err = 0.0;
  // level(k, r): integral over t_k..t_n on the simplex slice of remaining length r
  std::function<double(std::size_t, double, double&)> level = [&](std::size_t k, double r, double& err) -> double {
    if (k == n) {
      ++out.evaluations;
      return std::pow(r, last_exp);
    }
    const double ak = ax.a[k], bk = ax.b[k], yk = ax.Y[k];
    Integrand f = [&, k](double, double dl, double dh) {
      const double w = std::pow(dl, bk - 1.0) * std::pow(1.0 + yk * dl, -ak);
      if (w == 0.0) return 0.0;
      double inner_err = 0.0;
      return w * level(k + 1, dh, inner_err);
    };
    const double split = yk > 0.0 ? 1.0 / yk : 2.0 * r;
    return integrate_split(*rules[k], f, 0.0, r, split, tol, err);
  };
  const double I = level(0, 1.0, outer_err);
  out.value = std::exp(log_norm) * I;
  out.error_estimate = std::exp(log_norm) * outer_err;
  return out;
}

}  // namespace lauricella
