#include "lauricella/pde_green.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "lauricella/decomposition.hpp"

namespace lauricella {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

void check_point(const PDEConfig& cfg, const Point& p, const char* what) {
  if (static_cast<int>(p.size()) != cfg.m)
    throw ParameterError(std::string(what) + " must have m = " + std::to_string(cfg.m) + " coordinates");
  for (double v : p)
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " has a non-finite coordinate");
}

double squared_distance(const Point& x, const Point& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
  return s;
}

double squared_norm(const Point& x) { return std::inner_product(x.begin(), x.end(), x.begin(), 0.0); }

// gamma0 * r^{-2 alpha0} * F_A(alpha0, alpha; 2 alpha; sigma) over the axes in `axes`.
double kernel(const PDEConfig& cfg, const std::vector<int>& axes, const Point& x, const Point& xi, double r2,
              const Truncation& t) {
  const double a0 = cfg.alpha0();
  double value = gamma0(cfg) * std::pow(r2, -a0);
  if (axes.empty()) return value;
  LauricellaAParams p;
  p.a = a0;
  std::vector<double> sigma;
  for (int k : axes) {
    p.b.push_back(cfg.alpha[k]);
    p.c.push_back(2.0 * cfg.alpha[k]);
    // 1 - r_k^2 / r^2 without the cancellation
    const double s = -4.0 * x[k] * xi[k] / r2;
    if (!(s < 1.0)) throw DomainError("fundamental solution: sigma_k >= 1");
    sigma.push_back(s);
  }
  const EvalResult f = fa_decomposed(p, sigma, t, ArgumentRange::below_one);
  if (!f.converged) throw NonConvergenceError("fundamental solution: F_A series did not converge");
  return value * f.value;
}

std::vector<int> all_axes(const PDEConfig& cfg) {
  std::vector<int> v(static_cast<std::size_t>(cfg.n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

double image_scale(const PDEConfig& cfg, double R0sq) { return std::pow(cfg.radius * cfg.radius / R0sq, cfg.alpha0()); }

void check_source(const PDEConfig& cfg, const Point& xi) {
  check_point(cfg, xi, "xi");
  const double R0 = std::sqrt(squared_norm(xi));
  if (!(R0 > 0.0)) throw DomainError("green function: xi at the origin");
  if (!(R0 < cfg.radius)) throw DomainError("green function: xi must lie inside the sphere");
}

double trace_weight(const PDEConfig& cfg, int axis, const Point& x) {
  double w = 1.0;
  for (int j = 0; j < cfg.n; ++j)
    if (j != axis) w *= std::pow(x[j], 2.0 * cfg.alpha[j]);
  return w;
}

void check_trace_point(const PDEConfig& cfg, int axis, const Point& x) {
  if (axis < 0 || axis >= cfg.n) throw ParameterError("trace kernel: axis must be in [0, n)");
  check_point(cfg, x, "trace point");
  if (std::fabs(x[axis]) > 1e-12 * cfg.radius) throw DomainError("trace point must have x_k = 0");
}

// 1-D composite Gauss-Legendre rule on [lo, hi].
std::vector<std::pair<double, double>> graded_rule(double lo, double hi, bool grade_lo, bool grade_hi,
                                                   const GridSpec& spec) {
  using GL = boost::math::quadrature::gauss<double, 16>;
  std::vector<double> cuts;
  const double w = (hi - lo) / spec.panels;
  auto geometric = [&](double from, double sign) {
    // from the end point inward: w r^L, ..., w r
    for (int j = spec.levels; j >= 1; --j) cuts.push_back(from + sign * w * std::pow(spec.ratio, j));
  };
  cuts.push_back(lo);
  if (grade_lo) geometric(lo, 1.0);
  for (int p = 1; p < spec.panels; ++p) cuts.push_back(lo + p * w);
  if (grade_hi) {
    std::vector<double> tail;
    for (int j = 1; j <= spec.levels; ++j) tail.push_back(hi - w * std::pow(spec.ratio, j));
    cuts.insert(cuts.end(), tail.begin(), tail.end());
  }
  cuts.push_back(hi);
  std::vector<std::pair<double, double>> out;
  const auto& xs = GL::abscissa();
  const auto& ws = GL::weights();
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double mid = 0.5 * (cuts[c] + cuts[c + 1]);
    const double half = 0.5 * (cuts[c + 1] - cuts[c]);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out.emplace_back(mid - half * xs[i], half * ws[i]);
      if (xs[i] != 0.0) out.emplace_back(mid + half * xs[i], half * ws[i]);
    }
  }
  return out;
}

}  // namespace

void PDEConfig::validate() const {
  if (m < 2) throw ParameterError("PDEConfig: m must be at least 2");
  if (n < 1 || n > m) throw ParameterError("PDEConfig: need 0 < n <= m");
  if (static_cast<int>(alpha.size()) != n) throw ParameterError("PDEConfig: alpha needs n entries");
  for (double a : alpha)
    if (!(a > 0.0 && 2.0 * a < 1.0)) throw ParameterError("PDEConfig: need 0 < 2 alpha_k < 1");
  if (!(radius > 0.0)) throw ParameterError("PDEConfig: radius must be positive");
  if (!(alpha0() > 0.0)) throw ParameterError("PDEConfig: alpha0 must be positive");
}

double PDEConfig::alpha0() const {
  return 0.5 * (m - 2) + std::accumulate(alpha.begin(), alpha.end(), 0.0);
}

double gamma0(const PDEConfig& cfg) {
  cfg.validate();
  const double a0 = cfg.alpha0();
  double lg = (2.0 * a0 - cfg.m) * std::log(2.0) + std::lgamma(a0) - 0.5 * cfg.m * std::log(kPi);
  for (double a : cfg.alpha) lg += std::lgamma(a) - std::lgamma(2.0 * a);
  return std::exp(lg);
}

double fundamental_solution(const PDEConfig& cfg, const Point& x, const Point& xi, const Truncation& t) {
  cfg.validate();
  check_point(cfg, x, "x");
  check_point(cfg, xi, "xi");
  const double r2 = squared_distance(x, xi);
  if (!(r2 > 0.0)) throw SingularityError("fundamental solution: x = xi");
  return kernel(cfg, all_axes(cfg), x, xi, r2, t);
}

Point inverse_point(const PDEConfig& cfg, const Point& xi) {
  check_source(cfg, xi);
  const double s = cfg.radius * cfg.radius / squared_norm(xi);
  Point out(xi);
  for (double& v : out) v *= s;
  return out;
}

double green_function(const PDEConfig& cfg, const Point& x, const Point& xi, const Truncation& t) {
  cfg.validate();
  check_point(cfg, x, "x");
  check_source(cfg, xi);
  const Point image = inverse_point(cfg, xi);
  const double q = fundamental_solution(cfg, x, xi, t);
  const double q_image = fundamental_solution(cfg, x, image, t);
  return q - image_scale(cfg, squared_norm(xi)) * q_image;
}

double green_trace_kernel(const PDEConfig& cfg, int axis, const Point& x_tilde, const Point& xi,
                          const Truncation& t) {
  cfg.validate();
  check_trace_point(cfg, axis, x_tilde);
  Point x(x_tilde);
  x[axis] = 0.0;
  return trace_weight(cfg, axis, x) * green_function(cfg, x, xi, t);
}

double green_trace_kernel_printed(const PDEConfig& cfg, int axis, const Point& x_tilde, const Point& xi,
                                  const Truncation& t) {
  cfg.validate();
  check_trace_point(cfg, axis, x_tilde);
  check_source(cfg, xi);
  Point x(x_tilde);
  x[axis] = 0.0;
  std::vector<int> others;
  for (int j = 0; j < cfg.n; ++j)
    if (j != axis) others.push_back(j);
  const double a = cfg.radius;
  const double a0 = cfg.alpha0();

  double direct = xi[axis] * xi[axis];
  for (int i = 0; i < cfg.m; ++i)
    if (i != axis) direct += (xi[i] - x[i]) * (xi[i] - x[i]);
  if (!(direct > 0.0)) throw SingularityError("trace kernel: x = xi");

  double printed = -(cfg.m - 2) * a * a;
  for (int i = 0; i < cfg.m; ++i) {
    if (i == axis) continue;
    printed += (a - x[i] * xi[i] / a) * (a - x[i] * xi[i] / a);
    for (int j = 0; j < cfg.m; ++j)
      if (j != i) printed += x[i] * x[i] * xi[j] * xi[j] / (a * a);
  }
  if (!(printed > 0.0)) throw SingularityError("trace kernel: x on the image point");

  // F_A^{(n-1)} factors; sigma for the image uses the image point and its own distance
  const Point image = inverse_point(cfg, xi);
  const double image_r2 = squared_distance(x, image);
  auto fa_factor = [&](const Point& source, double r2) {
    if (others.empty()) return 1.0;
    return kernel(cfg, others, x, source, r2, t) / (gamma0(cfg) * std::pow(r2, -a0));
  };
  const double first = fa_factor(xi, direct) / std::pow(direct, a0);
  const double second = fa_factor(image, image_r2) / std::pow(printed, a0);
  return gamma0(cfg) * trace_weight(cfg, axis, x) * (first - second);
}

std::string QuadraturePiece::tag() const { return axis < 0 ? "S" : "S" + std::to_string(axis + 1); }

QuadratureGrid make_grid(const PDEConfig& cfg, const GridSpec& spec) {
  cfg.validate();
  if (spec.panels < 2 || spec.levels < 0 || !(spec.ratio > 0.0 && spec.ratio < 1.0))
    throw ParameterError("GridSpec: need panels >= 2, levels >= 0, 0 < ratio < 1");
  const double a = cfg.radius;
  QuadratureGrid grid;
  auto singular = [&](int i) { return i < cfg.n; };

  if (cfg.m == 2) {
    QuadraturePiece sphere;
    const double lo = cfg.n >= 2 ? 0.0 : -kPi / 2;
    for (auto [th, w] : graded_rule(lo, kPi / 2, true, true, spec))
      sphere.nodes.push_back({{a * std::cos(th), a * std::sin(th)}, a * w});
    grid.pieces.push_back(std::move(sphere));
    for (int k = 0; k < cfg.n; ++k) {
      QuadraturePiece plane;
      plane.axis = k;
      const int other = 1 - k;
      const double ulo = singular(other) ? 0.0 : -a;
      for (auto [u, w] : graded_rule(ulo, a, true, true, spec)) {
        Point x(2, 0.0);
        x[other] = u;
        plane.nodes.push_back({x, w});
      }
      grid.pieces.push_back(std::move(plane));
    }
    return grid;
  }
  if (cfg.m == 3) {
    QuadraturePiece sphere;
    const double phi_lo = cfg.n >= 2 ? 0.0 : -kPi / 2;
    const double theta_hi = cfg.n >= 3 ? kPi / 2 : kPi;
    const auto phis = graded_rule(phi_lo, kPi / 2, true, true, spec);
    for (auto [th, wt] : graded_rule(0.0, theta_hi, true, true, spec))
      for (auto [ph, wp] : phis)
        sphere.nodes.push_back({{a * std::sin(th) * std::cos(ph), a * std::sin(th) * std::sin(ph), a * std::cos(th)},
                                a * a * std::sin(th) * wt * wp});
    grid.pieces.push_back(std::move(sphere));
    for (int k = 0; k < cfg.n; ++k) {
      QuadraturePiece plane;
      plane.axis = k;
      int o1 = -1, o2 = -1;
      for (int i = 0; i < 3; ++i)
        if (i != k) (o1 < 0 ? o1 : o2) = i;
      double psi_lo = 0.0, psi_hi = 2 * kPi;
      bool graded = true;
      if (singular(o1) && singular(o2)) psi_hi = kPi / 2;
      else if (singular(o1)) psi_lo = -kPi / 2, psi_hi = kPi / 2;
      else if (singular(o2)) psi_hi = kPi;
      else graded = false;
      const auto psis = graded_rule(psi_lo, psi_hi, graded, graded, spec);
      for (auto [rho, wr] : graded_rule(0.0, a, false, true, spec))
        for (auto [psi, wp] : psis) {
          Point x(3, 0.0);
          x[o1] = rho * std::cos(psi);
          x[o2] = rho * std::sin(psi);
          plane.nodes.push_back({x, rho * wr * wp});
        }
      grid.pieces.push_back(std::move(plane));
    }
    return grid;
  }
  throw ParameterError("make_grid: quadrature grids are built for m = 2 and m = 3 only");
}

double holmgren_solve(const PDEConfig& cfg, const BoundaryData& data, const QuadratureGrid& grid, const Point& xi,
                      const Truncation& t) {
  cfg.validate();
  check_source(cfg, xi);
  for (int k = 0; k < cfg.n; ++k)
    if (!(xi[k] > 0.0)) throw DomainError("holmgren_solve: xi must be interior");
  const double a = cfg.radius;
  const double h = 1e-5 * a;
  double sphere_sum = 0.0;
  double plane_sum = 0.0;
  for (const auto& piece : grid.pieces) {
    for (const auto& node : piece.nodes) {
      if (squared_distance(node.x, xi) <= 1e-28 * a * a) throw QuadratureError("quadrature node coincides with xi");
    }
    if (piece.axis < 0) {
      if (!data.phi) throw ParameterError("holmgren_solve: phi is missing");
      for (const auto& node : piece.nodes) {
        const double R = std::sqrt(squared_norm(node.x));
        Point out(node.x), in(node.x);
        for (std::size_t i = 0; i < out.size(); ++i) {
          out[i] *= 1.0 + h / R;
          in[i] *= 1.0 - h / R;
        }
        const double dGdn = (green_function(cfg, out, xi, t) - green_function(cfg, in, xi, t)) / (2.0 * h);
        double weight = 1.0;
        for (int k = 0; k < cfg.n; ++k) weight *= std::pow(node.x[k], 2.0 * cfg.alpha[k]);
        sphere_sum += node.weight * weight * dGdn * data.phi(node.x);
      }
    } else {
      const int k = piece.axis;
      if (k >= static_cast<int>(data.nu.size()) || !data.nu[k]) continue;
      for (const auto& node : piece.nodes) {
        const double nu = data.nu[k](node.x);
        if (nu == 0.0) continue;
        plane_sum += node.weight * green_trace_kernel(cfg, k, node.x, xi, t) * nu;
      }
    }
  }
  // G0 > 0 inside and vanishes on S, so dG0/dn < 0 there; the sphere term enters with a minus
  return -plane_sum - sphere_sum;
}

double pde_residual(const PDEConfig& cfg, const ScalarField& u, const Point& x, double h) {
  cfg.validate();
  check_point(cfg, x, "x");
  if (!(h > 0.0)) throw ParameterError("pde_residual: h must be positive");
  for (int k = 0; k < cfg.n; ++k)
    if (!(x[k] > 2.0 * h)) throw DomainError("pde_residual: stencil leaves the domain (x_k <= 2h)");
  const double u0 = u(x);
  double res = 0.0;
  Point y(x);
  for (int i = 0; i < cfg.m; ++i) {
    y[i] = x[i] + h;
    const double up = u(y);
    y[i] = x[i] - h;
    const double dn = u(y);
    y[i] = x[i];
    res += (up - 2.0 * u0 + dn) / (h * h);
    if (i < cfg.n) res += 2.0 * cfg.alpha[i] / x[i] * (up - dn) / (2.0 * h);
  }
  return res;
}

std::vector<std::string> exact_case_names() { return {"constant", "linear", "power"}; }

ExactCase exact_case(const PDEConfig& cfg, const std::string& name) {
  cfg.validate();
  ExactCase c;
  c.name = name;
  c.data.nu.resize(static_cast<std::size_t>(cfg.n));
  if (name == "constant") {
    c.exact = [](const Point&) { return 1.0; };
  } else if (name == "linear") {
    if (cfg.m <= cfg.n) throw ParameterError("exact case 'linear' needs m > n");
    const int last = cfg.m - 1;
    c.exact = [last](const Point& x) { return x[last]; };
  } else if (name == "power") {
    const double e = 1.0 - 2.0 * cfg.alpha[0];
    c.exact = [e](const Point& x) { return std::pow(x[0], e); };
    // x_1^{2 alpha_1} d/dx_1 x_1^{1 - 2 alpha_1} = 1 - 2 alpha_1
    c.data.nu[0] = [e](const Point&) { return e; };
  } else {
    throw ParameterError("unknown exact case '" + name + "'");
  }
  c.data.phi = c.exact;
  return c;
}

double sphere_constant_quadrature(int d) {
  if (d < 2) throw ParameterError("sphere constant needs d >= 2");
  using GL = boost::math::quadrature::gauss<double, 30>;
  double v = 2.0 * kPi;
  for (int j = 1; j <= d - 2; ++j) {
    // sin^j is smooth on [0, pi]; four panels of 30 points are exact to rounding for moderate j
    double s = 0.0;
    for (int p = 0; p < 4; ++p) {
      const double lo = p * kPi / 4, hi = (p + 1) * kPi / 4;
      s += GL::integrate([j](double phi) { return std::pow(std::sin(phi), j); }, lo, hi);
    }
    v *= s;
  }
  return v;
}

double sphere_constant_closed_form(int d) {
  if (d < 2) throw ParameterError("sphere constant needs d >= 2");
  if (d % 2 == 0) {
    const int h = d / 2;
    return 2.0 * std::pow(kPi, h) / std::tgamma(static_cast<double>(h));
  }
  const int h = (d - 1) / 2;
  double double_fact = 1.0;  // (2h - 1)!!
  for (int i = 2 * h - 1; i > 1; i -= 2) double_fact *= i;
  return std::pow(2.0, h + 1) * std::pow(kPi, h) / double_fact;
}

IdentityReport aleph_limit(const PDEConfig& cfg, const Truncation& t) {
  cfg.validate();
  const double a0 = cfg.alpha0();
  IdentityReport inner = lemma2_fa(a0 + 1.0, cfg.alpha, t);
  double log_scale = 0.0;
  double log_rhs = std::lgamma(0.5 * cfg.m) - std::lgamma(a0 + 1.0);
  for (double ak : cfg.alpha) {
    log_scale += std::lgamma(2.0 * ak) + std::lgamma(a0 + 1.0 - ak) - std::lgamma(ak) - std::lgamma(a0 + 1.0);
    log_rhs += std::lgamma(2.0 * ak) - std::lgamma(ak);
  }
  IdentityReport rep = inner;
  rep.lhs = std::exp(log_scale) * inner.lhs;
  rep.error_estimate = std::exp(log_scale) * inner.error_estimate;
  rep.rhs = std::exp(log_rhs);
  rep.rel_err = std::fabs(rep.lhs - rep.rhs) / std::max(1.0, std::fabs(rep.rhs));
  return rep;
}

}  // namespace lauricella
