#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lauricella/hyper_core.hpp"
#include "lauricella/identities.hpp"

namespace lauricella {

using Point = std::vector<double>;
using ScalarField = std::function<double(const Point&)>;

// Equation sum u_{x_i x_i} + sum_{k<=n} (2 alpha_k / x_k) u_{x_k} = 0 in the part
// of the ball |x| < radius where x_1..x_n > 0.
struct PDEConfig {
  int m = 2;
  int n = 1;
  std::vector<double> alpha{0.25};
  double radius = 1.0;

  void validate() const;
  double alpha0() const;  // (m-2)/2 + sum alpha_k
};

double gamma0(const PDEConfig& cfg);

// q0(x; xi). Throws SingularityError at x = xi, NonConvergenceError if the F_A
// series does not settle.
double fundamental_solution(const PDEConfig& cfg, const Point& x, const Point& xi, const Truncation& t = {});

// G0 = q0(x; xi) - (a/R0)^{2 alpha0} q0(x; xi_bar), xi_bar = (a/R0)^2 xi.
double green_function(const PDEConfig& cfg, const Point& x, const Point& xi, const Truncation& t = {});

Point inverse_point(const PDEConfig& cfg, const Point& xi);

// Trace kernel on the plane x_axis = 0 (axis is 0-based, < n):
// prod_{j != axis} x_j^{2 alpha_j} * G0(x; xi) with x_axis = 0.
double green_trace_kernel(const PDEConfig& cfg, int axis, const Point& x_tilde, const Point& xi,
                          const Truncation& t = {});

// Same kernel with the image term written through the closed-form denominator
//   sum_{i != k} (a - x_i xi_i / a)^2 + a^{-2} sum_{i != k} sum_{j != i} x_i^2 xi_j^2 - (m-2) a^2.
double green_trace_kernel_printed(const PDEConfig& cfg, int axis, const Point& x_tilde, const Point& xi,
                                  const Truncation& t = {});

struct BoundaryData {
  ScalarField phi;              // on the sphere part
  std::vector<ScalarField> nu;  // nu[k] on the plane x_k = 0; empty function means zero
};

struct QuadratureNode {
  Point x;
  double weight = 0.0;
};

struct QuadraturePiece {
  int axis = -1;  // -1 for the sphere part, k for the plane x_k = 0
  std::vector<QuadratureNode> nodes;
  std::string tag() const;
};

struct QuadratureGrid {
  std::vector<QuadraturePiece> pieces;
};

// Composite 16-point Gauss-Legendre per parameter axis; every end where the
// integrand loses smoothness gets its end panel split geometrically.
struct GridSpec {
  int panels = 32;   // uniform panels per axis before grading
  int levels = 8;    // geometric refinement levels at a graded end
  double ratio = 0.5;
};

// Built for m = 2 and m = 3.
QuadratureGrid make_grid(const PDEConfig& cfg, const GridSpec& spec = {});

// u(xi) = -sum_k int_{S_k} G0* nu_k dS + int_S x^{(2 alpha)} dG0/dn phi dS,
// dG0/dn by a radial central difference with step 1e-5 * radius.
double holmgren_solve(const PDEConfig& cfg, const BoundaryData& data, const QuadratureGrid& grid, const Point& xi,
                      const Truncation& t = {});

// Central-difference residual of the equation at x; x_k > 2h needed for k < n.
double pde_residual(const PDEConfig& cfg, const ScalarField& u, const Point& x, double h);

// Exact solutions with matching boundary data: "constant" (u = 1),
// "linear" (u = x_m, needs m > n) and "power" (u = x_1^{1 - 2 alpha_1}).
struct ExactCase {
  std::string name;
  BoundaryData data;
  ScalarField exact;
};
ExactCase exact_case(const PDEConfig& cfg, const std::string& name);
std::vector<std::string> exact_case_names();

// Surface measure of the unit sphere in R^d from the angular integrals
// 2 pi prod_{j=1}^{d-2} int_0^pi sin^j, and from the closed forms by parity of d.
double sphere_constant_quadrature(int d);
double sphere_constant_closed_form(int d);

// Limit of the aleph sum as the excised ball shrinks, evaluated through the
// F_A summation identity; rhs is Gamma(m/2)/Gamma(alpha0+1) prod Gamma(2 alpha_k)/Gamma(alpha_k).
IdentityReport aleph_limit(const PDEConfig& cfg, const Truncation& t = {});

}  // namespace lauricella
