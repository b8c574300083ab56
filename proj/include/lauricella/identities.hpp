#pragma once

#include <vector>

#include "lauricella/decomposition.hpp"
#include "lauricella/hyper_core.hpp"
#include "lauricella/lauricella_direct.hpp"

namespace lauricella {

struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;  // |lhs - rhs| / max(1, |rhs|)
  bool converged = false;
  std::int64_t terms_used = 0;
  double error_estimate = 0.0;  // accelerator or quadrature estimate for lhs

  // filled by the limit checks, one entry per z, in the order given
  std::vector<double> z_values;
  std::vector<double> lhs_values;
  std::vector<double> errors;
  bool monotone = true;
};

// lhs of the F_A summation identity for the given (a, b); rhs is the Gamma ratio.
// The lhs sums every index slot that is a Gauss series at unit argument in
// closed form, leaves two slots (one for n = 2) to explicit summation by degree
// blocks up to t.max_total_degree, and extrapolates those blocks with the known
// tail exponent a - sum b.
IdentityReport lemma2_fa(double a, const std::vector<double>& b, const Truncation& t = {});

// F_B counterpart. Its degree blocks alternate and need not decay, so the
// partial sums are passed through Wynn's epsilon algorithm.
IdentityReport lemma2_fb(double a, const std::vector<double>& b, const Truncation& t = {},
                         FbCoefficientForm form = FbCoefficientForm::consistent);

// Plain degree-block partial sums of the two left-hand sides (no closure, no
// acceleration); index N holds the sum over total degree <= N.
std::vector<double> lemma2_fa_partial_sums(double a, const std::vector<double>& b, int max_degree);
std::vector<double> lemma2_fb_partial_sums(double a, const std::vector<double>& b, int max_degree,
                                           FbCoefficientForm form = FbCoefficientForm::consistent);

// Gamma-ratio right-hand sides.
double lemma2_fa_rhs(double a, const std::vector<double>& b);
double lemma2_fb_rhs(double a, const std::vector<double>& b);

enum class Lemma3Route { integral, decomposition };

std::vector<double> default_lemma3_z();

// z^{-sum b} F(...; 1 - 1/z, ..., 1 - 1/z) at every z; lhs is the value at the
// smallest z. converged requires every evaluation to converge and the error
// against the rhs to shrink monotonically as z shrinks.
IdentityReport lemma3_fa(const LauricellaAParams& p, const std::vector<double>& z_values, const Truncation& t = {},
                         Lemma3Route route = Lemma3Route::integral);
IdentityReport lemma3_fb(const LauricellaBParams& p, const std::vector<double>& z_values, const Truncation& t = {},
                         Lemma3Route route = Lemma3Route::integral);

double lemma3_fa_rhs(const LauricellaAParams& p);
double lemma3_fb_rhs(const LauricellaBParams& p);

}  // namespace lauricella
