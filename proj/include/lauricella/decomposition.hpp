#pragma once

#include <map>
#include <vector>

#include "lauricella/hyper_core.hpp"
#include "lauricella/index_matrix.hpp"
#include "lauricella/lauricella_direct.hpp"

namespace lauricella {

// Which (c-1) Pochhammer ratio the F_B decomposition uses per axis.
//   consistent: (c-1)_{A(k)+A(k-1)} / (c-1)_{2A(k)}   (agrees with the direct series)
//   printed:    (c-1)_{A(k)-A(k-1)} / (c-1)_{2A(k)-2A(k-1)}
// The two agree for n <= 2 and differ from n = 3 on.
enum class FbCoefficientForm { consistent, printed };

// unit_box: every |x_k| < 1. below_one: any x_k < 1; negative arguments go
// through the Pfaff transform (needed for the fundamental solution).
enum class ArgumentRange { unit_box, below_one };

EvalResult fa_decomposed(const LauricellaAParams& p, const std::vector<double>& x, const Truncation& t = {},
                         ArgumentRange range = ArgumentRange::unit_box);

EvalResult fb_decomposed(const LauricellaBParams& p, const std::vector<double>& x, const Truncation& t = {},
                         FbCoefficientForm form = FbCoefficientForm::consistent,
                         ArgumentRange range = ArgumentRange::unit_box);

// depth < 0 means full unrolling (n-1 levels); when depth runs out the inner
// function is summed directly.
EvalResult fa_recurrent(const LauricellaAParams& p, const std::vector<double>& x, const Truncation& t = {},
                        int depth = -1);
EvalResult fb_recurrent(const LauricellaBParams& p, const std::vector<double>& x, const Truncation& t = {},
                        int depth = -1);

// Taylor coefficients of the F_A decomposition, gathered by monomial
// x_1^{e_1}...x_n^{e_n} up to total degree max_degree. Each matrix term is
// expanded with the 2F1 series of its factors; used for term-level checks.
using Monomial = std::vector<int>;
std::map<Monomial, double> fa_decomposed_taylor(const LauricellaAParams& p, int max_degree);

// Independent two-variable oracle: the classical expansion of Appell's F2 as a
// single sum of products of two Gauss functions, expanded to the same degree.
// Needs n = 2.
std::map<Monomial, double> appell_f2_expansion_taylor(const LauricellaAParams& p, int max_degree);

// Coefficient of x^e in the defining F_A series.
double fa_series_coefficient(const LauricellaAParams& p, const Monomial& e);

}  // namespace lauricella
