#pragma once

#include <random>
#include <vector>

#include "lauricella/lauricella_direct.hpp"

namespace lauricella {

// Seeded parameter draws shared by the CLI sweeps and the acceptance run.
// std::uniform_real_distribution is implementation-defined, so a seed fixes
// the draws for one standard library, not across them.
using Rng = std::mt19937_64;

struct FaDraw {
  LauricellaAParams params;
  std::vector<double> x;
};

struct FbDraw {
  LauricellaBParams params;
  std::vector<double> x;
};

struct SummationDraw {
  double a = 0.0;
  std::vector<double> b;
};

// a in [0.2, 2.5], b_k in [0.1, 1.5], c_k in [0.5, 2.5], |x_1| + ... + |x_n| <= 0.5.
FaDraw random_fa_draw(Rng& rng, int n);
// a_k, b_k in [0.1, 1.5], c in [0.5, 2.5], |x_k| <= 0.3.
FbDraw random_fb_draw(Rng& rng, int n);
// a in [1, 3], b_k in (0, 0.4], a - sum b >= 0.3.
SummationDraw random_summation_draw(Rng& rng, int n);
// b_k in [0.1, 0.5], c_k - b_k in [0.3, 1.5], a - sum b in [1, 2].
LauricellaAParams random_limit_fa(Rng& rng, int n);
// b_k in [0.1, 0.5], a_k - b_k in [1, 2], c - sum b in [1, 2].
LauricellaBParams random_limit_fb(Rng& rng, int n);

}  // namespace lauricella
