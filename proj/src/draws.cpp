#include "lauricella/draws.hpp"

#include <cmath>
#include <numeric>

#include "lauricella/errors.hpp"

namespace lauricella {

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

void check_n(int n) {
  if (n < 1) throw ParameterError("draws need n >= 1");
}

}  // namespace

FaDraw random_fa_draw(Rng& rng, int n) {
  check_n(n);
  FaDraw d;
  d.params.a = uniform(rng, 0.2, 2.5);
  double l1 = 0.0;
  for (int k = 0; k < n; ++k) {
    d.params.b.push_back(uniform(rng, 0.1, 1.5));
    d.params.c.push_back(uniform(rng, 0.5, 2.5));
    d.x.push_back(uniform(rng, -1.0, 1.0));
    l1 += std::fabs(d.x.back());
  }
  const double target = uniform(rng, 0.05, 0.5);
  for (double& v : d.x) v *= target / l1;
  return d;
}

FbDraw random_fb_draw(Rng& rng, int n) {
  check_n(n);
  FbDraw d;
  for (int k = 0; k < n; ++k) {
    d.params.a.push_back(uniform(rng, 0.1, 1.5));
    d.params.b.push_back(uniform(rng, 0.1, 1.5));
    d.x.push_back(uniform(rng, -0.3, 0.3));
  }
  d.params.c = uniform(rng, 0.5, 2.5);
  return d;
}

SummationDraw random_summation_draw(Rng& rng, int n) {
  check_n(n);
  for (;;) {
    SummationDraw d;
    d.a = uniform(rng, 1.0, 3.0);
    for (int k = 0; k < n; ++k) d.b.push_back(0.4 - uniform(rng, 0.0, 0.4));  // (0, 0.4]
    if (d.a - std::accumulate(d.b.begin(), d.b.end(), 0.0) >= 0.3) return d;
  }
}

LauricellaAParams random_limit_fa(Rng& rng, int n) {
  check_n(n);
  LauricellaAParams p;
  for (int k = 0; k < n; ++k) {
    p.b.push_back(uniform(rng, 0.1, 0.5));
    p.c.push_back(p.b.back() + uniform(rng, 0.3, 1.5));
  }
  p.a = std::accumulate(p.b.begin(), p.b.end(), 0.0) + uniform(rng, 1.0, 2.0);
  return p;
}

LauricellaBParams random_limit_fb(Rng& rng, int n) {
  check_n(n);
  LauricellaBParams p;
  for (int k = 0; k < n; ++k) {
    p.b.push_back(uniform(rng, 0.1, 0.5));
    p.a.push_back(p.b.back() + uniform(rng, 1.0, 2.0));
  }
  p.c = std::accumulate(p.b.begin(), p.b.end(), 0.0) + uniform(rng, 1.0, 2.0);
  return p;
}

}  // namespace lauricella
