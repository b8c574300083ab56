#include "lauricella/identities.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "lauricella/index_matrix.hpp"
#include "lauricella/nested_quadrature.hpp"
#include "lauricella/series_accel.hpp"

namespace lauricella {

namespace {

double rel_err_of(double lhs, double rhs) { return std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)); }

void check_lemma2_args(double a, const std::vector<double>& b) {
  if (b.empty()) throw ParameterError("lemma2 needs n >= 1");
  if (is_nonpositive_integer(a)) throw ParameterError("lemma2: a is a non-positive integer");
  const double bsum = std::accumulate(b.begin(), b.end(), 0.0);
  if (!(a > bsum)) throw DomainError("lemma2 needs a > b_1 + ... + b_n");
}

// log|(base)_m| with sign, extended on demand.
class PochTable {
 public:
  explicit PochTable(double base) : base_(base), rows_{SignedLog{0.0, 1}} {}
  const SignedLog& operator()(int m) {
    while (static_cast<int>(rows_.size()) <= m) {
      const double f = base_ + static_cast<double>(rows_.size() - 1);
      SignedLog step = f == 0.0 ? SignedLog{0.0, 0} : SignedLog{std::log(std::fabs(f)), f < 0.0 ? -1 : 1};
      rows_.push_back(rows_.back() * step);
    }
    return rows_[m];
  }

 private:
  double base_;
  std::vector<SignedLog> rows_;
};

double log_factorial(int m) { return std::lgamma(m + 1.0); }

// ---- Gauss closure of index slots -------------------------------------------------
//
// The summand is a product of Gamma(lambda + l.m)^power, lambda an integer
// combination of (1, a, b_1..b_n) and l an integer vector over the slots.
// A slot closes when the sum over it is a Gauss series at unit argument:
//   sum_m G(al+m) G(be+m) / (G(ga+m) m!) = G(al) G(be) G(ga-al-be) / (G(ga-al) G(ga-be)).

struct GammaKey {
  std::vector<int> param;  // over the basis (1, a, b_1, ..., b_n)
  std::vector<int> slots;
  bool operator<(const GammaKey& o) const { return std::tie(param, slots) < std::tie(o.param, o.slots); }
};

class GammaProduct {
 public:
  GammaProduct(std::size_t basis, std::size_t slots) : basis_(basis), slots_(slots) {}

  void add(std::vector<int> param, std::vector<int> slots, int power) {
    GammaKey key{std::move(param), std::move(slots)};
    int& p = factors_[key];
    p += power;
    if (p == 0) factors_.erase(key);
  }
  std::vector<int> unit_param(std::size_t i) const {
    std::vector<int> v(basis_, 0);
    v[i] = 1;
    return v;
  }
  std::vector<int> zero_slots() const { return std::vector<int>(slots_, 0); }

  // Applies the Gauss closure to slot s when the factor pattern allows it
  // and the closed series converges for every value of the other slots.
  bool try_close(std::size_t s, const std::vector<double>& basis_values) {
    std::vector<GammaKey> num, den;
    for (const auto& [key, power] : factors_) {
      if (key.slots[s] == 0) continue;
      if (key.slots[s] != 1 || std::abs(power) != 1) return false;
      (power > 0 ? num : den).push_back(key);
    }
    if (num.size() != 2 || den.size() != 2) return false;
    auto is_factorial = [&](const GammaKey& k) {
      if (k.param != unit_param(0)) return false;
      for (std::size_t j = 0; j < slots_; ++j)
        if (k.slots[j] != (j == s ? 1 : 0)) return false;
      return true;
    };
    const GammaKey* gamma_den = nullptr;
    if (is_factorial(den[0])) gamma_den = &den[1];
    else if (is_factorial(den[1])) gamma_den = &den[0];
    else return false;

    auto drop = [&](const GammaKey& k) {
      GammaKey out = k;
      out.slots[s] = 0;
      return out;
    };
    auto minus = [&](const GammaKey& x, const GammaKey& y) {
      GammaKey out = x;
      for (std::size_t i = 0; i < basis_; ++i) out.param[i] -= y.param[i];
      for (std::size_t j = 0; j < slots_; ++j) out.slots[j] -= y.slots[j];
      return out;
    };
    const GammaKey al = drop(num[0]), be = drop(num[1]), ga = drop(*gamma_den);
    const GammaKey excess = minus(minus(ga, al), be);
    double excess_value = 0.0;
    for (std::size_t i = 0; i < basis_; ++i) excess_value += excess.param[i] * basis_values[i];
    if (!(excess_value > 0.0)) return false;
    for (int l : excess.slots)
      if (l < 0) return false;

    const GammaKey fac = gamma_den == &den[1] ? den[0] : den[1];
    add(num[0].param, num[0].slots, -1);
    add(num[1].param, num[1].slots, -1);
    add(gamma_den->param, gamma_den->slots, +1);
    add(fac.param, fac.slots, +1);
    add(al.param, al.slots, +1);
    add(be.param, be.slots, +1);
    add(excess.param, excess.slots, +1);
    const GammaKey ga_al = minus(ga, al), ga_be = minus(ga, be);
    add(ga_al.param, ga_al.slots, -1);
    add(ga_be.param, ga_be.slots, -1);
    return true;
  }

  const std::map<GammaKey, int>& factors() const { return factors_; }

 private:
  std::size_t basis_;
  std::size_t slots_;
  std::map<GammaKey, int> factors_;
};

struct NumericFactor {
  double offset;
  std::vector<int> slots;  // restricted to the open slots
  int power;
};

// Summation-identity F_A summand as a Gamma product over (1, a, b_1..b_n).
GammaProduct fa_summand(int n) {
  const std::size_t S = IndexMatrix::slot_count(n);
  const auto slots = index_slots(n);
  GammaProduct g(static_cast<std::size_t>(n) + 2, S);
  const std::size_t one = 0, a_idx = 1;
  auto b_idx = [](int k) { return static_cast<std::size_t>(k) + 1; };  // k = 1..n
  auto A_vec = [&](int k) {
    std::vector<int> v(S, 0);
    for (std::size_t s = 0; s < S; ++s) v[s] = slots[s].first <= k + 1 ? 1 : 0;
    return v;
  };
  auto B_vec = [&](int k) {
    std::vector<int> v(S, 0);
    for (std::size_t s = 0; s < S; ++s) v[s] = (slots[s].second == k ? 1 : 0) + (slots[s].first == k + 1 ? 1 : 0);
    return v;
  };
  for (std::size_t s = 0; s < S; ++s) {
    std::vector<int> e(S, 0);
    e[s] = 1;
    g.add(g.unit_param(one), e, -1);
  }
  // (a)_{A(n)}
  g.add(g.unit_param(a_idx), A_vec(n), +1);
  g.add(g.unit_param(a_idx), g.zero_slots(), -1);
  for (int k = 1; k <= n; ++k) {
    const auto A = A_vec(k), B = B_vec(k);
    std::vector<int> AmB(S);
    for (std::size_t s = 0; s < S; ++s) AmB[s] = A[s] - B[s];
    std::vector<int> a_minus_b = g.unit_param(a_idx);
    a_minus_b[b_idx(k)] = -1;
    g.add(g.unit_param(b_idx(k)), B, +1);
    g.add(g.unit_param(b_idx(k)), g.zero_slots(), -1);
    g.add(a_minus_b, AmB, +1);
    g.add(a_minus_b, g.zero_slots(), -1);
    g.add(g.unit_param(a_idx), A, -1);
    g.add(g.unit_param(a_idx), g.zero_slots(), +1);
  }
  return g;
}

SignedLog signed_lgamma_power(double x, int power) {
  if (is_nonpositive_integer(x)) {
    if (power < 0) return {0.0, 0};
    throw DomainError("lemma2: Gamma pole in a closed-form factor");
  }
  int sign = 1;
  const double lg = boost::math::lgamma(x, &sign);
  SignedLog r{power * lg, 1};
  if (sign < 0 && (power % 2 != 0)) r.sign = -1;
  return r;
}

}  // namespace

double lemma2_fa_rhs(double a, const std::vector<double>& b) {
  check_lemma2_args(a, b);
  const double bsum = std::accumulate(b.begin(), b.end(), 0.0);
  SignedLog r = log_gamma_signed(a - bsum) / log_gamma_signed(a);
  for (double bk : b) r = r * log_gamma_signed(a) / log_gamma_signed(a - bk);
  return r.value();
}

double lemma2_fb_rhs(double a, const std::vector<double>& b) {
  check_lemma2_args(a, b);
  const double bsum = std::accumulate(b.begin(), b.end(), 0.0);
  SignedLog r = log_gamma_signed(a) / log_gamma_signed(a - bsum);
  for (double bk : b) r = r * log_gamma_signed(a - bk) / log_gamma_signed(a);
  return r.value();
}

IdentityReport lemma2_fa(double a, const std::vector<double>& b, const Truncation& t) {
  t.validate();
  check_lemma2_args(a, b);
  const int n = static_cast<int>(b.size());
  const std::size_t S = IndexMatrix::slot_count(n);
  std::vector<double> basis{1.0, a};
  basis.insert(basis.end(), b.begin(), b.end());

  GammaProduct g = fa_summand(n);
  std::vector<bool> open(S, true);
  std::size_t remaining = S;
  const std::size_t keep = std::min<std::size_t>(S, 2);
  while (remaining > keep) {
    bool closed = false;
    // newest slots first: the last column closes first
    for (std::size_t s = S; s-- > 0;) {
      if (!open[s]) continue;
      if (g.try_close(s, basis)) {
        open[s] = false;
        --remaining;
        closed = true;
        break;
      }
    }
    if (!closed) break;
  }

  std::vector<std::size_t> open_slots;
  for (std::size_t s = 0; s < S; ++s)
    if (open[s]) open_slots.push_back(s);
  const std::size_t R = open_slots.size();

  SignedLog constant{0.0, 1};
  std::vector<NumericFactor> factors;
  for (const auto& [key, power] : g.factors()) {
    double offset = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) offset += key.param[i] * basis[i];
    std::vector<int> l(R);
    bool varies = false;
    for (std::size_t r = 0; r < R; ++r) {
      l[r] = key.slots[open_slots[r]];
      varies = varies || l[r] != 0;
    }
    if (varies) factors.push_back({offset, l, power});
    else constant = constant * signed_lgamma_power(offset, power);
  }

  IdentityReport rep;
  rep.rhs = lemma2_fa_rhs(a, b);
  if (R == 0) {
    rep.lhs = constant.value();
    rep.converged = true;
    rep.terms_used = 1;
  } else {
    const int L = t.max_total_degree;
    std::vector<long double> partial;
    long double acc = 0.0;
    std::int64_t terms = 0;
    for (int N = 0; N <= L; ++N) {
      long double block = 0.0;
      for_each_multi_index(static_cast<int>(R), N, [&](const std::vector<int>& m) {
        SignedLog term{0.0, 1};
        for (const auto& f : factors) {
          double x = f.offset;
          for (std::size_t r = 0; r < R; ++r) x += f.slots[r] * m[r];
          term = term * signed_lgamma_power(x, f.power);
          if (term.sign == 0) break;
        }
        block += term.value();
        ++terms;
      });
      acc += block;
      partial.push_back(acc);
    }
    const double bsum = std::accumulate(b.begin(), b.end(), 0.0);
    const Extrapolation ex = richardson_known_exponent(partial, a - bsum);
    const double scale = constant.value();
    rep.lhs = scale * ex.value;
    rep.error_estimate = std::fabs(scale) * ex.error_estimate;
    rep.terms_used = terms;
    rep.converged = rep.error_estimate <= 1e-3 * std::sqrt(t.rel_tol) * std::max(1.0, std::fabs(rep.lhs));
  }
  rep.rel_err = rel_err_of(rep.lhs, rep.rhs);
  return rep;
}

std::vector<double> lemma2_fa_partial_sums(double a, const std::vector<double>& b, int max_degree) {
  check_lemma2_args(a, b);
  const int n = static_cast<int>(b.size());
  PochTable pa(a);
  std::vector<PochTable> pb, pab;
  for (double bk : b) {
    pb.emplace_back(bk);
    pab.emplace_back(a - bk);
  }
  std::vector<int> A, B;
  std::vector<double> out;
  double acc = 0.0;
  for (int N = 0; N <= max_degree; ++N) {
    double block = 0.0;
    for_each_index_matrix(n, N, [&](const std::vector<int>& e) {
      index_sums_into(n, e, A, B);
      SignedLog term = pa(A[n - 1]);
      for (int v : e) term.log_abs -= log_factorial(v);
      for (int k = 0; k < n && term.sign != 0; ++k) term = term * pb[k](B[k]) * pab[k](A[k] - B[k]) / pa(A[k]);
      block += term.value();
    });
    acc += block;
    out.push_back(acc);
  }
  return out;
}

namespace {

// Degree blocks of the F_B summation identity.
class FbBlocks {
 public:
  FbBlocks(double a, const std::vector<double>& b, FbCoefficientForm form)
      : a_(a), n_(static_cast<int>(b.size())), form_(form), pa_(a), pa1_(a - 1.0) {
    for (double bk : b) {
      pb_.emplace_back(bk);
      pab_.emplace_back(a - bk);
    }
  }

  double block(int N, std::int64_t& terms) {
    double sum = 0.0;
    for_each_index_matrix(n_, N, [&](const std::vector<int>& e) {
      index_sums_into(n_, e, A_, B_);
      const int total = A_[n_ - 1];
      SignedLog term = SignedLog{0.0, total % 2 == 0 ? 1 : -1} / pa_(2 * total);
      for (int v : e) term.log_abs -= log_factorial(v);
      for (int k = 0; k < n_ && term.sign != 0; ++k) {
        const int here = A_[k], prev = k == 0 ? 0 : A_[k - 1];
        term = term * pb_[k](B_[k]) * pa_(2 * here) / pab_[k](2 * here - B_[k]);
        term = term * axis(here, prev);
      }
      sum += term.value();
      ++terms;
    });
    return sum;
  }

 private:
  // 1/(a-1+A(k)+A(k-1))_{A(k)-A(k-1)}, or the printed 1/(a-1+d)_d
  SignedLog axis(int here, int prev) {
    const int d = here - prev;
    if (form_ == FbCoefficientForm::consistent && !is_nonpositive_integer(a_ - 1.0))
      return pa1_(here + prev) / pa1_(2 * here);
    const double base = form_ == FbCoefficientForm::consistent ? a_ - 1.0 + here + prev : a_ - 1.0 + d;
    const SignedLog den = log_pochhammer(base, d);
    if (den.sign == 0) throw ParameterError("lemma2 F_B: an (a-1) Pochhammer denominator vanishes");
    return SignedLog{0.0, 1} / den;
  }

  double a_;
  int n_;
  FbCoefficientForm form_;
  PochTable pa_, pa1_;
  std::vector<PochTable> pb_, pab_;
  std::vector<int> A_, B_;
};

}  // namespace

std::vector<double> lemma2_fb_partial_sums(double a, const std::vector<double>& b, int max_degree,
                                           FbCoefficientForm form) {
  check_lemma2_args(a, b);
  FbBlocks blocks(a, b, form);
  std::vector<double> out;
  double acc = 0.0;
  std::int64_t terms = 0;
  for (int N = 0; N <= max_degree; ++N) {
    acc += blocks.block(N, terms);
    out.push_back(acc);
  }
  return out;
}

IdentityReport lemma2_fb(double a, const std::vector<double>& b, const Truncation& t, FbCoefficientForm form) {
  t.validate();
  check_lemma2_args(a, b);
  IdentityReport rep;
  rep.rhs = lemma2_fb_rhs(a, b);
  FbBlocks blocks(a, b, form);
  std::vector<double> partial;
  double acc = 0.0;
  Extrapolation best;
  best.error_estimate = std::numeric_limits<double>::infinity();
  int since_improved = 0;
  for (int N = 0; N <= t.max_total_degree; ++N) {
    acc += blocks.block(N, rep.terms_used);
    partial.push_back(acc);
    if (partial.size() < 5) continue;
    const Extrapolation ex = wynn_epsilon(partial);
    if (ex.error_estimate < best.error_estimate) {
      best = ex;
      since_improved = 0;
    } else {
      ++since_improved;
    }
    const double scale = std::max(1.0, std::fabs(best.value));
    if (best.error_estimate <= t.rel_tol * scale) break;
    if (since_improved >= 6) break;  // rounding floor reached
  }
  if (partial.size() < 5) best = wynn_epsilon(partial);
  rep.lhs = best.value;
  rep.error_estimate = best.error_estimate;
  rep.converged = rep.error_estimate <= 1e-3 * std::sqrt(t.rel_tol) * std::max(1.0, std::fabs(rep.lhs));
  rep.rel_err = rel_err_of(rep.lhs, rep.rhs);
  return rep;
}

std::vector<double> default_lemma3_z() { return {1e-2, 1e-3, 1e-4}; }

namespace {

void check_z(const std::vector<double>& z) {
  if (z.empty()) throw ParameterError("lemma3 needs at least one z value");
  for (double v : z)
    if (!(v > 0.0 && v <= 0.1)) throw DomainError("lemma3 z values must lie in (0, 0.1]");
}

void finish_lemma3(IdentityReport& rep, bool all_converged) {
  // order by decreasing z and require the error to shrink at each step
  std::vector<std::size_t> order(rep.z_values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return rep.z_values[i] > rep.z_values[j]; });
  rep.monotone = true;
  for (std::size_t q = 1; q < order.size(); ++q)
    if (!(rep.errors[order[q]] < rep.errors[order[q - 1]])) rep.monotone = false;
  const std::size_t smallest = order.back();
  rep.lhs = rep.lhs_values[smallest];
  rep.rel_err = rep.errors[smallest];
  rep.converged = all_converged && rep.monotone;
}

constexpr double kQuadratureTol = 1e-9;
constexpr double kQuadratureAccept = 1e-6;

}  // namespace

double lemma3_fa_rhs(const LauricellaAParams& p) {
  p.validate();
  const double bsum = std::accumulate(p.b.begin(), p.b.end(), 0.0);
  if (!(p.a > bsum)) throw DomainError("lemma3 F_A needs a > b_1 + ... + b_n");
  for (std::size_t k = 0; k < p.n(); ++k)
    if (p.b[k] == p.c[k]) throw DomainError("lemma3 F_A needs b_k != c_k");
  SignedLog r = log_gamma_signed(p.a - bsum) / log_gamma_signed(p.a);
  for (std::size_t k = 0; k < p.n(); ++k) r = r * log_gamma_signed(p.c[k]) / log_gamma_signed(p.c[k] - p.b[k]);
  return r.value();
}

double lemma3_fb_rhs(const LauricellaBParams& p) {
  p.validate();
  const double bsum = std::accumulate(p.b.begin(), p.b.end(), 0.0);
  if (!(p.c > bsum)) throw DomainError("lemma3 F_B needs c > b_1 + ... + b_n");
  for (std::size_t k = 0; k < p.n(); ++k)
    if (p.a[k] == p.b[k]) throw DomainError("lemma3 F_B needs a_k != b_k");
  SignedLog r = log_gamma_signed(p.c) / log_gamma_signed(p.c - bsum);
  for (std::size_t k = 0; k < p.n(); ++k) r = r * log_gamma_signed(p.a[k] - p.b[k]) / log_gamma_signed(p.a[k]);
  return r.value();
}

IdentityReport lemma3_fa(const LauricellaAParams& p, const std::vector<double>& z_values, const Truncation& t,
                         Lemma3Route route) {
  t.validate();
  check_z(z_values);
  IdentityReport rep;
  rep.rhs = lemma3_fa_rhs(p);
  const double bsum = std::accumulate(p.b.begin(), p.b.end(), 0.0);
  bool all_converged = true;
  for (double z : z_values) {
    double value = 1.0;
    if (std::any_of(p.b.begin(), p.b.end(), [](double v) { return v != 0.0; })) {
      const double prefactor = std::pow(z, -bsum);
      if (route == Lemma3Route::integral) {
        const std::vector<double> Y(p.n(), (1.0 - z) / z);
        const QuadratureResult q = fa_euler_integral(p.a, p.b, p.c, Y, kQuadratureTol);
        value = prefactor * q.value;
        all_converged = all_converged && q.error_estimate <= kQuadratureAccept * std::fabs(q.value);
        rep.terms_used += q.evaluations;
        rep.error_estimate = std::max(rep.error_estimate, prefactor * q.error_estimate);
      } else {
        const std::vector<double> x(p.n(), 1.0 - 1.0 / z);
        const EvalResult r = fa_decomposed(p, x, t, ArgumentRange::below_one);
        value = prefactor * r.value;
        all_converged = all_converged && r.converged;
        rep.terms_used += r.terms_used;
        rep.error_estimate = std::max(rep.error_estimate, prefactor * r.tail_estimate);
      }
    }
    rep.z_values.push_back(z);
    rep.lhs_values.push_back(value);
    rep.errors.push_back(rel_err_of(value, rep.rhs));
  }
  finish_lemma3(rep, all_converged);
  return rep;
}

IdentityReport lemma3_fb(const LauricellaBParams& p, const std::vector<double>& z_values, const Truncation& t,
                         Lemma3Route route) {
  t.validate();
  check_z(z_values);
  IdentityReport rep;
  rep.rhs = lemma3_fb_rhs(p);
  const double bsum = std::accumulate(p.b.begin(), p.b.end(), 0.0);
  bool all_converged = true;
  for (double z : z_values) {
    double value = 1.0;
    if (std::any_of(p.b.begin(), p.b.end(), [](double v) { return v != 0.0; })) {
      const double prefactor = std::pow(z, -bsum);
      if (route == Lemma3Route::integral) {
        const std::vector<double> Y(p.n(), (1.0 - z) / z);
        const QuadratureResult q = fb_dirichlet_integral(p.a, p.b, p.c, Y, kQuadratureTol);
        value = prefactor * q.value;
        all_converged = all_converged && q.error_estimate <= kQuadratureAccept * std::fabs(q.value);
        rep.terms_used += q.evaluations;
        rep.error_estimate = std::max(rep.error_estimate, prefactor * q.error_estimate);
      } else {
        const std::vector<double> x(p.n(), 1.0 - 1.0 / z);
        const EvalResult r = fb_decomposed(p, x, t, FbCoefficientForm::consistent, ArgumentRange::below_one);
        value = prefactor * r.value;
        all_converged = all_converged && r.converged;
        rep.terms_used += r.terms_used;
        rep.error_estimate = std::max(rep.error_estimate, prefactor * r.tail_estimate);
      }
    }
    rep.z_values.push_back(z);
    rep.lhs_values.push_back(value);
    rep.errors.push_back(rel_err_of(value, rep.rhs));
  }
  finish_lemma3(rep, all_converged);
  return rep;
}

}  // namespace lauricella
