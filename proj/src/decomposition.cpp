#include "lauricella/decomposition.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "block_sum.hpp"

namespace lauricella {

namespace {

SignedLog signed_log_of(double v) {
  if (v == 0.0) return {0.0, 0};
  return {std::log(std::fabs(v)), v < 0.0 ? -1 : 1};
}

// x^p in log form, p >= 0.
SignedLog signed_power(double x, int p) {
  if (p == 0) return {0.0, 1};
  if (x == 0.0) return {0.0, 0};
  return {p * std::log(std::fabs(x)), (x < 0.0 && p % 2 != 0) ? -1 : 1};
}

class LogFactorials {
 public:
  double operator()(int m) {
    while (static_cast<int>(table_.size()) <= m) table_.push_back(std::lgamma(static_cast<double>(table_.size()) + 1.0));
    return table_[m];
  }

 private:
  std::vector<double> table_;
};

void check_range(const std::vector<double>& x, ArgumentRange range, const char* who) {
  for (double xk : x) {
    if (std::isnan(xk)) throw DomainError(std::string(who) + ": NaN argument");
    if (range == ArgumentRange::unit_box && !(std::fabs(xk) < 1.0))
      throw DomainError(std::string(who) + " requires every |x_k| < 1");
    if (range == ArgumentRange::below_one && !(xk < 1.0))
      throw DomainError(std::string(who) + " requires every x_k < 1");
  }
}

void check_size(std::size_t n, std::size_t nx) {
  if (n == 0) throw ParameterError("Lauricella functions need n >= 1");
  if (nx != n) throw ParameterError("argument vector length differs from n");
}

// Folds a 2F1 split value into a SignedLog and records convergence.
SignedLog fold(const Gauss2F1Parts& parts, bool& converged, std::int64_t& terms) {
  converged = converged && parts.series.converged;
  terms += parts.series.terms_used;
  SignedLog s = signed_log_of(parts.series.value);
  s.log_abs += parts.log_prefactor;
  return s;
}

// 1/(c-1+A(k)+A(k-1))_{A(k)-A(k-1)} or 1/(c-1+d)_d with d = A(k)-A(k-1).
SignedLog fb_axis_factor(double c, int a_here, int a_prev, FbCoefficientForm form) {
  const int d = a_here - a_prev;
  const double base = form == FbCoefficientForm::consistent ? c - 1.0 + a_here + a_prev : c - 1.0 + d;
  const SignedLog den = log_pochhammer(base, d);
  if (den.sign == 0) throw ParameterError("F_B decomposition: a (c-1) Pochhammer denominator vanishes");
  return SignedLog{0.0, 1} / den;
}

}  // namespace

EvalResult fa_decomposed(const LauricellaAParams& p, const std::vector<double>& x, const Truncation& t,
                         ArgumentRange range) {
  t.validate();
  p.validate();
  check_size(p.n(), x.size());
  check_range(x, range, "fa_decomposed");

  const int n = static_cast<int>(p.n());
  std::vector<std::map<std::pair<int, int>, SignedLog>> cache(p.n());
  LogFactorials log_fact;
  bool factors_converged = true;
  std::int64_t inner_terms = 0;

  auto axis_factor = [&](int k, int A, int B) -> const SignedLog& {
    auto& slot = cache[k];
    auto it = slot.find({A, B});
    if (it != slot.end()) return it->second;
    SignedLog f = signed_power(x[k], B);
    if (f.sign != 0) {
      f = f * log_pochhammer(p.b[k], B) / log_pochhammer(p.c[k], B);
      if (f.sign != 0) {
        const Gauss2F1Parts g = gauss_2f1_parts({p.a + A, p.b[k] + B, p.c[k] + B}, x[k], t);
        f = f * fold(g, factors_converged, inner_terms);
      }
    }
    return slot.emplace(std::make_pair(A, B), f).first->second;
  };

  std::vector<int> A, B;
  detail::BlockSummer summer(t);
  for (int degree = 0; summer.wants_more(degree); ++degree) {
    double block = 0.0;
    std::int64_t count = 0;
    for_each_index_matrix(n, degree, [&](const std::vector<int>& e) {
      index_sums_into(n, e, A, B);
      SignedLog term = log_pochhammer(p.a, A[n - 1]);
      for (int v : e) term.log_abs -= log_fact(v);
      for (int k = 0; k < n && term.sign != 0; ++k) term = term * axis_factor(k, A[k], B[k]);
      block += term.value();
      ++count;
    });
    summer.add_block(block, count);
  }
  EvalResult r = summer.result();
  r.converged = r.converged && factors_converged;
  r.terms_used += inner_terms;
  return r;
}

EvalResult fb_decomposed(const LauricellaBParams& p, const std::vector<double>& x, const Truncation& t,
                         FbCoefficientForm form, ArgumentRange range) {
  t.validate();
  p.validate();
  check_size(p.n(), x.size());
  check_range(x, range, "fb_decomposed");

  const int n = static_cast<int>(p.n());
  std::vector<std::map<std::pair<int, int>, SignedLog>> cache(p.n());
  std::map<std::pair<int, int>, SignedLog> coef_cache;
  LogFactorials log_fact;
  bool factors_converged = true;
  std::int64_t inner_terms = 0;

  auto axis_factor = [&](int k, int A, int B) -> const SignedLog& {
    auto& slot = cache[k];
    auto it = slot.find({A, B});
    if (it != slot.end()) return it->second;
    SignedLog f = signed_power(x[k], B);
    if (f.sign != 0) {
      f = f * log_pochhammer(p.a[k], B) * log_pochhammer(p.b[k], B);
      if (f.sign != 0) {
        const Gauss2F1Parts g = gauss_2f1_parts({p.a[k] + B, p.b[k] + B, p.c + 2.0 * A}, x[k], t);
        f = f * fold(g, factors_converged, inner_terms);
      }
    }
    return slot.emplace(std::make_pair(A, B), f).first->second;
  };
  auto coef = [&](int a_here, int a_prev) -> const SignedLog& {
    auto it = coef_cache.find({a_here, a_prev});
    if (it != coef_cache.end()) return it->second;
    return coef_cache.emplace(std::make_pair(a_here, a_prev), fb_axis_factor(p.c, a_here, a_prev, form)).first->second;
  };

  std::vector<int> A, B;
  detail::BlockSummer summer(t);
  for (int degree = 0; summer.wants_more(degree); ++degree) {
    double block = 0.0;
    std::int64_t count = 0;
    for_each_index_matrix(n, degree, [&](const std::vector<int>& e) {
      index_sums_into(n, e, A, B);
      const int total = A[n - 1];
      const SignedLog c2 = log_pochhammer(p.c, 2 * total);
      if (c2.sign == 0) throw ParameterError("F_B decomposition: (c)_{2A} vanishes");
      SignedLog term = SignedLog{0.0, total % 2 == 0 ? 1 : -1} / c2;
      for (int v : e) term.log_abs -= log_fact(v);
      for (int k = 0; k < n && term.sign != 0; ++k) {
        term = term * coef(A[k], k == 0 ? 0 : A[k - 1]);
        term = term * axis_factor(k, A[k], B[k]);
      }
      block += term.value();
      ++count;
    });
    summer.add_block(block, count);
  }
  EvalResult r = summer.result();
  r.converged = r.converged && factors_converged;
  r.terms_used += inner_terms;
  return r;
}

namespace {

LauricellaAParams tail_params_a(const LauricellaAParams& p, double shift, const std::vector<int>& m) {
  LauricellaAParams q;
  q.a = p.a + shift;
  for (std::size_t j = 1; j < p.n(); ++j) {
    q.b.push_back(p.b[j] + m[j - 1]);
    q.c.push_back(p.c[j] + m[j - 1]);
  }
  return q;
}

EvalResult inner_fa(const LauricellaAParams& q, const std::vector<double>& x, const Truncation& t, int depth) {
  if (q.n() == 1) return gauss_2f1({q.a, q.b[0], q.c[0]}, x[0], t);
  if (depth >= 1) return fa_recurrent(q, x, t, depth);
  return fa_direct(q, x, t);
}

EvalResult inner_fb(const LauricellaBParams& q, const std::vector<double>& x, const Truncation& t, int depth) {
  if (q.n() == 1) return gauss_2f1({q.a[0], q.b[0], q.c}, x[0], t);
  if (depth >= 1) return fb_recurrent(q, x, t, depth);
  return fb_direct(q, x, t);
}

}  // namespace

EvalResult fa_recurrent(const LauricellaAParams& p, const std::vector<double>& x, const Truncation& t, int depth) {
  t.validate();
  p.validate();
  check_size(p.n(), x.size());
  check_range(x, ArgumentRange::unit_box, "fa_recurrent");
  const int n = static_cast<int>(p.n());
  if (n == 1) return gauss_2f1({p.a, p.b[0], p.c[0]}, x[0], t);
  if (depth < 0) depth = n - 1;
  if (depth == 0) return fa_direct(p, x, t);

  const std::vector<double> rest(x.begin() + 1, x.end());
  bool inner_ok = true;
  std::int64_t inner_terms = 0;
  detail::BlockSummer summer(t);
  for (int K = 0; summer.wants_more(K); ++K) {
    SignedLog head = log_pochhammer(p.a, K) * log_pochhammer(p.b[0], K) / log_pochhammer(p.c[0], K);
    head = head * signed_power(x[0], K);
    double block = 0.0;
    std::int64_t count = 0;
    if (head.sign != 0) {
      const EvalResult f1 = gauss_2f1({p.a + K, p.b[0] + K, p.c[0] + K}, x[0], t);
      inner_ok = inner_ok && f1.converged;
      head = head * signed_log_of(f1.value);
      for_each_multi_index(n - 1, K, [&](const std::vector<int>& m) {
        SignedLog term = head;
        for (int j = 1; j < n && term.sign != 0; ++j) {
          const int mj = m[j - 1];
          term = term * log_pochhammer(p.b[j], mj) / log_pochhammer(p.c[j], mj) * signed_power(x[j], mj);
          term.log_abs -= std::lgamma(mj + 1.0);
        }
        if (term.sign == 0) return;
        const EvalResult inner = inner_fa(tail_params_a(p, K, m), rest, t, depth - 1);
        inner_ok = inner_ok && inner.converged;
        inner_terms += inner.terms_used;
        block += (term * signed_log_of(inner.value)).value();
        ++count;
      });
    }
    summer.add_block(block, std::max<std::int64_t>(count, 1));
  }
  EvalResult r = summer.result();
  r.converged = r.converged && inner_ok;
  r.terms_used += inner_terms;
  return r;
}

EvalResult fb_recurrent(const LauricellaBParams& p, const std::vector<double>& x, const Truncation& t, int depth) {
  t.validate();
  p.validate();
  check_size(p.n(), x.size());
  check_range(x, ArgumentRange::unit_box, "fb_recurrent");
  const int n = static_cast<int>(p.n());
  if (n == 1) return gauss_2f1({p.a[0], p.b[0], p.c}, x[0], t);
  if (depth < 0) depth = n - 1;
  if (depth == 0) return fb_direct(p, x, t);

  const std::vector<double> rest(x.begin() + 1, x.end());
  bool inner_ok = true;
  std::int64_t inner_terms = 0;
  detail::BlockSummer summer(t);
  for (int K = 0; summer.wants_more(K); ++K) {
    const SignedLog den = log_pochhammer(p.c - 1.0 + K, K) * log_pochhammer(p.c, 2 * K);
    if (den.sign == 0) throw ParameterError("fb_recurrent: a Pochhammer denominator vanishes");
    SignedLog head = log_pochhammer(p.a[0], K) * log_pochhammer(p.b[0], K) / den;
    head = head * signed_power(x[0], K);
    if (K % 2 != 0) head.sign = -head.sign;
    double block = 0.0;
    std::int64_t count = 0;
    if (head.sign != 0) {
      const EvalResult f1 = gauss_2f1({p.a[0] + K, p.b[0] + K, p.c + 2.0 * K}, x[0], t);
      inner_ok = inner_ok && f1.converged;
      head = head * signed_log_of(f1.value);
      for_each_multi_index(n - 1, K, [&](const std::vector<int>& m) {
        SignedLog term = head;
        LauricellaBParams q;
        q.c = p.c + 2.0 * K;
        for (int j = 1; j < n; ++j) {
          const int mj = m[j - 1];
          term = term * log_pochhammer(p.a[j], mj) * log_pochhammer(p.b[j], mj) * signed_power(x[j], mj);
          term.log_abs -= std::lgamma(mj + 1.0);
          q.a.push_back(p.a[j] + mj);
          q.b.push_back(p.b[j] + mj);
        }
        if (term.sign == 0) return;
        const EvalResult inner = inner_fb(q, rest, t, depth - 1);
        inner_ok = inner_ok && inner.converged;
        inner_terms += inner.terms_used;
        block += (term * signed_log_of(inner.value)).value();
        ++count;
      });
    }
    summer.add_block(block, std::max<std::int64_t>(count, 1));
  }
  EvalResult r = summer.result();
  r.converged = r.converged && inner_ok;
  r.terms_used += inner_terms;
  return r;
}

std::map<Monomial, double> fa_decomposed_taylor(const LauricellaAParams& p, int max_degree) {
  p.validate();
  if (max_degree < 0) throw ParameterError("max_degree must be non-negative");
  const int n = static_cast<int>(p.n());
  std::map<Monomial, double> out;
  std::vector<int> A, B;
  Monomial e(p.n(), 0);
  for (int total = 0; 2 * total <= max_degree; ++total) {
    for_each_index_matrix(n, total, [&](const std::vector<int>& m) {
      index_sums_into(n, m, A, B);
      double coef = pochhammer(p.a, A[n - 1]);
      for (int v : m) coef /= std::tgamma(v + 1.0);
      for (int k = 0; k < n; ++k) coef *= pochhammer(p.b[k], B[k]) / pochhammer(p.c[k], B[k]);
      int base_degree = 0;
      for (int k = 0; k < n; ++k) base_degree += B[k];
      // distribute the remaining degree over the n Gauss series
      std::function<void(int, int, double)> spread = [&](int k, int budget, double acc) {
        if (k == n) {
          out[e] += acc;
          return;
        }
        const double pa = p.a + A[k], pb = p.b[k] + B[k], pc = p.c[k] + B[k];
        double s = 1.0;
        for (int j = 0; j <= budget; ++j) {
          e[k] = B[k] + j;
          spread(k + 1, budget - j, acc * s);
          s *= (pa + j) * (pb + j) / ((pc + j) * (j + 1.0));
        }
      };
      spread(0, max_degree - base_degree, coef);
    });
  }
  return out;
}

std::map<Monomial, double> appell_f2_expansion_taylor(const LauricellaAParams& p, int max_degree) {
  p.validate();
  if (p.n() != 2) throw ParameterError("appell_f2_expansion_taylor needs n = 2");
  if (max_degree < 0) throw ParameterError("max_degree must be non-negative");
  std::map<Monomial, double> out;
  const double a = p.a, b1 = p.b[0], b2 = p.b[1], c1 = p.c[0], c2 = p.c[1];
  double lead = 1.0;  // (a)_i (b1)_i (b2)_i / (i! (c1)_i (c2)_i)
  for (int i = 0; 2 * i <= max_degree; ++i) {
    if (i > 0) lead *= (a + i - 1) * (b1 + i - 1) * (b2 + i - 1) / (i * (c1 + i - 1) * (c2 + i - 1));
    // F(a+i, b1+i; c1+i; x) F(a+i, b2+i; c2+i; y), times x^i y^i
    double fx = 1.0;
    for (int j = 0; 2 * i + j <= max_degree; ++j) {
      double fy = 1.0;
      for (int l = 0; 2 * i + j + l <= max_degree; ++l) {
        out[Monomial{i + j, i + l}] += lead * fx * fy;
        fy *= (a + i + l) * (b2 + i + l) / ((c2 + i + l) * (l + 1.0));
      }
      fx *= (a + i + j) * (b1 + i + j) / ((c1 + i + j) * (j + 1.0));
    }
  }
  return out;
}

double fa_series_coefficient(const LauricellaAParams& p, const Monomial& e) {
  p.validate();
  if (e.size() != p.n()) throw ParameterError("monomial length differs from n");
  int total = 0;
  double v = 1.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] < 0) throw ParameterError("negative exponent");
    total += e[k];
    v *= pochhammer(p.b[k], e[k]) / (pochhammer(p.c[k], e[k]) * std::tgamma(e[k] + 1.0));
  }
  return v * pochhammer(p.a, total);
}

}  // namespace lauricella
