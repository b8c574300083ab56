#include "lauricella/lauricella_direct.hpp"

#include <cmath>
#include <string>

#include "block_sum.hpp"

namespace lauricella {

namespace {

void fill_compositions(int slot, int remaining, std::vector<int>& buf,
                       const std::function<void(const std::vector<int>&)>& visit) {
  const int last = static_cast<int>(buf.size()) - 1;
  if (slot == last) {
    buf[slot] = remaining;
    visit(buf);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    buf[slot] = v;
    fill_compositions(slot + 1, remaining - v, buf, visit);
  }
}

SignedLog signed_log(double v) {
  if (v == 0.0) return {0.0, 0};
  return {std::log(std::fabs(v)), v < 0.0 ? -1 : 1};
}

// Per-axis ladder of term factors in log form; entry m is the product of ratio(k, 0..m-1).
class Ladder {
 public:
  template <class Ratio>
  void extend_to(int degree, std::size_t n, Ratio ratio) {
    if (rows_.empty()) rows_.assign(n, std::vector<SignedLog>{SignedLog{0.0, 1}});
    for (std::size_t k = 0; k < n; ++k) {
      auto& row = rows_[k];
      while (static_cast<int>(row.size()) <= degree) {
        const int m = static_cast<int>(row.size()) - 1;
        row.push_back(row.back() * signed_log(ratio(k, m)));
      }
    }
  }
  const SignedLog& at(std::size_t k, int m) const { return rows_[k][m]; }

 private:
  std::vector<std::vector<SignedLog>> rows_;
};

template <class Global>
double block_sum(const Ladder& ladder, std::size_t n, int degree, const Global& global, std::int64_t& count) {
  double block = 0.0;
  for_each_multi_index(static_cast<int>(n), degree, [&](const std::vector<int>& m) {
    SignedLog term = global;
    for (std::size_t k = 0; k < n; ++k) term = term * ladder.at(k, m[k]);
    block += term.value();
    ++count;
  });
  return block;
}

void check_lengths(std::size_t n, std::size_t nx) {
  if (n == 0) throw ParameterError("Lauricella functions need n >= 1");
  if (nx != n) throw ParameterError("argument vector length differs from n");
}

}  // namespace

void LauricellaAParams::validate() const {
  if (b.empty() || b.size() != c.size()) throw ParameterError("F_A needs matching non-empty b and c");
  for (double ck : c)
    if (is_nonpositive_integer(ck)) throw ParameterError("F_A: c_k is a non-positive integer");
}

void LauricellaBParams::validate() const {
  if (a.empty() || a.size() != b.size()) throw ParameterError("F_B needs matching non-empty a and b");
  if (is_nonpositive_integer(c)) throw ParameterError("F_B: c is a non-positive integer");
}

std::vector<std::vector<int>> enumerate_multi_indices(int n, int total_degree) {
  std::vector<std::vector<int>> out;
  for_each_multi_index(n, total_degree, [&](const std::vector<int>& v) { out.push_back(v); });
  return out;
}

void for_each_multi_index(int n, int total_degree, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 1) throw ParameterError("enumerate_multi_indices needs n >= 1");
  if (total_degree < 0) return;
  std::vector<int> buf(static_cast<std::size_t>(n), 0);
  fill_compositions(0, total_degree, buf, visit);
}

EvalResult fa_direct(const LauricellaAParams& p, const std::vector<double>& x, const Truncation& t) {
  t.validate();
  p.validate();
  check_lengths(p.n(), x.size());
  double l1 = 0.0;
  for (double xk : x) l1 += std::fabs(xk);
  if (!(l1 < 1.0)) throw DomainError("fa_direct requires |x_1|+...+|x_n| < 1, got " + std::to_string(l1));

  const std::size_t n = p.n();
  Ladder ladder;
  SignedLog a_poch{0.0, 1};  // (a)_N
  detail::BlockSummer summer(t);
  for (int degree = 0; summer.wants_more(degree); ++degree) {
    if (degree > 0) a_poch = a_poch * signed_log(p.a + degree - 1);
    ladder.extend_to(degree, n, [&](std::size_t k, int m) {
      return (p.b[k] + m) / (p.c[k] + m) * x[k] / (m + 1.0);
    });
    std::int64_t count = 0;
    const double block = block_sum(ladder, n, degree, a_poch, count);
    summer.add_block(block, count);
  }
  return summer.result();
}

EvalResult fb_direct(const LauricellaBParams& p, const std::vector<double>& x, const Truncation& t) {
  t.validate();
  p.validate();
  check_lengths(p.n(), x.size());
  for (double xk : x)
    if (!(std::fabs(xk) < 1.0)) throw DomainError("fb_direct requires max |x_k| < 1");

  const std::size_t n = p.n();
  Ladder ladder;
  SignedLog inv_c_poch{0.0, 1};  // 1/(c)_N
  detail::BlockSummer summer(t);
  for (int degree = 0; summer.wants_more(degree); ++degree) {
    if (degree > 0) inv_c_poch = inv_c_poch / signed_log(p.c + degree - 1);
    ladder.extend_to(degree, n, [&](std::size_t k, int m) {
      return (p.a[k] + m) * (p.b[k] + m) * x[k] / (m + 1.0);
    });
    std::int64_t count = 0;
    const double block = block_sum(ladder, n, degree, inv_c_poch, count);
    summer.add_block(block, count);
  }
  return summer.result();
}

}  // namespace lauricella
