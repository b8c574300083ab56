#pragma once

#include <cmath>
#include <cstdint>

#include "lauricella/hyper_core.hpp"

namespace lauricella::detail {

// Accumulates homogeneous degree blocks; stops after three consecutive blocks
// below rel_tol * |sum|, or at the degree / term caps (not converged).
class BlockSummer {
 public:
  explicit BlockSummer(const Truncation& t) : t_(t) {}

  bool wants_more(int degree) const {
    if (done_) return false;
    if (degree > t_.max_total_degree || terms_ >= t_.max_terms) return false;
    return true;
  }

  void add_block(double block, std::int64_t count) {
    sum_ += block;
    terms_ += count;
    last_ = std::fabs(block);
    if (!std::isfinite(sum_)) {
      done_ = true;
      converged_ = false;
      return;
    }
    if (last_ <= t_.rel_tol * std::fabs(sum_)) {
      if (++small_run_ == 3) {
        done_ = true;
        converged_ = true;
      }
    } else {
      small_run_ = 0;
    }
  }

  EvalResult result() const {
    EvalResult r;
    r.value = sum_;
    r.tail_estimate = last_;
    r.terms_used = terms_;
    r.converged = converged_;
    return r;
  }

 private:
  Truncation t_;
  double sum_ = 0.0;
  double last_ = 0.0;
  std::int64_t terms_ = 0;
  int small_run_ = 0;
  bool done_ = false;
  bool converged_ = false;
};

}  // namespace lauricella::detail
