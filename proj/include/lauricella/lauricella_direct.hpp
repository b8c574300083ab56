#pragma once

#include <functional>
#include <vector>

#include "lauricella/hyper_core.hpp"

namespace lauricella {

struct LauricellaAParams {
  double a = 0.0;
  std::vector<double> b;
  std::vector<double> c;

  std::size_t n() const { return b.size(); }
  void validate() const;
};

struct LauricellaBParams {
  std::vector<double> a;
  std::vector<double> b;
  double c = 1.0;

  std::size_t n() const { return a.size(); }
  void validate() const;
};

// All non-negative integer vectors of length n summing to total_degree, lexicographic.
std::vector<std::vector<int>> enumerate_multi_indices(int n, int total_degree);

// Same enumeration without materialising the list; the visitor sees a reused buffer.
void for_each_multi_index(int n, int total_degree, const std::function<void(const std::vector<int>&)>& visit);

EvalResult fa_direct(const LauricellaAParams& p, const std::vector<double>& x, const Truncation& t = {});
EvalResult fb_direct(const LauricellaBParams& p, const std::vector<double>& x, const Truncation& t = {});

}  // namespace lauricella
