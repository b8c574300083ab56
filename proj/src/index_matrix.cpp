#include "lauricella/index_matrix.hpp"

#include <numeric>
#include <string>

#include "lauricella/errors.hpp"
#include "lauricella/lauricella_direct.hpp"

namespace lauricella {

std::size_t IndexMatrix::slot_count(int n) {
  if (n < 1) throw ParameterError("IndexMatrix needs n >= 1");
  return static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n) / 2;
}

std::size_t IndexMatrix::slot_of(int i, int j) {
  return static_cast<std::size_t>((j - 2) * (j - 1) / 2 + (i - 2));
}

IndexMatrix::IndexMatrix(int n) : n_(n), entries_(slot_count(n), 0) {}

IndexMatrix::IndexMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != slot_count(n))
    throw ParameterError("IndexMatrix for n=" + std::to_string(n) + " needs " + std::to_string(slot_count(n)) +
                         " entries");
  for (int v : entries_)
    if (v < 0) throw ParameterError("IndexMatrix entries must be non-negative");
}

int IndexMatrix::at(int i, int j) const {
  if (i < 2 || i > j || j > n_) throw ParameterError("IndexMatrix: no slot (" + std::to_string(i) + "," +
                                                     std::to_string(j) + ")");
  return entries_[slot_of(i, j)];
}

void IndexMatrix::set(int i, int j, int value) {
  if (i < 2 || i > j || j > n_) throw ParameterError("IndexMatrix: no slot");
  if (value < 0) throw ParameterError("IndexMatrix entries must be non-negative");
  entries_[slot_of(i, j)] = value;
}

int IndexMatrix::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

void index_sums_into(int n, const std::vector<int>& e, std::vector<int>& A, std::vector<int>& B) {
  A.assign(static_cast<std::size_t>(n), 0);
  B.assign(static_cast<std::size_t>(n), 0);
  // row_total[i] = sum_j m_{i,j}
  std::vector<int> row_total(static_cast<std::size_t>(n) + 2, 0);
  for (int j = 2; j <= n; ++j)
    for (int i = 2; i <= j; ++i) {
      const int v = e[IndexMatrix::slot_of(i, j)];
      row_total[i] += v;
      B[j - 1] += v;  // column part of B(j)
      B[i - 2] += v;  // row part of B(i-1)
    }
  int running = 0;
  for (int k = 1; k <= n; ++k) {
    if (k + 1 <= n) running += row_total[k + 1];
    A[k - 1] = running;
  }
}

IndexSums index_sums(const IndexMatrix& m) {
  IndexSums s;
  index_sums_into(m.n(), m.entries(), s.A, s.B);
  return s;
}

void for_each_index_matrix(int n, int total, const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t slots = IndexMatrix::slot_count(n);
  if (total < 0) return;
  if (slots == 0) {
    if (total == 0) visit({});
    return;
  }
  for_each_multi_index(static_cast<int>(slots), total, visit);
}

std::vector<std::pair<int, int>> index_slots(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(IndexMatrix::slot_count(n));
  for (int j = 2; j <= n; ++j)
    for (int i = 2; i <= j; ++i) out.emplace_back(i, j);
  return out;
}

}  // namespace lauricella
