#pragma once

#include <functional>
#include <vector>

namespace lauricella {

// Entries m_{i,j}, 2 <= i <= j <= n, stored column by column
// (j = 2..n, then i = 2..j). Empty for n = 1.
class IndexMatrix {
 public:
  explicit IndexMatrix(int n);
  IndexMatrix(int n, std::vector<int> entries);

  int n() const { return n_; }
  std::size_t slot_count() const { return entries_.size(); }
  static std::size_t slot_count(int n);
  static std::size_t slot_of(int i, int j);

  int at(int i, int j) const;
  void set(int i, int j, int value);
  const std::vector<int>& entries() const { return entries_; }
  int total() const;

 private:
  int n_;
  std::vector<int> entries_;
};

// A[k-1] = A(k,n), B[k-1] = B(k,n) for k = 1..n.
struct IndexSums {
  std::vector<int> A;
  std::vector<int> B;
};

IndexSums index_sums(const IndexMatrix& m);

// Same sums straight from the slot vector, without building an IndexMatrix.
void index_sums_into(int n, const std::vector<int>& entries, std::vector<int>& A, std::vector<int>& B);

// Every matrix whose entries add up to total, lexicographic in slot order.
void for_each_index_matrix(int n, int total, const std::function<void(const std::vector<int>&)>& visit);

// The (i,j) pair behind each slot, in storage order.
std::vector<std::pair<int, int>> index_slots(int n);

}  // namespace lauricella
