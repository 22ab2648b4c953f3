#pragma once

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphcx/graded.hpp"

namespace graphcx {

using Index = std::vector<int>;

/// Sparse tensor with `rank` indices, each ranging over a basis of size `dim`.
/// Only nonzero entries are stored.
template <class F>
class Tensor {
 public:
  Tensor() = default;
  Tensor(int rank, int dim) : rank_(rank), dim_(dim) {}

  int rank() const { return rank_; }
  int dim() const { return dim_; }

  F get(const Index& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? F() : it->second;
  }
  const F* find(const Index& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void set(const Index& idx, F value) {
    check(idx);
    if (is_zero(value))
      entries_.erase(idx);
    else
      entries_[idx] = std::move(value);
  }
  void add(const Index& idx, const F& value) {
    if (is_zero(value)) return;
    check(idx);
    auto [it, inserted] = entries_.try_emplace(idx, value);
    if (!inserted) {
      it->second += value;
      if (is_zero(it->second)) entries_.erase(it);
    }
  }

  bool empty() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::map<Index, F>& entries() const { return entries_; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.rank_ == b.rank_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  void check(const Index& idx) const {
    if (static_cast<int>(idx.size()) != rank_) throw std::out_of_range("tensor index has wrong rank");
    for (int i : idx)
      if (i < 0 || i >= dim_) throw std::out_of_range("tensor index out of range");
  }

  int rank_ = 0;
  int dim_ = 0;
  std::map<Index, F> entries_;
};

/// Calls fn(idx) for every index tuple of the given rank, lexicographically.
inline void for_each_index(int dim, int rank, const std::function<void(const Index&)>& fn) {
  Index idx(static_cast<std::size_t>(rank), 0);
  if (dim <= 0) return;
  while (true) {
    fn(idx);
    int pos = rank - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == dim - 1) idx[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
  }
}

}  // namespace graphcx
