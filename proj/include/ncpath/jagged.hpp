#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ncpath {

// Compact list-of-lists stored as one contiguous buffer plus row offsets.
template <class T>
class Jagged {
 public:
  Jagged() : offsets_{0} {}

  std::size_t size() const { return offsets_.size() - 1; }
  bool empty() const { return size() == 0; }
  std::size_t total() const { return data_.size(); }

  std::span<const T> operator[](std::size_t i) const {
    return {data_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<T> operator[](std::size_t i) {
    return {data_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t row_size(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

  void push_back(T value) { data_.push_back(std::move(value)); }
  void close_row() { offsets_.push_back(data_.size()); }

  template <class Range>
  void add_row(const Range& r) {
    for (const auto& x : r) data_.push_back(x);
    offsets_.push_back(data_.size());
  }

  void reserve(std::size_t rows, std::size_t items) {
    offsets_.reserve(rows + 1);
    data_.reserve(items);
  }

  std::vector<std::vector<T>> to_vectors() const {
    std::vector<std::vector<T>> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i].assign((*this)[i].begin(), (*this)[i].end());
    return out;
  }

  // Builds rows from (row, value) pairs with a counting sort; rows keep insertion order.
  template <class Pairs>
  static Jagged from_pairs(std::size_t rows, const Pairs& pairs) {
    Jagged j;
    j.offsets_.assign(rows + 1, 0);
    for (const auto& [r, v] : pairs) ++j.offsets_[r + 1];
    for (std::size_t i = 0; i < rows; ++i) j.offsets_[i + 1] += j.offsets_[i];
    j.data_.resize(j.offsets_[rows]);
    std::vector<std::size_t> fill(j.offsets_.begin(), j.offsets_.end() - 1);
    for (const auto& [r, v] : pairs) j.data_[fill[r]++] = v;
    return j;
  }

  friend bool operator==(const Jagged& a, const Jagged& b) {
    return a.offsets_ == b.offsets_ && a.data_ == b.data_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<T> data_;
};

}  // namespace ncpath
