#ifndef DOMTREE_VERTEX_SET_HPP
#define DOMTREE_VERTEX_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "domtree/error.hpp"

namespace domtree {

// Subset of {0,...,capacity-1} with bit-vector storage. Capacity is fixed at
// construction and must match the tree the set is used with.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity)
      : n_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet of(int capacity, std::initializer_list<int> ids) {
    VertexSet s(capacity);
    for (int v : ids) s.insert(v);
    return s;
  }
  static VertexSet of(int capacity, const std::vector<int>& ids) {
    VertexSet s(capacity);
    for (int v : ids) s.insert(v);
    return s;
  }
  // Low 'capacity' bits of 'mask' (capacity <= 64).
  static VertexSet from_mask(int capacity, std::uint64_t mask) {
    VertexSet s(capacity);
    if (capacity > 0) s.words_[0] = mask;
    return s;
  }

  int capacity() const { return n_; }

  int size() const {
    int c = 0;
    for (std::uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool contains(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(int v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(int v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  // Members in ascending order.
  std::vector<int> ids() const {
    std::vector<int> out;
    out.reserve(size());
    for (int w = 0; w < (int)words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        out.push_back(w * 64 + b);
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::uint64_t mask() const {
    if (n_ > 64)
      throw Error(ErrorKind::OutOfRange, "mask() needs capacity <= 64");
    return words_.empty() ? 0 : words_[0];
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  bool is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_)
      throw Error(ErrorKind::OutOfRange,
                  "vertex " + std::to_string(v) + " outside 0.." +
                      std::to_string(n_ - 1));
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace domtree

#endif
