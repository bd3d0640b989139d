#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "bihom/vec.hpp"

namespace bihom {

/// Structure-constant tensor of a k-linear product, k in {2, 3, 4}.
/// Stores the image of each basis tuple sparsely; absent tuples map to zero.
class MultilinearMap {
 public:
  MultilinearMap() = default;
  MultilinearMap(int dim, int arity);

  /// Materializes the map by evaluating fn on every basis tuple
  /// (lexicographic order); zero images are not stored.
  static MultilinearMap from_basis_fn(
      int dim, int arity, const std::function<Vec(const std::vector<int>&)>& fn);

  int dim() const { return dim_; }
  int arity() const { return arity_; }

  /// Accumulates value * e_out into the image of the given basis tuple.
  void add_term(std::span<const int> in, int out, const Rational& value);

  /// Image of a basis tuple; nullptr means zero.
  const Vec* basis_image(std::span<const int> in) const;

  /// Exact multilinear evaluation.
  Vec eval(std::span<const Vec> args) const;

  bool is_zero() const { return entries_.empty(); }

  /// Sorted sparse entries: packed input tuple -> image.
  const std::map<std::uint64_t, Vec>& entries() const { return entries_; }
  /// Decodes a packed key back to the input tuple.
  std::vector<int> unpack(std::uint64_t key) const;

  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.entries_ == b.entries_;
  }

 private:
  std::uint64_t pack(std::span<const int> in) const;

  int dim_ = 0;
  int arity_ = 0;
  // Key packs indices 8 bits each, first index in the highest byte, so the
  // map order is the lexicographic order of input tuples.
  std::map<std::uint64_t, Vec> entries_;
};

/// Odometer over all tuples in [0, dim)^len, lexicographic. Returns false
/// once idx wraps around to all zeros.
inline bool next_tuple(std::vector<int>& idx, int dim) {
  for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
    if (++idx[static_cast<std::size_t>(p)] < dim) return true;
    idx[static_cast<std::size_t>(p)] = 0;
  }
  return false;
}

}  // namespace bihom
