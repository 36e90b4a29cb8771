#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "supervir/scalar.hpp"

namespace supervir {

template <class K>
using SparseVec = std::map<K, Scalar>;

/// v += k * w, dropping entries that cancel.
template <class K>
void axpy(SparseVec<K>& v, const Scalar& k, const SparseVec<K>& w) {
  if (k.is_zero()) return;
  for (const auto& [key, c] : w) {
    auto [it, inserted] = v.try_emplace(key);
    it->second += k * c;
    if (it->second.is_zero()) v.erase(it);
  }
}

/// Row-echelon basis of a subspace of sparse vectors over F. Each stored row
/// has leading coefficient 1 at its pivot, the smallest key in the row.
template <class K>
class EchelonBasis {
 public:
  SparseVec<K> reduce(SparseVec<K> v) const {
    reduce_in_place(v);
    return v;
  }

  bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns the reduced row if v was independent.
  std::optional<SparseVec<K>> insert(SparseVec<K> v) {
    reduce_in_place(v);
    if (v.empty()) return std::nullopt;
    normalize(v);
    by_pivot_.emplace(v.begin()->first, v);
    return v;
  }

  std::size_t rank() const { return by_pivot_.size(); }

 private:
  static void normalize(SparseVec<K>& v) {
    Scalar lead = v.begin()->second.inverse();
    for (auto& [key, c] : v) c *= lead;
  }

  void reduce_in_place(SparseVec<K>& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = by_pivot_.find(it->first);
      if (p == by_pivot_.end()) {
        ++it;
        continue;
      }
      K key = it->first;
      Scalar k = -it->second;
      axpy(v, k, p->second);
      it = v.upper_bound(key);
    }
  }

  std::map<K, SparseVec<K>> by_pivot_;
};

/// Basis of the kernel of the linear map sending the n-th unit vector to
/// images[n]; each kernel vector is returned as coefficients indexed by n.
template <class K>
std::vector<SparseVec<std::size_t>> kernel_basis(const std::vector<SparseVec<K>>& images) {
  struct Row {
    SparseVec<K> image;
    SparseVec<std::size_t> combo;
  };
  std::map<K, Row> rows;
  std::vector<SparseVec<std::size_t>> kernel;
  for (std::size_t n = 0; n < images.size(); ++n) {
    Row r{images[n], {{n, Scalar(1L)}}};
    auto it = r.image.begin();
    while (it != r.image.end()) {
      auto p = rows.find(it->first);
      if (p == rows.end()) {
        ++it;
        continue;
      }
      K key = it->first;
      Scalar k = -it->second;
      axpy(r.image, k, p->second.image);
      axpy(r.combo, k, p->second.combo);
      it = r.image.upper_bound(key);
    }
    if (r.image.empty()) {
      kernel.push_back(std::move(r.combo));
      continue;
    }
    Scalar lead = r.image.begin()->second.inverse();
    for (auto& [key, c] : r.image) c *= lead;
    for (auto& [key, c] : r.combo) c *= lead;
    K pivot = r.image.begin()->first;
    rows.emplace(pivot, std::move(r));
  }
  return kernel;
}

}  // namespace supervir
