#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lpa/scalar.hpp"

namespace lpa {

template <class Key>
using SparseVector = std::map<Key, Scalar>;

/// y += a * x, dropping cancelled entries.
template <class Key>
void axpy(SparseVector<Key>& y, const Scalar& a, const SparseVector<Key>& x) {
  if (a.is_zero()) return;
  for (const auto& [k, c] : x) {
    auto [it, fresh] = y.try_emplace(k, a * c);
    if (!fresh) {
      it->second += a * c;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

template <class Key>
SparseVector<Key> scaled(const SparseVector<Key>& x, const Scalar& a) {
  SparseVector<Key> out;
  axpy(out, a, x);
  return out;
}

/// Row echelon form over sparse vectors; each row is keyed by its largest
/// key (the pivot), with pivot coefficient 1.
template <class Key>
class Echelon {
 public:
  /// Fully reduced remainder: no key of the result is a pivot.
  SparseVector<Key> reduce(SparseVector<Key> v) const {
    SparseVector<Key> rest;
    while (!v.empty()) {
      auto it = std::prev(v.end());
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        rest.insert(rest.begin(), *it);
        v.erase(it);
      } else {
        axpy(v, -it->second, row->second);
      }
    }
    return rest;
  }

  /// Returns false if v was already in the row space.
  bool insert(const SparseVector<Key>& v) {
    auto r = reduce(v);
    if (r.empty()) return false;
    Scalar lead = std::prev(r.end())->second.inverse();
    Key k = std::prev(r.end())->first;
    rows_.emplace(k, scaled(r, lead));
    return true;
  }

  bool contains(const SparseVector<Key>& v) const { return reduce(v).empty(); }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<Key, SparseVector<Key>>& rows() const { return rows_; }

  /// Reduced row echelon form: every row is zero on all other pivots.
  void interreduce() {
    for (auto& [k, row] : rows_) {
      SparseVector<Key> rest = row;
      rest.erase(k);
      SparseVector<Key> fixed = reduce(rest);
      fixed[k] = Scalar(1) * row.at(k);
      row = std::move(fixed);
    }
  }

 private:
  std::map<Key, SparseVector<Key>> rows_;
};

using DenseVector = std::vector<Scalar>;
using Matrix = std::vector<DenseVector>;

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols);
std::size_t rank(Matrix a, std::size_t cols);
/// Basis of {x : A x = 0}.
std::vector<DenseVector> nullspace(Matrix a, std::size_t cols);
/// Some x with A x = b, or nullopt.
std::optional<DenseVector> solve(const Matrix& a, const DenseVector& b, std::size_t cols);
/// Inverse of a square matrix; throws PreconditionError when singular.
Matrix inverse(const Matrix& a);

}  // namespace lpa
