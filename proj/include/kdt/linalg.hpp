#pragma once

// Exact linear algebra over a field-valued scalar (Rational in practice).
// Dense routines work on Eigen matrices; SparseEchelon handles the large
// systems that come out of PBW expansions.

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kdt/rational.hpp"

namespace kdt {

template <class Scalar>
struct RowEchelon {
  MatrixX<Scalar> rref;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <class Scalar>
RowEchelon<Scalar> row_echelon(MatrixX<Scalar> m) {
  RowEchelon<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rref = std::move(m);
  return out;
}

template <class Scalar>
Eigen::Index rank(const MatrixX<Scalar>& m) {
  return row_echelon<Scalar>(m).rank();
}

/// Columns form a basis of the null space {x : m x = 0}.
template <class Scalar>
MatrixX<Scalar> kernel(const MatrixX<Scalar>& m) {
  auto e = row_echelon<Scalar>(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatrixX<Scalar> k = MatrixX<Scalar>::Zero(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k(e.pivots[r], f) = -e.rref(r, free_cols[f]);
  }
  return k;
}

/// Some x with a x = b, or nothing when inconsistent.
template <class Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto e = row_echelon<Scalar>(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.rref(r, a.cols());
  }
  return x;
}

template <class Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) return std::nullopt;
  MatrixX<Scalar> aug(n, 2 * n);
  aug << a, MatrixX<Scalar>::Identity(n, n);
  auto e = row_echelon<Scalar>(aug);
  if (e.rank() < n || e.pivots[n - 1] >= n) return std::nullopt;
  return MatrixX<Scalar>(e.rref.rightCols(n));
}

/// Kronecker product; index (p, q) of the result is p * b.rows() + q.
template <class Scalar>
MatrixX<Scalar> kron(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  MatrixX<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// ---------------------------------------------------------------------------
// Sparse vectors and incremental echelon bases.

template <class Scalar>
using SparseVec = std::map<int, Scalar>;

template <class Scalar>
void axpy(SparseVec<Scalar>& y, const Scalar& a, const SparseVec<Scalar>& x) {
  if (a == Scalar(0)) return;
  for (const auto& [i, v] : x) {
    auto [it, fresh] = y.try_emplace(i, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second == Scalar(0)) y.erase(it);
    }
  }
}

/// Rows are kept with leading coefficient 1 and distinct leading indices.
/// When tags are supplied, each row remembers which combination of the
/// inserted generators produced it, which is what kernels and solves need.
template <class Scalar>
class SparseEchelon {
 public:
  /// Inserts v; returns true if it was independent of the current rows.
  /// A dependent v with a tag yields a kernel relation in *relation.
  bool insert(SparseVec<Scalar> v, SparseVec<Scalar> tag = {},
              SparseVec<Scalar>* relation = nullptr) {
    reduce_in_place(v, &tag);
    if (v.empty()) {
      if (relation) *relation = std::move(tag);
      return false;
    }
    Scalar inv = Scalar(1) / v.begin()->second;
    for (auto& [i, x] : v) x *= inv;
    for (auto& [i, x] : tag) x *= inv;
    pivot_.emplace(v.begin()->first, rows_.size());
    rows_.push_back(std::move(v));
    tags_.push_back(std::move(tag));
    return true;
  }

  /// Full reduction: the remainder has zeros at every pivot position, so it
  /// is a canonical representative modulo the span. On return
  /// v_in + image(tag_out - tag_in) == remainder.
  void reduce_in_place(SparseVec<Scalar>& v, SparseVec<Scalar>* tag = nullptr) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivot_.find(it->first);
      if (p == pivot_.end()) {
        ++it;
        continue;
      }
      const int lead = it->first;
      Scalar f = -it->second;
      axpy(v, f, rows_[p->second]);
      if (tag) axpy(*tag, f, tags_[p->second]);
      it = v.lower_bound(lead);
    }
  }

  SparseVec<Scalar> reduce(SparseVec<Scalar> v) const {
    reduce_in_place(v);
    return v;
  }

  bool contains(SparseVec<Scalar> v) const {
    reduce_in_place(v);
    return v.empty();
  }

  /// Coefficients c with sum c_k * generator_k == b, using the tags given at
  /// insertion.
  std::optional<SparseVec<Scalar>> solve(SparseVec<Scalar> b) const {
    SparseVec<Scalar> tag;
    reduce_in_place(b, &tag);
    if (!b.empty()) return std::nullopt;
    for (auto& [i, x] : tag) x = -x;
    return tag;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec<Scalar>>& rows() const { return rows_; }
  bool is_pivot(int i) const { return pivot_.count(i) > 0; }

  /// Rows in reduced row-echelon form, sorted by pivot.
  std::vector<SparseVec<Scalar>> reduced_rows() const {
    std::vector<std::pair<int, std::size_t>> order(pivot_.begin(), pivot_.end());
    std::sort(order.begin(), order.end());
    std::vector<SparseVec<Scalar>> out;
    for (auto [lead, idx] : order) {
      SparseVec<Scalar> r = rows_[idx];
      // Clear the other pivots, keeping the own leading entry.
      SparseVec<Scalar> tail(std::next(r.begin()), r.end());
      reduce_in_place(tail);
      tail.emplace(lead, Scalar(1));
      out.push_back(std::move(tail));
    }
    return out;
  }

 private:
  std::vector<SparseVec<Scalar>> rows_;
  std::vector<SparseVec<Scalar>> tags_;
  std::unordered_map<int, std::size_t> pivot_;
};

/// Kernel of the linear map sending generator k to images[k].
template <class Scalar>
std::vector<SparseVec<Scalar>> sparse_kernel(const std::vector<SparseVec<Scalar>>& images) {
  SparseEchelon<Scalar> ech;
  std::vector<SparseVec<Scalar>> out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    SparseVec<Scalar> rel;
    if (!ech.insert(images[k], SparseVec<Scalar>{{static_cast<int>(k), Scalar(1)}}, &rel))
      out.push_back(std::move(rel));
  }
  return out;
}

/// Assigns dense integer ids to arbitrary keys in first-seen order.
template <class Key, class Hash = std::hash<Key>>
class Indexer {
 public:
  int operator()(const Key& k) {
    auto [it, fresh] = ids_.try_emplace(k, static_cast<int>(keys_.size()));
    if (fresh) keys_.push_back(k);
    return it->second;
  }
  std::optional<int> find(const Key& k) const {
    auto it = ids_.find(k);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  const Key& key(int id) const { return keys_[id]; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::unordered_map<Key, int, Hash> ids_;
  std::vector<Key> keys_;
};

}  // namespace kdt
