#pragma once

// Free H-modules H (x) R and the spaces (H (x) H) (x)_H V, H^{(x)3} (x)_H V
// that pseudo-actions land in. Since V = H (x) R is free,
// (H (x) H) (x)_H V is canonically (H (x) H) (x) R: every element is
// stored as sum c (d^(F) (x) d^(G)) (x)_H (1 (x) r). Normal forms are
// produced from this on demand.

#include <map>
#include <tuple>
#include <vector>

#include "kdt/enveloping.hpp"

namespace kdt {

/// Element sum c d^(I) (x) r of H (x) R; r indexes a basis of R.
struct TensorElement {
  std::map<std::pair<MultiIndex, int>, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const MultiIndex& i, int r, const Rational& v) { accumulate(terms, std::pair{i, r}, v); }
  Rational coeff(const MultiIndex& i, int r) const;
  /// max |I|' over the support, -1 for zero.
  int contact_degree() const;
  /// max |I| over the support, -1 for zero.
  int degree() const;
  /// The part with |I|' <= p (resp. |I| <= p).
  TensorElement contact_part(int p) const;
  TensorElement degree_part(int p) const;
  /// Coefficient vector of d^(I), in R.
  Vec coefficient(const MultiIndex& i, int rank) const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& s);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Rational& s, TensorElement a) { return a *= s; }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// 1 (x) u for a coordinate vector u.
TensorElement constant_element(int dim, const Vec& u);
/// h (x) u.
TensorElement tensor(const PBWElement& h, const Vec& u);
/// Left multiplication by h on the H factor.
TensorElement left_mul(const Enveloping& h, const PBWElement& a, const TensorElement& v);
/// Applies a matrix to the R factor.
TensorElement act_on_values(const Mat& m, const TensorElement& v);

/// H-linear map H (x) R -> H (x) R' given by the images of 1 (x) r.
struct FreeMap {
  int source_rank = 0, target_rank = 0;
  std::vector<TensorElement> images;

  TensorElement apply(const Enveloping& h, const TensorElement& v) const;
  bool is_zero() const;
};

FreeMap compose(const Enveloping& h, const FreeMap& second, const FreeMap& first);
FreeMap zero_map(int source_rank, int target_rank);

using PairKey = std::tuple<MultiIndex, MultiIndex, int>;
using TripleKey = std::tuple<MultiIndex, MultiIndex, MultiIndex, int>;

/// sum c (d^(F) (x) d^(G)) (x)_H (1 (x) r).
struct PairTensor {
  std::map<PairKey, Rational> terms;
  bool is_zero() const { return terms.empty(); }
  void add(const MultiIndex& f, const MultiIndex& g, int r, const Rational& v) {
    accumulate(terms, PairKey{f, g, r}, v);
  }
  PairTensor& operator+=(const PairTensor& o);
  PairTensor& operator-=(const PairTensor& o);
  PairTensor& operator*=(const Rational& s);
  friend PairTensor operator+(PairTensor a, const PairTensor& b) { return a += b; }
  friend PairTensor operator-(PairTensor a, const PairTensor& b) { return a -= b; }
  friend PairTensor operator*(const Rational& s, PairTensor a) { return a *= s; }
  friend bool operator==(const PairTensor&, const PairTensor&) = default;
};

/// sum c (d^(F) (x) d^(G) (x) d^(K)) (x)_H (1 (x) r).
struct TripleTensor {
  std::map<TripleKey, Rational> terms;
  bool is_zero() const { return terms.empty(); }
  void add(const MultiIndex& f, const MultiIndex& g, const MultiIndex& k, int r, const Rational& v) {
    accumulate(terms, TripleKey{f, g, k, r}, v);
  }
  TripleTensor& operator+=(const TripleTensor& o);
  TripleTensor& operator-=(const TripleTensor& o);
  friend TripleTensor operator-(TripleTensor a, const TripleTensor& b) { return a -= b; }
  friend bool operator==(const TripleTensor&, const TripleTensor&) = default;
};

/// (f (x) g) (x)_H v for arbitrary f, g in H and v in H (x) R.
PairTensor pair_tensor(const Enveloping& h, const PBWElement& f, const PBWElement& g, const TensorElement& v);
/// (a (x) b) . x for x in (H (x) H) (x)_H V.
PairTensor mul_pair(const Enveloping& h, const PBWElement& a, const PBWElement& b, const PairTensor& x);
/// ((id (x) id) (x)_H beta)(x).
PairTensor apply_map(const Enveloping& h, const FreeMap& beta, const PairTensor& x);
/// Applies a matrix to the R factor.
PairTensor act_on_values(const Mat& m, const PairTensor& x);
PairTensor swap_factors(const PairTensor& x);

/// sum_I (d^(I) (x) 1) (x)_H v_I (left) or sum_I (1 (x) d^(I)) (x)_H v_I (right).
struct NormalizedAction {
  bool right = false;
  std::map<MultiIndex, TensorElement> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  const TensorElement& at(const MultiIndex& i) const;
  friend bool operator==(const NormalizedAction&, const NormalizedAction&) = default;
};

/// (f (x) g) (x)_H v = (f S(g_(1)) (x) 1) (x)_H g_(2) v.
NormalizedAction to_left_normal(const Enveloping& h, const PairTensor& x);
/// (f (x) g) (x)_H v = (1 (x) g S(f_(1))) (x)_H f_(2) v.
NormalizedAction to_right_normal(const Enveloping& h, const PairTensor& x);
PairTensor from_normal(const Enveloping& h, const NormalizedAction& n);

}  // namespace kdt
