#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "kdt/contact_lie.hpp"
#include "kdt/multi_index.hpp"

namespace kdt {

/// Adds v into m[key], erasing the entry if it cancels.
template <class Map, class Key>
void accumulate(Map& m, const Key& key, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = m.try_emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

/// Element of H = U(d) in the divided-power basis d^(I) = d_0^{i_0}...d_{2N}^{i_{2N}} / I!.
struct PBWElement {
  std::map<MultiIndex, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  Rational coeff(const MultiIndex& i) const {
    auto it = terms.find(i);
    return it == terms.end() ? Rational(0) : it->second;
  }
  void add(const MultiIndex& i, const Rational& v) { accumulate(terms, i, v); }
  /// max |I| over the support (-1 for zero).
  int degree() const;
  /// max |I|' over the support (-1 for zero).
  int contact_degree() const;

  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  PBWElement& operator*=(const Rational& s);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(const Rational& s, PBWElement a) { return a *= s; }
  friend bool operator==(const PBWElement&, const PBWElement&) = default;
};

template <std::size_t K>
using HTensor = std::map<std::array<MultiIndex, K>, Rational>;
using HTensor2 = HTensor<2>;
using HTensor3 = HTensor<3>;

/// A get-or-compute cache that tolerates concurrent readers and writers.
/// Fills are idempotent: if two threads race, the first stored value wins
/// and both see it.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
 public:
  template <class Fn>
  const Value& get(const Key& k, Fn&& compute) const {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(k);
      if (it != map_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mu_);
    return map_.try_emplace(k, std::move(v)).first->second;
  }
  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Key, Value, Hash> map_;
};

struct GenIndexKey {
  int gen;
  MultiIndex idx;
  bool operator==(const GenIndexKey&) const = default;
};
struct GenIndexHash {
  std::size_t operator()(const GenIndexKey& k) const { return k.idx.hash() * 31 + static_cast<std::size_t>(k.gen); }
};
struct IndexPair {
  MultiIndex a, b;
  bool operator==(const IndexPair&) const = default;
};
struct IndexPairHash {
  std::size_t operator()(const IndexPair& k) const { return k.a.hash() * 1000003u ^ k.b.hash(); }
};

/// The Hopf algebra H = U(d) attached to a contact datum. Products are
/// computed by straightening against the order d_0 < d_1 < ... < d_2N and
/// memoized; the object is safe to share between threads.
class Enveloping {
 public:
  explicit Enveloping(ContactLieData data);

  const ContactLieData& data() const { return data_; }
  int dim() const { return data_.dim(); }

  MultiIndex zero_index() const { return MultiIndex(dim()); }
  PBWElement one() const { return basis(zero_index()); }
  PBWElement basis(const MultiIndex& i) const;
  PBWElement gen(int i) const { return basis(MultiIndex::unit(dim(), i)); }
  PBWElement vec(const Vec& v) const;

  /// d^(I) d^(J) in the divided-power basis.
  const PBWElement& mul_basis(const MultiIndex& i, const MultiIndex& j) const;
  PBWElement mul(const PBWElement& a, const PBWElement& b) const;
  PBWElement commutator(const PBWElement& a, const PBWElement& b) const;

  HTensor2 coproduct(const PBWElement& a) const;
  const PBWElement& antipode_basis(const MultiIndex& i) const;
  PBWElement antipode(const PBWElement& a) const;
  Rational counit(const PBWElement& a) const { return a.coeff(zero_index()); }

  HTensor2 mul(const HTensor2& a, const HTensor2& b) const;
  HTensor3 mul(const HTensor3& a, const HTensor3& b) const;

  std::size_t memo_size() const { return straighten_.size() + products_.size(); }

 private:
  using Plain = std::map<MultiIndex, Rational>;
  const Plain& left_gen(int a, const MultiIndex& j) const;

  ContactLieData data_;
  MemoCache<GenIndexKey, Plain, GenIndexHash> straighten_;
  MemoCache<IndexPair, PBWElement, IndexPairHash> products_;
  MemoCache<MultiIndex, PBWElement, MultiIndexHash> antipodes_;
};

/// Truncated element of X = H*: coefficients on x_I with |I|' <= truncation,
/// where <x_I, d^(J)> = delta_I^J.
struct DualElement {
  int truncation = 0;
  std::map<MultiIndex, Rational> terms;

  Rational coeff(const MultiIndex& i) const {
    auto it = terms.find(i);
    return it == terms.end() ? Rational(0) : it->second;
  }
  void add(const MultiIndex& i, const Rational& v);
  bool is_zero() const { return terms.empty(); }
  DualElement& operator+=(const DualElement& o);
  DualElement& operator-=(const DualElement& o);
  DualElement& operator*=(const Rational& s);
  friend DualElement operator+(DualElement a, const DualElement& b) { return a += b; }
  friend DualElement operator-(DualElement a, const DualElement& b) { return a -= b; }
  friend DualElement operator*(const Rational& s, DualElement a) { return a *= s; }
  /// Same support and coefficients; truncation ignored.
  bool same_terms(const DualElement& o) const { return terms == o.terms; }
};

DualElement dual_basis(const MultiIndex& i, int truncation);
DualElement dual_one(int dim, int truncation);
/// x^i = x_{e_i}.
DualElement dual_x(int dim, int i, int truncation);

/// <x, h>; throws TruncationOverflow if h has support beyond x's truncation.
Rational dual_pair(const DualElement& x, const PBWElement& h);
/// x_J x_K = x_{J+K}; truncation is the minimum of the two.
DualElement dual_mul(const DualElement& a, const DualElement& b);
/// <a x, f> = -<x, a f> for a in d.
DualElement d_left(const Enveloping& h, const Vec& a, const DualElement& x);
/// <x a, f> = -<x, f a> for a in d.
DualElement d_right(const Enveloping& h, const DualElement& x, const Vec& a);
/// <(ad* a) x, f> = -<x, [a, f]> with [a, -] extended to H as a derivation
/// (Leibniz over the PBW factors).
DualElement coadjoint(const Enveloping& h, const Vec& a, const DualElement& x);

/// The two associative-algebra symmetrization identities (three and four
/// factors) evaluated in U(d). Arguments are vectors in d.
bool symmetrization_identity3(const Enveloping& h, const Vec& a, const Vec& b, const Vec& c);
bool symmetrization_identity4(const Enveloping& h, const Vec& a, const Vec& b, const Vec& c, const Vec& d);

}  // namespace kdt
