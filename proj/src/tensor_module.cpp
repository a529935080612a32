#include "kdt/tensor_module.hpp"

#include <algorithm>

namespace kdt {

Rational TensorElement::coeff(const MultiIndex& i, int r) const {
  auto it = terms.find({i, r});
  return it == terms.end() ? Rational(0) : it->second;
}

int TensorElement::contact_degree() const {
  int d = -1;
  for (const auto& [k, v] : terms) d = std::max(d, k.first.contact_degree());
  return d;
}

int TensorElement::degree() const {
  int d = -1;
  for (const auto& [k, v] : terms) d = std::max(d, k.first.degree());
  return d;
}

TensorElement TensorElement::contact_part(int p) const {
  TensorElement out;
  for (const auto& [k, v] : terms)
    if (k.first.contact_degree() <= p) out.terms.emplace(k, v);
  return out;
}

TensorElement TensorElement::degree_part(int p) const {
  TensorElement out;
  for (const auto& [k, v] : terms)
    if (k.first.degree() <= p) out.terms.emplace(k, v);
  return out;
}

Vec TensorElement::coefficient(const MultiIndex& i, int rank) const {
  Vec out = Vec::Zero(rank);
  for (auto it = terms.lower_bound({i, 0}); it != terms.end() && it->first.first == i; ++it)
    out(it->first.second) = it->second;
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, v] : o.terms) accumulate(terms, k, v);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, v] : o.terms) accumulate(terms, k, Rational(-v));
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& s) {
  if (s.is_zero()) terms.clear();
  for (auto& [k, v] : terms) v *= s;
  return *this;
}

TensorElement constant_element(int dim, const Vec& u) {
  TensorElement out;
  for (Eigen::Index r = 0; r < u.size(); ++r) out.add(MultiIndex(dim), static_cast<int>(r), u(r));
  return out;
}

TensorElement tensor(const PBWElement& h, const Vec& u) {
  TensorElement out;
  for (const auto& [i, a] : h.terms)
    for (Eigen::Index r = 0; r < u.size(); ++r) out.add(i, static_cast<int>(r), a * u(r));
  return out;
}

TensorElement left_mul(const Enveloping& h, const PBWElement& a, const TensorElement& v) {
  TensorElement out;
  for (const auto& [i, x] : a.terms)
    for (const auto& [k, y] : v.terms)
      for (const auto& [m, z] : h.mul_basis(i, k.first).terms) out.add(m, k.second, x * y * z);
  return out;
}

TensorElement act_on_values(const Mat& m, const TensorElement& v) {
  TensorElement out;
  for (const auto& [k, y] : v.terms)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!m(r, k.second).is_zero()) out.add(k.first, static_cast<int>(r), m(r, k.second) * y);
  return out;
}

// ---------------------------------------------------------------------------

TensorElement FreeMap::apply(const Enveloping& h, const TensorElement& v) const {
  TensorElement out;
  for (const auto& [k, y] : v.terms) {
    const MultiIndex& i = k.first;
    for (const auto& [t, z] : images[k.second].terms)
      for (const auto& [m, w] : h.mul_basis(i, t.first).terms) out.add(m, t.second, y * z * w);
  }
  return out;
}

bool FreeMap::is_zero() const {
  return std::all_of(images.begin(), images.end(), [](const TensorElement& t) { return t.is_zero(); });
}

FreeMap compose(const Enveloping& h, const FreeMap& second, const FreeMap& first) {
  FreeMap out{first.source_rank, second.target_rank, {}};
  for (const auto& img : first.images) out.images.push_back(second.apply(h, img));
  return out;
}

FreeMap zero_map(int source_rank, int target_rank) {
  return FreeMap{source_rank, target_rank, std::vector<TensorElement>(source_rank)};
}

// ---------------------------------------------------------------------------

PairTensor& PairTensor::operator+=(const PairTensor& o) {
  for (const auto& [k, v] : o.terms) accumulate(terms, k, v);
  return *this;
}

PairTensor& PairTensor::operator-=(const PairTensor& o) {
  for (const auto& [k, v] : o.terms) accumulate(terms, k, Rational(-v));
  return *this;
}

PairTensor& PairTensor::operator*=(const Rational& s) {
  if (s.is_zero()) terms.clear();
  for (auto& [k, v] : terms) v *= s;
  return *this;
}

TripleTensor& TripleTensor::operator+=(const TripleTensor& o) {
  for (const auto& [k, v] : o.terms) accumulate(terms, k, v);
  return *this;
}

TripleTensor& TripleTensor::operator-=(const TripleTensor& o) {
  for (const auto& [k, v] : o.terms) accumulate(terms, k, Rational(-v));
  return *this;
}

PairTensor pair_tensor(const Enveloping& h, const PBWElement& f, const PBWElement& g, const TensorElement& v) {
  // (f (x) g) (x)_H (d^(J) (x) r) = sum (f d^(J1) (x) g d^(J2)) (x)_H (1 (x) r)
  PairTensor out;
  for (const auto& [k, y] : v.terms)
    for (const auto& j1 : sub_indices(k.first)) {
      const PBWElement fj = h.mul(f, h.basis(j1));
      const PBWElement gj = h.mul(g, h.basis(k.first - j1));
      for (const auto& [a, x] : fj.terms)
        for (const auto& [b, z] : gj.terms) out.add(a, b, k.second, x * y * z);
    }
  return out;
}

PairTensor mul_pair(const Enveloping& h, const PBWElement& a, const PBWElement& b, const PairTensor& x) {
  PairTensor out;
  for (const auto& [key, y] : x.terms) {
    const auto& [f, g, r] = key;
    for (const auto& [i, p] : a.terms) {
      const auto& af = h.mul_basis(i, f);
      for (const auto& [j, q] : b.terms) {
        const auto& bg = h.mul_basis(j, g);
        for (const auto& [m, s] : af.terms)
          for (const auto& [n, t] : bg.terms) out.add(m, n, r, y * p * q * s * t);
      }
    }
  }
  return out;
}

PairTensor apply_map(const Enveloping& h, const FreeMap& beta, const PairTensor& x) {
  PairTensor out;
  for (const auto& [key, y] : x.terms) {
    const auto& [f, g, r] = key;
    out += y * pair_tensor(h, h.basis(f), h.basis(g), beta.images[r]);
  }
  return out;
}

PairTensor act_on_values(const Mat& m, const PairTensor& x) {
  PairTensor out;
  for (const auto& [key, y] : x.terms) {
    const auto& [f, g, r] = key;
    for (Eigen::Index s = 0; s < m.rows(); ++s)
      if (!m(s, r).is_zero()) out.add(f, g, static_cast<int>(s), m(s, r) * y);
  }
  return out;
}

PairTensor swap_factors(const PairTensor& x) {
  PairTensor out;
  for (const auto& [key, y] : x.terms) {
    const auto& [f, g, r] = key;
    out.add(g, f, r, y);
  }
  return out;
}

// ---------------------------------------------------------------------------

const TensorElement& NormalizedAction::at(const MultiIndex& i) const {
  static const TensorElement empty;
  auto it = coeffs.find(i);
  return it == coeffs.end() ? empty : it->second;
}

namespace {

void add_coeff(NormalizedAction& n, const MultiIndex& i, const MultiIndex& j, int r, const Rational& v) {
  auto& t = n.coeffs[i];
  t.add(j, r, v);
  if (t.is_zero()) n.coeffs.erase(i);
}

}  // namespace

NormalizedAction to_left_normal(const Enveloping& h, const PairTensor& x) {
  NormalizedAction out;
  for (const auto& [key, y] : x.terms) {
    const auto& [f, g, r] = key;
    for (const auto& j : sub_indices(g)) {
      const PBWElement p = h.mul(h.basis(f), h.antipode_basis(j));
      for (const auto& [i, z] : p.terms) add_coeff(out, i, g - j, r, y * z);
    }
  }
  return out;
}

NormalizedAction to_right_normal(const Enveloping& h, const PairTensor& x) {
  NormalizedAction out;
  out.right = true;
  for (const auto& [key, y] : x.terms) {
    const auto& [f, g, r] = key;
    for (const auto& j : sub_indices(f)) {
      const PBWElement p = h.mul(h.basis(g), h.antipode_basis(j));
      for (const auto& [i, z] : p.terms) add_coeff(out, i, f - j, r, y * z);
    }
  }
  return out;
}

PairTensor from_normal(const Enveloping& h, const NormalizedAction& n) {
  PairTensor out;
  const PBWElement one = h.one();
  for (const auto& [i, v] : n.coeffs) {
    if (n.right)
      out += pair_tensor(h, one, h.basis(i), v);
    else
      out += pair_tensor(h, h.basis(i), one, v);
  }
  return out;
}

}  // namespace kdt
