#include "kdt/enveloping.hpp"

#include <algorithm>

#include "kdt/errors.hpp"

namespace kdt {

int PBWElement::degree() const {
  int d = -1;
  for (const auto& [i, v] : terms) d = std::max(d, i.degree());
  return d;
}

int PBWElement::contact_degree() const {
  int d = -1;
  for (const auto& [i, v] : terms) d = std::max(d, i.contact_degree());
  return d;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [i, v] : o.terms) add(i, v);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [i, v] : o.terms) add(i, -v);
  return *this;
}

PBWElement& PBWElement::operator*=(const Rational& s) {
  if (s.is_zero()) terms.clear();
  for (auto& [i, v] : terms) v *= s;
  return *this;
}

Enveloping::Enveloping(ContactLieData data) : data_(std::move(data)) {}

PBWElement Enveloping::basis(const MultiIndex& i) const {
  PBWElement e;
  e.add(i, 1);
  return e;
}

PBWElement Enveloping::vec(const Vec& v) const {
  PBWElement e;
  for (int i = 0; i < dim(); ++i) e.add(MultiIndex::unit(dim(), i), v(i));
  return e;
}

// d_a * d^J in plain monomials d^J = d_0^{j_0} ... (no factorials).
const Enveloping::Plain& Enveloping::left_gen(int a, const MultiIndex& j) const {
  return straighten_.get(GenIndexKey{a, j}, [&] {
    Plain out;
    const int b = j.first_nonzero();
    if (b < 0 || a <= b) {
      MultiIndex k = j;
      k.add(a, 1);
      out.emplace(k, Rational(1));
      return out;
    }
    // d_a d_b^{j_b} R = d_b (d_a d_b^{j_b - 1} R) + [d_a, d_b] d_b^{j_b - 1} R
    MultiIndex rest = j;
    rest.add(b, -1);
    const Plain x = left_gen(a, rest);
    for (const auto& [k, v] : x)
      for (const auto& [m, w] : left_gen(b, k)) accumulate(out, m, v * w);
    for (int k = 0; k < dim(); ++k) {
      const Rational& ck = data_.c(a, b, k);
      if (ck.is_zero()) continue;
      for (const auto& [m, w] : left_gen(k, rest)) accumulate(out, m, ck * w);
    }
    return out;
  });
}

const PBWElement& Enveloping::mul_basis(const MultiIndex& i, const MultiIndex& j) const {
  return products_.get(IndexPair{i, j}, [&] {
    Plain cur{{j, Rational(1)}};
    for (int a = dim() - 1; a >= 0; --a)
      for (int t = 0; t < i[a]; ++t) {
        Plain next;
        for (const auto& [k, v] : cur)
          for (const auto& [m, w] : left_gen(a, k)) accumulate(next, m, v * w);
        cur = std::move(next);
      }
    const Rational scale = 1 / (i.factorial() * j.factorial());
    PBWElement out;
    for (const auto& [k, v] : cur) out.add(k, v * scale * k.factorial());
    return out;
  });
}

PBWElement Enveloping::mul(const PBWElement& a, const PBWElement& b) const {
  PBWElement out;
  for (const auto& [i, u] : a.terms)
    for (const auto& [j, v] : b.terms)
      for (const auto& [k, w] : mul_basis(i, j).terms) out.add(k, u * v * w);
  return out;
}

PBWElement Enveloping::commutator(const PBWElement& a, const PBWElement& b) const {
  return mul(a, b) - mul(b, a);
}

HTensor2 Enveloping::coproduct(const PBWElement& a) const {
  HTensor2 out;
  for (const auto& [i, v] : a.terms)
    for (const auto& j : sub_indices(i)) accumulate(out, std::array{j, i - j}, v);
  return out;
}

const PBWElement& Enveloping::antipode_basis(const MultiIndex& i) const {
  return antipodes_.get(i, [&] {
    // S(d^(I)) = (-1)^{|I|} d^(i_{2N} e_{2N}) ... d^(i_0 e_0)
    PBWElement acc = basis(MultiIndex::unit(dim(), 0, i[0]));
    for (int a = 1; a < dim(); ++a)
      if (i[a]) acc = mul(basis(MultiIndex::unit(dim(), a, i[a])), acc);
    if (i.degree() % 2) acc *= Rational(-1);
    return acc;
  });
}

PBWElement Enveloping::antipode(const PBWElement& a) const {
  PBWElement out;
  for (const auto& [i, v] : a.terms) out += v * antipode_basis(i);
  return out;
}

HTensor2 Enveloping::mul(const HTensor2& a, const HTensor2& b) const {
  HTensor2 out;
  for (const auto& [ka, u] : a)
    for (const auto& [kb, v] : b) {
      const auto& p0 = mul_basis(ka[0], kb[0]);
      const auto& p1 = mul_basis(ka[1], kb[1]);
      for (const auto& [i, x] : p0.terms)
        for (const auto& [j, y] : p1.terms) accumulate(out, std::array{i, j}, u * v * x * y);
    }
  return out;
}

HTensor3 Enveloping::mul(const HTensor3& a, const HTensor3& b) const {
  HTensor3 out;
  for (const auto& [ka, u] : a)
    for (const auto& [kb, v] : b) {
      const auto& p0 = mul_basis(ka[0], kb[0]);
      const auto& p1 = mul_basis(ka[1], kb[1]);
      const auto& p2 = mul_basis(ka[2], kb[2]);
      for (const auto& [i, x] : p0.terms)
        for (const auto& [j, y] : p1.terms)
          for (const auto& [k, z] : p2.terms) accumulate(out, std::array{i, j, k}, u * v * x * y * z);
    }
  return out;
}

// ---------------------------------------------------------------------------

void DualElement::add(const MultiIndex& i, const Rational& v) {
  if (i.contact_degree() > truncation) return;
  accumulate(terms, i, v);
}

DualElement& DualElement::operator+=(const DualElement& o) {
  truncation = std::min(truncation, o.truncation);
  std::erase_if(terms, [&](const auto& kv) { return kv.first.contact_degree() > truncation; });
  for (const auto& [i, v] : o.terms) add(i, v);
  return *this;
}

DualElement& DualElement::operator-=(const DualElement& o) {
  truncation = std::min(truncation, o.truncation);
  std::erase_if(terms, [&](const auto& kv) { return kv.first.contact_degree() > truncation; });
  for (const auto& [i, v] : o.terms) add(i, -v);
  return *this;
}

DualElement& DualElement::operator*=(const Rational& s) {
  if (s.is_zero()) terms.clear();
  for (auto& [i, v] : terms) v *= s;
  return *this;
}

DualElement dual_basis(const MultiIndex& i, int truncation) {
  if (i.contact_degree() > truncation) throw TruncationOverflow("x_I beyond truncation");
  DualElement x;
  x.truncation = truncation;
  x.add(i, 1);
  return x;
}

DualElement dual_one(int dim, int truncation) { return dual_basis(MultiIndex(dim), truncation); }

DualElement dual_x(int dim, int i, int truncation) { return dual_basis(MultiIndex::unit(dim, i), truncation); }

Rational dual_pair(const DualElement& x, const PBWElement& h) {
  Rational s = 0;
  for (const auto& [i, v] : h.terms) {
    if (i.contact_degree() > x.truncation) throw TruncationOverflow("pairing beyond truncation");
    s += v * x.coeff(i);
  }
  return s;
}

DualElement dual_mul(const DualElement& a, const DualElement& b) {
  DualElement out;
  out.truncation = std::min(a.truncation, b.truncation);
  for (const auto& [i, u] : a.terms)
    for (const auto& [j, v] : b.terms) out.add(i + j, u * v);
  return out;
}

namespace {

int vector_weight(const Vec& a) {
  bool any = false;
  for (int i = 0; i < a.size(); ++i) any = any || !a(i).is_zero();
  if (!any) return 0;
  return a(0).is_zero() ? 1 : 2;
}

template <class Product>
DualElement transpose_action(const Enveloping& h, const DualElement& x, const Vec& a, Product prod) {
  const int t = x.truncation - vector_weight(a);
  if (t < 0) throw TruncationOverflow("d-action lowers the truncation below zero");
  DualElement out;
  out.truncation = t;
  const PBWElement av = h.vec(a);
  for (const auto& j : indices_up_to_contact(h.dim(), t)) out.add(j, -dual_pair(x, prod(av, h.basis(j))));
  return out;
}

}  // namespace

DualElement d_left(const Enveloping& h, const Vec& a, const DualElement& x) {
  return transpose_action(h, x, a, [&](const PBWElement& av, const PBWElement& f) { return h.mul(av, f); });
}

DualElement d_right(const Enveloping& h, const DualElement& x, const Vec& a) {
  return transpose_action(h, x, a, [&](const PBWElement& av, const PBWElement& f) { return h.mul(f, av); });
}

DualElement coadjoint(const Enveloping& h, const Vec& a, const DualElement& x) {
  std::vector<PBWElement> ad_gen;
  for (int k = 0; k < h.dim(); ++k) ad_gen.push_back(h.vec(h.data().bracket(a, unit(h.dim(), k))));
  auto derivation = [&](const PBWElement&, const PBWElement& f) {
    PBWElement out;
    for (const auto& [j, c] : f.terms) {
      std::vector<int> factors;
      for (int k = 0; k < h.dim(); ++k)
        for (int t = 0; t < j[k]; ++t) factors.push_back(k);
      for (std::size_t p = 0; p < factors.size(); ++p) {
        PBWElement term = h.one();
        for (std::size_t q = 0; q < factors.size(); ++q)
          term = h.mul(term, q == p ? ad_gen[factors[q]] : h.gen(factors[q]));
        out += (c / j.factorial()) * term;
      }
    }
    return out;
  };
  return transpose_action(h, x, a, derivation);
}

// ---------------------------------------------------------------------------

namespace {

void permute_products(const Enveloping& h, std::vector<PBWElement>& xs, std::size_t k, PBWElement& acc) {
  if (k == xs.size()) {
    PBWElement p = h.one();
    for (const auto& x : xs) p = h.mul(p, x);
    acc += p;
    return;
  }
  for (std::size_t i = k; i < xs.size(); ++i) {
    std::swap(xs[k], xs[i]);
    permute_products(h, xs, k + 1, acc);
    std::swap(xs[k], xs[i]);
  }
}

PBWElement sym(const Enveloping& h, std::vector<PBWElement> xs) {
  PBWElement acc;
  permute_products(h, xs, 0, acc);
  return (1 / factorial(static_cast<int>(xs.size()))) * acc;
}

}  // namespace

bool symmetrization_identity3(const Enveloping& h, const Vec& av, const Vec& bv, const Vec& cv) {
  const auto a = h.vec(av), b = h.vec(bv), c = h.vec(cv);
  auto br = [&](const PBWElement& x, const PBWElement& y) { return h.commutator(x, y); };
  PBWElement lhs = h.mul(h.mul(a, b), c);
  PBWElement rhs = sym(h, {a, b, c});
  rhs += Rational(1, 2) * (sym(h, {a, br(b, c)}) + sym(h, {b, br(a, c)}) + sym(h, {c, br(a, b)}));
  rhs += Rational(1, 6) * (br(a, br(b, c)) + br(br(a, b), c));
  return lhs == rhs;
}

bool symmetrization_identity4(const Enveloping& h, const Vec& av, const Vec& bv, const Vec& cv, const Vec& dv) {
  const auto a = h.vec(av), b = h.vec(bv), c = h.vec(cv), d = h.vec(dv);
  auto br = [&](const PBWElement& x, const PBWElement& y) { return h.commutator(x, y); };
  PBWElement lhs = h.mul(h.mul(h.mul(a, b), c), d);
  PBWElement rhs = sym(h, {a, b, c, d});
  rhs += Rational(1, 2) * (sym(h, {a, b, br(c, d)}) + sym(h, {a, c, br(b, d)}) + sym(h, {a, d, br(b, c)}) +
                           sym(h, {b, c, br(a, d)}) + sym(h, {b, d, br(a, c)}) + sym(h, {c, d, br(a, b)}));
  rhs += Rational(1, 4) * (sym(h, {br(a, b), br(c, d)}) + sym(h, {br(a, c), br(b, d)}) +
                           sym(h, {br(a, d), br(b, c)}));
  rhs += Rational(1, 6) * (sym(h, {a, br(b, br(c, d))}) + sym(h, {a, br(br(b, c), d)}) +
                           sym(h, {b, br(a, br(c, d))}) + sym(h, {b, br(br(a, c), d)}) +
                           sym(h, {c, br(a, br(b, d))}) + sym(h, {c, br(br(a, b), d)}) +
                           sym(h, {d, br(a, br(b, c))}) + sym(h, {d, br(br(a, b), c)}));
  rhs += Rational(1, 6) * (br(br(br(c, d), b), a) - br(br(br(b, d), c), a));
  rhs += Rational(1, 12) * (br(br(a, b), br(c, d)) + br(br(a, c), br(b, d)) + br(br(a, d), br(b, c)));
  return lhs == rhs;
}

}  // namespace kdt
