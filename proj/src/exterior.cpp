#include "kdt/exterior.hpp"

#include <algorithm>

#include "kdt/errors.hpp"

namespace kdt {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

void Form::add(Mask m, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [m, v] : o.terms) add(m, v);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [m, v] : o.terms) add(m, -v);
  return *this;
}

Form& Form::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= s;
  return *this;
}

Form one_form() { return monomial(0); }

Form monomial(Mask m, const Rational& c) {
  Form f;
  f.add(m, c);
  return f;
}

Form x(int i) { return monomial(Mask(1) << i); }

namespace {

// Sign of the shuffle that sorts the word (S, T) for disjoint S, T.
int shuffle_sign(Mask s, Mask t) {
  int inversions = 0;
  for (int j : mask_indices(t)) inversions += popcount(s >> (j + 1));
  return (inversions & 1) ? -1 : 1;
}

// alpha(v ^ d_rest) where rest is a mask.
Rational eval_vector_first(const Form& a, const Vec& v, Mask rest) {
  Rational s = 0;
  for (int k = 0; k < v.size(); ++k) {
    if (v(k).is_zero() || (rest >> k & 1)) continue;
    auto it = a.terms.find(rest | (Mask(1) << k));
    if (it == a.terms.end()) continue;
    s += insertion_sign(rest, k) * v(k) * it->second;
  }
  return s;
}

std::vector<Mask> subsets_of_size(int dim, int n, bool bar) {
  std::vector<Mask> out;
  if (n < 0 || n > dim) return out;
  for (Mask m = 0; m < (Mask(1) << dim); ++m)
    if (popcount(m) == n && !(bar && (m & 1))) out.push_back(m);
  // Lexicographic order of increasing index words.
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return mask_indices(a) < mask_indices(b); });
  return out;
}

std::vector<int> degrees_of(const Form& a) {
  std::vector<int> out;
  for (const auto& [m, v] : a.terms) out.push_back(popcount(m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [s, u] : a.terms)
    for (const auto& [t, v] : b.terms) {
      if (s & t) continue;
      out.add(s | t, shuffle_sign(s, t) * u * v);
    }
  return out;
}

Form d0(const ContactLieData& data, const Form& a) {
  const int dim = data.dim();
  Form out;
  for (int n : degrees_of(a)) {
    for (Mask t : subsets_of_size(dim, n + 1, false)) {
      auto idx = mask_indices(t);
      Rational val = 0;
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
          Mask rest = t & ~(Mask(1) << idx[i]) & ~(Mask(1) << idx[j]);
          // (-1)^{i+j} with 1-based positions equals (-1)^{i+j} with 0-based.
          int sign = ((i + j) & 1) ? -1 : 1;
          val += sign * eval_vector_first(a, data.ad(idx[i]).col(idx[j]), rest);
        }
      out.add(t, val);
    }
  }
  return out;
}

Form contract(const Vec& v, const Form& a) {
  Form out;
  for (const auto& [m, c] : a.terms)
    for (int k : mask_indices(m)) {
      if (v(k).is_zero()) continue;
      Mask rest = m & ~(Mask(1) << k);
      out.add(rest, insertion_sign(rest, k) * v(k) * c);
    }
  return out;
}

Form gl_act(const Mat& a, const Form& f) {
  const int dim = static_cast<int>(a.rows());
  Form out;
  for (int n : degrees_of(f)) {
    if (n == 0) continue;
    for (Mask t : subsets_of_size(dim, n, false)) {
      auto idx = mask_indices(t);
      Rational val = 0;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        Mask rest = t & ~(Mask(1) << idx[i]);
        int sign = (i & 1) ? 1 : -1;  // (-1)^{i+1} for 0-based i
        val += sign * eval_vector_first(f, a.col(idx[i]), rest);
      }
      out.add(t, val);
    }
  }
  return out;
}

Form theta_form(const ContactLieData&) { return -x(0); }

Form omega_form(const ContactLieData& data) {
  Form w;
  for (int i = 1; i < data.dim(); ++i)
    for (int j = i + 1; j < data.dim(); ++j) w.add((Mask(1) << i) | (Mask(1) << j), data.omega()(i, j));
  return w;
}

Form theta_mul(const ContactLieData& data, const Form& a) { return wedge(theta_form(data), a); }
Form omega_mul(const ContactLieData& data, const Form& a) { return wedge(omega_form(data), a); }

Mat gl_unit(int dim, int i, int j) {
  Mat m = Mat::Zero(dim, dim);
  m(i, j) = 1;
  return m;
}

Mat i_prime(int dim) {
  Mat m = Mat::Identity(dim, dim);
  m(0, 0) = 2;
  return m;
}

// ---------------------------------------------------------------------------

FormSpace::FormSpace(int dim, int degree, bool bar)
    : dim_(dim), degree_(degree), bar_(bar), monos_(subsets_of_size(dim, degree, bar)) {
  for (std::size_t k = 0; k < monos_.size(); ++k) index_.emplace(monos_[k], static_cast<int>(k));
}

int FormSpace::index(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw Error("monomial outside the form space");
  return it->second;
}

SparseVec<Rational> FormSpace::coords(const Form& f) const {
  SparseVec<Rational> v;
  for (const auto& [m, c] : f.terms) v.emplace(index(m), c);
  return v;
}

Form FormSpace::form(const SparseVec<Rational>& v) const {
  Form f;
  for (const auto& [i, c] : v) f.add(monos_[i], c);
  return f;
}

Subspace::Subspace(FormSpace space, const std::vector<Form>& spanning) : space_(std::move(space)) {
  for (const auto& f : spanning) ech_.insert(space_.coords(f));
  for (auto& row : ech_.reduced_rows()) {
    basis_.push_back(space_.form(row));
    basis_coords_.push_back(std::move(row));
  }
}

bool Subspace::contains(const Form& f) const { return ech_.contains(space_.coords(f)); }

Form Subspace::reduce(const Form& f) const { return space_.form(ech_.reduce(space_.coords(f))); }

std::vector<Mask> Subspace::standard_monomials() const {
  std::vector<Mask> out;
  for (int k = 0; k < space_.size(); ++k)
    if (!ech_.is_pivot(k)) out.push_back(space_.monomial(k));
  return out;
}

Vec Subspace::coordinates(const Form& f) const {
  // RREF basis: the coordinate on basis vector b is f's entry at b's pivot.
  auto v = space_.coords(f);
  Vec out = Vec::Zero(dim());
  for (int b = 0; b < dim(); ++b) {
    auto it = v.find(basis_coords_[b].begin()->first);
    if (it != v.end()) out(b) = it->second;
  }
  SparseVec<Rational> check = v;
  for (int b = 0; b < dim(); ++b) axpy(check, Rational(-out(b)), basis_coords_[b]);
  if (!check.empty()) throw SolveFailure("form does not lie in the subspace");
  return out;
}

namespace {

ContactReduction reduction(const ContactLieData& data, int n, bool bar) {
  const int dim = data.dim();
  FormSpace space(dim, n, bar);
  std::vector<Form> ispan;
  if (n >= 2)
    for (Mask m : subsets_of_size(dim, n - 2, bar)) ispan.push_back(omega_mul(data, monomial(m)));
  if (!bar && n >= 1)
    for (Mask m : subsets_of_size(dim, n - 1, false)) ispan.push_back(theta_mul(data, monomial(m)));
  std::vector<SparseVec<Rational>> images;
  for (int k = 0; k < space.size(); ++k) {
    Form f = monomial(space.monomial(k));
    Form img = omega_mul(data, f);
    if (!bar) img += theta_mul(data, f);  // different degrees, so no cancellation
    SparseVec<Rational> v;
    for (const auto& [m, c] : img.terms) v.emplace(static_cast<int>(m), c);
    images.push_back(std::move(v));
  }
  std::vector<Form> kspan;
  for (const auto& rel : sparse_kernel(images)) kspan.push_back(space.form(rel));
  return {Subspace(space, ispan), Subspace(space, kspan)};
}

}  // namespace

ContactReduction compute_IK(const ContactLieData& data, int n) { return reduction(data, n, false); }
ContactReduction compute_IK_bar(const ContactLieData& data, int n) { return reduction(data, n, true); }

ThetaOmegaSolver::ThetaOmegaSolver(const ContactLieData& data, int n, bool reversed)
    : dim_(data.dim()), n_(n), target_space_(data.dim(), n) {
  for (Mask m : subsets_of_size(dim_, n - 1, false)) generators_.push_back({true, m});
  for (Mask m : subsets_of_size(dim_, n - 2, false)) generators_.push_back({false, m});
  if (reversed) std::reverse(generators_.begin(), generators_.end());
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const auto& [is_theta, m] = generators_[k];
    Form img = is_theta ? theta_mul(data, monomial(m)) : omega_mul(data, monomial(m));
    ech_.insert(target_space_.coords(img), SparseVec<Rational>{{static_cast<int>(k), Rational(1)}});
  }
}

ThetaOmegaSolver::Split ThetaOmegaSolver::split(const Form& target) const {
  auto sol = ech_.solve(target_space_.coords(target));
  if (!sol) throw SolveFailure("form is not in theta ^ Omega + omega ^ Omega");
  Split out;
  for (const auto& [k, c] : *sol) {
    const auto& [is_theta, m] = generators_[k];
    (is_theta ? out.beta : out.gamma).add(m, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<int> CochainComplex::cohomology() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    int ker = dims[k];
    if (k < maps.size()) ker -= static_cast<int>(rank<Rational>(maps[k]));
    int im = k > 0 ? static_cast<int>(rank<Rational>(maps[k - 1])) : 0;
    out.push_back(ker - im);
  }
  return out;
}

bool CochainComplex::is_complex() const {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (!is_zero(Mat(maps[k + 1] * maps[k]))) return false;
  return true;
}

CochainComplex lie_algebra_complex(const ContactLieData& data) {
  const int dim = data.dim();
  CochainComplex c;
  for (int n = 0; n <= dim; ++n) c.dims.push_back(FormSpace(dim, n).size());
  for (int n = 0; n < dim; ++n) {
    FormSpace src(dim, n), dst(dim, n + 1);
    Mat m = Mat::Zero(dst.size(), src.size());
    for (int k = 0; k < src.size(); ++k)
      for (const auto& [mono, v] : d0(data, monomial(src.monomial(k))).terms) m(dst.index(mono), k) = v;
    c.maps.push_back(std::move(m));
  }
  return c;
}

CochainComplex rumin_constant(const ContactLieData& data) {
  const int dim = data.dim(), n_half = data.N();
  std::vector<ContactReduction> red;
  for (int n = 0; n <= dim; ++n) red.push_back(compute_IK(data, n));
  // Basis forms of each term.
  std::vector<std::vector<Form>> basis(dim + 1);
  for (int n = 0; n <= dim; ++n) {
    if (n <= n_half)
      for (Mask m : red[n].I.standard_monomials()) basis[n].push_back(monomial(m));
    else
      basis[n] = red[n].K.basis();
  }
  CochainComplex c;
  for (int n = 0; n <= dim; ++n) c.dims.push_back(static_cast<int>(basis[n].size()));
  ThetaOmegaSolver solver(data, n_half + 1);
  for (int n = 0; n < dim; ++n) {
    Mat m = Mat::Zero(c.dims[n + 1], c.dims[n]);
    for (int k = 0; k < c.dims[n]; ++k) {
      const Form& a = basis[n][k];
      Vec col;
      if (n < n_half) {
        Form img = red[n + 1].I.reduce(d0(data, a));
        col = Vec::Zero(c.dims[n + 1]);
        for (int j = 0; j < c.dims[n + 1]; ++j) col(j) = img.coeff(basis[n + 1][j].terms.begin()->first);
      } else if (n == n_half) {
        auto sp = solver.split(d0(data, a));
        col = red[n + 1].K.coordinates(d0(data, a - theta_mul(data, sp.gamma)));
      } else {
        col = red[n + 1].K.coordinates(d0(data, a));
      }
      m.col(k) = col;
    }
    c.maps.push_back(std::move(m));
  }
  return c;
}

bool omega_power_iso_check(const ContactLieData& data, int m) {
  const int n_half = data.N(), dim = data.dim();
  if (m < 0 || m > n_half) return false;
  auto kbar = compute_IK_bar(data, n_half + m).K;
  auto ibar = compute_IK_bar(data, n_half - m).I;
  if (kbar.dim() == 0) return true;
  // omega^m on Omega-bar^{N-m}.
  FormSpace src(dim, n_half - m, true), dst(dim, n_half + m, true);
  Form wm = one_form();
  for (int k = 0; k < m; ++k) wm = wedge(wm, omega_form(data));
  SparseEchelon<Rational> ech;
  for (int k = 0; k < src.size(); ++k)
    ech.insert(dst.coords(wedge(wm, monomial(src.monomial(k)))), SparseVec<Rational>{{k, Rational(1)}});
  if (static_cast<int>(ech.rank()) != src.size() || src.size() != dst.size()) return false;
  // Images of the K-bar basis in the quotient must be independent and span it.
  SparseEchelon<Rational> img;
  for (const auto& kform : kbar.basis()) {
    auto pre = ech.solve(dst.coords(kform));
    if (!pre) return false;
    img.insert(src.coords(ibar.reduce(src.form(*pre))));
  }
  const int quotient_dim = src.size() - ibar.dim();
  return static_cast<int>(img.rank()) == kbar.dim() && kbar.dim() == quotient_dim;
}

}  // namespace kdt
