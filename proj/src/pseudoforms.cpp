#include "kdt/pseudoforms.hpp"

#include <random>

#include "kdt/errors.hpp"

namespace kdt {

void PseudoForm::add(const MultiIndex& i, const Form& f) {
  if (f.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(i, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) terms.erase(it);
  }
}

PseudoForm& PseudoForm::operator+=(const PseudoForm& o) {
  for (const auto& [i, f] : o.terms) add(i, f);
  return *this;
}

PseudoForm& PseudoForm::operator-=(const PseudoForm& o) {
  for (const auto& [i, f] : o.terms) add(i, -f);
  return *this;
}

PseudoForm& PseudoForm::operator*=(const Rational& s) {
  if (s.is_zero()) terms.clear();
  for (auto& [i, f] : terms) f *= s;
  return *this;
}

PseudoForm constant_pseudo(int dim, const Form& alpha) { return basis_pseudo(MultiIndex(dim), alpha); }

PseudoForm basis_pseudo(const MultiIndex& i, const Form& alpha) {
  PseudoForm out;
  out.add(i, alpha);
  return out;
}

PseudoForm h_mul(const Enveloping& h, const PBWElement& a, const PseudoForm& alpha) {
  PseudoForm out;
  for (const auto& [i, c] : a.terms)
    for (const auto& [j, f] : alpha.terms)
      for (const auto& [k, w] : h.mul_basis(i, j).terms) out.add(k, (c * w) * f);
  return out;
}

PseudoForm pseudo_d(const Enveloping& h, const PseudoForm& alpha) {
  const auto& data = h.data();
  PseudoForm out;
  for (const auto& [i, f] : alpha.terms) {
    out.add(i, d0(data, f));
    for (int k = 0; k < h.dim(); ++k) {
      Form xk = wedge(x(k), f);
      if (xk.is_zero()) continue;
      for (const auto& [m, w] : h.mul_basis(i, MultiIndex::unit(h.dim(), k)).terms) out.add(m, (-w) * xk);
    }
  }
  return out;
}

PseudoForm epsilon_form(int dim) {
  PseudoForm out;
  for (int i = 0; i < dim; ++i) out.add(MultiIndex::unit(dim, i), x(i));
  return out;
}

PseudoForm pseudo_theta(const ContactLieData& data, const PseudoForm& alpha) {
  return map_coefficients(alpha, [&](const Form& f) { return theta_mul(data, f); });
}

PseudoForm pseudo_omega(const ContactLieData& data, const PseudoForm& alpha) {
  return map_coefficients(alpha, [&](const Form& f) { return omega_mul(data, f); });
}

bool in_K(const ContactLieData& data, const PseudoForm& alpha) {
  return pseudo_theta(data, alpha).is_zero() && pseudo_omega(data, alpha).is_zero();
}

RelationsReport relations_check(const Enveloping& h, int degree_bound) {
  const auto& data = h.data();
  RelationsReport rep;
  for (const auto& i : indices_up_to_degree(h.dim(), degree_bound))
    for (int n = 0; n <= h.dim(); ++n) {
      FormSpace fs(h.dim(), n);
      for (int k = 0; k < fs.size(); ++k) {
        const PseudoForm a = basis_pseudo(i, monomial(fs.monomial(k)));
        const PseudoForm da = pseudo_d(h, a);
        ++rep.checked;
        if (!pseudo_d(h, da).is_zero()) ++rep.d_squared_failures;
        if (pseudo_d(h, pseudo_omega(data, a)) != pseudo_omega(data, da)) ++rep.psi_failures;
        if (pseudo_d(h, pseudo_theta(data, a)) != pseudo_omega(data, a) - pseudo_theta(data, da))
          ++rep.theta_failures;
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------

RuminMap::RuminMap(const Enveloping& h, bool reversed)
    : h_(h), solver_(h.data(), h.data().N() + 1, reversed) {}

PseudoForm RuminMap::operator()(const PseudoForm& alpha) const {
  const PseudoForm da = pseudo_d(h_, alpha);
  PseudoForm gamma;
  for (const auto& [i, f] : da.terms) gamma.add(i, solver_.split(f).gamma);
  return pseudo_d(h_, alpha - pseudo_theta(h_.data(), gamma));
}

namespace {

Subspace term_space(const ContactLieData& data, int n) {
  auto red = compute_IK(data, n);
  return n <= data.N() ? red.I : red.K;
}

}  // namespace

RuminTerm::RuminTerm(const ContactLieData& data, int n)
    : n_(n), quotient_(n <= data.N()), space_(term_space(data, n)) {
  if (quotient_)
    for (Mask m : space_.standard_monomials()) generators_.push_back(monomial(m));
  else
    generators_ = space_.basis();
}

Vec RuminTerm::coords(const Form& f) const {
  if (!quotient_) return space_.coordinates(f);
  const Form r = space_.reduce(f);
  Vec out = Vec::Zero(rank());
  for (int k = 0; k < rank(); ++k) out(k) = r.coeff(generators_[k].terms.begin()->first);
  return out;
}

TensorElement RuminTerm::to_tensor(const PseudoForm& a) const {
  TensorElement out;
  for (const auto& [i, f] : a.terms) {
    const Vec c = coords(f);
    for (int k = 0; k < rank(); ++k) out.add(i, k, c(k));
  }
  return out;
}

PseudoForm RuminTerm::from_tensor(const TensorElement& t) const {
  PseudoForm out;
  for (const auto& [key, c] : t.terms) out.add(key.first, c * generators_[key.second]);
  return out;
}

Mat RuminTerm::gl_matrix(const Mat& a) const {
  Mat out(rank(), rank());
  for (int k = 0; k < rank(); ++k) out.col(k) = coords(gl_act(a, generators_[k]));
  return out;
}

std::string RuminTerm::label() const {
  return quotient_ ? "Omega^" + std::to_string(n_) + "/I^" + std::to_string(n_) : "K^" + std::to_string(n_);
}

RuminComplex rumin_complex(const Enveloping& h) {
  const auto& data = h.data();
  RuminComplex out;
  for (int n = 0; n <= h.dim(); ++n) {
    out.terms.emplace_back(data, n);
    out.complex.ranks.push_back(out.terms.back().rank());
  }
  const RuminMap rumin(h);
  for (int n = 0; n + 1 <= h.dim(); ++n) {
    const RuminTerm& src = out.terms[n];
    const RuminTerm& dst = out.terms[n + 1];
    FreeMap m{src.rank(), dst.rank(), {}};
    for (int k = 0; k < src.rank(); ++k) {
      const PseudoForm a = constant_pseudo(h.dim(), src.generator(k));
      m.images.push_back(dst.to_tensor(n == data.N() ? rumin(a) : pseudo_d(h, a)));
    }
    out.complex.maps.push_back(std::move(m));
  }
  return out;
}

bool is_complex(const Enveloping& h, const FreeComplex& c) {
  for (std::size_t k = 0; k + 1 < c.maps.size(); ++k)
    if (!compose(h, c.maps[k + 1], c.maps[k]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

struct TermKeyHash {
  std::size_t operator()(const std::pair<MultiIndex, int>& k) const {
    return k.first.hash() * 97 + static_cast<std::size_t>(k.second);
  }
};
using TermIndexer = Indexer<std::pair<MultiIndex, int>, TermKeyHash>;

SparseVec<Rational> sparse(TermIndexer& idx, const TensorElement& t) {
  SparseVec<Rational> v;
  for (const auto& [key, c] : t.terms) v.emplace(idx(key), c);
  return v;
}

std::vector<std::pair<MultiIndex, int>> generators_up_to(int dim, int rank, int degree) {
  std::vector<std::pair<MultiIndex, int>> out;
  for (const auto& i : indices_up_to_degree(dim, degree))
    for (int r = 0; r < rank; ++r) out.emplace_back(i, r);
  return out;
}

TensorElement single(const std::pair<MultiIndex, int>& g) {
  TensorElement t;
  t.add(g.first, g.second, 1);
  return t;
}

}  // namespace

std::vector<ExactnessReport> exactness_sample(const Enveloping& h, const FreeComplex& c, int trials,
                                              int degree_bound, std::uint64_t seed) {
  std::vector<ExactnessReport> out;
  for (std::size_t k = 1; k < c.maps.size(); ++k) {
    ExactnessReport rep;
    rep.term = static_cast<int>(k);
    rep.trials = trials;
    rep.seed = seed + k;
    // Cocycles at degree <= D - 2.
    const auto gens = generators_up_to(h.dim(), c.ranks[k], degree_bound - 2);
    TermIndexer next_idx;
    std::vector<SparseVec<Rational>> images;
    for (const auto& g : gens) images.push_back(sparse(next_idx, c.maps[k].apply(h, single(g))));
    const auto ker = sparse_kernel(images);
    rep.kernel_dim = static_cast<int>(ker.size());
    // Coboundaries of degree <= D.
    TermIndexer here_idx;
    SparseEchelon<Rational> ech;
    const auto pre = generators_up_to(h.dim(), c.ranks[k - 1], degree_bound);
    for (std::size_t p = 0; p < pre.size(); ++p)
      ech.insert(sparse(here_idx, c.maps[k - 1].apply(h, single(pre[p]))),
                 SparseVec<Rational>{{static_cast<int>(p), Rational(1)}});
    std::mt19937_64 rng(rep.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < trials; ++t) {
      TensorElement z;
      for (const auto& rel : ker) {
        const int a = coef(rng);
        for (const auto& [g, v] : rel) z.add(gens[g].first, gens[g].second, a * v);
      }
      auto sol = ech.solve(sparse(here_idx, z));
      if (!sol) continue;
      TensorElement y;
      for (const auto& [p, v] : *sol) y.add(pre[p].first, pre[p].second, v);
      if (c.maps[k - 1].apply(h, y) == z) ++rep.successes;
    }
    out.push_back(rep);
  }
  return out;
}

bool injective_start(const Enveloping& h, const FreeComplex& c, int degree_bound) {
  if (c.maps.empty()) return true;
  const auto gens = generators_up_to(h.dim(), c.ranks[0], degree_bound);
  TermIndexer idx;
  std::vector<SparseVec<Rational>> images;
  for (const auto& g : gens) images.push_back(sparse(idx, c.maps[0].apply(h, single(g))));
  return sparse_kernel(images).empty();
}

// ---------------------------------------------------------------------------

TwistData::TwistData(const ContactLieData& data, std::vector<Mat> rho)
    : dim_(rho.empty() ? 0 : static_cast<int>(rho[0].rows())), rho_(std::move(rho)) {
  if (static_cast<int>(rho_.size()) != data.dim()) throw BadConfig("twist needs one matrix per basis vector of d");
  for (const auto& m : rho_)
    if (m.rows() != dim_ || m.cols() != dim_) throw BadConfig("twist matrices must be square of equal size");
  for (int i = 0; i < data.dim(); ++i)
    for (int j = i + 1; j < data.dim(); ++j) {
      Mat rhs = Mat::Zero(dim_, dim_);
      for (int k = 0; k < data.dim(); ++k)
        if (!data.c(i, j, k).is_zero()) rhs += data.c(i, j, k) * rho_[k];
      if (Mat(rho_[i] * rho_[j] - rho_[j] * rho_[i]) != rhs) throw BadConfig("twist matrices violate the brackets of d");
    }
}

TwistData TwistData::trivial(const ContactLieData& data, int dim) {
  return TwistData(data, std::vector<Mat>(data.dim(), Mat::Zero(dim, dim)));
}

TwistData TwistData::trace_character(const ContactLieData& data, int sign) {
  std::vector<Mat> rho;
  for (int k = 0; k < data.dim(); ++k) rho.push_back(Mat::Constant(1, 1, sign * data.trace_ad(k)));
  return TwistData(data, std::move(rho));
}

TwistData TwistData::jordan(const ContactLieData& data) {
  Mat j = Mat::Zero(2, 2);
  j(0, 1) = 1;
  std::vector<Mat> rho{Mat::Zero(2, 2)};
  for (int i = 1; i < data.dim(); ++i) rho.push_back(Mat(Rational(i) * identity(2) + Rational(2 * i - 1) * j));
  return TwistData(data, std::move(rho));
}

const Mat& TwistData::rho_basis(const MultiIndex& i) const {
  return basis_cache_->get(i, [&] {
    Mat out = identity(dim_);
    for (int k = 0; k < i.dim(); ++k)
      for (int p = 1; p <= i[k]; ++p) out = Mat(out * rho_[k]) / Rational(p);
    return out;
  });
}

Mat TwistData::rho_h(const PBWElement& a) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (const auto& [i, c] : a.terms) out += c * rho_basis(i);
  return out;
}

const Mat& TwistData::rho_antipode(const Enveloping& h, const MultiIndex& i) const {
  return antipode_cache_->get(i, [&] { return rho_h(h.antipode_basis(i)); });
}

TwistData TwistData::tensor(const TwistData& o) const {
  std::vector<Mat> rho;
  for (std::size_t k = 0; k < rho_.size(); ++k)
    rho.push_back(kron(rho_[k], identity(o.dim_)) + kron(identity(dim_), o.rho_[k]));
  return TwistData(dim_ * o.dim_, std::move(rho));
}

FreeMap twist_map(const Enveloping& h, const TwistData& pi, const FreeMap& beta) {
  const int n = pi.dim();
  FreeMap out{n * beta.source_rank, n * beta.target_rank, {}};
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < beta.source_rank; ++i) {
      TensorElement img;
      for (const auto& [key, c] : beta.images[i].terms) {
        const auto& [k, j] = key;
        for (const auto& k1 : sub_indices(k)) {
          const Mat& m = pi.rho_antipode(h, k - k1);
          for (int q = 0; q < n; ++q)
            if (!m(q, p).is_zero()) img.add(k1, q * beta.target_rank + j, c * m(q, p));
        }
      }
      out.images.push_back(std::move(img));
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void add_pair(PairTensor& out, const Enveloping& h, const PBWElement& f, const PBWElement& g, const FormSpace& fs,
              const Form& value, const Rational& scale) {
  if (value.is_zero()) return;
  for (const auto& [a, x] : f.terms)
    for (const auto& [b, y] : g.terms)
      for (const auto& [m, c] : value.terms) out.add(a, b, fs.index(m), scale * x * y * c);
  (void)h;
}

}  // namespace

std::vector<PairTensor> e_action_on_forms(const Enveloping& h, int n) {
  const auto& data = h.data();
  const int dim = h.dim();
  const FormSpace fs(dim, n);
  // e = 1 (x) d_0 - sum_i d_i (x) d^i as a sum of f (x) a with a in d.
  std::vector<std::pair<PBWElement, Vec>> parts{{h.one(), unit(dim, 0)}};
  for (int i = 1; i < dim; ++i) parts.emplace_back(Rational(-1) * h.gen(i), data.dual(i));
  const PBWElement one = h.one();
  std::vector<PairTensor> out;
  for (int s = 0; s < fs.size(); ++s) {
    const Form alpha = monomial(fs.monomial(s));
    PairTensor acc;
    for (const auto& [f, a] : parts) {
      // (f (x) a) * (1 (x) alpha) = -(f (x) a) alpha - sum_k (f d_k (x) 1) x^k ^ iota_a alpha
      //                             + (f (x) 1) (ad a) . alpha
      add_pair(acc, h, f, h.vec(a), fs, alpha, -1);
      const Form ia = contract(a, alpha);
      for (int k = 0; k < dim; ++k)
        add_pair(acc, h, h.mul(f, h.gen(k)), one, fs, wedge(x(k), ia), -1);
      add_pair(acc, h, f, one, fs, gl_act(data.ad(a), alpha), 1);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<PairTensor> e_action_on_term(const Enveloping& h, const RuminTerm& term) {
  const FormSpace fs(h.dim(), term.degree());
  const auto base = e_action_on_forms(h, term.degree());
  std::vector<PairTensor> out;
  for (int k = 0; k < term.rank(); ++k) {
    std::map<std::pair<MultiIndex, MultiIndex>, Form> grouped;
    for (const auto& [m, c] : term.generator(k).terms)
      for (const auto& [key, v] : base[fs.index(m)].terms) {
        const auto& [f, g, r] = key;
        grouped[{f, g}].add(fs.monomial(r), c * v);
      }
    PairTensor acc;
    for (const auto& [fg, form] : grouped) {
      if (form.is_zero()) continue;
      const Vec c = term.coords(form);
      for (int r = 0; r < term.rank(); ++r) acc.add(fg.first, fg.second, r, c(r));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace kdt
