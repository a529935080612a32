#include "kdt/pseudoalgebra.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "kdt/errors.hpp"

namespace kdt {

Mat Carrier::rho_sp(const SpGenerators& g, const Mat& a) const {
  const Vec c = g.decompose(a);
  Mat out = Mat::Zero(dim, dim);
  for (int k = 0; k < g.count(); ++k)
    if (!c(k).is_zero()) out += c(k) * sp[k];
  return out;
}

Carrier product_carrier(const SpGenerators& g, const TwistData& pi, const SpRep& u, const Rational& c) {
  Carrier r;
  r.dim = pi.dim() * u.dim;
  for (int k = 0; k < g.dim(); ++k) r.d.push_back(kron(pi.rho(k), identity(u.dim)));
  for (const auto& f : u.f) r.sp.push_back(kron(identity(pi.dim()), f));
  r.iprime = c * identity(r.dim);
  return r;
}

namespace {

Carrier twisted(const SpGenerators& g, const TwistData& pi, int n, const std::vector<Mat>& sp, const Mat& iprime,
                std::vector<Mat> cz) {
  Carrier r;
  r.dim = pi.dim() * n;
  for (int k = 0; k < g.dim(); ++k) r.d.push_back(kron(pi.rho(k), identity(n)));
  for (const auto& f : sp) r.sp.push_back(kron(identity(pi.dim()), f));
  r.iprime = kron(identity(pi.dim()), iprime);
  if (std::any_of(cz.begin(), cz.end(), [](const Mat& m) { return !is_zero(m); }))
    for (const auto& m : cz) r.cz.push_back(kron(identity(pi.dim()), m));
  return r;
}

}  // namespace

Carrier form_carrier(const SpGenerators& g, const RuminTerm& term, const TwistData& pi) {
  std::vector<Mat> sp, cz;
  for (int k = 0; k < g.count(); ++k) sp.push_back(term.gl_matrix(g.generator(k)));
  for (int i = 1; i < g.dim(); ++i) cz.push_back(term.gl_matrix(g.e_upper(i, 0)));
  return twisted(g, pi, term.rank(), sp, term.gl_matrix(g.i_prime()), std::move(cz));
}

Carrier full_form_carrier(const SpGenerators& g, int n) {
  const FormSpace fs(g.dim(), n);
  auto gl = [&](const Mat& a) {
    Mat out = Mat::Zero(fs.size(), fs.size());
    for (int k = 0; k < fs.size(); ++k)
      for (const auto& [i, v] : fs.coords(gl_act(a, monomial(fs.monomial(k))))) out(i, k) = v;
    return out;
  };
  std::vector<Mat> sp, cz;
  for (int k = 0; k < g.count(); ++k) sp.push_back(gl(g.generator(k)));
  for (int i = 1; i < g.dim(); ++i) cz.push_back(gl(g.e_upper(i, 0)));
  return twisted(g, TwistData::trivial(g.data()), fs.size(), sp, gl(g.i_prime()), std::move(cz));
}

Carrier trace_shift(const ContactLieData& data, Carrier r, int sign) {
  for (int k = 0; k < data.dim(); ++k) r.d[k] += (sign * data.trace_ad(k)) * identity(r.dim);
  r.iprime -= Rational(sign * (2 * data.N() + 2)) * identity(r.dim);
  return r;
}

// ---------------------------------------------------------------------------

TensorModule::TensorModule(const Enveloping& h, Carrier r, Convention convention)
    : h_(&h), g_(h.data()), r_(std::move(r)), convention_(convention) {
  if (static_cast<int>(r_.d.size()) != h.dim() || static_cast<int>(r_.sp.size()) != g_.count())
    throw BadConfig("carrier does not match the algebra");
  for (int k = 0; k < r_.dim; ++k) generator_action_.push_back(generator_action(k));
}

TensorModule::TensorModule(const Enveloping& h, const TensorModuleSpec& spec)
    : TensorModule(h, product_carrier(SpGenerators(h.data()), spec.pi, spec.u, spec.c), spec.convention) {}

PairTensor TensorModule::generator_action(int r) const {
  const Enveloping& h = *h_;
  const auto& data = h.data();
  const int dim = h.dim();
  const Vec u = unit(r_.dim, r);
  const PBWElement one = h.one();
  const bool v_conv = convention_ == Convention::V;
  PairTensor out;
  auto add = [&](const PBWElement& f, const PBWElement& g, const TensorElement& v, const Rational& s) {
    if (!v.is_zero()) out += s * pair_tensor(h, f, g, v);
  };
  if (!v_conv) {
    // -e (x)_H (1 (x) u) with e = 1 (x) d_0 - sum_i d_i (x) d^i.
    add(one, h.gen(0), constant_element(dim, u), -1);
    for (int i = 1; i < dim; ++i) add(h.gen(i), h.vec(data.dual(i)), constant_element(dim, u), 1);
  }
  // (1 (x) 1) (x)_H (1 (x) rho(d_0 + ad d_0) u [- d_0 (x) u])
  TensorElement w = constant_element(dim, Vec((r_.d[0] + r_.rho_sp(g_, ad_sp_dual(g_, 0))) * u));
  if (v_conv) w -= tensor(h.gen(0), u);
  add(one, one, w, 1);
  // - sum_k (d_k (x) 1) (x)_H (1 (x) rho(d^k + ad_sp d^k) u [- d^k (x) u])
  for (int k = 1; k < dim; ++k) {
    const Vec dk = data.dual(k);
    Mat rho = r_.rho_sp(g_, ad_sp_dual(g_, k));
    for (int j = 0; j < dim; ++j)
      if (!dk(j).is_zero()) rho += dk(j) * r_.d[j];
    TensorElement t = constant_element(dim, Vec(rho * u));
    if (v_conv) t -= tensor(h.vec(dk), u);
    add(h.gen(k), one, t, -1);
  }
  add(h.gen(0), one, constant_element(dim, Vec(r_.iprime * u)), Rational(1, 2));
  for (int i = 1; i < dim; ++i)
    for (int j = 1; j < dim; ++j)
      add(h.mul(h.gen(i), h.gen(j)), one, constant_element(dim, Vec(r_.rho_f(g_, i, j) * u)), 1);
  if (!r_.cz.empty())
    for (int i = 1; i < dim; ++i)
      add(h.mul(h.gen(0), h.gen(i)), one, constant_element(dim, Vec(r_.cz[i - 1] * u)), -1);
  return out;
}

PairTensor TensorModule::e_star_pair(const TensorElement& v) const {
  std::map<MultiIndex, PairTensor> grouped;
  for (const auto& [key, c] : v.terms) grouped[key.first] += c * generator_action_[key.second];
  PairTensor out;
  const PBWElement one = h_->one();
  for (const auto& [i, x] : grouped) {
    if (i.is_zero())
      out += x;
    else
      out += mul_pair(*h_, one, h_->basis(i), x);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

TripleTensor act_again(const Enveloping& h, const std::vector<PairTensor>& action, const PairTensor& x) {
  TripleTensor out;
  for (const auto& [key, c] : x.terms) {
    const auto& [f, g, r] = key;
    for (const auto& [inner, d] : action[r].terms) {
      const auto& [p, q, s] = inner;
      for (const auto& q1 : sub_indices(q)) {
        const auto& fq = h.mul_basis(f, q1);
        const auto& gq = h.mul_basis(g, q - q1);
        for (const auto& [a, x1] : fq.terms)
          for (const auto& [b, x2] : gq.terms) out.add(p, a, b, s, c * d * x1 * x2);
      }
    }
  }
  return out;
}

}  // namespace

TripleTensor act_again(const TensorModule& m, const PairTensor& x) {
  std::vector<PairTensor> action;
  for (int r = 0; r < m.rank(); ++r) action.push_back(m.e_on_generator(r));
  return act_again(m.h(), action, x);
}

TripleTensor bracket_act(const Enveloping& h, const PairTensor& x) {
  const auto& data = h.data();
  const int dim = h.dim();
  const MultiIndex zero(dim), s = MultiIndex::unit(dim, 0);
  // r + s (x) 1 - 1 (x) s
  std::vector<std::tuple<MultiIndex, MultiIndex, Rational>> kernel{{s, zero, 1}, {zero, s, -1}};
  for (int i = 1; i < dim; ++i)
    for (int j = 1; j < dim; ++j)
      if (!data.r()(i, j).is_zero())
        kernel.emplace_back(MultiIndex::unit(dim, i), MultiIndex::unit(dim, j), data.r()(i, j));
  TripleTensor out;
  for (const auto& [key, c] : x.terms) {
    const auto& [p, q, r] = key;
    for (const auto& p1 : sub_indices(p))
      for (const auto& [a, b, w] : kernel) {
        const auto& left = h.mul_basis(a, p1);
        const auto& right = h.mul_basis(b, p - p1);
        for (const auto& [m1, x1] : left.terms)
          for (const auto& [m2, x2] : right.terms) out.add(m1, m2, q, r, c * w * x1 * x2);
      }
  }
  return out;
}

TripleTensor swap_first_two(const TripleTensor& x) {
  TripleTensor out;
  for (const auto& [key, c] : x.terms) {
    const auto& [f, g, k, r] = key;
    out.add(g, f, k, r, c);
  }
  return out;
}

JacobiReport jacobi_check(const Enveloping& h, const std::vector<PairTensor>& action) {
  JacobiReport rep;
  for (std::size_t r = 0; r < action.size(); ++r) {
    ++rep.checked;
    const TripleTensor twice = act_again(h, action, action[r]);
    if (bracket_act(h, action[r]) != twice - swap_first_two(twice)) {
      if (rep.failures++ == 0) rep.first_failure = static_cast<int>(r);
    }
  }
  return rep;
}

JacobiReport jacobi_check(const TensorModule& m) {
  std::vector<PairTensor> action;
  for (int r = 0; r < m.rank(); ++r) action.push_back(m.e_on_generator(r));
  return jacobi_check(m.h(), action);
}

bool is_homomorphism(const TensorModule& source, const TensorModule& target, const FreeMap& beta) {
  for (int i = 0; i < source.rank(); ++i)
    if (apply_map(source.h(), beta, source.e_on_generator(i)) != target.e_star_pair(beta.images[i])) return false;
  return true;
}

std::vector<PairTensor> twist_action(const Enveloping& h, const TwistData& pi, const std::vector<PairTensor>& action,
                                     int rank) {
  const int n = pi.dim();
  std::vector<PairTensor> out;
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < rank; ++i) {
      PairTensor acc;
      for (const auto& [key, c] : action[i].terms) {
        const auto& [f, g, j] = key;
        for (const auto& g1 : sub_indices(g)) {
          const Mat& m = pi.rho_antipode(h, g - g1);
          for (int q = 0; q < n; ++q)
            if (!m(q, p).is_zero()) acc.add(f, g1, q * rank + j, c * m(q, p));
        }
      }
      out.push_back(std::move(acc));
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool only_low_contact(const NormalizedAction& n) {
  return std::all_of(n.coeffs.begin(), n.coeffs.end(),
                     [](const auto& kv) { return kv.first.contact_degree() <= 2; });
}

using CoeffKey = std::tuple<MultiIndex, MultiIndex, int>;
struct CoeffKeyHash {
  std::size_t operator()(const CoeffKey& k) const {
    return std::get<0>(k).hash() * 1000003u ^ std::get<1>(k).hash() * 131u ^ static_cast<std::size_t>(std::get<2>(k));
  }
};

}  // namespace

bool is_singular(const TensorModule& m, const TensorElement& v) { return only_low_contact(m.e_star(v)); }

bool is_singular_right(const TensorModule& m, const TensorElement& v) {
  return only_low_contact(to_right_normal(m.h(), m.e_star_pair(v)));
}

std::vector<int> SingularSpace::degrees() const {
  std::vector<int> out;
  for (std::size_t p = 1; p < new_by_degree.size(); ++p)
    if (new_by_degree[p] > 0) out.push_back(static_cast<int>(p));
  return out;
}

SingularSpace singular_space(const TensorModule& m, int cutoff) {
  const int dim = m.h().dim();
  std::vector<MultiIndex> idx = indices_up_to_contact(dim, cutoff);
  std::stable_sort(idx.begin(), idx.end(),
                   [](const MultiIndex& a, const MultiIndex& b) { return a.contact_degree() < b.contact_degree(); });
  std::vector<std::pair<MultiIndex, int>> gens;
  for (const auto& i : idx)
    for (int r = 0; r < m.rank(); ++r) gens.emplace_back(i, r);

  SingularSpace out;
  out.cutoff = cutoff;
  out.rank = m.rank();
  out.new_by_degree.assign(cutoff + 1, 0);
  Indexer<CoeffKey, CoeffKeyHash> index;
  SparseEchelon<Rational> ech;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    TensorElement v;
    v.add(gens[k].first, gens[k].second, 1);
    SparseVec<Rational> row;
    for (const auto& [i, coeff] : m.e_star(v).coeffs) {
      if (i.contact_degree() <= 2) continue;
      for (const auto& [key, c] : coeff.terms) row.emplace(index(CoeffKey{i, key.first, key.second}), c);
    }
    SparseVec<Rational> rel;
    if (ech.insert(std::move(row), SparseVec<Rational>{{static_cast<int>(k), Rational(1)}}, &rel)) continue;
    TensorElement s;
    for (const auto& [g, c] : rel) s.add(gens[g].first, gens[g].second, c);
    out.basis.push_back(std::move(s));
    ++out.new_by_degree[gens[k].first.contact_degree()];
  }
  return out;
}

int default_cutoff(const SpRep& u) { return u.is_trivial() ? 3 : 2; }

SingularAction rho_sing(const TensorModule& m, const TensorElement& v) {
  const auto& g = m.sp();
  const auto& data = m.h().data();
  const int dim = data.dim();
  const NormalizedAction n = m.e_star(v);
  SingularAction out;
  for (int k = 0; k < g.count(); ++k) {
    const auto [i, j] = g.pair(k);
    out.f.push_back(Rational(1, 2) * n.at(MultiIndex::unit(dim, i) + MultiIndex::unit(dim, j)));
  }
  TensorElement acc = n.at(MultiIndex::unit(dim, 0));
  for (int i = 1; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (!data.c(i, j, 0).is_zero()) acc += data.c(i, j, 0) * out.f[g.pair_index(i, j)];
  out.iprime = Rational(2) * acc;
  return out;
}

bool rho_sing_constants_check(const TensorModule& m) {
  const auto& r = m.carrier();
  const int dim = m.h().dim();
  Mat iprime = r.iprime;
  if (m.convention() == Convention::T) iprime += Rational(2 * m.h().data().N() + 2) * identity(r.dim);
  for (int k = 0; k < r.dim; ++k) {
    const Vec u = unit(r.dim, k);
    const SingularAction s = rho_sing(m, constant_element(dim, u));
    for (std::size_t p = 0; p < r.sp.size(); ++p)
      if (s.f[p] != constant_element(dim, Vec(r.sp[p] * u))) return false;
    if (s.iprime != constant_element(dim, Vec(iprime * u))) return false;
  }
  return true;
}

bool iprime_grading_check(const TensorModule& m, const Rational& c, const TensorElement& v) {
  if (v.is_zero()) return true;
  const int k = v.contact_degree();
  const TensorElement w = rho_sing(m, v).iprime - (c + k) * v;
  return w.contact_degree() < k;
}

bool csp_stability_check(const TensorModule& m, const TensorElement& v) {
  const SingularAction s = rho_sing(m, v);
  if (!is_singular(m, s.iprime)) return false;
  return std::all_of(s.f.begin(), s.f.end(), [&](const TensorElement& w) { return is_singular(m, w); });
}

TensorElement psi(const TensorModule& m, const Vec& u) {
  const Enveloping& h = m.h();
  TensorElement out;
  for (int i = 1; i < h.dim(); ++i)
    for (int j = 1; j < h.dim(); ++j) {
      const Vec w = m.carrier().rho_f(m.sp(), i, j) * u;
      if (!w.isZero()) out += tensor(h.mul(h.gen(i), h.gen(j)), w);
    }
  return out;
}

bool coefficient_lemma_check(const TensorModule& m, const TensorElement& v) {
  const NormalizedAction right = to_right_normal(m.h(), m.e_star_pair(v));
  std::vector<MultiIndex> support;
  for (const auto& [i, c] : right.coeffs) support.push_back(i);
  for (const auto& [key, c] : v.terms) support.push_back(key.first);
  for (const auto& i : support) {
    const TensorElement diff = right.at(i) - psi(m, v.coefficient(i, m.rank()));
    if (diff.degree() > 1) return false;
  }
  return true;
}

Degree2Report degree2_structure_check(const TensorModule& m, const Rational& c, const TensorElement& v) {
  Degree2Report rep;
  rep.singular = is_singular(m, v);
  if (!rep.singular) return rep;
  const auto& g = m.sp();
  const auto& r = m.carrier();
  const int dim = m.h().dim(), rank = m.rank(), n = g.N();
  // Top part sum_{ij} d_i d_j (x) v_ij: the divided-power coefficients are 2 v_ij.
  Mat a(g.count() * rank, rank);
  Vec b(g.count() * rank);
  for (int k = 0; k < g.count(); ++k) {
    const auto [i, j] = g.pair(k);
    const Vec vij = Rational(1, 2) * v.coefficient(MultiIndex::unit(dim, i) + MultiIndex::unit(dim, j), rank);
    if (!vij.isZero()) rep.top = true;
    a.block(k * rank, 0, rank, rank) = r.sp[k];
    b.segment(k * rank, rank) = vij;
  }
  if (!rep.top) return rep;
  const auto u = solve(a, b);
  if (!u) return rep;
  rep.u = *u;
  rep.v0 = (v - psi(m, rep.u)).coefficient(MultiIndex::unit(dim, 0), rank);
  rep.v0_identity = rep.v0 == Vec((c / 2 - n - 1) * rep.u);
  Mat ff = Mat::Zero(rank, rank);  // sum f_ab f^{ab}
  for (int i = 1; i < dim; ++i)
    for (int j = 1; j < dim; ++j) ff += r.rho_sp(g, g.f_lower(i, j)) * r.rho_f(g, i, j);
  rep.casimir_identity = Vec(c * rep.v0) == Vec(ff * rep.u);
  const Vec cas = -(ff * rep.u);
  Eigen::Index pivot = 0;
  while (rep.u(pivot).is_zero()) ++pivot;
  const Rational kappa = cas(pivot) / rep.u(pivot);
  rep.quadratic = cas == Vec(kappa * rep.u) && (c * c - (2 * n + 2) * c + 2 * kappa).is_zero();
  return rep;
}

// ---------------------------------------------------------------------------

bool Verdict::has_degree(int p) const { return std::find(degrees.begin(), degrees.end(), p) != degrees.end(); }

Verdict classify(const Enveloping& h, const TensorModuleSpec& spec, int cutoff) {
  if (cutoff < 0) cutoff = default_cutoff(spec.u);
  const TensorModule m(h, spec);
  const SingularSpace s = singular_space(m, cutoff);
  return Verdict{!s.only_constants(), s.degrees(), cutoff};
}

SpRep scan_module(const SpGenerators& g, int weight) {
  if (weight == 0) return trivial_rep(g);
  if (weight == -2) return sym_square_rep(g);
  return fundamental_rep(g, weight);
}

std::vector<ScanEntry> classification_scan(const Enveloping& h, const TwistData& pi, int c_min, int c_max, int cutoff,
                                           int threads) {
  const SpGenerators g(h.data());
  std::vector<int> weights{0};
  for (int p = 1; p <= g.N(); ++p) weights.push_back(p);
  weights.push_back(-2);
  std::vector<ScanEntry> out;
  for (int w : weights)
    for (int c = c_min; c <= c_max; ++c) {
      ScanEntry e;
      e.weight = w;
      e.label = w == 0 ? "trivial" : w == -2 ? "R(2pi_1)" : "R(pi_" + std::to_string(w) + ")";
      e.c = c;
      out.push_back(std::move(e));
    }
  auto run = [&](ScanEntry& e) {
    const SpRep u = scan_module(g, e.weight);
    const TensorModule m(h, TensorModuleSpec{pi, u, e.c, Convention::V});
    const int d = cutoff < 0 ? default_cutoff(u) : cutoff;
    const SingularSpace s = singular_space(m, d);
    e.verdict = Verdict{!s.only_constants(), s.degrees(), d};
    for (const auto& v : s.basis)
      if (v.contact_degree() == 2) e.degree2_vectors.push_back(v);
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(out.size()));
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < out.size(); k = next++) run(out[k]);
    });
  for (auto& t : pool) t.join();
  return out;
}

ReferenceVerdict reference_verdict(int N, int weight, const Rational& c) {
  if (weight == 0) return {c == 0, false};
  if (weight < 0) return {false, false};
  return {c == weight || c == 2 * N + 2 - weight, weight == N && c == N};
}

// ---------------------------------------------------------------------------

namespace {

void add_tau(std::map<MultiIndex, Mat>& out, const PBWElement& f, const Mat& a, int dim) {
  for (const auto& [i, c] : f.terms) {
    auto [it, fresh] = out.try_emplace(i, Mat::Zero(dim, dim));
    it->second += c * a;
  }
}

void prune(std::map<MultiIndex, Mat>& m) {
  std::erase_if(m, [](const auto& kv) { return is_zero(kv.second); });
}

}  // namespace

std::map<MultiIndex, Mat> tau_direct(const Enveloping& h) {
  const auto& data = h.data();
  const int dim = h.dim();
  std::map<MultiIndex, Mat> out;
  // tau(f (x) d_m) = f (x) ad d_m + sum_j f d_j (x) e_m^j
  auto tau = [&](const PBWElement& f, int m, const Rational& s) {
    add_tau(out, f, s * data.ad(m), dim);
    for (int j = 0; j < dim; ++j) add_tau(out, h.mul(f, h.gen(j)), s * gl_unit(dim, m, j), dim);
  };
  tau(h.one(), 0, 1);
  for (int i = 1; i < dim; ++i)
    for (int m = 1; m < dim; ++m)
      if (!data.r()(i, m).is_zero()) tau(h.gen(i), m, -data.r()(i, m));
  prune(out);
  return out;
}

std::map<MultiIndex, Mat> tau_formula(const Enveloping& h) {
  const int dim = h.dim();
  const SpGenerators g(h.data());
  std::map<MultiIndex, Mat> out;
  add_tau(out, h.one(), ad_sp_dual(g, 0), dim);
  for (int i = 1; i < dim; ++i) add_tau(out, h.gen(i), -ad_sp_dual(g, i), dim);
  add_tau(out, h.gen(0), Rational(1, 2) * g.i_prime(), dim);
  for (int i = 1; i < dim; ++i) add_tau(out, h.mul(h.gen(0), h.gen(i)), -g.e_upper(i, 0), dim);
  for (int i = 1; i < dim; ++i)
    for (int j = 1; j < dim; ++j) add_tau(out, h.mul(h.gen(i), h.gen(j)), g.f_upper(i, j), dim);
  prune(out);
  return out;
}

TwistedComplex twisted_rumin(const Enveloping& h, const TwistData& pi) {
  RuminComplex rc = rumin_complex(h);
  const SpGenerators g(h.data());
  TwistedComplex out;
  for (const auto& t : rc.terms) out.modules.emplace_back(h, form_carrier(g, t, pi), Convention::T);
  for (int r : rc.complex.ranks) out.complex.ranks.push_back(pi.dim() * r);
  for (const auto& m : rc.complex.maps) out.complex.maps.push_back(twist_map(h, pi, m));
  out.terms = std::move(rc.terms);
  return out;
}

ComplexReport complex_check(const Enveloping& h, const TwistedComplex& tc, const TwistData& pi) {
  ComplexReport rep;
  const auto& maps = tc.complex.maps;
  rep.maps = static_cast<int>(maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (!is_homomorphism(tc.modules[k], tc.modules[k + 1], maps[k])) ++rep.homomorphism_failures;
    if (k + 1 < maps.size() && !compose(h, maps[k + 1], maps[k]).is_zero()) ++rep.composition_failures;
    for (const auto& img : maps[k].images)
      if (!is_singular(tc.modules[k + 1], img)) ++rep.singular_image_failures;
  }
  for (std::size_t k = 0; k < tc.terms.size(); ++k) {
    const auto direct = twist_action(h, pi, e_action_on_term(h, tc.terms[k]), tc.terms[k].rank());
    for (int r = 0; r < tc.modules[k].rank(); ++r)
      if (direct[r] != tc.modules[k].e_on_generator(r)) {
        ++rep.identification_failures;
        break;
      }
  }
  return rep;
}

}  // namespace kdt
