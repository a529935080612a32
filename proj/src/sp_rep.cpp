#include "kdt/sp_rep.hpp"

#include <algorithm>
#include <map>

#include "kdt/errors.hpp"
#include "kdt/exterior.hpp"

namespace kdt {

namespace {

SparseVec<Rational> flatten(const Mat& a) {
  SparseVec<Rational> v;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) v[static_cast<int>(i * a.cols() + j)] = a(i, j);
  return v;
}

// The d-bar block of a dim x dim matrix, padded back to dim x dim.
Mat bar_block(const Mat& a) {
  Mat out = a;
  out.row(0).setZero();
  out.col(0).setZero();
  return out;
}

}  // namespace

SpGenerators::SpGenerators(const ContactLieData& data) : data_(data), dim_(data.dim()) {
  for (int i = 1; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) pairs_.emplace_back(i, j);
  for (const auto& [i, j] : pairs_) f_.push_back(Rational(-1, 2) * (e_upper(i, j) + e_upper(j, i)));
  i_prime_ = kdt::i_prime(dim_);
  for (int k = 0; k < count(); ++k) ech_.insert(flatten(f_[k]), {{k, Rational(1)}});
}

Mat SpGenerators::e_upper(int i, int j) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (int k = 1; k < dim_; ++k)
    if (!data_.r()(i, k).is_zero()) out(k, j) += data_.r()(i, k);
  return out;
}

int SpGenerators::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j >= dim_) throw BadWeightIndex("f^{ij} needs 1 <= i, j <= 2N");
  // Row i starts after sum_{a<i} (2N + 1 - a) earlier pairs.
  const int m = dim_ - 1;
  const int before = (i - 1) * m - (i - 1) * (i - 2) / 2;
  return before + (j - i);
}

Mat SpGenerators::f_mixed(int i, int j) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (int a = 1; a < dim_; ++a)
    if (!data_.omega()(i, a).is_zero()) out += data_.omega()(i, a) * f_upper(a, j);
  return out;
}

Mat SpGenerators::f_lower(int i, int j) const {
  Mat out = Mat::Zero(dim_, dim_);
  for (int a = 1; a < dim_; ++a)
    for (int b = 1; b < dim_; ++b) {
      Rational w = data_.omega()(i, a) * data_.omega()(j, b);
      if (!w.is_zero()) out += w * f_upper(a, b);
    }
  return out;
}

bool SpGenerators::in_sp(const Mat& a) const { return ech_.contains(flatten(a)); }

Vec SpGenerators::decompose(const Mat& a) const {
  auto sol = ech_.solve(flatten(a));
  if (!sol) throw SolveFailure("matrix is not in sp(d-bar)");
  Vec out = Vec::Zero(count());
  for (const auto& [k, v] : *sol) out(k) = v;
  return out;
}

Mat SpGenerators::bracket_table(int i, int j, int k, int l) const {
  const Mat& r = data_.r();
  return Rational(1, 2) *
         (r(i, k) * f_upper(j, l) + r(i, l) * f_upper(j, k) + r(j, k) * f_upper(i, l) + r(j, l) * f_upper(i, k));
}

// ---------------------------------------------------------------------------

bool SpRep::is_trivial() const {
  return std::all_of(f.begin(), f.end(), [](const Mat& m) { return kdt::is_zero(m); });
}

Mat SpRep::act(const Vec& coeffs) const {
  Mat out = Mat::Zero(dim, dim);
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    if (!coeffs(k).is_zero()) out += coeffs(k) * f[k];
  return out;
}

Mat SpRep::lower(const SpGenerators& g, int i, int j) const {
  const Mat& w = g.data().omega();
  Mat out = Mat::Zero(dim, dim);
  for (int a = 1; a < g.dim(); ++a)
    for (int b = 1; b < g.dim(); ++b) {
      Rational c = w(i, a) * w(j, b);
      if (!c.is_zero()) out += c * upper(g, a, b);
    }
  return out;
}

SpRep trivial_rep(const SpGenerators& g) {
  SpRep rep{"trivial", 1, {}};
  rep.f.assign(g.count(), Mat::Zero(1, 1));
  return rep;
}

SpRep vector_rep(const SpGenerators& g) {
  const int m = g.dim() - 1;
  SpRep rep{"vector", m, {}};
  for (int k = 0; k < g.count(); ++k) rep.f.push_back(g.generator(k).bottomRightCorner(m, m));
  return rep;
}

SpRep sym_square_rep(const SpGenerators& g) {
  const int m = g.dim() - 1;
  std::vector<std::pair<int, int>> basis;
  for (int p = 0; p < m; ++p)
    for (int q = p; q < m; ++q) basis.emplace_back(p, q);
  auto index = [&](int p, int q) {
    if (p > q) std::swap(p, q);
    return static_cast<int>(std::find(basis.begin(), basis.end(), std::pair{p, q}) - basis.begin());
  };
  SpRep rep{"sym2", static_cast<int>(basis.size()), {}};
  for (int k = 0; k < g.count(); ++k) {
    Mat a = g.generator(k).bottomRightCorner(m, m);
    Mat out = Mat::Zero(rep.dim, rep.dim);
    for (int col = 0; col < rep.dim; ++col) {
      auto [p, q] = basis[col];
      for (int s = 0; s < m; ++s) {
        if (!a(s, p).is_zero()) out(index(s, q), col) += a(s, p);
        if (!a(s, q).is_zero()) out(index(p, s), col) += a(s, q);
      }
    }
    rep.f.push_back(std::move(out));
  }
  return rep;
}

SpRep fundamental_rep(const SpGenerators& g, int n) {
  if (n < 0 || n > g.N()) throw BadWeightIndex("fundamental weight index must lie in 0..N");
  const auto& data = g.data();
  auto kbar = compute_IK_bar(data, 2 * g.N() - n).K;
  SpRep rep{"pi" + std::to_string(n), kbar.dim(), {}};
  for (int k = 0; k < g.count(); ++k) {
    Mat out(rep.dim, rep.dim);
    for (int b = 0; b < rep.dim; ++b) out.col(b) = kbar.coordinates(gl_act(g.generator(k), kbar.basis()[b]));
    rep.f.push_back(std::move(out));
  }
  return rep;
}

Mat casimir_apply(const SpGenerators& g, const SpRep& rep) {
  Mat out = Mat::Zero(rep.dim, rep.dim);
  for (int i = 1; i < g.dim(); ++i)
    for (int j = 1; j < g.dim(); ++j) out -= rep.lower(g, i, j) * rep.upper(g, i, j);
  return out;
}

bool check_sp_brackets(const SpGenerators& g, const SpRep& rep) {
  for (int a = 0; a < g.count(); ++a)
    for (int b = 0; b < g.count(); ++b) {
      auto [i, j] = g.pair(a);
      auto [k, l] = g.pair(b);
      Mat lhs = rep.f[a] * rep.f[b] - rep.f[b] * rep.f[a];
      if (lhs != rep.act(g, g.bracket_table(i, j, k, l))) return false;
    }
  return true;
}

Mat ad_sp_dual(const SpGenerators& g, int k) {
  const auto& data = g.data();
  if (k == 0) return bar_block(data.ad(0));
  // Dropping row 0 removes exactly the e^k_0 term: its entries are
  // omega(d^k, d_j) = delta^k_j.
  Mat out = bar_block(data.ad(data.dual(k)));
  for (int i = 1; i < g.dim(); ++i)
    for (int j = 1; j < g.dim(); ++j)
      if (!data.c(i, j, k).is_zero()) out += Rational(1, 2) * data.c(i, j, k) * g.e_upper(i, j);
  return out;
}

Mat ad_sp(const SpGenerators& g, const Vec& a) {
  const auto& w = g.data().omega();
  Mat out = a(0) * ad_sp_dual(g, 0);
  for (int m = 1; m < g.dim(); ++m) {
    if (a(m).is_zero()) continue;
    for (int k = 1; k < g.dim(); ++k)
      if (!w(m, k).is_zero()) out += a(m) * w(m, k) * ad_sp_dual(g, k);
  }
  return out;
}

Mat sp_projection(const SpGenerators& g, const Mat& a) {
  const int m = g.dim() - 1;
  Mat x = a.bottomRightCorner(m, m);
  Mat w = g.data().omega().bottomRightCorner(m, m);
  Mat r = g.data().r().bottomRightCorner(m, m);
  // sp = {A : A^T w + w A = 0}; r = w^{-1}.
  Mat p = Rational(1, 2) * (x - r * x.transpose() * w);
  Mat out = Mat::Zero(g.dim(), g.dim());
  out.bottomRightCorner(m, m) = p;
  return out;
}

bool symmetrized_quartic_check(const SpGenerators& g, const SpRep& rep, int a, int b, int c, int d) {
  std::array<int, 4> idx{a, b, c, d};
  std::array<int, 4> perm{0, 1, 2, 3};
  Mat sum = Mat::Zero(rep.dim, rep.dim);
  do {
    sum += rep.upper(g, idx[perm[0]], idx[perm[1]]) * rep.upper(g, idx[perm[2]], idx[perm[3]]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return is_zero(sum);
}

std::optional<std::array<int, 4>> find_quartic_violation(const SpGenerators& g, const SpRep& rep) {
  const int m = g.dim();
  for (int a = 1; a < m; ++a)
    for (int b = a; b < m; ++b)
      for (int c = b; c < m; ++c)
        for (int d = c; d < m; ++d)
          if (!symmetrized_quartic_check(g, rep, a, b, c, d)) return std::array<int, 4>{a, b, c, d};
  return std::nullopt;
}

bool nilpotency_certificate() {
  using Poly = std::map<std::array<int, 3>, Rational>;  // exponents of (x, y, z)
  auto mul = [](const Poly& p, const Poly& q) {
    Poly out;
    for (const auto& [e, u] : p)
      for (const auto& [f, v] : q) {
        std::array<int, 3> s{e[0] + f[0], e[1] + f[1], e[2] + f[2]};
        out[s] += u * v;
        if (out[s].is_zero()) out.erase(s);
      }
    return out;
  };
  auto add = [](Poly p, const Poly& q) {
    for (const auto& [e, v] : q) {
      p[e] += v;
      if (p[e].is_zero()) p.erase(e);
    }
    return p;
  };
  // The {a,a,b,b} relation: over the 24 orderings, f^{aa}f^{bb} and
  // f^{bb}f^{aa} occur 4 times each and f^{ab}f^{ab} 16 times.
  const Poly r_mixed{{{1, 0, 1}, 8}, {{0, 2, 0}, 16}};
  const Poly r_zz{{{0, 0, 2}, 24}};
  // y^4 = (y^2/16 - xz/32) r_mixed + (x^2/96) r_zz.
  const Poly q1{{{0, 2, 0}, Rational(1, 16)}, {{1, 0, 1}, Rational(-1, 32)}};
  const Poly q2{{{2, 0, 0}, Rational(1, 96)}};
  const Poly y4{{{0, 4, 0}, 1}};
  return add(mul(q1, r_mixed), mul(q2, r_zz)) == y4;
}

}  // namespace kdt
