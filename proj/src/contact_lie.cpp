#include "kdt/contact_lie.hpp"

#include <fstream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "kdt/errors.hpp"
#include "kdt/linalg.hpp"
#include "kdt/multi_index.hpp"

namespace kdt {

namespace {

std::size_t idx(int dim, int i, int j, int k) { return (static_cast<std::size_t>(i) * dim + j) * dim + k; }

Vec bracket_raw(int dim, const std::vector<Rational>& c, const Vec& a, const Vec& b) {
  Vec out = Vec::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (a(i).is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b(j).is_zero()) continue;
      Rational f = a(i) * b(j);
      for (int k = 0; k < dim; ++k) out(k) += f * c[idx(dim, i, j, k)];
    }
  }
  return out;
}

std::vector<Rational> change_basis(int dim, const std::vector<Rational>& c, const Mat& p) {
  auto pinv = inverse<Rational>(p);
  if (!pinv) throw Error("change of basis is singular");
  std::vector<Rational> out(c.size());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec b = *pinv * bracket_raw(dim, c, p.col(i), p.col(j));
      for (int k = 0; k < dim; ++k) out[idx(dim, i, j, k)] = b(k);
    }
  return out;
}

}  // namespace

bool satisfies_jacobi(int dim, const std::vector<Rational>& c) {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        if (c[idx(dim, i, j, k)] != -c[idx(dim, j, i, k)]) return false;
      }
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      for (int e = b + 1; e < dim; ++e) {
        Vec ea = unit(dim, a), eb = unit(dim, b), ee = unit(dim, e);
        Vec s = bracket_raw(dim, c, ea, bracket_raw(dim, c, eb, ee)) +
                bracket_raw(dim, c, eb, bracket_raw(dim, c, ee, ea)) +
                bracket_raw(dim, c, ee, bracket_raw(dim, c, ea, eb));
        if (!is_zero(Mat(s))) return false;
      }
  return true;
}

Mat ContactLieData::ad(const Vec& a) const {
  Mat m = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (!a(i).is_zero()) m += a(i) * ad_[i];
  return m;
}

Vec ContactLieData::bracket(const Vec& a, const Vec& b) const { return ad(a) * b; }

Vec ContactLieData::dual(int i) const {
  Vec v = r_.row(i).transpose();
  return v;
}

Rational ContactLieData::omega(const Vec& a, const Vec& b) const {
  return (a.transpose() * omega_ * b)(0, 0);
}

std::vector<Rational> ContactLieData::raw_constants() const {
  std::vector<Rational> c(static_cast<std::size_t>(dim_) * dim_ * dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) c[idx(dim_, i, j, k)] = ad_[i](k, j);
  return c;
}

void ContactLieData::derive() {
  theta_ = Vec::Zero(dim_);
  theta_(0) = -1;
  omega_ = Mat::Zero(dim_, dim_);
  for (int i = 1; i < dim_; ++i)
    for (int j = 1; j < dim_; ++j) omega_(i, j) = c(i, j, 0);
  r_ = Mat::Zero(dim_, dim_);
  if (dim_ > 1) {
    auto inv = inverse<Rational>(Mat(omega_.bottomRightCorner(dim_ - 1, dim_ - 1)));
    if (!inv) throw NotContact("omega is degenerate on ker theta");
    r_.bottomRightCorner(dim_ - 1, dim_ - 1) = *inv;
  }
  trace_ad_.assign(dim_, Rational(0));
  for (int k = 0; k < dim_; ++k) trace_ad_[k] = ad_[k].trace();
}

ContactLieData from_normalized_constants(int dim, std::vector<Rational> c) {
  ContactLieData d;
  d.dim_ = dim;
  d.ad_.assign(dim, Mat::Zero(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) d.ad_[i](k, j) = c[idx(dim, i, j, k)];
  d.frame_ = Mat::Identity(dim, dim);
  d.derive();
  return d;
}

ContactLieData build_contact_data(int dim, const std::vector<BracketEntry>& brackets,
                                  const std::vector<Rational>& theta, std::vector<std::string> labels) {
  if (dim < 1 || dim % 2 == 0 || dim > kMaxDim) throw NotContact("dimension must be odd and at most 15");
  if (static_cast<int>(theta.size()) != dim) throw NotContact("theta has wrong length");
  std::map<std::tuple<int, int, int>, Rational> given;
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.k < 0 || b.i >= dim || b.j >= dim || b.k >= dim)
      throw JacobiViolation("bracket index out of range");
    if (b.value.is_zero()) continue;
    if (b.i == b.j) throw JacobiViolation("bracket [x, x] must vanish");
    auto key = b.i < b.j ? std::tuple{b.i, b.j, b.k} : std::tuple{b.j, b.i, b.k};
    Rational v = b.i < b.j ? b.value : Rational(-b.value);
    auto [it, fresh] = given.try_emplace(key, v);
    if (!fresh && it->second != v) throw JacobiViolation("bracket listed twice with conflicting values");
  }
  std::vector<Rational> c(static_cast<std::size_t>(dim) * dim * dim);
  for (const auto& [key, v] : given) {
    auto [i, j, k] = key;
    c[idx(dim, i, j, k)] = v;
    c[idx(dim, j, i, k)] = -v;
  }
  if (!satisfies_jacobi(dim, c)) throw JacobiViolation("structure constants fail the Jacobi identity");

  Vec th(dim);
  for (int i = 0; i < dim; ++i) th(i) = theta[i];
  Mat w(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Rational s = 0;
      for (int k = 0; k < dim; ++k) s += c[idx(dim, a, b, k)] * th(k);
      w(a, b) = -s;
    }
  Mat kw = kernel<Rational>(w);
  if (kw.cols() != 1) throw NotContact("ker omega is not one-dimensional");
  Rational t = th.dot(kw.col(0));
  if (t.is_zero()) throw NotContact("theta vanishes on ker omega");
  Vec s = -kw.col(0) / t;

  Mat row(1, dim);
  row.row(0) = th.transpose();
  Mat kt = kernel<Rational>(row);
  Mat p(dim, dim);
  p.col(0) = s;
  p.rightCols(dim - 1) = kt;

  ContactLieData d = from_normalized_constants(dim, change_basis(dim, c, p));
  d.frame_ = p;
  if (labels.empty())
    for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  d.labels_ = std::move(labels);
  return d;
}

ContactLieData ContactLieData::rebased(const Mat& basis) const {
  Mat p = Mat::Zero(dim_, dim_);
  p(0, 0) = 1;
  p.rightCols(dim_ - 1) = basis;
  if (!basis.row(0).isZero()) throw Error("rebased: new vectors must lie in ker theta");
  ContactLieData d = from_normalized_constants(dim_, change_basis(dim_, raw_constants(), p));
  d.frame_ = frame_ * p;
  d.labels_ = labels_;
  return d;
}

Mat symplectic_frame(const ContactLieData& data) {
  const int dim = data.dim(), n = data.N();
  std::vector<Vec> pool;
  for (int i = 1; i < dim; ++i) pool.push_back(unit(dim, i));
  std::vector<Vec> us, vs;
  while (!pool.empty()) {
    Vec e = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (!data.omega(e, pool[k]).is_zero()) {
        partner = k;
        break;
      }
    if (partner == pool.size()) throw NotContact("omega is degenerate on d-bar");
    Vec f = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    Rational w = data.omega(e, f);
    if (w < 0) {
      std::swap(e, f);
      w = -w;
    }
    f /= w;
    for (auto& x : pool) {
      Rational xf = data.omega(x, f), xe = data.omega(x, e);
      x = x - xf * e + xe * f;
    }
    us.push_back(e);
    vs.push_back(f);
  }
  Mat out(dim, 2 * n);
  for (int i = 0; i < n; ++i) {
    out.col(i) = us[i];
    out.col(i + n) = vs[i];
  }
  return out;
}

ContactLieData with_symplectic_basis(const ContactLieData& data) {
  return data.rebased(symplectic_frame(data));
}

bool check_remark_identity(const ContactLieData& data) {
  const int dim = data.dim();
  for (int k = 1; k < dim; ++k) {
    Rational s = 0;
    for (int i = 1; i < dim; ++i)
      for (int j = 1; j < dim; ++j) {
        s += data.r()(k, i) * data.c(i, j, j);
        s += data.r()(i, j) * data.c(i, j, k) / 2;
      }
    if (!s.is_zero()) return false;
  }
  return true;
}

ContactLieData sl2() {
  // e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h; theta(h) = 1.
  return build_contact_data(3, {{2, 0, 0, 2}, {2, 1, 1, -2}, {0, 1, 2, 1}}, {0, 0, 1}, {"e", "f", "h"});
}

ContactLieData heisenberg(int n) {
  if (n < 1) throw BadConfig("heisenberg needs N >= 1");
  const int dim = 2 * n + 1;
  std::vector<BracketEntry> br;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) br.push_back({i, n + i, 2 * n, 1});
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  labels.push_back("c");
  std::vector<Rational> theta(dim, Rational(0));
  theta[2 * n] = 1;
  return build_contact_data(dim, br, theta, labels);
}

ContactLieData affine_plus_line() {
  return build_contact_data(3, {{0, 1, 1, 1}}, {0, 1, 1}, {"e1", "e2", "e3"});
}

namespace {

Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw BadConfig("expected an integer or a rational string, got " + j.dump());
}

}  // namespace

ContactLieData load_algebra(const std::string& source) {
  if (source == "sl2") return sl2();
  if (source == "affine") return affine_plus_line();
  if (source.rfind("heisenberg:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(source.substr(11));
    } catch (const std::exception&) {
      throw BadConfig("bad heisenberg spec: " + source);
    }
    if (n < 1 || 2 * n + 1 > kMaxDim) throw BadConfig("heisenberg N out of range: " + source);
    return heisenberg(n);
  }
  std::ifstream in(source);
  if (!in) throw BadConfig("unknown algebra (not a built-in name or readable file): " + source);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw BadConfig(std::string("cannot parse algebra file: ") + e.what());
  }
  try {
    const int dim = doc.at("dim").get<int>();
    std::vector<BracketEntry> br;
    for (const auto& e : doc.value("brackets", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 5) throw BadConfig("bracket entries are [i, j, k, num, den]");
      Rational den = json_rational(e[4]);
      if (den.is_zero()) throw BadConfig("zero denominator in bracket entry");
      br.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), json_rational(e[3]) / den});
    }
    std::vector<Rational> theta;
    for (const auto& t : doc.at("theta")) theta.push_back(json_rational(t));
    return build_contact_data(dim, br, theta);
  } catch (const nlohmann::json::exception& e) {
    throw BadConfig(std::string("malformed algebra file: ") + e.what());
  }
}

}  // namespace kdt
