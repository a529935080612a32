#include "kdt/annihilation.hpp"

#include <algorithm>
#include <sstream>

#include "kdt/errors.hpp"
#include "kdt/exterior.hpp"

namespace kdt {

bool TruncatedWElement::is_zero() const {
  return std::all_of(parts.begin(), parts.end(), [](const DualElement& p) { return p.is_zero(); });
}

TruncatedWElement& TruncatedWElement::operator+=(const TruncatedWElement& o) {
  truncation = std::min(truncation, o.truncation);
  for (int j = 0; j < dim(); ++j) parts[j] += o.parts[j];
  for (auto& p : parts) p.truncation = truncation;
  return *this;
}

TruncatedWElement& TruncatedWElement::operator-=(const TruncatedWElement& o) {
  truncation = std::min(truncation, o.truncation);
  for (int j = 0; j < dim(); ++j) parts[j] -= o.parts[j];
  for (auto& p : parts) p.truncation = truncation;
  return *this;
}

TruncatedWElement& TruncatedWElement::operator*=(const Rational& s) {
  for (auto& p : parts) p *= s;
  return *this;
}

bool TruncatedWElement::agrees_with(const TruncatedWElement& o) const {
  return (*this - o).is_zero();
}

TruncatedWElement w_zero(int dim, int truncation) {
  TruncatedWElement out;
  out.truncation = truncation;
  out.parts.resize(dim);
  for (auto& p : out.parts) p.truncation = truncation;
  return out;
}

TruncatedWElement w_elem(const DualElement& x, const Vec& a) {
  TruncatedWElement out = w_zero(static_cast<int>(a.size()), x.truncation);
  for (int j = 0; j < a.size(); ++j)
    if (!a(j).is_zero()) out.parts[j] = a(j) * x;
  return out;
}

namespace {

DualElement restrict_to(DualElement x, int t) {
  x.truncation = std::min(x.truncation, t);
  std::erase_if(x.terms, [&](const auto& kv) { return kv.first.contact_degree() > x.truncation; });
  return x;
}

void add_scaled(DualElement& acc, const Rational& s, const DualElement& x) {
  for (const auto& [i, c] : x.terms) acc.add(i, s * c);
}

}  // namespace

TruncatedWElement w_bracket(const Enveloping& h, const TruncatedWElement& u, const TruncatedWElement& v) {
  const int dim = h.dim();
  const int t = std::min(u.truncation, v.truncation) - 2;
  if (t < 0) throw TruncationOverflow("w_bracket: truncation too small");
  const auto& data = h.data();
  TruncatedWElement out = w_zero(dim, t);
  for (int a = 0; a < dim; ++a) {
    const DualElement& x = u.parts[a];
    if (x.is_zero()) continue;
    for (int b = 0; b < dim; ++b) {
      const DualElement& y = v.parts[b];
      if (y.is_zero()) continue;
      const DualElement xy = dual_mul(x, y);
      for (int k = 0; k < dim; ++k)
        if (!data.c(a, b, k).is_zero()) add_scaled(out.parts[k], data.c(a, b, k), xy);
      add_scaled(out.parts[b], -1, dual_mul(x, d_right(h, y, unit(dim, a))));
      add_scaled(out.parts[a], 1, dual_mul(d_right(h, x, unit(dim, b)), y));
    }
  }
  return out;
}

TruncatedWElement embed_k(const Enveloping& h, const DualElement& x) {
  const int dim = h.dim();
  const int t = x.truncation - 1;
  if (t < 0) throw TruncationOverflow("embed_k: truncation too small");
  TruncatedWElement out = w_zero(dim, t);
  out.parts[0] = restrict_to(x, t);
  for (int i = 1; i < dim; ++i) {
    const DualElement xi = d_right(h, x, unit(dim, i));
    const Vec up = h.data().dual(i);
    for (int m = 0; m < dim; ++m)
      if (!up(m).is_zero()) add_scaled(out.parts[m], -up(m), xi);
  }
  return out;
}

bool in_w(const TruncatedWElement& u, int p) {
  for (const auto& part : u.parts)
    for (const auto& [i, c] : part.terms)
      if (i.degree() < p + 1) return false;
  return true;
}

bool in_w_prime(const TruncatedWElement& u, int p) {
  for (int j = 0; j < u.dim(); ++j)
    for (const auto& [i, c] : u.parts[j].terms)
      if (i.contact_degree() < p + (j == 0 ? 2 : 1)) return false;
  return true;
}

Mat to_gl(const TruncatedWElement& u) {
  if (!in_w(u, 0)) throw BadConfig("to_gl: element is not in W_0");
  const int dim = u.dim();
  if (u.truncation < 2) throw TruncationOverflow("to_gl: x^0 coefficient beyond truncation");
  Mat m = Mat::Zero(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m(j, k) = -u.coeff(MultiIndex::unit(dim, k), j);
  return m;
}

// ---------------------------------------------------------------------------

namespace {

DualElement xs(int dim, std::initializer_list<int> idx, int t) {
  MultiIndex m(dim);
  for (int i : idx) m.add(i, 1);
  return dual_basis(m, t);
}

struct Recorder {
  AnnihilationCheck rec;
  explicit Recorder(std::string name) { rec.name = std::move(name); rec.passed = true; }
  void check(bool ok, const std::string& what) {
    ++rec.checked;
    if (!ok && rec.passed) {
      rec.passed = false;
      rec.witness = what;
    }
  }
  AnnihilationCheck done() { return rec; }
};

std::string idx_str(std::initializer_list<int> idx) {
  std::ostringstream s;
  s << "x";
  for (int i : idx) s << "^" << i;
  return s.str();
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat stack_rows(const std::vector<Mat>& ms, int dim) {
  Mat out(static_cast<Eigen::Index>(ms.size()), dim * dim);
  for (std::size_t r = 0; r < ms.size(); ++r)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) out(static_cast<Eigen::Index>(r), i * dim + j) = ms[r](i, j);
  return out;
}

bool same_span(const std::vector<Mat>& a, const std::vector<Mat>& b, int dim) {
  std::vector<Mat> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto ra = a.empty() ? 0 : rank(stack_rows(a, dim));
  const auto rb = b.empty() ? 0 : rank(stack_rows(b, dim));
  return ra == rb && rb == (both.empty() ? 0 : rank(stack_rows(both, dim)));
}

bool in_span(const Mat& m, const std::vector<Mat>& basis, int dim) {
  if (is_zero(m)) return true;
  std::vector<Mat> with = basis;
  with.push_back(m);
  return rank(stack_rows(with, dim)) == rank(stack_rows(basis, dim));
}

std::vector<Mat> cz_basis(const SpGenerators& g) {
  std::vector<Mat> out;
  for (int i = 1; i < g.dim(); ++i) out.push_back(g.e_upper(i, 0));
  return out;
}

}  // namespace

std::vector<AnnihilationCheck> fourier_checks(const Enveloping& h, int truncation) {
  if (truncation < 3) throw TruncationOverflow("fourier_checks needs truncation >= 3");
  const auto& data = h.data();
  const int dim = h.dim(), T = truncation;
  const SpGenerators g(data);
  std::vector<AnnihilationCheck> out;
  auto mod_w1_w1p = [](const TruncatedWElement& d) { return in_w(d, 1) && in_w_prime(d, 1); };

  Recorder r1("fourier: 1 -> 1 (x) d_0");
  r1.check(embed_k(h, dual_one(dim, T)).agrees_with(w_elem(dual_one(dim, T), unit(dim, 0))), "x = 1");
  out.push_back(r1.done());

  Recorder r2("fourier: x^j, j > 0");
  for (int j = 1; j < dim; ++j) {
    TruncatedWElement expect = w_elem(dual_one(dim, T), data.dual(j)) + w_elem(xs(dim, {j}, T), unit(dim, 0));
    for (int i = 1; i < dim; ++i)
      for (int k = i + 1; k < dim; ++k)
        if (!data.c(i, k, j).is_zero()) expect -= w_elem(xs(dim, {k}, T), data.c(i, k, j) * data.dual(i));
    r2.check(mod_w1_w1p(embed_k(h, xs(dim, {j}, T)) - expect), idx_str({j}));
  }
  out.push_back(r2.done());

  Recorder r3("fourier: x^0");
  {
    TruncatedWElement expect = w_elem(xs(dim, {0}, T), unit(dim, 0));
    for (int i = 1; i < dim; ++i)
      for (int k = i + 1; k < dim; ++k)
        if (!data.omega()(i, k).is_zero()) expect -= w_elem(xs(dim, {k}, T), data.omega()(i, k) * data.dual(i));
    r3.check(mod_w1_w1p(embed_k(h, xs(dim, {0}, T)) - expect), idx_str({0}));
  }
  out.push_back(r3.done());

  Recorder r4("fourier: x^i x^j -> 2 f^{ij}");
  for (int i = 1; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const TruncatedWElement w = embed_k(h, xs(dim, {i, j}, T));
      r4.check(in_w(w, 0) && to_gl(w) == Mat(Rational(2) * g.f_upper(i, j)), idx_str({i, j}));
    }
  out.push_back(r4.done());

  Recorder r5("fourier: x^0 x^j -> x^0 (x) d^j");
  for (int j = 1; j < dim; ++j)
    r5.check(mod_w1_w1p(embed_k(h, xs(dim, {0, j}, T)) - w_elem(xs(dim, {0}, T), data.dual(j))), idx_str({0, j}));
  out.push_back(r5.done());

  Recorder r6("fourier: x^i x^j x^k -> 0");
  for (int i = 1; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      for (int k = j; k < dim; ++k) r6.check(mod_w1_w1p(embed_k(h, xs(dim, {i, j, k}, T))), idx_str({i, j, k}));
  out.push_back(r6.done());
  return out;
}

AnnihilationCheck w0_quotient_iso_check(const Enveloping& h, int truncation) {
  if (truncation < 4) throw TruncationOverflow("w0_quotient_iso_check needs truncation >= 4");
  const int dim = h.dim(), T = truncation;
  Recorder rec("W_0/W_1 = gl(d)");
  std::vector<TruncatedWElement> w0;
  std::vector<std::string> names;
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      w0.push_back(w_elem(xs(dim, {j}, T), unit(dim, i)));
      names.push_back("x^" + std::to_string(j) + " (x) d_" + std::to_string(i));
      rec.check(to_gl(w0.back()) == Mat(Rational(-1) * gl_unit(dim, i, j)), names.back() + " image");
    }
  for (std::size_t a = 0; a < w0.size(); ++a)
    for (std::size_t b = 0; b < w0.size(); ++b) {
      const TruncatedWElement br = w_bracket(h, w0[a], w0[b]);
      rec.check(in_w(br, 0) && to_gl(br) == commutator(to_gl(w0[a]), to_gl(w0[b])),
                "[" + names[a] + ", " + names[b] + "]");
    }
  // Adjoint action on W/W_0 = d.
  for (std::size_t a = 0; a < w0.size(); ++a)
    for (int k = 0; k < dim; ++k) {
      const TruncatedWElement br = w_bracket(h, w0[a], w_elem(dual_one(dim, T), unit(dim, k)));
      Vec constant(dim);
      for (int m = 0; m < dim; ++m) constant(m) = br.coeff(MultiIndex(dim), m);
      rec.check(constant == Vec(to_gl(w0[a]) * unit(dim, k)), "[" + names[a] + ", 1 (x) d_" + std::to_string(k) + "]");
    }
  return rec.done();
}

AnnihilationCheck iprime_expansion_check(const Enveloping& h, int truncation) {
  if (truncation < 3) throw TruncationOverflow("iprime_expansion_check needs truncation >= 3");
  const auto& data = h.data();
  const int dim = h.dim(), T = truncation;
  const SpGenerators g(data);
  Recorder rec("-I' expansion");
  TruncatedWElement line1 = Rational(2) * w_elem(xs(dim, {0}, T), unit(dim, 0));
  TruncatedWElement line2 = line1;
  for (int i = 1; i < dim; ++i) {
    line1 += w_elem(xs(dim, {i}, T), unit(dim, i));
    for (int j = 1; j < dim; ++j)
      if (!data.omega()(i, j).is_zero()) line2 += w_elem(xs(dim, {i}, T), data.omega()(i, j) * data.dual(j));
  }
  const Mat minus_iprime = Rational(-1) * g.i_prime();
  rec.check(line1.agrees_with(line2), "first = second line");
  rec.check(to_gl(line1) == minus_iprime, "first line = -I'");
  Mat line3 = Rational(2) * to_gl(embed_k(h, xs(dim, {0}, T)));
  for (int i = 1; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) line3 += Rational(2) * data.omega()(i, j) * g.f_upper(i, j);
  rec.check(line3 == minus_iprime, "third line = -I'");
  return rec.done();
}

AnnihilationCheck csp_quotient_check(const Enveloping& h, int truncation) {
  // pi of a bracket of two embedded elements needs the x^0 coefficient,
  // i.e. exactness up to contact degree 2 after losing 1 + 2.
  const int T = std::max(truncation, 5);
  const auto& data = h.data();
  const int dim = h.dim();
  const SpGenerators g(data);
  Recorder rec("K'_0/K'_1 = csp");
  const std::vector<Mat> cz = cz_basis(g);
  std::vector<Mat> csp;
  for (int k = 0; k < g.count(); ++k) csp.push_back(g.generator(k));
  csp.push_back(g.i_prime());

  std::vector<Mat> k0, k1;
  for (const auto& i : indices_up_to_contact(dim, std::min(T - 1, 5))) {
    const int p = i.contact_degree();
    if (p < 2) continue;
    const TruncatedWElement w = embed_k(h, dual_basis(i, T));
    if (p >= 4) {
      rec.check(in_w(w, 1), "K'_2 element x_" + i.str() + " not in W_1");
      continue;
    }
    if (!in_w(w, 0)) {
      rec.check(false, "x_" + i.str() + " (x)_H e not in W_0");
      continue;
    }
    k0.push_back(to_gl(w));
    if (p == 3) k1.push_back(to_gl(w));
  }
  std::vector<Mat> cz_csp = cz;
  cz_csp.insert(cz_csp.end(), csp.begin(), csp.end());
  rec.check(same_span(k0, cz_csp, dim), "pi(K'_0) != cz x| csp");
  rec.check(same_span(k1, cz, dim), "pi(K'_1) != cz");

  // Preimages of f^{ij} and I'.
  std::vector<DualElement> pre;
  for (int k = 0; k < g.count(); ++k) {
    const auto [i, j] = g.pair(k);
    pre.push_back(Rational(1, 2) * xs(dim, {i, j}, T));
  }
  DualElement ip = Rational(-2) * xs(dim, {0}, T);
  for (int i = 1; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (!data.omega()(i, j).is_zero()) ip -= data.omega()(i, j) * xs(dim, {i, j}, T);
  pre.push_back(ip);
  std::vector<TruncatedWElement> emb;
  for (std::size_t a = 0; a < pre.size(); ++a) {
    emb.push_back(embed_k(h, pre[a]));
    rec.check(to_gl(emb.back()) == csp[a], "preimage " + std::to_string(a));
  }
  for (std::size_t a = 0; a < pre.size(); ++a)
    for (std::size_t b = a + 1; b < pre.size(); ++b) {
      const TruncatedWElement br = w_bracket(h, emb[a], emb[b]);
      const std::string name = "[" + std::to_string(a) + ", " + std::to_string(b) + "]";
      if (!in_w(br, 0)) {
        rec.check(false, name + " not in W_0");
        continue;
      }
      const Mat image = to_gl(br);
      rec.check(image == commutator(csp[a], csp[b]), name + " pi is not a homomorphism");
      Mat expect = Mat::Zero(dim, dim);
      if (a < csp.size() - 1 && b < csp.size() - 1) {
        const auto [i, j] = g.pair(static_cast<int>(a));
        const auto [k, l] = g.pair(static_cast<int>(b));
        expect = g.bracket_table(i, j, k, l);
      }
      rec.check(in_span(Mat(image - expect), cz, dim), name + " differs from the csp table");
    }
  return rec.done();
}

AnnihilationCheck d_action_filtration_check(const Enveloping& h, int truncation) {
  const int dim = h.dim();
  Recorder rec("d-action on the filtrations of X");
  for (const auto& i : indices_up_to_contact(dim, truncation)) {
    const DualElement x = dual_basis(i, truncation);
    for (int k = 0; k < dim; ++k) {
      const int w = k == 0 ? 2 : 1;
      if (truncation - w < 0) continue;
      for (const DualElement& y : {d_left(h, unit(dim, k), x), d_right(h, x, unit(dim, k))}) {
        bool ok = true;
        for (const auto& [j, c] : y.terms)
          ok = ok && j.contact_degree() >= i.contact_degree() - w && j.degree() >= i.degree() - 1;
        rec.check(ok, "d_" + std::to_string(k) + " on x_" + i.str());
      }
    }
  }
  return rec.done();
}

AnnihilationCheck k_filtration_check(const Enveloping& h, int truncation) {
  const int dim = h.dim();
  Recorder rec("K'_p in W'_p, K'_2 in W_1");
  for (const auto& i : indices_up_to_contact(dim, truncation)) {
    const int p = i.contact_degree() - 2;
    const TruncatedWElement w = embed_k(h, dual_basis(i, truncation));
    rec.check(in_w_prime(w, p), "x_" + i.str() + " (x)_H e not in W'_" + std::to_string(p));
    if (p >= 2) rec.check(in_w(w, 1), "x_" + i.str() + " (x)_H e not in W_1");
  }
  return rec.done();
}

AnnihilationCheck bracket_properties_check(const Enveloping& h, int truncation) {
  const int dim = h.dim();
  const int T = std::max(truncation, 4);
  Recorder rec("W bracket: antisymmetry, filtrations, Jacobi");
  struct Basis {
    TruncatedWElement w;
    int canonical, contact;
    std::string name;
  };
  auto basis = [&](int max_contact, int t) {
    std::vector<Basis> out;
    for (const auto& i : indices_up_to_contact(dim, max_contact))
      for (int j = 0; j < dim; ++j) {
        const TruncatedWElement w = w_elem(dual_basis(i, t), unit(dim, j));
        // W'_p membership: d-bar parts need |I|' >= p + 1, d_0 parts |I|' >= p + 2.
        out.push_back({w, i.degree() - 1, i.contact_degree() - (j == 0 ? 2 : 1),
                       "x_" + i.str() + " (x) d_" + std::to_string(j)});
      }
    return out;
  };
  const auto els = basis(2, T);
  for (std::size_t a = 0; a < els.size(); ++a)
    for (std::size_t b = a; b < els.size(); ++b) {
      const TruncatedWElement ab = w_bracket(h, els[a].w, els[b].w);
      const std::string name = "[" + els[a].name + ", " + els[b].name + "]";
      if (a == b) rec.check(ab.is_zero(), name + " != 0");
      else rec.check((ab + w_bracket(h, els[b].w, els[a].w)).is_zero(), name + " not antisymmetric");
      rec.check(in_w(ab, els[a].canonical + els[b].canonical), name + " violates W filtration");
      rec.check(in_w_prime(ab, els[a].contact + els[b].contact), name + " violates W' filtration");
    }
  // Fourier coefficients in K'_m for m = -2..1.
  std::vector<std::pair<TruncatedWElement, int>> ks;
  for (const auto& i : indices_up_to_contact(dim, 3)) ks.emplace_back(embed_k(h, dual_basis(i, T + 2)), i.contact_degree() - 2);
  for (std::size_t a = 0; a < ks.size(); ++a)
    for (std::size_t b = a + 1; b < ks.size(); ++b)
      rec.check(in_w_prime(w_bracket(h, ks[a].first, ks[b].first), ks[a].second + ks[b].second),
                "K' filtration " + std::to_string(a) + ", " + std::to_string(b));
  // Jacobi on elements of contact degree <= 1, exact up to T + 2 - 4.
  const auto small = basis(1, T + 2);
  const std::size_t n = small.size();
  const std::size_t total = n * (n - 1) * (n - 2) / 6;
  const std::size_t stride = std::max<std::size_t>(1, total / 300);
  std::size_t counter = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (counter++ % stride != 0) continue;
        const auto& u = small[a].w;
        const auto& v = small[b].w;
        const auto& w = small[c].w;
        const TruncatedWElement jac = w_bracket(h, w_bracket(h, u, v), w) + w_bracket(h, w_bracket(h, v, w), u) +
                                      w_bracket(h, w_bracket(h, w, u), v);
        rec.check(jac.is_zero(), "Jacobi on " + small[a].name + ", " + small[b].name + ", " + small[c].name);
      }
  return rec.done();
}

std::vector<AnnihilationCheck> annihilation_suite(const Enveloping& h, int truncation) {
  std::vector<AnnihilationCheck> out = fourier_checks(h, truncation);
  out.push_back(w0_quotient_iso_check(h, truncation));
  out.push_back(iprime_expansion_check(h, truncation));
  out.push_back(csp_quotient_check(h, truncation));
  out.push_back(d_action_filtration_check(h, truncation));
  out.push_back(k_filtration_check(h, truncation));
  out.push_back(bracket_properties_check(h, truncation));
  return out;
}

}  // namespace kdt
