#include <doctest.h>

#include <random>

#include "kdt/errors.hpp"
#include "kdt/exterior.hpp"

using namespace kdt;

namespace {

Form random_form(std::mt19937_64& rng, int dim, int degree) {
  FormSpace sp(dim, degree);
  std::uniform_int_distribution<int> coef(-2, 2);
  Form f;
  for (int k = 0; k < sp.size(); ++k) f.add(sp.monomial(k), coef(rng));
  return f;
}

std::vector<ContactLieData> algebras() {
  return {sl2(), heisenberg(1), heisenberg(2), affine_plus_line(), with_symplectic_basis(heisenberg(2))};
}

Form power(const Form& a, int m) {
  Form out = one_form();
  for (int k = 0; k < m; ++k) out = wedge(out, a);
  return out;
}

}  // namespace

TEST_CASE("wedge is graded commutative and associative") {
  std::mt19937_64 rng(3);
  CHECK(wedge(x(0), x(0)).is_zero());
  CHECK(wedge(x(1), x(0)) == -wedge(x(0), x(1)));
  for (int trial = 0; trial < 20; ++trial) {
    const int p = trial % 3, q = (trial / 3) % 3;
    Form a = random_form(rng, 5, p), b = random_form(rng, 5, q), c = random_form(rng, 5, 1);
    Rational sign = (p * q) % 2 ? -1 : 1;
    CHECK(wedge(a, b) == sign * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("theta and omega") {
  for (const auto& d : algebras()) {
    CHECK(d0(d, theta_form(d)) == omega_form(d));
    CHECK_FALSE(wedge(theta_form(d), power(omega_form(d), d.N())).is_zero());
    CHECK(contract(unit(d.dim(), 0), omega_form(d)).is_zero());
    CHECK(d0(d, one_form()).is_zero());
    CHECK(d0(d, Rational(5) * one_form()).is_zero());
  }
  auto d = with_symplectic_basis(heisenberg(2));
  CHECK(omega_form(d) == wedge(x(1), x(3)) + wedge(x(2), x(4)));
}

TEST_CASE("Heisenberg d0 by hand") {
  // In the normalized basis only [d_1, d_2] = c_12^0 d_0 is nonzero, so
  // d0 x^0 = -c_12^0 x^1 ^ x^2 and d0 x^1 = d0 x^2 = 0.
  auto d = heisenberg(1);
  CHECK(d0(d, x(0)) == -d.c(1, 2, 0) * wedge(x(1), x(2)));
  CHECK(d0(d, x(1)).is_zero());
  CHECK(d0(d, x(2)).is_zero());
}

TEST_CASE("d0 squares to zero on every basis monomial and is an odd derivation") {
  std::mt19937_64 rng(5);
  for (const auto& d : algebras()) {
    for (int n = 0; n <= d.dim(); ++n) {
      FormSpace sp(d.dim(), n);
      for (int k = 0; k < sp.size(); ++k) CHECK(d0(d, d0(d, monomial(sp.monomial(k)))).is_zero());
    }
    for (int trial = 0; trial < 10; ++trial) {
      const int p = trial % 3;
      Form a = random_form(rng, d.dim(), p), b = random_form(rng, d.dim(), 1 + trial % 2);
      Rational sign = p % 2 ? -1 : 1;
      CHECK(d0(d, wedge(a, b)) == wedge(d0(d, a), b) + sign * wedge(a, d0(d, b)));
    }
  }
}

TEST_CASE("contraction") {
  std::mt19937_64 rng(9);
  const int dim = 5;
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) CHECK(contract(unit(dim, j), x(k)) == Rational(j == k ? 1 : 0) * one_form());
  for (int trial = 0; trial < 10; ++trial) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = static_cast<int>(rng() % 5) - 2;
    const int p = 1 + trial % 2;
    Form a = random_form(rng, dim, p), b = random_form(rng, dim, 2);
    Rational sign = p % 2 ? -1 : 1;
    CHECK(contract(v, wedge(a, b)) == wedge(contract(v, a), b) + sign * wedge(a, contract(v, b)));
    CHECK(contract(v, contract(v, b)).is_zero());
  }
}

TEST_CASE("gl action: derivation and Cartan formula") {
  std::mt19937_64 rng(13);
  for (const auto& d : algebras()) {
    const int n = d.dim();
    for (int i = 0; i < n; ++i)
      for (int deg = 0; deg <= n; ++deg) {
        FormSpace sp(n, deg);
        for (int k = 0; k < sp.size(); ++k) {
          Form a = monomial(sp.monomial(k));
          CHECK(gl_act(d.ad(i), a) == d0(d, contract(unit(n, i), a)) + contract(unit(n, i), d0(d, a)));
        }
      }
    for (int trial = 0; trial < 5; ++trial) {
      Mat m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = static_cast<int>(rng() % 5) - 2;
      Form a = random_form(rng, n, 1), b = random_form(rng, n, 2);
      CHECK(gl_act(m, wedge(a, b)) == wedge(gl_act(m, a), b) + wedge(a, gl_act(m, b)));
    }
    // e_k^j . x^i = -delta^i_k x^j.
    CHECK(gl_act(gl_unit(n, 1, 0), x(1)) == -x(0));
    CHECK(gl_act(gl_unit(n, 1, 0), x(2)).is_zero());
  }
}

TEST_CASE("conformal symplectic action on theta and omega") {
  for (const auto& d : algebras()) {
    const int n = d.dim();
    CHECK(gl_act(i_prime(n), theta_form(d)) == Rational(-2) * theta_form(d));
    CHECK(gl_act(i_prime(n), omega_form(d)) == Rational(-2) * omega_form(d));
    for (int i = 1; i < n; ++i) CHECK(gl_act(i_prime(n), x(i)) == -x(i));
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        Mat eij = Mat::Zero(n, n), eji = Mat::Zero(n, n);
        for (int k = 1; k < n; ++k) {
          eij += d.r()(i, k) * gl_unit(n, k, j);
          eji += d.r()(j, k) * gl_unit(n, k, i);
        }
        CHECK(gl_act(eij, omega_form(d)) == wedge(x(i), x(j)));
        Mat f = Rational(-1, 2) * (eij + eji);
        CHECK(gl_act(f, omega_form(d)).is_zero());
        CHECK(gl_act(f, theta_form(d)).is_zero());
      }
  }
}

TEST_CASE("contact reduction dimensions") {
  auto d = heisenberg(1);
  CHECK(compute_IK(d, 1).I.dim() == 1);
  CHECK(3 - compute_IK(d, 1).I.dim() == 2);
  CHECK(compute_IK(d, 2).K.dim() == 2);
  CHECK(compute_IK(d, 3).K.dim() == 1);
  for (const auto& a : algebras()) {
    const int nh = a.N();
    for (int n = 0; n <= a.dim(); ++n) {
      auto red = compute_IK(a, n);
      const int full = static_cast<int>(binomial(a.dim(), n).convert_to<long>());
      if (n >= nh + 1) CHECK(red.I.dim() == full);
      if (n <= nh) CHECK(red.K.dim() == 0);
      for (const auto& k : red.K.basis()) {
        CHECK(theta_mul(a, k).is_zero());
        CHECK(omega_mul(a, k).is_zero());
      }
    }
  }
}

TEST_CASE("theta and omega operators commute; Theta squares to zero; omega powers are bijective") {
  std::mt19937_64 rng(17);
  for (const auto& d : algebras()) {
    for (int trial = 0; trial < 6; ++trial) {
      Form a = random_form(rng, d.dim(), trial % 3);
      CHECK(theta_mul(d, omega_mul(d, a)) == omega_mul(d, theta_mul(d, a)));
      CHECK(theta_mul(d, theta_mul(d, a)).is_zero());
    }
    for (int m = 0; m <= d.N(); ++m) {
      FormSpace src(d.dim(), d.N() - m, true), dst(d.dim(), d.N() + m, true);
      CHECK(src.size() == dst.size());
      SparseEchelon<Rational> ech;
      for (int k = 0; k < src.size(); ++k) ech.insert(dst.coords(wedge(power(omega_form(d), m), monomial(src.monomial(k)))));
      CHECK(static_cast<int>(ech.rank()) == src.size());
      CHECK(omega_power_iso_check(d, m));
    }
  }
}

TEST_CASE("cz maps forms into I and kills K") {
  for (const auto& d : algebras()) {
    const int n = d.dim();
    for (int deg = 0; deg <= n; ++deg) {
      auto red = compute_IK(d, deg);
      FormSpace sp(n, deg);
      for (int m = 1; m < n; ++m) {
        Mat a = gl_unit(n, m, 0);
        for (int k = 0; k < sp.size(); ++k) CHECK(red.I.contains(gl_act(a, monomial(sp.monomial(k)))));
        for (const auto& kf : red.K.basis()) CHECK(gl_act(a, kf).is_zero());
      }
    }
  }
}

TEST_CASE("theta/omega splitting succeeds in both elimination orders") {
  for (const auto& d : algebras()) {
    const int n = d.N() + 1;
    ThetaOmegaSolver fwd(d, n), rev(d, n, true);
    FormSpace sp(d.dim(), n);
    for (int k = 0; k < sp.size(); ++k) {
      Form t = monomial(sp.monomial(k));
      for (const auto* s : {&fwd, &rev}) {
        auto split = s->split(t);
        CHECK(theta_mul(d, split.beta) + omega_mul(d, split.gamma) == t);
      }
    }
  }
  auto d = heisenberg(1);
  ThetaOmegaSolver one(d, 1);
  CHECK_THROWS_AS(one.split(x(1)), SolveFailure);
}

TEST_CASE("constant Rumin complex has the Lie algebra cohomology") {
  CHECK(rumin_constant(sl2()).cohomology() == std::vector<int>{1, 0, 0, 1});
  CHECK(lie_algebra_complex(sl2()).cohomology() == std::vector<int>{1, 0, 0, 1});
  CHECK(rumin_constant(heisenberg(1)).cohomology() == std::vector<int>{1, 2, 2, 1});
  for (const auto& d : algebras()) {
    auto r = rumin_constant(d);
    auto full = lie_algebra_complex(d);
    CHECK(r.is_complex());
    CHECK(full.is_complex());
    CHECK(r.cohomology() == full.cohomology());
  }
  CHECK(rumin_constant(heisenberg(2)).cohomology() == std::vector<int>{1, 4, 5, 5, 4, 1});
}
