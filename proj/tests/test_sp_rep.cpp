#include <doctest.h>

#include "kdt/errors.hpp"
#include "kdt/sp_rep.hpp"

using namespace kdt;

namespace {

std::vector<ContactLieData> algebras() {
  return {sl2(), heisenberg(1), heisenberg(2), affine_plus_line(), with_symplectic_basis(heisenberg(2))};
}

bool is_scalar(const Mat& m, const Rational& s) { return m == s * identity(m.rows()); }

}  // namespace

TEST_CASE("generators span sp and satisfy the bracket tables") {
  for (const auto& d : algebras()) {
    SpGenerators g(d);
    const int n = d.N();
    CHECK(g.count() == n * (2 * n + 1));
    for (int k = 0; k < g.count(); ++k) CHECK(g.in_sp(g.generator(k)));
    // f^{ij} preserve omega.
    for (int k = 0; k < g.count(); ++k) {
      const Mat& f = g.generator(k);
      CHECK(Mat(f.transpose() * d.omega() + d.omega() * f) == zeros(d.dim(), d.dim()));
    }
    // gl bracket for e^{ij} and tr e^{ij} = r^{ij}.
    for (int i = 1; i < d.dim(); ++i)
      for (int j = 1; j < d.dim(); ++j) {
        CHECK(g.e_upper(i, j).trace() == d.r()(i, j));
        for (int k = 1; k < d.dim(); ++k)
          for (int l = 1; l < d.dim(); ++l) {
            Mat lhs = g.e_upper(i, j) * g.e_upper(k, l) - g.e_upper(k, l) * g.e_upper(i, j);
            Mat rhs = d.r()(k, j) * g.e_upper(i, l) - d.r()(i, l) * g.e_upper(k, j);
            CHECK(lhs == rhs);
          }
      }
    CHECK(check_sp_brackets(g, vector_rep(g)));
    // tr f_ij f^{kl} = -(delta_i^l delta_j^k + delta_i^k delta_j^l) / 2.
    for (int i = 1; i < d.dim(); ++i)
      for (int j = 1; j < d.dim(); ++j)
        for (int k = 1; k < d.dim(); ++k)
          for (int l = 1; l < d.dim(); ++l) {
            Rational expect = Rational(-1, 2) * ((i == l && j == k ? 1 : 0) + (i == k && j == l ? 1 : 0));
            CHECK(Mat(g.f_lower(i, j) * g.f_upper(k, l)).trace() == expect);
          }
    CHECK_THROWS_AS(g.decompose(identity(d.dim())), SolveFailure);
  }
}

TEST_CASE("sl2 triples") {
  for (const auto& d : algebras()) {
    SpGenerators g(d);
    for (int i = 1; i < d.dim(); ++i) {
      Mat h = Rational(-2) * g.f_mixed(i, i), e = g.f_lower(i, i), f = -g.f_upper(i, i);
      CHECK(Mat(h * e - e * h) == Rational(2) * e);
      CHECK(Mat(h * f - f * h) == Rational(-2) * f);
      CHECK(Mat(e * f - f * e) == h);
      Mat mixed = g.f_mixed(i, i);
      CHECK(Mat(mixed * g.f_upper(i, i) - g.f_upper(i, i) * mixed) == g.f_upper(i, i));
    }
  }
  auto d = with_symplectic_basis(heisenberg(2));
  SpGenerators g(d);
  for (int i = 1; i <= 2; ++i) {
    Mat expect = Mat::Zero(5, 5);
    expect(i, i) = 1;
    expect(i + 2, i + 2) = -1;
    CHECK(Mat(Rational(-2) * g.f_mixed(i, i)) == expect);
  }
}

TEST_CASE("fundamental representations") {
  CHECK(fundamental_rep(SpGenerators(heisenberg(2)), 2).dim == 5);
  CHECK(fundamental_rep(SpGenerators(heisenberg(1)), 1).dim == 2);
  CHECK(fundamental_rep(SpGenerators(heisenberg(1)), 0).dim == 1);
  CHECK_THROWS_AS(fundamental_rep(SpGenerators(heisenberg(1)), 2), BadWeightIndex);
  CHECK_THROWS_AS(fundamental_rep(SpGenerators(heisenberg(1)), -1), BadWeightIndex);
  for (const auto& d : algebras()) {
    SpGenerators g(d);
    const int n = d.N();
    for (int p = 0; p <= n; ++p) {
      auto rep = fundamental_rep(g, p);
      CHECK(Rational(rep.dim) == binomial(2 * n, p) - binomial(2 * n, p - 2));
      CHECK(check_sp_brackets(g, rep));
      Mat cas = casimir_apply(g, rep);
      CHECK(is_scalar(cas, Rational(p * (2 * n + 2 - p), 2)));
      for (const auto& m : rep.f) CHECK(Mat(cas * m) == Mat(m * cas));
    }
    CHECK(is_scalar(casimir_apply(g, vector_rep(g)), Rational(2 * n + 1, 2)));
    CHECK(is_scalar(casimir_apply(g, trivial_rep(g)), 0));
    auto adj = sym_square_rep(g);
    CHECK(check_sp_brackets(g, adj));
    // R(2 pi_1) is the adjoint module: (lambda, lambda + 2 rho) = 2N + 2.
    CHECK(is_scalar(casimir_apply(g, adj), 2 * n + 2));
  }
  SpGenerators g1(heisenberg(1));
  CHECK(is_scalar(casimir_apply(g1, fundamental_rep(g1, 1)), Rational(3, 2)));
  SpGenerators g2(heisenberg(2));
  CHECK(is_scalar(casimir_apply(g2, fundamental_rep(g2, 1)), Rational(5, 2)));
  CHECK(is_scalar(casimir_apply(g2, fundamental_rep(g2, 2)), 4));
}

TEST_CASE("ad_sp lands in sp and agrees with restriction plus projection") {
  for (const auto& d : algebras()) {
    SpGenerators g(d);
    CHECK(ad_sp_dual(g, 0) == sp_projection(g, d.ad(0)));
    for (int k = 0; k < d.dim(); ++k) {
      Mat a = ad_sp_dual(g, k);
      CHECK(g.in_sp(a));
      CHECK(a.trace() == 0);
      if (k > 0) CHECK(a == sp_projection(g, d.ad(d.dual(k))));
    }
    for (int m = 0; m < d.dim(); ++m) CHECK(ad_sp(g, unit(d.dim(), m)) == sp_projection(g, d.ad(m)));
  }
  // Heisenberg: d-bar is abelian modulo the center, so ad_sp vanishes.
  SpGenerators h(heisenberg(2));
  for (int k = 0; k < 5; ++k) CHECK(is_zero(ad_sp_dual(h, k)));
  // sl2: ad_sp d_0 acts diagonally on {e, f}.
  SpGenerators s(sl2());
  Mat a0 = ad_sp_dual(s, 0);
  CHECK(a0(1, 2) == 0);
  CHECK(a0(2, 1) == 0);
  CHECK(a0(1, 1) == -a0(2, 2));
  CHECK(a0(1, 1) != 0);
}

TEST_CASE("symmetrized quartic relation") {
  for (const auto& d : {heisenberg(1), heisenberg(2), sl2()}) {
    SpGenerators g(d);
    for (int p = 1; p <= d.N(); ++p) CHECK_FALSE(find_quartic_violation(g, fundamental_rep(g, p)));
    CHECK_FALSE(find_quartic_violation(g, trivial_rep(g)));
    CHECK_FALSE(find_quartic_violation(g, vector_rep(g)));
  }
  SpGenerators g(heisenberg(1));
  auto witness = find_quartic_violation(g, sym_square_rep(g));
  REQUIRE(witness);
  auto [a, b, c, e] = *witness;
  CHECK_FALSE(symmetrized_quartic_check(g, sym_square_rep(g), a, b, c, e));
  CHECK(nilpotency_certificate());
}
