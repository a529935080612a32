#include <doctest.h>

#include "kdt/annihilation.hpp"
#include "kdt/errors.hpp"
#include "kdt/exterior.hpp"

using namespace kdt;

namespace {

DualElement xs(int dim, std::initializer_list<int> idx, int t) {
  MultiIndex m(dim);
  for (int i : idx) m.add(i, 1);
  return dual_basis(m, t);
}

std::vector<ContactLieData> algebras() { return {heisenberg(1), sl2(), affine_plus_line(), heisenberg(2)}; }

}  // namespace

TEST_CASE("W bracket on small elements") {
  auto d = heisenberg(1);
  Enveloping h(d);
  const int T = 4;
  const auto one_d0 = w_elem(dual_one(3, T), unit(3, 0));
  // d_0 is central, so [1 (x) d_0, x^j (x) d_i] = -(x^j d_0) (x) d_i.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto u = w_elem(xs(3, {j}, T), unit(3, i));
      const auto br = w_bracket(h, one_d0, u);
      CHECK(br.truncation == 2);
      // x^j d_0 = -delta_{j0} mod Fil_0 X.
      for (int m = 0; m < 3; ++m)
        CHECK(br.coeff(MultiIndex(3), m) == Rational(m == i && j == 0 ? 1 : 0));
    }
  // sl2: [1 (x) d_a, 1 (x) d_b] = 1 (x) [d_a, d_b].
  auto s = sl2();
  Enveloping hs(s);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const auto br = w_bracket(hs, w_elem(dual_one(3, T), unit(3, a)), w_elem(dual_one(3, T), unit(3, b)));
      CHECK(br.agrees_with(w_elem(dual_one(3, 2), s.bracket(unit(3, a), unit(3, b)))));
    }
  // Two W_1 elements bracket into W_2.
  const auto u = w_elem(xs(3, {1, 2}, 6), unit(3, 1)), v = w_elem(xs(3, {1, 1}, 6), unit(3, 0));
  CHECK(in_w(u, 1));
  CHECK(in_w(v, 1));
  CHECK(in_w(w_bracket(h, u, v), 2));
  CHECK(w_bracket(h, u, u).is_zero());
  CHECK_THROWS_AS(w_bracket(h, w_elem(dual_one(3, 1), unit(3, 0)), u), TruncationOverflow);
}

TEST_CASE("embedding of Fourier coefficients") {
  for (const auto& d : algebras()) {
    Enveloping h(d);
    const int dim = d.dim();
    // 1 (x)_H e -> 1 (x) d_0 exactly.
    CHECK(embed_k(h, dual_one(dim, 4)).agrees_with(w_elem(dual_one(dim, 3), unit(dim, 0))));
    CHECK(embed_k(h, dual_one(dim, 4)).truncation == 3);
    for (const auto& c : fourier_checks(h, 4)) {
      INFO(c.name << " " << c.witness);
      CHECK(c.passed);
      CHECK(c.checked > 0);
    }
  }
  CHECK_THROWS_AS(fourier_checks(Enveloping(heisenberg(1)), 2), TruncationOverflow);
}

TEST_CASE("hand expansion of x^1 (x)_H e for sl2") {
  auto d = sl2();
  Enveloping h(d);
  // Only |I| <= 1 terms, read directly.
  const auto w = embed_k(h, xs(3, {1}, 4));
  // d-bar part: 1 (x) d^1 - sum c_ik^1 x^k (x) d^i.
  const Vec up = d.dual(1);
  for (int m = 1; m < 3; ++m) CHECK(w.coeff(MultiIndex(3), m) == up(m));
  CHECK(w.coeff(MultiIndex(3), 0) == 0);
  CHECK(w.coeff(MultiIndex::unit(3, 1), 0) == 1);
}

TEST_CASE("filtrations and gl(d)") {
  Enveloping h(heisenberg(1));
  const auto u = w_elem(xs(3, {0}, 4), unit(3, 1));
  CHECK(in_w(u, 0));
  CHECK_FALSE(in_w(u, 1));
  CHECK(in_w_prime(u, 1));
  CHECK_FALSE(in_w_prime(u, 2));
  const auto v = w_elem(xs(3, {0}, 4), unit(3, 0));
  CHECK(in_w_prime(v, 0));
  CHECK_FALSE(in_w_prime(v, 1));
  CHECK(to_gl(u) == Mat(Rational(-1) * gl_unit(3, 1, 0)));
  CHECK_THROWS_AS(to_gl(w_elem(dual_one(3, 4), unit(3, 0))), BadConfig);
  // Dropping the omega term of x^0 (x)_H e leaves something outside W'_1.
  const auto diff = embed_k(h, xs(3, {0}, 4)) - w_elem(xs(3, {0}, 4), unit(3, 0));
  CHECK(in_w(diff, 0));
  CHECK_FALSE(in_w_prime(diff, 1));
}

TEST_CASE("annihilation suite") {
  for (const auto& d : algebras()) {
    Enveloping h(d);
    for (const auto& c : annihilation_suite(h, 4)) {
      INFO(c.name << " " << c.witness);
      CHECK(c.passed);
      CHECK(c.checked > 0);
    }
  }
}
